#include "srs/sampling.hpp"

#include <random>

#include "srs/error.hpp"
#include "srs/parallel.hpp"

namespace srs {

std::vector<RationalPoint> sample_hull_points(const HullSpec& hull, std::size_t count, std::uint64_t seed, unsigned grid_bits) {
  if (hull.vertices.empty()) throw Error(ErrorKind::Empty, "hull has no vertices");
  const std::size_t d = hull.vertices.front().size();
  RationalPoint lo = hull.vertices.front(), hi = lo;
  for (const auto& v : hull.vertices) {
    for (std::size_t k = 0; k < d; ++k) {
      if (v[k] < lo[k]) lo[k] = v[k];
      if (hi[k] < v[k]) hi[k] = v[k];
    }
  }
  std::mt19937_64 rng(seed);
  const std::uint64_t steps = std::uint64_t{1} << grid_bits;
  std::uniform_int_distribution<std::uint64_t> pick(0, steps);
  const Rational denom(BigInt(std::to_string(steps)));
  std::vector<RationalPoint> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 1000 * (count + 1)) throw Error(ErrorKind::ResourceLimit, "hull too thin to sample");
    RationalPoint p(d);
    for (std::size_t k = 0; k < d; ++k) p[k] = lo[k] + (hi[k] - lo[k]) * Rational(BigInt(std::to_string(pick(rng)))) / denom;
    if (hull.dim == 2 && !cell_contains(hull.cell, p)) continue;
    out.push_back(std::move(p));
  }
  return out;
}

AgreementResult check_against_oracle(const CutoutReport& report, std::size_t count, std::uint64_t seed, std::size_t threads) {
  const auto points = sample_hull_points(report.hull, count, seed);
  std::vector<char> member(points.size()), oracle(points.size());
  parallel_for(points.size(), threads, [&](std::size_t i) {
    member[i] = region_member(report, points[i]);
    oracle[i] = decide_finiteness(ParameterVector(points[i])).verdict == Verdict::Finite;
  });
  AgreementResult r;
  r.samples = points.size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!oracle[i]) ++r.non_finite;
    if (member[i] == oracle[i]) {
      ++r.agree;
    } else {
      r.disagreements.push_back(points[i]);
    }
  }
  return r;
}

}  // namespace srs
