#pragma once

#include <cstdint>
#include <vector>

#include "srs/region.hpp"

namespace srs {

/// Rational points of the closed hull on a dyadic grid of the bounding box, drawn with a seeded generator.
std::vector<RationalPoint> sample_hull_points(const HullSpec& hull, std::size_t count, std::uint64_t seed,
                                              unsigned grid_bits = 24);

struct AgreementResult {
  std::size_t samples = 0;
  std::size_t agree = 0;
  std::size_t non_finite = 0;
  std::vector<RationalPoint> disagreements;
};

/// Compares region_member against decide_finiteness at sampled hull points.
AgreementResult check_against_oracle(const CutoutReport& report, std::size_t count, std::uint64_t seed,
                                     std::size_t threads = 1);

}  // namespace srs
