#include "simplex.hpp"

#include <algorithm>
#include <cassert>

#include "srs/error.hpp"

namespace srs::detail {
namespace {

// basic[i] = rows[i][0] + sum_j rows[i][j + 1] * nonbasic[j]
struct Dictionary {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> objective;  // objective[0] + sum_j objective[j + 1] * nonbasic[j]
  std::vector<int> basic;
  std::vector<int> nonbasic;

  void pivot(std::size_t r, std::size_t s) {
    auto& row = rows[r];
    const Rational a = row[s + 1];
    const Rational inv = 1 / a;
    // Solve row r for nonbasic[s].
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j == s + 1) continue;
      row[j] = -row[j] * inv;
    }
    row[s + 1] = inv;
    std::swap(basic[r], nonbasic[s]);

    auto substitute = [&](std::vector<Rational>& target) {
      const Rational c = target[s + 1];
      if (sgn(c) == 0) return;
      for (std::size_t j = 0; j < target.size(); ++j) {
        if (j == s + 1) {
          target[j] = c * row[j];
        } else if (sgn(row[j]) != 0) {
          target[j] += c * row[j];
        }
      }
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r) substitute(rows[i]);
    }
    substitute(objective);
  }

  // Returns false if unbounded.
  bool optimize() {
    for (;;) {
      // Bland: entering = smallest variable id with positive reduced cost.
      int best_col = -1;
      for (std::size_t j = 0; j < nonbasic.size(); ++j) {
        if (sgn(objective[j + 1]) > 0 && (best_col < 0 || nonbasic[j] < nonbasic[static_cast<std::size_t>(best_col)])) {
          best_col = static_cast<int>(j);
        }
      }
      if (best_col < 0) return true;
      const std::size_t s = static_cast<std::size_t>(best_col);
      int best_row = -1;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (sgn(rows[i][s + 1]) >= 0) continue;
        Rational ratio = rows[i][0] / (-rows[i][s + 1]);
        if (best_row < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basic[i] < basic[static_cast<std::size_t>(best_row)])) {
          best_row = static_cast<int>(i);
          best_ratio = ratio;
        }
      }
      if (best_row < 0) return false;
      pivot(static_cast<std::size_t>(best_row), s);
    }
  }
};

}  // namespace

std::optional<LpSolution> solve_standard_lp(const std::vector<std::vector<Rational>>& M,
                                            const std::vector<Rational>& h,
                                            const std::vector<Rational>& c) {
  const std::size_t m = M.size();
  const std::size_t n = c.size();
  const int aux = static_cast<int>(n + m);

  Dictionary dict;
  dict.rows.assign(m, std::vector<Rational>(n + 2));
  dict.basic.resize(m);
  dict.nonbasic.resize(n + 1);
  for (std::size_t j = 0; j < n; ++j) dict.nonbasic[j] = static_cast<int>(j);
  dict.nonbasic[n] = aux;
  std::size_t most_negative = m;
  for (std::size_t i = 0; i < m; ++i) {
    dict.basic[i] = static_cast<int>(n + i);
    dict.rows[i][0] = h[i];
    for (std::size_t j = 0; j < n; ++j) dict.rows[i][j + 1] = -M[i][j];
    dict.rows[i][n + 1] = 1;
    if (sgn(h[i]) < 0 && (most_negative == m || h[i] < h[most_negative])) most_negative = i;
  }

  if (most_negative != m) {
    // Phase 1: maximize -aux.
    dict.objective.assign(n + 2, Rational(0));
    dict.objective[n + 1] = -1;
    dict.pivot(most_negative, n);
    dict.optimize();
    if (sgn(dict.objective[0]) < 0) return std::nullopt;
    // Drive aux out of the basis if it stayed there at level zero.
    for (std::size_t i = 0; i < m; ++i) {
      if (dict.basic[i] != aux) continue;
      for (std::size_t j = 0; j < dict.nonbasic.size(); ++j) {
        if (sgn(dict.rows[i][j + 1]) != 0) {
          dict.pivot(i, j);
          break;
        }
      }
      break;
    }
  }
  // Remove the aux column.
  auto aux_it = std::find(dict.nonbasic.begin(), dict.nonbasic.end(), aux);
  if (aux_it == dict.nonbasic.end()) throw Error(ErrorKind::ResourceLimit, "simplex: auxiliary variable stuck in basis");
  const std::size_t aux_col = static_cast<std::size_t>(aux_it - dict.nonbasic.begin());
  dict.nonbasic.erase(aux_it);
  for (auto& row : dict.rows) row.erase(row.begin() + static_cast<std::ptrdiff_t>(aux_col + 1));

  // Express the real objective over the current nonbasic variables.
  dict.objective.assign(dict.nonbasic.size() + 1, Rational(0));
  for (std::size_t v = 0; v < n; ++v) {
    if (sgn(c[v]) == 0) continue;
    auto nb = std::find(dict.nonbasic.begin(), dict.nonbasic.end(), static_cast<int>(v));
    if (nb != dict.nonbasic.end()) {
      dict.objective[static_cast<std::size_t>(nb - dict.nonbasic.begin()) + 1] += c[v];
      continue;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (dict.basic[i] != static_cast<int>(v)) continue;
      for (std::size_t j = 0; j < dict.objective.size(); ++j) dict.objective[j] += c[v] * dict.rows[i][j];
      break;
    }
  }
  if (!dict.optimize()) throw Error(ErrorKind::Unbounded, "simplex: objective unbounded");

  LpSolution sol;
  sol.value = dict.objective[0];
  sol.z.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (dict.basic[i] < static_cast<int>(n)) sol.z[static_cast<std::size_t>(dict.basic[i])] = dict.rows[i][0];
  }
  return sol;
}

SlackResult maximize_strict_slack(const ConvexCell& cell) {
  SlackResult result;
  if (cell.trivially_false()) return result;
  const std::size_t d = cell.dim();

  // Eliminate equalities: x = base + basis * y.
  std::vector<std::vector<Rational>> eq_rows;
  for (const auto& c : cell.constraints()) {
    if (c.relation() != Relation::Eq) continue;
    std::vector<Rational> row(c.normal().begin(), c.normal().end());
    row.push_back(-c.offset());  // normal . x = -offset
    eq_rows.push_back(std::move(row));
  }
  // Reduced row echelon form.
  std::vector<int> pivot_col_of_row;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d && rank < eq_rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < eq_rows.size() && sgn(eq_rows[sel][col]) == 0) ++sel;
    if (sel == eq_rows.size()) continue;
    std::swap(eq_rows[rank], eq_rows[sel]);
    const Rational inv = 1 / eq_rows[rank][col];
    for (auto& v : eq_rows[rank]) v *= inv;
    for (std::size_t i = 0; i < eq_rows.size(); ++i) {
      if (i == rank || sgn(eq_rows[i][col]) == 0) continue;
      const Rational f = eq_rows[i][col];
      for (std::size_t j = 0; j <= d; ++j) eq_rows[i][j] -= f * eq_rows[rank][j];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++rank;
  }
  for (std::size_t i = rank; i < eq_rows.size(); ++i) {
    if (sgn(eq_rows[i][d]) != 0) return result;  // 0 = nonzero
  }
  std::vector<bool> is_pivot(d, false);
  for (int pc : pivot_col_of_row) is_pivot[static_cast<std::size_t>(pc)] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < d; ++j) {
    if (!is_pivot[j]) free_cols.push_back(j);
  }
  const std::size_t k = free_cols.size();
  // base and basis (d x k)
  RationalPoint base(d, Rational(0));
  std::vector<std::vector<Rational>> basis(d, std::vector<Rational>(k, Rational(0)));
  for (std::size_t f = 0; f < k; ++f) basis[free_cols[f]][f] = 1;
  for (std::size_t r = 0; r < rank; ++r) {
    const std::size_t pc = static_cast<std::size_t>(pivot_col_of_row[r]);
    base[pc] = eq_rows[r][d];
    for (std::size_t f = 0; f < k; ++f) basis[pc][f] = -eq_rows[r][free_cols[f]];
  }

  // Inequalities in y: coeff . y + constant {>=, >} 0.
  // LP variables: y+ (k), y- (k), t.  Row: -coeff.y+ + coeff.y- + delta t <= constant.
  std::vector<std::vector<Rational>> M;
  std::vector<Rational> h;
  bool any_strict = false;
  for (const auto& c : cell.constraints()) {
    if (c.relation() == Relation::Eq) continue;
    std::vector<Rational> coeff(k, Rational(0));
    Rational constant = c.offset();
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(c.normal()[j]) == 0) continue;
      constant += c.normal()[j] * base[j];
      for (std::size_t f = 0; f < k; ++f) coeff[f] += c.normal()[j] * basis[j][f];
    }
    const bool strict = c.is_strict();
    if (std::all_of(coeff.begin(), coeff.end(), [](const Rational& q) { return sgn(q) == 0; })) {
      if (sgn(constant) < 0) return result;
      if (strict && sgn(constant) == 0) {
        // Closure feasible only if everything else is; slack is pinned at 0.
        any_strict = true;
        std::vector<Rational> row(2 * k + 1, Rational(0));
        row[2 * k] = 1;
        M.push_back(std::move(row));
        h.push_back(Rational(0));
      } else if (strict) {
        any_strict = true;
        std::vector<Rational> row(2 * k + 1, Rational(0));
        row[2 * k] = 1;
        M.push_back(std::move(row));
        h.push_back(constant);
      }
      continue;
    }
    std::vector<Rational> row(2 * k + 1, Rational(0));
    for (std::size_t f = 0; f < k; ++f) {
      row[f] = -coeff[f];
      row[k + f] = coeff[f];
    }
    if (strict) {
      row[2 * k] = 1;
      any_strict = true;
    }
    M.push_back(std::move(row));
    h.push_back(constant);
  }
  {
    std::vector<Rational> row(2 * k + 1, Rational(0));
    row[2 * k] = 1;
    M.push_back(std::move(row));
    h.push_back(Rational(1));
  }
  std::vector<Rational> objective(2 * k + 1, Rational(0));
  objective[2 * k] = 1;
  auto sol = solve_standard_lp(M, h, objective);
  if (!sol) return result;
  result.closure_feasible = true;
  result.max_slack = any_strict ? sol->value : Rational(1);
  result.point = base;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t f = 0; f < k; ++f) {
      if (sgn(basis[j][f]) == 0) continue;
      result.point[j] += basis[j][f] * (sol->z[f] - sol->z[k + f]);
    }
  }
  return result;
}

}  // namespace srs::detail
