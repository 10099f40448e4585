#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "gaugenorm/errors.hpp"
#include "gaugenorm/lp.hpp"
#include "gaugenorm/polytope.hpp"
#include "gaugenorm/random.hpp"

using namespace gaugenorm;

namespace {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;

// Solve the square system by Gaussian elimination with partial pivoting;
// false when singular.
bool solve_square(Mat a, Vec b, Vec& x) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
    if (std::fabs(a[p][c]) < 1e-12) return false;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

// Brute-force vertices of {z >= 0, A z <= b}: every n-subset of the
// constraints (including z_i >= 0) solved as equalities, kept if feasible.
Mat brute_vertices(const Mat& rows, const Vec& bounds, std::size_t n) {
  Mat all = rows;
  Vec rhs = bounds;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0.0);
    e[i] = -1.0;
    all.push_back(e);
    rhs.push_back(0.0);
  }
  const std::size_t m = all.size();
  Mat out;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), true);
  do {
    Mat a;
    Vec b;
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) {
        a.push_back(all[i]);
        b.push_back(rhs[i]);
      }
    Vec x;
    if (!solve_square(a, b, x)) continue;
    bool feasible = true;
    for (std::size_t i = 0; i < m && feasible; ++i) {
      double lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += all[i][j] * x[j];
      feasible = lhs <= rhs[i] + 1e-9;
    }
    if (!feasible) continue;
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Vec& v) {
      for (std::size_t j = 0; j < n; ++j)
        if (std::fabs(v[j] - x[j]) > 1e-8) return false;
      return true;
    });
    if (!seen) out.push_back(x);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

bool contains(const Mat& set, const Vec& v) {
  return std::any_of(set.begin(), set.end(), [&](const Vec& w) {
    for (std::size_t j = 0; j < v.size(); ++j)
      if (std::fabs(v[j] - w[j]) > 1e-8) return false;
    return true;
  });
}

}  // namespace

TEST_CASE("simplex on a textbook problem") {
  // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6).
  const auto sol = solve_lp({{3, 5}, {{1, 0}, {0, 2}, {3, 2}}, {4, 12, 18}});
  CHECK(sol.value == doctest::Approx(36.0).epsilon(1e-12));
  CHECK(sol.x[0] == doctest::Approx(2.0));
  CHECK(sol.x[1] == doctest::Approx(6.0));
}

TEST_CASE("simplex errors") {
  CHECK_THROWS_AS(solve_lp({{1, 0}, {{0, 1}}, {1}}), NumericalError);  // unbounded in x
  CHECK_THROWS_AS(solve_lp({{1}, {{1}}, {-1}}), DomainError);
}

TEST_CASE("degenerate program terminates under Bland's rule") {
  // Classic cycling example for the largest-coefficient rule.
  const auto sol = solve_lp({{10, -57, -9, -24},
                             {{0.5, -5.5, -2.5, 9}, {0.5, -1.5, -0.5, 1}, {1, 0, 0, 0}},
                             {0, 0, 1}});
  CHECK(sol.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("simplex and vertex enumeration agree with brute force") {
  Rng rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 4));
    const auto m = static_cast<std::size_t>(rng.integer(1, 5));
    Mat rows;
    Vec bounds;
    for (std::size_t i = 0; i < m; ++i) {
      Vec r(n);
      for (auto& v : r) v = rng.uniform(-0.5, 2.0);
      rows.push_back(r);
      bounds.push_back(rng.uniform(0.2, 2.0));
    }
    // A sum row keeps the polytope bounded.
    rows.push_back(Vec(n, 1.0));
    bounds.push_back(3.0);

    const auto brute = brute_vertices(rows, bounds, n);
    const auto dd = enumerate_vertices_orthant(rows, bounds);
    CHECK(dd.size() == brute.size());
    for (const auto& v : dd) CHECK(contains(brute, v));

    Vec c(n);
    for (auto& v : c) v = rng.uniform(-1.0, 2.0);
    double best = 0;
    for (const auto& v : brute) {
      double val = 0;
      for (std::size_t j = 0; j < n; ++j) val += c[j] * v[j];
      best = std::max(best, val);
    }
    CHECK(solve_lp({c, rows, bounds}).value == doctest::Approx(best).epsilon(1e-9));
  }
}

TEST_CASE("unbounded polytope is rejected") {
  CHECK_THROWS_AS(enumerate_vertices_orthant({{1, -1}}, {1}), DomainError);
}
