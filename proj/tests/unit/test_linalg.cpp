#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "gaugenorm/errors.hpp"
#include "gaugenorm/generators.hpp"
#include "gaugenorm/linalg.hpp"

using namespace gaugenorm;

namespace {

CMatrix diag(std::vector<double> d) { return CMatrix::diagonal(std::span<const double>(d)); }

double max_diff(const CMatrix& a, const CMatrix& b) { return (a - b).max_abs(); }

// Power of a Hermitian PSD matrix through its eigendecomposition.
CMatrix psd_power(const CMatrix& a, double p) {
  const auto e = eig_hermitian(a);
  std::vector<double> d;
  for (double v : e.values) d.push_back(std::pow(std::max(v, 0.0), p));
  return e.vectors * diag(d) * e.vectors.adjoint();
}

}  // namespace

TEST_CASE("eig_hermitian examples") {
  const auto e = eig_hermitian(diag({2, 1}));
  CHECK(e.values[0] == doctest::Approx(2.0));
  CHECK(e.values[1] == doctest::Approx(1.0));
  CHECK(max_diff(e.vectors, CMatrix::identity(2)) <= 1e-12);

  const auto x = eig_hermitian(CMatrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(x.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(x.values[1] == doctest::Approx(-1.0).epsilon(1e-14));

  CHECK_THROWS_AS(eig_hermitian(CMatrix::from_rows({{0, 1}, {0, 0}})), DomainError);
}

TEST_CASE("eig_hermitian reconstructs random Hermitian matrices") {
  Rng rng(8);
  for (std::size_t n : {1u, 2u, 5u, 8u, 16u}) {
    const auto a = random_hermitian(n, rng);
    const auto e = eig_hermitian(a);
    CHECK(std::is_sorted(e.values.begin(), e.values.end(), std::greater<>()));
    CHECK(unitarity_defect(e.vectors) <= 1e-10);
    const auto back = e.vectors * diag(e.values) * e.vectors.adjoint();
    CHECK((back - a).frobenius() <= 1e-9 * a.frobenius());
  }
}

TEST_CASE("s_numbers examples") {
  CHECK(s_numbers(diag({3, -4})).s == std::vector<double>{4, 3});
  const auto u = random_unitary(5, 99);
  for (double s : s_numbers(u).s) CHECK(s == doctest::Approx(1.0).epsilon(1e-9));
  const auto nil = s_numbers(CMatrix::from_rows({{0, 2}, {0, 0}})).s;
  CHECK(nil[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(nil[1] == 0.0);
}

TEST_CASE("mu_step examples") {
  const auto one = mu_step(CMatrix::identity(2));
  CHECK(one.values() == std::vector<double>{1.0, 1.0});
  CHECK(rearrange(one).values() == std::vector<double>{1.0});
  CHECK(mu_step(diag({3, 1})).values() == std::vector<double>{3, 1});
  const auto m = mu_step(diag({1, 2, 3}));
  CHECK(m.values() == std::vector<double>{3, 2, 1});
  CHECK(m.breakpoints()[1] == Rational(1, 3));
}

TEST_CASE("moment identity tau(|T|^p) = mean of s^p") {
  Rng rng(21);
  for (int i = 0; i < 30; ++i) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 7));
    const auto t = gen::matrix(rng, n);
    const auto s = s_numbers(t).s;
    CHECK(std::is_sorted(s.begin(), s.end(), std::greater<>()));
    for (double p : {1.0, 2.0, 3.0}) {
      const double lhs = std::accumulate(s.begin(), s.end(), 0.0, [&](double a, double v) { return a + std::pow(v, p); }) /
                         static_cast<double>(n);
      const double rhs = psd_power(t.adjoint() * t, p / 2.0).normalized_trace().real();
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
    }
  }
}

TEST_CASE("s-numbers: submultiplicativity and unitary invariance") {
  Rng rng(22);
  for (int i = 0; i < 30; ++i) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 6));
    const auto s = gen::matrix(rng, n), t = gen::matrix(rng, n);
    const auto st = s_numbers(s * t).s, tt = s_numbers(t).s;
    const double norm_s = operator_norm(s);
    for (std::size_t k = 0; k < n; ++k) CHECK(st[k] <= norm_s * tt[k] + 1e-8);
    const auto u = random_unitary(n, rng), v = random_unitary(n, rng);
    const auto rot = s_numbers(u * t * v).s;
    for (std::size_t k = 0; k < n; ++k) CHECK(rot[k] == doctest::Approx(tt[k]).epsilon(1e-8));
  }
}

TEST_CASE("variational characterization of s_{k+1} on diagonal matrices") {
  // min over coordinate projections E with tau(1 - E) = k/n of ||T E||,
  // by brute force over all index subsets.
  Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 6));
    std::vector<double> d(n);
    for (auto& x : d) x = rng.normal();
    const auto t = diag(d);
    const auto s = s_numbers(t).s;
    for (std::size_t k = 0; k < n; ++k) {
      double best = std::numeric_limits<double>::infinity();
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != n - k) continue;
        std::vector<double> e(n);
        for (std::size_t j = 0; j < n; ++j) e[j] = (mask >> j) & 1u ? 1.0 : 0.0;
        best = std::min(best, operator_norm(t * diag(e)));
      }
      CHECK(best == doctest::Approx(s[k]).epsilon(1e-8));
    }
  }
}

TEST_CASE("pinch examples and trace preservation") {
  Rng rng(31);
  const auto t = gen::matrix(rng, 4);
  Partition whole{{CMatrix::identity(4)}};
  CHECK(max_diff(pinch(t, whole), t) == 0.0);

  const auto d = diag({1, 2, 3, 4});
  CHECK(max_diff(pinch(d, coordinate_partition(4, {{0, 2}, {1}, {3}})), d) == 0.0);

  const auto ones = CMatrix::from_rows({{1, 1}, {1, 1}});
  CHECK(max_diff(pinch(ones, coordinate_partition(2, {{0}, {1}})), CMatrix::identity(2)) == 0.0);

  for (int i = 0; i < 50; ++i) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 6));
    const auto m = gen::matrix(rng, n);
    const auto p = random_partition(n, rng);
    CHECK(std::abs(pinch(m, p).normalized_trace() - m.normalized_trace()) <= 1e-10);
  }

  CHECK_THROWS_AS(pinch(t, coordinate_partition(3, {{0, 1, 2}})), DimensionError);
  Partition bad{{diag({1, 0}), diag({1, 1})}};
  CHECK_THROWS(validate_partition(bad, 2));
}

TEST_CASE("polar_unitary examples") {
  const auto pd = CMatrix::from_rows({{2, 1}, {1, 3}});
  CHECK(max_diff(polar_unitary(pd), CMatrix::identity(2)) <= 1e-10);
  const auto minus = CMatrix::identity(3) * Complex(-1.0);
  CHECK(max_diff(polar_unitary(minus), minus) <= 1e-10);

  Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 6));
    const auto t = gen::matrix(rng, n);  // includes rank-deficient cases
    const auto v = polar_unitary(t);
    CHECK(unitarity_defect(v) <= 1e-10);
    CHECK((t - v * abs(t)).frobenius() <= 1e-8 * (1.0 + t.frobenius()));
  }
  const auto zero = CMatrix(3);
  CHECK(unitarity_defect(polar_unitary(zero)) <= 1e-10);
}

TEST_CASE("random_unitary examples") {
  const auto u1 = random_unitary(1, 5);
  CHECK(std::abs(u1(0, 0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(max_diff(random_unitary(4, 7), random_unitary(4, 7)) == 0.0);
  CHECK(max_diff(random_unitary(4, 7), random_unitary(4, 8)) > 0.0);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto u = random_unitary(6, seed);
    CHECK(unitarity_defect(u) <= 1e-10);
    for (double s : s_numbers(u).s) CHECK(s == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("Box-Muller normals have the right first two moments") {
  Rng rng(1);
  double sum = 0, sq = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sq += x * x;
  }
  CHECK(std::fabs(sum / n) < 0.01);
  CHECK(std::fabs(sq / n - 1.0) < 0.02);
}

TEST_CASE("64x64 s-numbers") {
  Rng rng(64);
  const auto t = random_gaussian(64, rng);
  const auto s = s_numbers(t).s;
  CHECK(s.size() == 64);
  double fro = 0;
  for (double v : s) fro += v * v;
  CHECK(std::sqrt(fro) == doctest::Approx(t.frobenius()).epsilon(1e-9));
}
