#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "gaugenorm/errors.hpp"
#include "gaugenorm/generators.hpp"
#include "gaugenorm/norms.hpp"

using namespace gaugenorm;

namespace {

CMatrix diag(std::vector<double> d) { return CMatrix::diagonal(std::span<const double>(d)); }
StepFn on_halves(double a, double b) { return StepFn({Rational(0), Rational(1, 2), Rational(1)}, {a, b}); }

double mean_top(const std::vector<double>& s, std::size_t k) {
  double acc = 0;
  for (std::size_t i = 0; i < k; ++i) acc += s[i];
  return acc / static_cast<double>(k);
}

}  // namespace

TEST_CASE("spec parameter ranges") {
  CHECK_THROWS_AS(NormSpec::lp(0.5), DomainError);
  CHECK_THROWS_AS(NormSpec::kyfan(Rational(3, 2)), DomainError);
  CHECK(NormSpec::kyfan(Rational(0)).kind() == "kyfanzero");
  CHECK_THROWS_AS(NormSpec::tbracket(Rational(1, 3)), DomainError);
  CHECK_THROWS_AS(NormSpec::sup_of({}), DomainError);
  CHECK_THROWS_AS(NormSpec::csup(on_halves(0.5, 0.25)), DomainError);
  CHECK_THROWS_AS(NormSpec::csup(on_halves(1.0, 1.5)), DomainError);
  CHECK_NOTHROW(NormSpec::csup(on_halves(1.0, 0.5)));
  CHECK_FALSE(NormSpec::lp(2).is_polyhedral());
  CHECK(NormSpec::trace().is_polyhedral());
}

TEST_CASE("norm_step examples") {
  CHECK(norm_step(NormSpec::lp(2), StepFn::constant(1.0)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(norm_step(NormSpec::kyfan(Rational(1, 2)), on_halves(3, 1)) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(norm_step(NormSpec::weight(WeightFn(on_halves(2, 0))), on_halves(3, 1)) == doctest::Approx(3.0).epsilon(1e-15));
  // Evaluation goes through the rearrangement of |f|.
  CHECK(norm_step(NormSpec::kyfan(Rational(1, 2)), on_halves(-1, 3)) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("norm_vec examples") {
  const std::vector<double> a{1, 2, 3};
  CHECK(norm_vec(NormSpec::trace(), std::span<const double>(a)) == doctest::Approx(2.0).epsilon(1e-15));
  const std::vector<double> b{4, 1, 1};
  CHECK(norm_vec(NormSpec::kyfan(Rational(2, 3)), std::span<const double>(b)) == doctest::Approx(2.5).epsilon(1e-15));
  const std::vector<Complex> c{-5.0, Complex(0, 3)};
  CHECK(norm_vec(NormSpec::operator_norm(), std::span<const Complex>(c)) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK_THROWS_AS(norm_vec(NormSpec::trace(), std::span<const double>()), DimensionError);
}

TEST_CASE("norm_mat examples") {
  CHECK(norm_mat(NormSpec::kyfan(Rational(1, 3)), diag({3, 2, 1})) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(norm_mat(NormSpec::kyfan(Rational(2, 3)), diag({3, 2, 1})) == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(norm_mat(NormSpec::lp(1), CMatrix::from_rows({{0, 2}, {0, 0}})) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("closed forms against direct s-number arithmetic") {
  Rng rng(101);
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 8));
    const auto t = gen::matrix(rng, n);
    const auto s = s_numbers(t).s;
    const auto nn = static_cast<std::int64_t>(n);
    for (std::int64_t k = 1; k <= nn; ++k)
      CHECK(norm_mat(NormSpec::kyfan(Rational(k, nn)), t) == doctest::Approx(mean_top(s, k)).epsilon(1e-10));
    CHECK(norm_mat(NormSpec::operator_norm(), t) == doctest::Approx(s[0]).epsilon(1e-12));
    CHECK(norm_mat(NormSpec::kyfan(Rational(0)), t) == doctest::Approx(s[0]).epsilon(1e-12));
    CHECK(norm_mat(NormSpec::trace(), t) == doctest::Approx(mean_top(s, n)).epsilon(1e-12));
    double p3 = 0;
    for (double v : s) p3 += v * v * v;
    CHECK(norm_mat(NormSpec::lp(3), t) == doctest::Approx(std::cbrt(p3 / static_cast<double>(n))).epsilon(1e-12));
    // Irrational t: (1/t) int_0^t mu by hand.
    const double tt = 1.0 / std::numbers::sqrt2;
    double acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const double lo = static_cast<double>(j) / static_cast<double>(n);
      const double hi = static_cast<double>(j + 1) / static_cast<double>(n);
      acc += s[j] * std::max(0.0, std::min(hi, tt) - lo);
    }
    CHECK(norm_mat(NormSpec::kyfan(Scalar(tt)), t) == doctest::Approx(acc / tt).epsilon(1e-12));
    const double tb = 0.8;
    CHECK(norm_mat(NormSpec::tbracket(Scalar(tb)), t) ==
          doctest::Approx(std::max(tb * s[0], mean_top(s, n))).epsilon(1e-12));
  }
}

TEST_CASE("weight_norm_as_kyfan_combo examples") {
  const auto one = weight_norm_as_kyfan_combo(WeightFn(StepFn::constant(1.0)));
  REQUIRE(one.size() == 1);
  CHECK(one[0].coefficient == doctest::Approx(1.0));
  CHECK(one[0].t == Rational(1));

  const auto pure = weight_norm_as_kyfan_combo(WeightFn(on_halves(2, 0)));
  REQUIRE(pure.size() == 1);
  CHECK(pure[0].coefficient == doctest::Approx(1.0));
  CHECK(pure[0].t == Rational(1, 2));

  const auto mixed = weight_norm_as_kyfan_combo(WeightFn(on_halves(2, 1).scaled(0.5)));
  // (1, 0.5) on halves: k=1 term 1*(1-0.5)/2, k=2 term 2*0.5/2.
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].coefficient == doctest::Approx(0.25));
  CHECK(mixed[0].t == Rational(1, 2));
  CHECK(mixed[1].coefficient == doctest::Approx(0.5));
  CHECK(mixed[1].t == Rational(1));

  StepFn nonuniform({Rational(0), Rational(1, 3), Rational(1)}, {1.0, 0.5});
  CHECK_THROWS_AS(weight_norm_as_kyfan_combo(WeightFn(nonuniform)), DomainError);
}

TEST_CASE("weights with mean above 1 are rejected") {
  CHECK_THROWS_AS(WeightFn(on_halves(2, 1)), DomainError);
}

TEST_CASE("weight norm by pairing equals the Ky Fan combination") {
  Rng rng(102);
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 8));
    const auto f = gen::weight(rng, n);
    const auto t = gen::matrix(rng, n);
    double combo = 0, mass = 0;
    for (const auto& term : weight_norm_as_kyfan_combo(f)) {
      CHECK(term.coefficient >= 0.0);
      combo += term.coefficient * norm_mat(NormSpec::kyfan(term.t), t);
      mass += term.coefficient;
    }
    CHECK(mass == doctest::Approx(f.mean()).epsilon(1e-12));
    CHECK(norm_mat(NormSpec::weight(f), t) == doctest::Approx(combo).epsilon(1e-10));
  }
}

TEST_CASE("Ky Fan norms are nonincreasing in t") {
  Rng rng(103);
  for (int i = 0; i < 20; ++i) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 8));
    const auto t = gen::matrix(rng, n);
    double prev = norm_mat(NormSpec::kyfan(Rational(0)), t);
    for (int j = 1; j <= 1000; ++j) {
      const double v = norm_mat(NormSpec::kyfan(Rational(j, 1000)), t);
      CHECK(v - prev <= 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("CSup is the sup of c(t) times the Ky Fan norm") {
  Rng rng(104);
  for (int i = 0; i < 50; ++i) {
    const auto spec = gen::csup(rng);
    const auto& c = spec.as<spec::CSup>()->c;
    const auto n = static_cast<std::size_t>(rng.integer(1, 6));
    const auto t = gen::matrix(rng, n);
    // Dense grid plus both sides of every breakpoint of c: a lower bound
    // that touches the exact value.
    double grid = 0;
    for (int j = 0; j <= 2000; ++j) {
      const Rational tj(j, 2000);
      grid = std::max(grid, c.at(tj) * norm_mat(NormSpec::kyfan(tj), t));
    }
    for (const auto& b : c.breakpoints()) {
      grid = std::max(grid, c.at(b) * norm_mat(NormSpec::kyfan(b), t));
      if (b > Rational(0)) {
        const Rational left = b - Rational(1, 1000000);
        grid = std::max(grid, c.at(left) * norm_mat(NormSpec::kyfan(left), t));
      }
    }
    const double exact = norm_mat(spec, t);
    CHECK(exact >= grid - 1e-12);
    CHECK(exact <= grid + 1e-5 * (1.0 + exact));
  }
}

TEST_CASE("von Neumann consistency and TBracket endpoints") {
  Rng rng(105);
  for (int i = 0; i < 50; ++i) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 7));
    const auto x = gen::vector(rng, n);
    for (const auto& spec : gen::battery(rng, n))
      CHECK(norm_mat(spec, CMatrix::diagonal(std::span<const double>(x))) == norm_vec(spec, std::span<const double>(x)));
    const auto t = gen::matrix(rng, 2);
    CHECK(norm_mat(NormSpec::tbracket(Rational(1, 2)), t) == doctest::Approx(trace_norm(t)).epsilon(1e-14));
    CHECK(norm_mat(NormSpec::tbracket(Rational(1)), t) == doctest::Approx(operator_norm(t)).epsilon(1e-14));
  }
}

TEST_CASE("check_norm_axioms") {
  AxiomOptions opts;
  opts.trials = 100;
  opts.max_dim = 4;
  opts.seed = 5;
  const auto kf = check_norm_axioms(NormSpec::kyfan(Rational(1, 2)), opts);
  CHECK(kf.all_passed());
  CHECK(kf.checks.size() == 6);

  const auto op = norm_mat(NormSpec::operator_norm(), CMatrix::identity(3));
  CHECK(op == 1.0);
  CHECK(trace_norm(CMatrix::identity(3)) == doctest::Approx(1.0).epsilon(1e-15));

  Rng rng(106);
  const WeightFn one(StepFn::constant(1.0));
  for (int i = 0; i < 20; ++i) {
    const auto t = gen::matrix(rng, 4);
    CHECK(norm_mat(NormSpec::weight(one), t) == doctest::Approx(trace_norm(t)).epsilon(1e-13));
  }

  for (const auto& spec : gen::battery(rng, 4)) CHECK_MESSAGE(check_norm_axioms(spec, opts).all_passed(), spec.describe());

  opts.negate_triangle = true;
  const auto broken = check_norm_axioms(NormSpec::trace(), opts);
  CHECK_FALSE(broken.all_passed());
  const auto tri = std::find_if(broken.checks.begin(), broken.checks.end(), [](const AxiomCheck& c) { return c.name == "triangle"; });
  REQUIRE(tri != broken.checks.end());
  CHECK_FALSE(tri->passed);
  CHECK_FALSE(tri->witness.empty());
}
