#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "gaugenorm/dominance.hpp"
#include "gaugenorm/errors.hpp"
#include "gaugenorm/generators.hpp"
#include "gaugenorm/norms.hpp"

using namespace gaugenorm;

namespace {
CMatrix diag(std::vector<double> d) { return CMatrix::diagonal(std::span<const double>(d)); }
}  // namespace

TEST_CASE("kyfan_dominates examples") {
  Rng rng(301);
  const auto t = gen::matrix(rng, 3);
  const auto same = kyfan_dominates(t, t);
  CHECK(same.dominates);
  CHECK_FALSE(same.violating_k.has_value());

  const auto v = kyfan_dominates(diag({2, 0}), diag({1, 1}));
  CHECK(v.dominates);
  CHECK(v.partial_sums_s == std::vector<double>{1, 2});
  CHECK(v.partial_sums_t == std::vector<double>{2, 2});

  const auto r = kyfan_dominates(diag({1, 1}), diag({2, 0}));
  CHECK_FALSE(r.dominates);
  REQUIRE(r.violating_k.has_value());
  CHECK(*r.violating_k == 1);

  CHECK_THROWS_AS(kyfan_dominates(diag({1, 1}), diag({1, 1, 1})), DimensionError);
}

TEST_CASE("dominance_transfer examples") {
  Rng rng(302);
  const std::vector<NormSpec> specs{NormSpec::lp(2), NormSpec::kyfan(Rational(1, 2)), NormSpec::weight(gen::weight(rng, 2))};
  const auto rep = dominance_transfer(diag({2, 0}), diag({1, 1}), specs);
  CHECK(rep.all_hold());
  CHECK(rep.entries.size() == 3);

  const auto t = gen::matrix(rng, 4);
  const auto eq = dominance_transfer(t, t, gen::battery(rng, 4));
  CHECK(eq.all_hold());
  for (const auto& e : eq.entries) CHECK(e.margin == 0.0);

  CHECK_THROWS_AS(dominance_transfer(diag({1, 1}), diag({2, 0}), specs), DomainError);
}

TEST_CASE("unitary averages are dominated in every norm of the battery") {
  Rng rng(303);
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 6));
    const auto [t, s] = gen::majorization_pair(rng, n);
    const auto v = kyfan_dominates(t, s);
    REQUIRE(v.dominates);
    CHECK(dominance_transfer(t, s, gen::battery(rng, n)).all_hold());
  }
}

TEST_CASE("grid dominance decides the continuum") {
  // Irrational t never reveals a violation the k/n grid missed, and the
  // grid verdict agrees with the sampled verdict when it is negative.
  Rng rng(304);
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 6));
    const auto t = gen::matrix(rng, n), s = gen::matrix(rng, n);
    const auto v = kyfan_dominates(t, s);
    bool sampled_violation = false;
    for (int j = 0; j < 100; ++j) {
      const double tt = std::fmod((j + 1) * std::numbers::sqrt2 / 7.0, 1.0);
      if (tt <= 0.0) continue;
      const auto kf = NormSpec::kyfan(Scalar(tt));
      if (norm_mat(kf, s) > norm_mat(kf, t) + 1e-9) sampled_violation = true;
    }
    if (v.dominates) CHECK_FALSE(sampled_violation);
  }
}

TEST_CASE("separating spec witnesses a failed verdict") {
  Rng rng(305);
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 6));
    const auto t = gen::matrix(rng, n), s = gen::matrix(rng, n);
    const auto v = kyfan_dominates(t, s);
    if (v.dominates) continue;
    ++failures;
    const auto spec = separating_spec(n, *v.violating_k);
    CHECK(norm_mat(spec, s) > norm_mat(spec, t));
  }
  CHECK(failures > 20);
}
