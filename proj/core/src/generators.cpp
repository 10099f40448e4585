#include "gaugenorm/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gaugenorm::gen {

namespace {

std::vector<Rational> random_breakpoints(Rng& rng, std::size_t max_pieces, std::int64_t max_den) {
  const auto pieces = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(max_pieces)));
  std::vector<Rational> bps{Rational(0), Rational(1)};
  for (std::size_t tries = 0; bps.size() < pieces + 1 && tries < 8 * max_pieces; ++tries) {
    const auto den = rng.integer(2, max_den);
    const auto num = rng.integer(1, den - 1);
    const Rational r(num, den);
    if (std::find(bps.begin(), bps.end(), r) == bps.end()) bps.push_back(r);
  }
  std::sort(bps.begin(), bps.end());
  return bps;
}

std::vector<double> descending(Rng& rng, std::size_t count) {
  std::vector<double> v(count);
  for (auto& x : v) x = rng.uniform();
  // Occasional ties and zeros exercise level-set merging.
  if (count > 1 && rng.uniform() < 0.3) v[1] = v[0];
  if (rng.uniform() < 0.3) v.back() = 0.0;
  std::sort(v.begin(), v.end(), std::greater<>());
  if (v.front() == 0.0) v.front() = 1.0;
  return v;
}

WeightFn scaled_to_mean(Rng& rng, const StepFn& f) {
  const double target = rng.uniform() < 0.25 ? 1.0 : rng.uniform(0.3, 1.0);
  // Shrink slightly below the target so rounding never pushes the mean past 1.
  return WeightFn(f.scaled(target / f.integral() * (1.0 - 1e-15)));
}

}  // namespace

StepFn step_function(Rng& rng, std::size_t max_pieces, std::int64_t max_den, double lo, double hi) {
  auto bps = random_breakpoints(rng, max_pieces, max_den);
  std::vector<double> vals(bps.size() - 1);
  for (auto& v : vals) v = rng.uniform(lo, hi);
  return StepFn(std::move(bps), std::move(vals));
}

WeightFn weight(Rng& rng, std::size_t n) {
  const auto v = descending(rng, n);
  return scaled_to_mean(rng, StepFn::uniform(v));
}

WeightFn weight_rational(Rng& rng, std::size_t max_pieces, std::int64_t max_den) {
  auto bps = random_breakpoints(rng, max_pieces, max_den);
  return scaled_to_mean(rng, StepFn(bps, descending(rng, bps.size() - 1)));
}

NormSpec sup_of(Rng& rng, std::size_t n, std::size_t members) {
  std::vector<WeightFn> fs;
  for (std::size_t i = 0; i < members; ++i) fs.push_back(rng.uniform() < 0.5 ? weight(rng, n) : weight_rational(rng));
  return NormSpec::sup_of(std::move(fs));
}

NormSpec csup(Rng& rng, std::size_t max_pieces) {
  auto bps = random_breakpoints(rng, max_pieces, 8);
  std::vector<double> vals(bps.size() - 1);
  for (auto& v : vals) v = rng.uniform();
  vals[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(vals.size()) - 1))] = 1.0;
  return NormSpec::csup(StepFn(std::move(bps), std::move(vals)));
}

std::vector<NormSpec> polyhedral_battery(Rng& rng, std::size_t n) {
  const auto k = static_cast<std::int64_t>(rng.integer(1, static_cast<std::int64_t>(n)));
  std::vector<NormSpec> out{
      NormSpec::operator_norm(),
      NormSpec::trace(),
      NormSpec::kyfan(Rational(k, static_cast<std::int64_t>(n))),
      NormSpec::kyfan(Scalar(1.0 / std::numbers::sqrt2)),
      NormSpec::kyfan(Rational(0)),
      NormSpec::tbracket(Rational(3, 4)),
      NormSpec::tbracket(Scalar(0.5 + 1.0 / (2.0 * std::numbers::pi))),
      NormSpec::weight(weight(rng, n)),
      NormSpec::weight(weight_rational(rng)),
      NormSpec::weight(weight(rng, n)),
      sup_of(rng, n, 2),
      sup_of(rng, n, 3),
      sup_of(rng, n, 4),
      csup(rng),
      csup(rng),
      NormSpec::kyfan(Scalar(rng.uniform(0.05, 1.0))),
  };
  return out;
}

std::vector<NormSpec> battery(Rng& rng, std::size_t n) {
  auto out = polyhedral_battery(rng, n);
  out.push_back(NormSpec::lp(1.0));
  out.push_back(NormSpec::lp(1.5));
  out.push_back(NormSpec::lp(2.0));
  out.push_back(NormSpec::lp(rng.uniform(2.0, 8.0)));
  return out;
}

CMatrix matrix(Rng& rng, std::size_t n) {
  CMatrix t = random_gaussian(n, rng) * Complex(rng.uniform(0.2, 3.0));
  if (n > 1 && rng.uniform() < 0.2) {
    // Drop a random number of columns to create a kernel.
    const auto keep = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(n) - 1));
    std::vector<double> d(n, 0.0);
    std::fill(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(keep), 1.0);
    const CMatrix u = random_unitary(n, rng);
    t = t * u * CMatrix::diagonal(std::span<const double>(d)) * u.adjoint();
  }
  return t;
}

std::vector<double> vector(Rng& rng, std::size_t n) {
  std::vector<double> x(n);
  for (auto& v : x) v = rng.normal() * 2.0;
  if (n > 1 && rng.uniform() < 0.2) x[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(n) - 1))] = 0.0;
  return x;
}

std::pair<CMatrix, CMatrix> majorization_pair(Rng& rng, std::size_t n) {
  const CMatrix t = matrix(rng, n);
  if (rng.uniform() < 0.5) {
    const auto terms = static_cast<std::size_t>(rng.integer(1, 4));
    std::vector<double> w(terms);
    double total = 0.0;
    for (auto& x : w) total += (x = rng.uniform(0.1, 1.0));
    CMatrix s(n);
    for (std::size_t i = 0; i < terms; ++i) {
      const CMatrix u = random_unitary(n, rng);
      s += (u * t * u.adjoint()) * Complex(w[i] / total);
    }
    // Scaling down keeps the pair dominated and adds slack variety.
    if (rng.uniform() < 0.3) s *= Complex(rng.uniform(0.5, 1.0));
    return {t, s};
  }
  const auto sv = s_numbers(t).s;
  std::vector<double> mixed(n, 0.0);
  const auto terms = static_cast<std::size_t>(rng.integer(1, 3));
  std::vector<double> w(terms);
  double total = 0.0;
  for (auto& x : w) total += (x = rng.uniform(0.1, 1.0));
  for (std::size_t i = 0; i < terms; ++i) {
    std::vector<std::size_t> perm(n);
    for (std::size_t j = 0; j < n; ++j) perm[j] = j;
    for (std::size_t j = n; j > 1; --j)
      std::swap(perm[j - 1], perm[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(j) - 1))]);
    for (std::size_t j = 0; j < n; ++j) mixed[j] += w[i] / total * sv[perm[j]];
  }
  const CMatrix s = random_unitary(n, rng) * CMatrix::diagonal(std::span<const double>(mixed)) * random_unitary(n, rng);
  return {t, s};
}

Profile admissible_profile(Rng& rng, std::size_t max_pieces) {
  // Random mixture of <t> profiles, then read back its knots: admissible by
  // construction.
  const auto atoms = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(max_pieces)));
  std::vector<Atom> as;
  double total = 0.0;
  for (std::size_t i = 0; i < atoms; ++i) {
    double t = rng.uniform(0.5, 1.0);
    if (rng.uniform() < 0.15) t = 0.5;
    if (rng.uniform() < 0.15) t = 1.0;
    const double w = rng.uniform(0.05, 1.0);
    total += w;
    as.push_back({t, w});
  }
  for (auto& a : as) a.w /= total;
  AtomicMeasure mu(as);
  return reconstruct(mu);
}

}  // namespace gaugenorm::gen
