#include "gaugenorm/extreme2.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "gaugenorm/duality.hpp"
#include "gaugenorm/errors.hpp"
#include "gaugenorm/quadrature.hpp"
#include "gaugenorm/random.hpp"

namespace gaugenorm {

namespace {

constexpr double kAtomMergeTol = 1e-12;
constexpr double kMassTol = 1e-10;
constexpr double kRoundTripTol = 1e-10;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Slope comparisons get 1e-12 plus the rounding floor of a difference
// quotient over a short piece.
double slope_tol(const std::vector<double>& knots, const std::vector<double>& values, std::size_t piece) {
  const double width = knots[piece + 1] - knots[piece];
  const double scale = std::max(std::fabs(values[piece]), std::fabs(values[piece + 1]));
  return kProfileTol + 8.0 * kEps * scale / width;
}

std::vector<double> dedupe_sorted(std::vector<double> xs, double tol) {
  std::sort(xs.begin(), xs.end());
  std::vector<double> out;
  for (double x : xs)
    if (out.empty() || x - out.back() > tol) out.push_back(x);
  return out;
}

// Atoms from slopes; weights may come out negative for inadmissible input.
std::vector<Atom> mixture_atoms(const Profile& p) {
  const auto& x = p.knots();
  const auto slopes = p.slopes();
  std::vector<Atom> atoms;
  std::vector<double> alpha(slopes.size());
  for (std::size_t i = 0; i < slopes.size(); ++i) alpha[i] = 2.0 * slopes[i];
  atoms.push_back({0.5, alpha.front()});
  for (std::size_t i = 1; i < alpha.size(); ++i) atoms.push_back({0.5 * (1.0 + x[i]), alpha[i] - alpha[i - 1]});
  atoms.push_back({1.0, 1.0 - alpha.back()});
  return atoms;
}

Profile reconstruct_raw(const std::vector<Atom>& atoms) {
  std::vector<double> knots{0.0, 1.0};
  for (const auto& a : atoms) {
    const double k = 2.0 * a.t - 1.0;
    if (k > 0.0 && k < 1.0) knots.push_back(k);
  }
  knots = dedupe_sorted(std::move(knots), kAtomMergeTol);
  knots.front() = 0.0;
  knots.back() = 1.0;
  std::vector<double> values(knots.size(), 0.0);
  for (std::size_t i = 0; i < knots.size(); ++i)
    for (const auto& a : atoms) values[i] += a.w * std::max(a.t, 0.5 * (1.0 + knots[i]));
  return Profile::piecewise_linear(std::move(knots), std::move(values));
}

}  // namespace

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) {
  if (atoms.empty()) throw DomainError("atomic measure needs at least one atom");
  for (const auto& a : atoms) {
    if (!(a.t >= 0.5 - kAtomMergeTol && a.t <= 1.0 + kAtomMergeTol))
      throw DomainError("atom location must lie in [1/2, 1]");
    if (!(a.w > 0.0) || !std::isfinite(a.w)) throw DomainError("atom weights must be positive");
  }
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.t < b.t; });
  for (const auto& a : atoms) {
    if (!atoms_.empty() && a.t - atoms_.back().t <= kAtomMergeTol)
      atoms_.back().w += a.w;
    else
      atoms_.push_back({std::clamp(a.t, 0.5, 1.0), a.w});
  }
  if (std::fabs(total() - 1.0) > kMassTol) throw DomainError("atomic measure must have total mass 1");
}

double AtomicMeasure::total() const {
  double acc = 0.0;
  for (const auto& a : atoms_) acc += a.w;
  return acc;
}

Profile Profile::piecewise_linear(std::vector<double> knots, std::vector<double> values) {
  if (knots.size() < 2 || knots.size() != values.size())
    throw DomainError("profile needs at least two knots and one value per knot");
  if (knots.front() != 0.0 || knots.back() != 1.0) throw DomainError("profile knots must start at 0 and end at 1");
  for (std::size_t i = 1; i < knots.size(); ++i)
    if (!(knots[i] > knots[i - 1])) throw DomainError("profile knots must be strictly increasing");
  for (double v : values)
    if (!std::isfinite(v)) throw DomainError("profile values must be finite");
  Profile p;
  p.knots_ = std::move(knots);
  p.values_ = std::move(values);
  return p;
}

Profile Profile::lp(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("L^p profile needs finite p >= 1");
  Profile out;
  out.exponent_ = p;
  out.knots_ = profile_grid();
  out.values_.reserve(out.knots_.size());
  for (double s : out.knots_) out.values_.push_back(lp_profile(p, s));
  return out;
}

double Profile::operator()(double s) const {
  if (exponent_) return lp_profile(*exponent_, s);
  if (s <= knots_.front()) return values_.front();
  if (s >= knots_.back()) return values_.back();
  auto it = std::upper_bound(knots_.begin(), knots_.end(), s);
  const auto i = static_cast<std::size_t>(it - knots_.begin()) - 1;
  const double w = (s - knots_[i]) / (knots_[i + 1] - knots_[i]);
  return values_[i] + w * (values_[i + 1] - values_[i]);
}

std::vector<double> Profile::slopes() const {
  std::vector<double> out(knots_.size() - 1);
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i)
    out[i] = (values_[i + 1] - values_[i]) / (knots_[i + 1] - knots_[i]);
  return out;
}

Profile Profile::sampled() const {
  Profile p = *this;
  p.exponent_.reset();
  return p;
}

std::string Profile::to_csv() const {
  std::string out = "s,f\n";
  char buf[64];
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.6g,%.6g\n", knots_[i], values_[i]);
    out += buf;
  }
  return out;
}

std::vector<double> profile_grid() {
  constexpr int kInterior = 257;
  constexpr int kLast = kInterior + 1;
  std::vector<double> grid(kLast + 1);
  for (int k = 0; k <= kLast; ++k) grid[k] = 0.5 * (1.0 - std::cos(std::numbers::pi * k / kLast));
  grid.front() = 0.0;
  grid.back() = 1.0;
  return grid;
}

Admissibility admissibility(const Profile& profile) {
  const Profile p = profile.sampled();
  const auto& x = p.knots();
  const auto& v = p.values();
  const auto slopes = p.slopes();
  Admissibility a;

  a.nondecreasing = true;
  a.convex = true;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    const double tol = slope_tol(x, v, i);
    if (slopes[i] < -tol) a.nondecreasing = false;
    if (i > 0 && slopes[i] < slopes[i - 1] - std::max(tol, slope_tol(x, v, i - 1))) a.convex = false;
  }
  a.endpoint_one = std::fabs(v.back() - 1.0) <= kProfileTol;
  a.left_derivative = slopes.back() <= 0.5 + slope_tol(x, v, slopes.size() - 1);
  a.sandwich = true;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (v[i] < 0.5 * (1.0 + x[i]) - kProfileTol || v[i] > 1.0 + kProfileTol) a.sandwich = false;

  a.sandwich_form = a.nondecreasing && a.convex && a.sandwich;
  a.derivative_form = a.nondecreasing && a.convex && a.endpoint_one && a.left_derivative;
  const auto atoms = mixture_atoms(p);
  const bool nonneg = std::all_of(atoms.begin(), atoms.end(), [&](const Atom& at) { return at.w >= -kProfileTol; });
  if (nonneg) {
    std::vector<Atom> kept;
    for (const auto& at : atoms)
      if (at.w > 0.0) kept.push_back(at);
    a.mixture_form = !kept.empty() && max_profile_difference(reconstruct_raw(kept), p) <= kRoundTripTol;
  }

  if (!a.nondecreasing)
    a.violated = "nondecreasing";
  else if (!a.convex)
    a.violated = "convex";
  else if (!a.endpoint_one)
    a.violated = "f(1) = 1";
  else if (!a.left_derivative)
    a.violated = "f'(1-) <= 1/2";
  else if (!a.sandwich)
    a.violated = "(1+s)/2 <= f(s) <= 1";
  return a;
}

bool check_admissible(const Profile& p) { return admissibility(p).admissible(); }

Profile profile_of(const NormSpec& spec) {
  if (const auto* lp = spec.as<spec::Lp>()) return Profile::lp(lp->p);
  // On the ordered cone (1, s) every row is an affine function a + b s, so
  // the profile is the upper envelope of finitely many lines.
  const auto gauge = ordered_gauge(spec, 2);
  std::vector<double> knots{0.0, 1.0};
  for (std::size_t i = 0; i < gauge.rows.size(); ++i)
    for (std::size_t j = i + 1; j < gauge.rows.size(); ++j) {
      const double db = gauge.rows[j][1] - gauge.rows[i][1];
      if (db == 0.0) continue;
      const double s = (gauge.rows[i][0] - gauge.rows[j][0]) / db;
      if (s > 0.0 && s < 1.0) knots.push_back(s);
    }
  knots = dedupe_sorted(std::move(knots), 1e-12);
  knots.front() = 0.0;
  knots.back() = 1.0;
  auto envelope = [&](double s) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& r : gauge.rows) best = std::max(best, r[0] + r[1] * s);
    return best;
  };
  const double unit = envelope(1.0);
  std::vector<double> values;
  for (double s : knots) values.push_back(envelope(s) / unit);
  values.back() = 1.0;

  // Drop knots where the slope does not change.
  std::vector<double> kx{knots.front()}, kv{values.front()};
  for (std::size_t i = 1; i + 1 < knots.size(); ++i) {
    const double left = (values[i] - kv.back()) / (knots[i] - kx.back());
    const double right = (values[i + 1] - values[i]) / (knots[i + 1] - knots[i]);
    if (std::fabs(right - left) > 1e-13) {
      kx.push_back(knots[i]);
      kv.push_back(values[i]);
    }
  }
  kx.push_back(knots.back());
  kv.push_back(values.back());
  return Profile::piecewise_linear(std::move(kx), std::move(kv));
}

AtomicMeasure decompose(const Profile& p) {
  if (p.is_lp()) throw DomainError("decompose needs a piecewise-linear profile; sample the L^p profile first");
  const auto adm = admissibility(p);
  if (!adm.admissible()) throw DomainError("inadmissible profile: violates " + adm.violated);
  std::vector<Atom> kept;
  for (auto a : mixture_atoms(p)) {
    if (a.w <= kProfileTol) continue;
    kept.push_back(a);
  }
  return AtomicMeasure(std::move(kept));
}

Profile reconstruct(const AtomicMeasure& mu) { return reconstruct_raw(mu.atoms()); }

double max_profile_difference(const Profile& a, const Profile& b) {
  std::vector<double> xs = a.knots();
  xs.insert(xs.end(), b.knots().begin(), b.knots().end());
  double worst = 0.0;
  for (double s : xs) worst = std::max(worst, std::fabs(a(s) - b(s)));
  return worst;
}

double lp_profile(double p, double s) { return std::pow(0.5 * (1.0 + std::pow(s, p)), 1.0 / p); }

namespace {

// f_p''(x) x^{m-1} for the substitution x = u^m, written so that the power
// of u is applied once (no 0 * inf at u = 0):
//   f_p''(x) = (p-1)/4 x^{p-2} ((1+x^p)/2)^{1/p-2}.
double scaled_second_derivative(double p, double m, double u) {
  const double x = std::pow(u, m);
  const double g = 0.5 * (1.0 + std::pow(x, p));
  return 0.25 * (p - 1.0) * std::pow(u, m * (p - 1.0) - 1.0) * std::pow(g, 1.0 / p - 2.0);
}

double substitution_power(double p) { return p >= 2.0 ? 1.0 : std::ceil(2.0 / (p - 1.0)); }

}  // namespace

double lp_density(double p, double t) {
  if (!(p > 1.0)) throw DomainError("L^p density needs p > 1");
  const double x = 2.0 * t - 1.0;
  if (x < 0.0 || x > 1.0) throw DomainError("L^p density is supported on [1/2, 1]");
  const double g = 0.5 * (1.0 + std::pow(x, p));
  return (p - 1.0) * std::pow(x, p - 2.0) * std::pow(g, 1.0 / p - 2.0);
}

double lp_density_integral(double p, double s) {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("L^p density check needs 1 < p < inf");
  if (s < 0.0 || s > 1.0) throw DomainError("profile argument must lie in [0,1]");
  // x = 2t - 1 maps [1/2,1] to [0,1] (dt = dx/2), and x = u^m removes the
  // x^{p-2} endpoint singularity for p < 2. The kink of max{t, (1+s)/2}
  // sits at x = s, i.e. u = s^{1/m}; each side is integrated separately.
  const double m = substitution_power(p);
  auto integrand = [&](double u) {
    const double x = std::pow(u, m);
    const double level = std::max(0.5 * (1.0 + x), 0.5 * (1.0 + s));
    return level * 2.0 * m * scaled_second_derivative(p, m, u);
  };
  const double kink = std::pow(s, 1.0 / m);
  return adaptive_simpson(integrand, 0.0, kink) + adaptive_simpson(integrand, kink, 1.0);
}

double lp_density_check(double p, std::span<const double> s_grid) {
  double worst = 0.0;
  for (double s : s_grid) worst = std::max(worst, std::fabs(lp_density_integral(p, s) - lp_profile(p, s)));
  return worst;
}

ExtremalityReport not_convex_combination(double t, std::size_t trials, std::uint64_t seed) {
  if (!(t >= 0.5 && t <= 1.0)) throw DomainError("<t> norms are defined for t in [1/2, 1]");
  ExtremalityReport report;
  report.t = t;
  const Profile f = reconstruct(AtomicMeasure({{t, 1.0}}));
  report.decomposition = decompose(f);
  const double knot = 2.0 * t - 1.0;
  Rng rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    ++report.trials;
    const double alpha = rng.uniform(0.05, 0.95);
    std::vector<Atom> atoms;
    if (trial % 4 == 0) {
      atoms = {{t, 1.0}};
    } else {
      const double w = rng.uniform(0.05, 0.95);
      atoms = {{rng.uniform(0.5, 1.0), w}, {rng.uniform(0.5, 1.0), 1.0 - w}};
    }
    const Profile f1 = reconstruct(AtomicMeasure(atoms));

    // f2 = (f - alpha f1) / (1 - alpha) over the union of knots.
    std::vector<double> xs = f.knots();
    xs.insert(xs.end(), f1.knots().begin(), f1.knots().end());
    xs = dedupe_sorted(std::move(xs), kAtomMergeTol);
    xs.front() = 0.0;
    xs.back() = 1.0;
    std::vector<double> vs;
    for (double s : xs) vs.push_back((f(s) - alpha * f1(s)) / (1.0 - alpha));
    const Profile f2 = Profile::piecewise_linear(xs, vs);

    if (!check_admissible(f2)) {
      ++report.infeasible;
      continue;
    }
    // Slopes pinned to 0 left of the knot and 1/2 right of it.
    bool pinned = true;
    for (const Profile* part : {&f1, &f2}) {
      const auto sl = part->slopes();
      for (std::size_t i = 0; i < sl.size(); ++i) {
        const double mid = 0.5 * (part->knots()[i] + part->knots()[i + 1]);
        const double expect = mid < knot ? 0.0 : 0.5;
        if (std::fabs(sl[i] - expect) > 1e-9) pinned = false;
      }
    }
    const bool equal = max_profile_difference(f1, f) <= 1e-9 && max_profile_difference(f2, f) <= 1e-9;
    if (pinned && equal)
      ++report.forced_equal;
    else
      ++report.violations;
  }
  return report;
}

}  // namespace gaugenorm
