#include "gaugenorm/norms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gaugenorm/errors.hpp"
#include "overloaded.hpp"

namespace gaugenorm {

namespace {

using detail::overloaded;

double kyfan_of_rearranged(const StepFn& g, const Scalar& t) { return partial_integral(g, t) / t.value; }

double evaluate_rearranged(const NormSpec& spec, const StepFn& g) {
  return std::visit(
      overloaded{
          [&](const spec::Operator&) { return g.values().front(); },
          [&](const spec::KyFanZero&) { return g.values().front(); },
          [&](const spec::Trace&) { return g.integral(); },
          [&](const spec::Lp& s) {
            double acc = 0.0;
            for (std::size_t i = 0; i < g.pieces(); ++i) acc += g.length(i).to_double() * std::pow(g.values()[i], s.p);
            return std::pow(acc, 1.0 / s.p);
          },
          [&](const spec::KyFan& s) { return kyfan_of_rearranged(g, s.t); },
          [&](const spec::Weight& s) { return pairing(s.f.fn(), g); },
          [&](const spec::SupOf& s) {
            double best = 0.0;
            for (const auto& f : s.fs) best = std::max(best, pairing(f.fn(), g));
            return best;
          },
          [&](const spec::TBracket& s) { return std::max(s.t.value * g.values().front(), g.integral()); },
          [&](const spec::CSup& s) {
            // |||f|||_(t) is nonincreasing in t, so on each piece where c is
            // constant the supremum sits at the left end. Right ends are
            // included as well; they never exceed the left ones.
            double best = 0.0;
            const auto& bps = s.c.breakpoints();
            for (std::size_t i = 0; i < s.c.pieces(); ++i) {
              const double c = s.c.values()[i];
              if (c == 0.0) continue;
              const double left = bps[i] == Rational(0) ? g.values().front() : kyfan_of_rearranged(g, Scalar(bps[i]));
              const double right = kyfan_of_rearranged(g, Scalar(bps[i + 1]));
              best = std::max({best, c * left, c * right});
            }
            return best;
          },
      },
      spec.value());
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void record(AxiomCheck& check, std::size_t trial, double lhs, double rhs, double tol, const std::string& what) {
  ++check.trials;
  const double excess = lhs - rhs;
  check.worst_excess = std::max(check.worst_excess, excess);
  if (excess > tol && check.passed) {
    check.passed = false;
    check.witness = "trial " + std::to_string(trial) + ": " + what + " lhs=" + fmt(lhs) + " rhs=" + fmt(rhs);
  }
}

}  // namespace

double norm_step(const NormSpec& spec, const StepFn& f) { return evaluate_rearranged(spec, rearrange(f.abs())); }

double norm_vec(const NormSpec& spec, std::span<const Complex> x) {
  if (x.empty()) throw DimensionError("norm of an empty vector");
  std::vector<double> mod(x.size());
  std::transform(x.begin(), x.end(), mod.begin(), [](const Complex& z) { return std::abs(z); });
  return norm_step(spec, StepFn::uniform(mod));
}

double norm_vec(const NormSpec& spec, std::span<const double> x) {
  if (x.empty()) throw DimensionError("norm of an empty vector");
  return norm_step(spec, StepFn::uniform(x));
}

double norm_mat(const NormSpec& spec, const CMatrix& t) { return norm_step(spec, mu_step(t)); }

double norm_of_identity(const NormSpec& spec) { return norm_step(spec, StepFn::constant(1.0)); }

std::vector<KyFanTerm> weight_norm_as_kyfan_combo(const WeightFn& f) {
  const StepFn& fn = f.fn();
  if (!fn.is_uniform()) throw DomainError("Ky Fan decomposition needs a uniform partition; refine first");
  const auto n = static_cast<std::int64_t>(fn.pieces());
  std::vector<KyFanTerm> terms;
  for (std::int64_t k = 1; k <= n; ++k) {
    const double ak = fn.values()[static_cast<std::size_t>(k - 1)];
    const double next = k < n ? fn.values()[static_cast<std::size_t>(k)] : 0.0;
    const double coeff = static_cast<double>(k) * (ak - next) / static_cast<double>(n);
    if (coeff != 0.0) terms.push_back({coeff, Rational(k, n)});
  }
  return terms;
}

bool AxiomReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

AxiomReport check_norm_axioms(const NormSpec& spec, const AxiomOptions& options) {
  Rng rng(options.seed);
  AxiomReport report;
  report.spec = spec.describe();
  auto named = [](const char* name) {
    AxiomCheck c;
    c.name = name;
    return c;
  };
  AxiomCheck triangle = named("triangle"), homogeneity = named("homogeneity"),
             invariance = named("unitary_invariance"), ideal = named("ideal_inequality"),
             sandwich = named("sandwich"), monotone = named("monotonicity");
  const double unit = norm_of_identity(spec);
  const double tol = options.tol;

  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(2, static_cast<std::int64_t>(std::max<std::size_t>(2, options.max_dim))));
    const CMatrix s = random_gaussian(n, rng);
    const CMatrix t = random_gaussian(n, rng);
    const double ns = norm_mat(spec, s);
    const double nt = norm_mat(spec, t);

    const double nsum = norm_mat(spec, s + t);
    if (options.negate_triangle)
      record(triangle, trial, ns + nt, nsum, tol * (1 + nsum), "negated |||S+T||| <= |||S|||+|||T|||");
    else
      record(triangle, trial, nsum, ns + nt, tol * (1 + nsum), "|||S+T||| <= |||S|||+|||T|||");

    const Complex lambda = rng.complex_normal();
    const double scaled = norm_mat(spec, t * lambda);
    const double expect = std::abs(lambda) * nt;
    record(homogeneity, trial, std::fabs(scaled - expect), 0.0, tol * (1 + expect), "| |||lambda T||| - |lambda| |||T||| |");

    const CMatrix u = random_unitary(n, rng);
    const CMatrix v = random_unitary(n, rng);
    const double rotated = norm_mat(spec, u * t * v);
    record(invariance, trial, std::fabs(rotated - nt), 0.0, 1e-8 * (1 + nt), "| |||UTV||| - |||T||| |");

    const CMatrix a = random_gaussian(n, rng);
    const CMatrix b = random_gaussian(n, rng);
    const double lhs = norm_mat(spec, a * t * b);
    const double rhs = operator_norm(a) * nt * operator_norm(b);
    record(ideal, trial, lhs, rhs, tol * (1 + rhs), "|||ATB||| <= ||A|| |||T||| ||B||");

    const double normalized = nt / unit;
    const double op = operator_norm(t);
    const double tr = trace_norm(t);
    record(sandwich, trial, tr, normalized, tol * (1 + op), "||T||_1 <= |||T|||");
    record(sandwich, trial, normalized, op, tol * (1 + op), "|||T||| <= ||T||");

    const CMatrix lower = a.adjoint() * a;
    const CMatrix upper = lower + b.adjoint() * b;
    const double nl = norm_mat(spec, lower);
    const double nu = norm_mat(spec, upper);
    record(monotone, trial, nl, nu, tol * (1 + nu), "0 <= S <= T => |||S||| <= |||T|||");
  }
  report.checks = {triangle, homogeneity, invariance, ideal, sandwich, monotone};
  return report;
}

}  // namespace gaugenorm
