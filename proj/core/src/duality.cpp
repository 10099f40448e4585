#include "gaugenorm/duality.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "gaugenorm/errors.hpp"
#include "gaugenorm/norms.hpp"
#include "gaugenorm/polytope.hpp"
#include "overloaded.hpp"

namespace gaugenorm {

namespace {

using detail::overloaded;

std::vector<double> sorted_moduli(std::span<const double> x) {
  std::vector<double> m(x.size());
  std::transform(x.begin(), x.end(), m.begin(), [](double v) { return std::fabs(v); });
  std::sort(m.begin(), m.end(), std::greater<>());
  return m;
}

std::vector<double> moduli(std::span<const Complex> x) {
  std::vector<double> m(x.size());
  std::transform(x.begin(), x.end(), m.begin(), [](const Complex& z) { return std::abs(z); });
  return m;
}

// \int over the i-th cell [i/n, (i+1)/n) of f.
std::vector<double> cell_integrals(const StepFn& f, std::size_t n) {
  const std::vector<double> zeros(n, 0.0);
  auto [fine, grid] = refine(f, StepFn::uniform(zeros));
  std::vector<double> out(n, 0.0);
  const auto nn = static_cast<std::int64_t>(n);
  std::size_t cell = 0;
  for (std::size_t i = 0; i < fine.pieces(); ++i) {
    while (fine.breakpoints()[i] >= Rational(static_cast<std::int64_t>(cell) + 1, nn)) ++cell;
    out[cell] += fine.length(i).to_double() * fine.values()[i];
  }
  return out;
}

// Row of (1/t) \int_0^t y for y on the uniform n-partition.
std::vector<double> kyfan_row(const Scalar& t, std::size_t n) {
  std::vector<double> row(n, 0.0);
  const auto nn = static_cast<std::int64_t>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational lo(static_cast<std::int64_t>(i), nn);
    const Rational hi(static_cast<std::int64_t>(i) + 1, nn);
    double overlap;
    if (t.exact) {
      overlap = *t.exact <= lo ? 0.0 : (*t.exact >= hi ? (hi - lo).to_double() : (*t.exact - lo).to_double());
    } else {
      overlap = std::clamp(t.value - lo.to_double(), 0.0, 1.0 / static_cast<double>(n));
    }
    row[i] = overlap / t.value;
  }
  return row;
}

std::vector<double> first_coordinate(std::size_t n, double scale) {
  std::vector<double> row(n, 0.0);
  row[0] = scale;
  return row;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

void require_lp_dim(std::size_t n) {
  if (n == 0) throw DimensionError("dual norm of an empty vector");
  if (n > kMaxLpDim) throw DimensionError("LP route is limited to n <= " + std::to_string(kMaxLpDim));
}

DualResult lp_closed_form_dual(double p, std::span<const double> x) {
  const auto y = sorted_moduli(x);
  const double n = static_cast<double>(y.size());
  DualResult r;
  r.witness.assign(y.size(), 0.0);
  if (p == 1.0) {
    r.value = y.front();
    r.witness[0] = n;  // ||n e_1||_1 = 1 under the normalized trace
    return r;
  }
  const double q = p / (p - 1.0);
  double acc = 0.0;
  for (double v : y) acc += std::pow(v, q);
  r.value = std::pow(acc / n, 1.0 / q);
  if (r.value > 0.0)
    for (std::size_t i = 0; i < y.size(); ++i) r.witness[i] = std::pow(y[i] / r.value, q - 1.0);
  return r;
}

}  // namespace

double PolyhedralGauge::evaluate(std::span<const double> x) const {
  if (x.size() != n) throw DimensionError("gauge dimension mismatch");
  const auto y = sorted_moduli(x);
  double best = 0.0;
  for (const auto& row : rows) best = std::max(best, dot(row, y));
  return best;
}

PolyhedralGauge ordered_gauge(const NormSpec& spec, std::size_t n) {
  if (n == 0) throw DimensionError("gauge dimension must be positive");
  PolyhedralGauge g{n, {}};
  const double inv_n = 1.0 / static_cast<double>(n);
  std::visit(overloaded{
                 [&](const spec::Operator&) { g.rows.push_back(first_coordinate(n, 1.0)); },
                 [&](const spec::KyFanZero&) { g.rows.push_back(first_coordinate(n, 1.0)); },
                 [&](const spec::Trace&) { g.rows.emplace_back(n, inv_n); },
                 [&](const spec::Lp&) {
                   throw UnsupportedSpec("L^p is not polyhedral; use the conjugate-exponent closed form");
                 },
                 [&](const spec::KyFan& s) { g.rows.push_back(kyfan_row(s.t, n)); },
                 [&](const spec::Weight& s) { g.rows.push_back(cell_integrals(s.f.fn(), n)); },
                 [&](const spec::SupOf& s) {
                   for (const auto& f : s.fs) g.rows.push_back(cell_integrals(f.fn(), n));
                 },
                 [&](const spec::TBracket& s) {
                   g.rows.push_back(first_coordinate(n, s.t.value));
                   g.rows.emplace_back(n, inv_n);
                 },
                 [&](const spec::CSup& s) {
                   const auto& bps = s.c.breakpoints();
                   for (std::size_t i = 0; i < s.c.pieces(); ++i) {
                     const double c = s.c.values()[i];
                     if (c == 0.0) continue;
                     std::vector<double> row =
                         bps[i] == Rational(0) ? first_coordinate(n, 1.0) : kyfan_row(Scalar(bps[i]), n);
                     for (double& v : row) v *= c;
                     g.rows.push_back(std::move(row));
                   }
                 },
             },
             spec.value());
  return g;
}

OrderedConeLP dual_lp(const PolyhedralGauge& gauge, std::span<const double> x) {
  const std::size_t n = gauge.n;
  if (x.size() != n) throw DimensionError("dual LP: vector length differs from gauge dimension");
  OrderedConeLP lp;
  const auto xs = sorted_moduli(x);
  lp.objective.resize(n);
  for (std::size_t i = 0; i < n; ++i) lp.objective[i] = xs[i] / static_cast<double>(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<double> row(n, 0.0);
    row[i] = -1.0;
    row[i + 1] = 1.0;
    lp.constraints.emplace_back(std::move(row), 0.0);
  }
  for (const auto& row : gauge.rows) lp.constraints.emplace_back(row, 1.0);
  return lp;
}

LpSolution solve(const OrderedConeLP& lp) {
  LinearProgram prog;
  prog.objective = lp.objective;
  for (const auto& [row, bound] : lp.constraints) {
    prog.rows.push_back(row);
    prog.bounds.push_back(bound);
  }
  try {
    return solve_lp(prog);
  } catch (const NumericalError& e) {
    throw NumericalError(std::string("dual LP failed for a valid norm: ") + e.what());
  }
}

DualResult dual_of_gauge(const PolyhedralGauge& gauge, std::span<const double> x) {
  require_lp_dim(x.size());
  const auto sol = solve(dual_lp(gauge, x));
  return {sol.value, sol.x};
}

DualResult dual_vec(const NormSpec& spec, std::span<const double> x) {
  require_lp_dim(x.size());
  if (const auto* lp = spec.as<spec::Lp>()) return lp_closed_form_dual(lp->p, x);
  return dual_of_gauge(ordered_gauge(spec, x.size()), x);
}

DualResult dual_vec(const NormSpec& spec, std::span<const Complex> x) {
  const auto m = moduli(x);
  return dual_vec(spec, std::span<const double>(m));
}

DualResult dual_mat(const NormSpec& spec, const CMatrix& t) {
  const auto s = s_numbers(t);
  return dual_vec(spec, std::span<const double>(s.s));
}

std::vector<std::vector<double>> gamma_extreme_points(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw DomainError("gamma_extreme_points needs 1 <= k <= n");
  std::vector<std::vector<double>> pts;
  for (std::size_t j = 1; j < k; ++j) {
    std::vector<double> p(n, 0.0);
    for (std::size_t i = 0; i < j; ++i) p[i] = static_cast<double>(k) / static_cast<double>(j);
    pts.push_back(std::move(p));
  }
  pts.emplace_back(n, 1.0);
  pts.emplace_back(n, 0.0);
  return pts;
}

std::vector<std::vector<double>> unit_ball_vertices(const PolyhedralGauge& gauge) {
  const std::size_t n = gauge.n;
  if (n > kMaxVertexEnumDim)
    throw DimensionError("vertex enumeration is limited to n <= " + std::to_string(kMaxVertexEnumDim));
  // Difference coordinates z_j = y_j - y_{j+1} >= 0 turn the ordered cone
  // into the orthant; y_i = sum_{j >= i} z_j, so a row r becomes the partial
  // sums of r.
  std::vector<std::vector<double>> rows;
  rows.reserve(gauge.rows.size());
  for (const auto& r : gauge.rows) {
    std::vector<double> cum(n);
    std::partial_sum(r.begin(), r.end(), cum.begin());
    rows.push_back(std::move(cum));
  }
  const auto zs = enumerate_vertices_orthant(rows, std::vector<double>(rows.size(), 1.0));
  std::vector<std::vector<double>> ys;
  ys.reserve(zs.size());
  for (const auto& z : zs) {
    std::vector<double> y(n);
    double acc = 0.0;
    for (std::size_t i = n; i-- > 0;) {
      acc += z[i];
      y[i] = acc;
    }
    ys.push_back(std::move(y));
  }
  return ys;
}

PolyhedralGauge dual_gauge(const PolyhedralGauge& gauge) {
  PolyhedralGauge dual{gauge.n, {}};
  const double inv_n = 1.0 / static_cast<double>(gauge.n);
  for (auto v : unit_ball_vertices(gauge)) {
    if (std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; })) continue;
    for (double& x : v) x *= inv_n;
    const bool dup = std::any_of(dual.rows.begin(), dual.rows.end(), [&](const std::vector<double>& r) {
      for (std::size_t i = 0; i < r.size(); ++i)
        if (std::fabs(r[i] - v[i]) > 1e-12) return false;
      return true;
    });
    if (!dup) dual.rows.push_back(std::move(v));
  }
  return dual;
}

InvolutionResult involution_check(const NormSpec& spec, std::span<const double> x) {
  InvolutionResult r;
  r.primal = norm_vec(spec, x);
  if (const auto* lp = spec.as<spec::Lp>()) {
    // The dual of L^p is L^q; dualizing L^q uses the exponent q/(q-1) = p.
    if (lp->p == 1.0) {
      r.double_dual = norm_vec(NormSpec::trace(), x);
    } else {
      r.double_dual = lp_closed_form_dual(lp->p / (lp->p - 1.0), x).value;
    }
    return r;
  }
  const auto dual = dual_gauge(ordered_gauge(spec, x.size()));
  r.double_dual = dual_of_gauge(dual, x).value;
  return r;
}

RepresentationResult representation_check(const NormSpec& spec, const CMatrix& t) {
  if (spec.as<spec::SupOf>() == nullptr) throw UnsupportedSpec("representation_check expects a sup-of spec");
  const std::size_t n = t.n();
  RepresentationResult r;
  r.lhs = norm_mat(spec, t);
  const auto dual = dual_gauge(ordered_gauge(spec, n));
  const auto s = s_numbers(t).s;
  for (auto& v : unit_ball_vertices(dual)) {
    if (std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; })) continue;
    r.rhs = std::max(r.rhs, dot(v, s) / static_cast<double>(n));
    r.weights.push_back(std::move(v));
  }
  return r;
}

HolderResult holder_check(const NormSpec& spec, const CMatrix& s, const CMatrix& t) {
  HolderResult r;
  r.lhs = trace_norm(s * t);
  r.rhs = norm_mat(spec, s) * dual_mat(spec, t).value;
  return r;
}

}  // namespace gaugenorm
