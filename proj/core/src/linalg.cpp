#include "gaugenorm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gaugenorm/errors.hpp"

namespace gaugenorm {

namespace {

constexpr int kMaxSweeps = 64;
constexpr double kJacobiTol = 1e-14;
constexpr double kHermitianTol = 1e-10;
constexpr double kClampRel = 1e-14;

void require_same_dim(const CMatrix& a, const CMatrix& b) {
  if (a.n() != b.n())
    throw DimensionError("matrix dimensions differ: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
}

double off_diagonal_mass(const CMatrix& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j)
      if (i != j) acc += std::norm(a(i, j));
  return std::sqrt(acc);
}

// Jacobi on a matrix already known to be Hermitian; no input check.
HermitianEigen jacobi(CMatrix a) {
  const std::size_t n = a.n();
  CMatrix v = CMatrix::identity(n);
  const double scale = a.frobenius();
  int sweep = 0;
  while (off_diagonal_mass(a) > kJacobiTol * scale) {
    if (++sweep > kMaxSweeps) throw NumericalError("Jacobi eigensolver did not converge in 64 sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Complex phase = apq / mag;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Real rotation zeroing [[app, mag],[mag, aqq]] after the phase shift.
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // G = diag(1, e^{-i phi}) * [[c, s], [-s, c]] on the (p,q) plane.
        const Complex gpp = c;
        const Complex gpq = s;
        const Complex gqp = -s * std::conj(phase);
        const Complex gqq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });
  HermitianEigen out{std::vector<double>(n), CMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

// Eigen-decomposition of T*T with tiny eigenvalues clamped at zero.
HermitianEigen gram_eigen(const CMatrix& t) {
  auto e = jacobi((t.adjoint() * t).hermitian_part());
  const double top = e.values.empty() ? 0.0 : std::max(e.values.front(), 0.0);
  for (double& lam : e.values)
    if (lam < kClampRel * top) lam = 0.0;
  return e;
}

std::vector<Complex> column(const CMatrix& m, std::size_t j) {
  std::vector<Complex> c(m.n());
  for (std::size_t i = 0; i < m.n(); ++i) c[i] = m(i, j);
  return c;
}

double vnorm(const std::vector<Complex>& v) {
  double acc = 0.0;
  for (const auto& x : v) acc += std::norm(x);
  return std::sqrt(acc);
}

// Projects v against basis vectors (twice, for stability) and normalizes.
// Returns false when v is numerically inside their span.
bool orthonormalize_against(std::vector<Complex>& v, const std::vector<std::vector<Complex>>& basis) {
  const double before = vnorm(v);
  if (before == 0.0) return false;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) {
      Complex dot = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) dot += std::conj(b[i]) * v[i];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= dot * b[i];
    }
  }
  const double after = vnorm(v);
  if (after <= 1e-8 * before) return false;
  for (auto& x : v) x /= after;
  return true;
}

CMatrix from_columns(const std::vector<std::vector<Complex>>& cols) {
  const std::size_t n = cols.size();
  CMatrix m(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  return m;
}

}  // namespace

CMatrix::CMatrix(std::size_t n) : n_(n), a_(n * n) {
  if (n == 0) throw DimensionError("matrix dimension must be at least 1");
}

CMatrix::CMatrix(std::size_t n, std::vector<Complex> entries) : n_(n), a_(std::move(entries)) {
  if (n == 0) throw DimensionError("matrix dimension must be at least 1");
  if (a_.size() != n * n) throw DimensionError("matrix needs n*n entries");
  if (!is_finite()) throw DomainError("matrix entries must be finite");
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> d) {
  CMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> d) {
  CMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix CMatrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw DimensionError("matrix rows must all have length n");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return CMatrix(n, std::move(entries));
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

Complex CMatrix::trace() const {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < n_; ++i) acc += (*this)(i, i);
  return acc;
}

double CMatrix::frobenius() const {
  double acc = 0.0;
  for (const auto& x : a_) acc += std::norm(x);
  return std::sqrt(acc);
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : a_) m = std::max(m, std::abs(x));
  return m;
}

bool CMatrix::is_finite() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](const Complex& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); });
}

bool CMatrix::is_hermitian(double tol) const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

CMatrix CMatrix::hermitian_part() const {
  CMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  require_same_dim(*this, o);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  require_same_dim(*this, o);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
  for (auto& x : a_) x *= s;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.n();
  CMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

HermitianEigen eig_hermitian(const CMatrix& a) {
  if (!a.is_hermitian(kHermitianTol)) throw DomainError("eig_hermitian: matrix is not Hermitian");
  return jacobi(a.hermitian_part());
}

SNumbers s_numbers(const CMatrix& t) {
  auto e = gram_eigen(t);
  SNumbers out{std::move(e.values)};
  for (double& x : out.s) x = std::sqrt(x);
  return out;
}

StepFn mu_step(const SNumbers& s) { return StepFn::uniform(s.s); }
StepFn mu_step(const CMatrix& t) { return mu_step(s_numbers(t)); }

double operator_norm(const CMatrix& t) { return s_numbers(t).s.front(); }

double trace_norm(const CMatrix& t) {
  const auto s = s_numbers(t).s;
  return std::accumulate(s.begin(), s.end(), 0.0) / static_cast<double>(s.size());
}

void validate_partition(const Partition& p, std::size_t n) {
  if (p.projections.empty()) throw DomainError("partition needs at least one projection");
  CMatrix sum(n);
  for (std::size_t i = 0; i < p.projections.size(); ++i) {
    const auto& e = p.projections[i];
    if (e.n() != n) throw DimensionError("partition projection has wrong dimension");
    if (!e.is_hermitian(kHermitianTol)) throw DomainError("partition element is not Hermitian");
    if ((e * e - e).max_abs() > kHermitianTol) throw DomainError("partition element is not idempotent");
    for (std::size_t j = i + 1; j < p.projections.size(); ++j)
      if ((e * p.projections[j]).max_abs() > kHermitianTol) throw DomainError("partition elements are not orthogonal");
    sum += e;
  }
  if ((sum - CMatrix::identity(n)).max_abs() > kHermitianTol) throw DomainError("partition does not sum to identity");
}

Partition coordinate_partition(std::size_t n, const std::vector<std::vector<std::size_t>>& groups) {
  Partition p;
  for (const auto& g : groups) {
    CMatrix e(n);
    for (std::size_t i : g) {
      if (i >= n) throw DimensionError("coordinate index out of range");
      e(i, i) = 1.0;
    }
    p.projections.push_back(std::move(e));
  }
  validate_partition(p, n);
  return p;
}

Partition random_partition(std::size_t n, Rng& rng) {
  const CMatrix q = random_unitary(n, rng);
  const auto blocks = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(n)));
  // Random composition of n into `blocks` positive parts.
  std::vector<std::size_t> cuts;
  std::vector<std::size_t> pool(n - 1);
  std::iota(pool.begin(), pool.end(), std::size_t{1});
  for (std::size_t b = 0; b + 1 < blocks; ++b) {
    auto pick = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(pool.size()) - 1));
    cuts.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  cuts.push_back(0);
  cuts.push_back(n);
  std::sort(cuts.begin(), cuts.end());
  Partition p;
  for (std::size_t b = 0; b + 1 < cuts.size(); ++b) {
    CMatrix e(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = cuts[b]; k < cuts[b + 1]; ++k) e(i, j) += q(i, k) * std::conj(q(j, k));
    p.projections.push_back(std::move(e));
  }
  return p;
}

CMatrix pinch(const CMatrix& t, const Partition& p) {
  validate_partition(p, t.n());
  CMatrix out(t.n());
  for (const auto& e : p.projections) out += e * t * e;
  return out;
}

CMatrix polar_unitary(const CMatrix& t) {
  const std::size_t n = t.n();
  const auto e = gram_eigen(t);
  const double top = std::sqrt(std::max(e.values.front(), 0.0));
  std::vector<std::vector<Complex>> left;
  std::vector<std::size_t> filled;
  std::vector<std::vector<Complex>> ucols(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double sigma = std::sqrt(e.values[i]);
    if (sigma <= 1e-12 * top || sigma == 0.0) continue;
    std::vector<Complex> u(n);
    for (std::size_t r = 0; r < n; ++r) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += t(r, k) * e.vectors(k, i);
      u[r] = acc / sigma;
    }
    if (!orthonormalize_against(u, left)) continue;
    left.push_back(u);
    ucols[i] = std::move(u);
    filled.push_back(i);
  }
  // Complete on the kernel with standard basis directions.
  std::size_t next_basis = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!ucols[i].empty()) continue;
    while (true) {
      if (next_basis >= n) throw NumericalError("polar_unitary: basis completion failed");
      std::vector<Complex> cand(n);
      cand[next_basis++] = 1.0;
      if (orthonormalize_against(cand, left)) {
        left.push_back(cand);
        ucols[i] = std::move(cand);
        break;
      }
    }
  }
  return from_columns(ucols) * e.vectors.adjoint();
}

CMatrix abs(const CMatrix& t) {
  const auto e = gram_eigen(t);
  const std::size_t n = t.n();
  CMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double sigma = std::sqrt(e.values[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) += sigma * e.vectors(i, k) * std::conj(e.vectors(j, k));
  }
  return out;
}

CMatrix random_gaussian(std::size_t n, Rng& rng) {
  CMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.complex_normal() * std::sqrt(0.5);
  return g;
}

CMatrix random_unitary(std::size_t n, Rng& rng) {
  const CMatrix g = random_gaussian(n, rng);
  std::vector<std::vector<Complex>> cols;
  for (std::size_t j = 0; j < n; ++j) {
    auto c = column(g, j);
    if (!orthonormalize_against(c, cols)) throw NumericalError("random_unitary: degenerate Gaussian sample");
    cols.push_back(std::move(c));
  }
  return from_columns(cols);
}

CMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(n, rng);
}

CMatrix random_hermitian(std::size_t n, Rng& rng) { return random_gaussian(n, rng).hermitian_part(); }

double unitarity_defect(const CMatrix& u) { return (u.adjoint() * u - CMatrix::identity(u.n())).max_abs(); }

}  // namespace gaugenorm
