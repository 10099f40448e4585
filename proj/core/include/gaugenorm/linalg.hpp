#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gaugenorm/random.hpp"
#include "gaugenorm/stepfn.hpp"

namespace gaugenorm {

using Complex = std::complex<double>;

// Dense complex n x n matrix, row-major. The trace carried alongside it is
// the normalized one, tau_n(T) = tr(T)/n.
class CMatrix {
public:
  explicit CMatrix(std::size_t n);
  CMatrix(std::size_t n, std::vector<Complex> entries);

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const Complex> d);
  static CMatrix diagonal(std::span<const double> d);
  static CMatrix from_rows(const std::vector<std::vector<Complex>>& rows);

  std::size_t n() const { return n_; }
  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::span<const Complex> data() const { return a_; }

  CMatrix adjoint() const;
  Complex trace() const;
  Complex normalized_trace() const { return trace() / static_cast<double>(n_); }
  double frobenius() const;
  double max_abs() const;
  bool is_finite() const;
  bool is_hermitian(double tol) const;
  // (A + A*)/2
  CMatrix hermitian_part() const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(Complex s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

private:
  std::size_t n_;
  std::vector<Complex> a_;
};

struct HermitianEigen {
  std::vector<double> values;  // descending
  CMatrix vectors;             // columns are eigenvectors
};

// Cyclic complex Jacobi. Requires max|A - A*| <= 1e-10.
HermitianEigen eig_hermitian(const CMatrix& a);

// Singular values s_1 >= ... >= s_n >= 0.
struct SNumbers {
  std::vector<double> s;
  std::size_t n() const { return s.size(); }
};

SNumbers s_numbers(const CMatrix& t);
// mu_s(T) on the uniform n-partition.
StepFn mu_step(const CMatrix& t);
StepFn mu_step(const SNumbers& s);

double operator_norm(const CMatrix& t);
// ||T||_1 = tau_n(|T|)
double trace_norm(const CMatrix& t);

// Orthogonal projections summing to the identity.
struct Partition {
  std::vector<CMatrix> projections;
};

// Throws DimensionError / DomainError when the projections do not form a
// partition of unity in dimension n (tolerance 1e-10).
void validate_partition(const Partition& p, std::size_t n);
Partition coordinate_partition(std::size_t n, const std::vector<std::vector<std::size_t>>& groups);
// Spectral-style partition from a random unitary basis split into k blocks.
Partition random_partition(std::size_t n, Rng& rng);

// sum_i E_i T E_i
CMatrix pinch(const CMatrix& t, const Partition& p);

// Unitary V with T = V|T|.
CMatrix polar_unitary(const CMatrix& t);
// |T| = (T*T)^{1/2}
CMatrix abs(const CMatrix& t);

CMatrix random_gaussian(std::size_t n, Rng& rng);
CMatrix random_unitary(std::size_t n, Rng& rng);
CMatrix random_unitary(std::size_t n, std::uint64_t seed);
CMatrix random_hermitian(std::size_t n, Rng& rng);

// Largest |(U*U - I)_{ij}|.
double unitarity_defect(const CMatrix& u);

}  // namespace gaugenorm
