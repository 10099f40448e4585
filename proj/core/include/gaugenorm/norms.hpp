#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "gaugenorm/linalg.hpp"
#include "gaugenorm/norm_spec.hpp"
#include "gaugenorm/stepfn.hpp"

namespace gaugenorm {

// Symmetric gauge norm of a step function: the norm only sees rearrange(|f|).
double norm_step(const NormSpec& spec, const StepFn& f);
// |x| laid out on the uniform n-partition, so the trace is the mean.
double norm_vec(const NormSpec& spec, std::span<const Complex> x);
double norm_vec(const NormSpec& spec, std::span<const double> x);
// |||T||| = |||mu_s(T)|||'
double norm_mat(const NormSpec& spec, const CMatrix& t);
// |||1|||, used to normalize.
double norm_of_identity(const NormSpec& spec);

struct KyFanTerm {
  double coefficient;
  Rational t;
};

// Summation by parts: |||T|||_f = sum_k k (a_k - a_{k+1}) / n * |||T|||_(k/n)
// for f = (a_1, ..., a_n) on the uniform partition. Zero coefficients are
// dropped. Throws DomainError for non-uniform partitions.
std::vector<KyFanTerm> weight_norm_as_kyfan_combo(const WeightFn& f);

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::size_t trials = 0;
  // Largest amount by which the inequality was exceeded (<= 0 when it held
  // everywhere).
  double worst_excess = -std::numeric_limits<double>::infinity();
  std::string witness;
};

struct AxiomReport {
  std::string spec;
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
};

struct AxiomOptions {
  std::size_t trials = 100;
  std::size_t max_dim = 5;
  std::uint64_t seed = 1;
  double tol = 1e-10;
  // Inverts the triangle-inequality check. Only for exercising the failure
  // path of test harnesses.
  bool negate_triangle = false;
};

// Randomized check of the norm axioms, unitary invariance, the ideal
// inequality |||ATB||| <= ||A|| |||T||| ||B||, the sandwich
// ||T||_1 <= |||T||| <= ||T|| (after normalization) and monotonicity on
// 0 <= S <= T. Failures are report entries.
AxiomReport check_norm_axioms(const NormSpec& spec, const AxiomOptions& options);

}  // namespace gaugenorm
