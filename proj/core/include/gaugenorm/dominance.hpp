#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaugenorm/linalg.hpp"
#include "gaugenorm/norm_spec.hpp"

namespace gaugenorm {

// Slack on the hypothesis side (partial sums) and the conclusion side (norm
// comparisons). The conclusion slack is the looser one so rounding can never
// turn a valid instance into a reported counterexample.
inline constexpr double kDominanceHypothesisTol = 1e-10;
inline constexpr double kDominanceConclusionTol = 1e-9;

struct DominanceVerdict {
  bool dominates = false;
  std::vector<double> partial_sums_s;
  std::vector<double> partial_sums_t;
  // First k (1-based) with sum_{i<=k} s_i(S) > sum_{i<=k} s_i(T) + tol.
  std::optional<std::size_t> violating_k;
};

// Is S dominated by T in every Ky Fan norm? Checked on the partial sums of
// s-numbers; t |||.|||_(t) is piecewise linear with knots at k/n, so the grid
// decides the continuum.
DominanceVerdict kyfan_dominates(const CMatrix& t, const CMatrix& s);

struct TransferEntry {
  std::string spec;
  double norm_s = 0.0;
  double norm_t = 0.0;
  double margin = 0.0;  // norm_t - norm_s
  bool holds = true;
};

struct TransferReport {
  std::vector<TransferEntry> entries;
  bool all_hold() const;
};

// Requires kyfan_dominates(t, s); throws DomainError otherwise.
TransferReport dominance_transfer(const CMatrix& t, const CMatrix& s, const std::vector<NormSpec>& specs);

// The weight (n/k) chi_[0,k/n) that separates S from T when the verdict
// reports violating_k = k.
NormSpec separating_spec(std::size_t n, std::size_t k);

}  // namespace gaugenorm
