#include "gaugenorm/dominance.hpp"

#include <algorithm>
#include <numeric>

#include "gaugenorm/errors.hpp"
#include "gaugenorm/norms.hpp"

namespace gaugenorm {

namespace {

std::vector<double> partial_sums(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  std::partial_sum(v.begin(), v.end(), out.begin());
  return out;
}

}  // namespace

DominanceVerdict kyfan_dominates(const CMatrix& t, const CMatrix& s) {
  if (t.n() != s.n())
    throw DimensionError("dominance needs equal dimensions: " + std::to_string(s.n()) + " vs " + std::to_string(t.n()));
  DominanceVerdict v;
  v.partial_sums_s = partial_sums(s_numbers(s).s);
  v.partial_sums_t = partial_sums(s_numbers(t).s);
  for (std::size_t k = 0; k < v.partial_sums_s.size(); ++k) {
    if (v.partial_sums_s[k] > v.partial_sums_t[k] + kDominanceHypothesisTol) {
      v.violating_k = k + 1;
      break;
    }
  }
  v.dominates = !v.violating_k.has_value();
  return v;
}

bool TransferReport::all_hold() const {
  return std::all_of(entries.begin(), entries.end(), [](const TransferEntry& e) { return e.holds; });
}

TransferReport dominance_transfer(const CMatrix& t, const CMatrix& s, const std::vector<NormSpec>& specs) {
  if (!kyfan_dominates(t, s).dominates)
    throw DomainError("dominance_transfer: S is not Ky Fan dominated by T");
  TransferReport report;
  for (const auto& spec : specs) {
    TransferEntry e;
    e.spec = spec.describe();
    e.norm_s = norm_mat(spec, s);
    e.norm_t = norm_mat(spec, t);
    e.margin = e.norm_t - e.norm_s;
    e.holds = e.norm_s <= e.norm_t + kDominanceConclusionTol;
    report.entries.push_back(std::move(e));
  }
  return report;
}

NormSpec separating_spec(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw DomainError("separating_spec needs 1 <= k <= n");
  std::vector<double> a(n, 0.0);
  for (std::size_t i = 0; i < k; ++i) a[i] = static_cast<double>(n) / static_cast<double>(k);
  return NormSpec::weight(WeightFn::uniform(a));
}

}  // namespace gaugenorm
