#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gaugenorm/extreme2.hpp"
#include "gaugenorm/linalg.hpp"
#include "gaugenorm/norm_spec.hpp"
#include "gaugenorm/random.hpp"
#include "gaugenorm/stepfn.hpp"

// Random inputs for property tests. Everything is driven by an explicit Rng
// so runs are reproducible per seed.
namespace gaugenorm::gen {

// Step function with 1..max_pieces pieces, breakpoints with denominators up
// to max_den, values uniform in [lo, hi].
StepFn step_function(Rng& rng, std::size_t max_pieces = 6, std::int64_t max_den = 12, double lo = 0.0,
                     double hi = 5.0);

// Nonincreasing nonnegative weight on the uniform n-partition with mean in
// [0.3, 1]; with probability 1/4 the mean is exactly 1.
WeightFn weight(Rng& rng, std::size_t n);
// Same, on random rational breakpoints.
WeightFn weight_rational(Rng& rng, std::size_t max_pieces = 5, std::int64_t max_den = 12);

NormSpec sup_of(Rng& rng, std::size_t n, std::size_t members);
// c with values in [0,1] attaining 1 on one piece.
NormSpec csup(Rng& rng, std::size_t max_pieces = 4);

// Twenty specs covering every kind, sized for dimension n.
std::vector<NormSpec> battery(Rng& rng, std::size_t n);
// Only the polyhedral members of the battery.
std::vector<NormSpec> polyhedral_battery(Rng& rng, std::size_t n);

// Gaussian matrix, rescaled, sometimes with a nontrivial kernel.
CMatrix matrix(Rng& rng, std::size_t n);
std::vector<double> vector(Rng& rng, std::size_t n);

// (T, S) with S majorized by T: either an average of unitary conjugates of T
// or U diag(D s(T)) V with D doubly stochastic.
std::pair<CMatrix, CMatrix> majorization_pair(Rng& rng, std::size_t n);

// Random admissible piecewise-linear profile with up to max_pieces pieces.
Profile admissible_profile(Rng& rng, std::size_t max_pieces = 6);

}  // namespace gaugenorm::gen
