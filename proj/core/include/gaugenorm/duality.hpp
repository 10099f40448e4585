#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gaugenorm/linalg.hpp"
#include "gaugenorm/lp.hpp"
#include "gaugenorm/norm_spec.hpp"

namespace gaugenorm {

// Largest dimension for which unit-ball vertices are enumerated.
inline constexpr std::size_t kMaxVertexEnumDim = 12;
// Largest dimension accepted by the LP route.
inline constexpr std::size_t kMaxLpDim = 64;

// A symmetric gauge norm on C^n written as max_r rows[r] . y on the cone of
// nonincreasing nonnegative vectors y; arbitrary vectors are evaluated at the
// decreasing rearrangement of their moduli.
struct PolyhedralGauge {
  std::size_t n = 0;
  std::vector<std::vector<double>> rows;

  double evaluate(std::span<const double> x) const;
};

// Throws UnsupportedSpec for L^p.
PolyhedralGauge ordered_gauge(const NormSpec& spec, std::size_t n);

// maximize objective . y over nonincreasing nonnegative y subject to the
// listed rows. The ordering rows y_{i+1} - y_i <= 0 are part of the
// constraint list; y_n >= 0 is the variable sign constraint.
struct OrderedConeLP {
  std::vector<double> objective;
  std::vector<std::pair<std::vector<double>, double>> constraints;
};

OrderedConeLP dual_lp(const PolyhedralGauge& gauge, std::span<const double> x);
LpSolution solve(const OrderedConeLP& lp);

struct DualResult {
  double value = 0.0;
  // Maximizer y (nonincreasing, on the rearranged coordinates of |x|).
  std::vector<double> witness;
};

// |||x|||^# = sup{ |tau(x y)| : |||y||| <= 1 }, tau the mean.
DualResult dual_vec(const NormSpec& spec, std::span<const Complex> x);
DualResult dual_vec(const NormSpec& spec, std::span<const double> x);
DualResult dual_of_gauge(const PolyhedralGauge& gauge, std::span<const double> x);
// Dual through the s-number profile.
DualResult dual_mat(const NormSpec& spec, const CMatrix& t);

// Extreme points of {x_1 >= ... >= x_k = x_{k+1} = ... = x_n >= 0,
// (x_1+...+x_k)/k <= 1}: the k+1 points (k/j)(1,..,1,0,..,0) for j < k,
// (1,...,1) and 0.
std::vector<std::vector<double>> gamma_extreme_points(std::size_t n, std::size_t k);

// Vertices of {y nonincreasing, y >= 0, gauge(y) <= 1}; the origin included.
std::vector<std::vector<double>> unit_ball_vertices(const PolyhedralGauge& gauge);

// The dual norm as a polyhedral gauge: one row v/n per nonzero vertex v of
// the unit ball.
PolyhedralGauge dual_gauge(const PolyhedralGauge& gauge);

struct InvolutionResult {
  double primal = 0.0;
  double double_dual = 0.0;
};

InvolutionResult involution_check(const NormSpec& spec, std::span<const double> x);

struct RepresentationResult {
  double lhs = 0.0;
  double rhs = 0.0;
  // The weights F' (vertices of the dual unit ball), each nonincreasing.
  std::vector<std::vector<double>> weights;
};

// For a sup-of spec: lhs = |||T|||, rhs = max over F' of \int f mu_s(T).
RepresentationResult representation_check(const NormSpec& spec, const CMatrix& t);

struct HolderResult {
  double lhs = 0.0;  // ||ST||_1
  double rhs = 0.0;  // |||S||| |||T|||^#
};

HolderResult holder_check(const NormSpec& spec, const CMatrix& s, const CMatrix& t);

}  // namespace gaugenorm
