#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gaugenorm/rational.hpp"

namespace gaugenorm {

// Tolerance for value-equality predicates on step functions. Breakpoints are
// exact, so this only absorbs floating error in the values.
inline constexpr double kValueTol = 1e-12;

// A real step function on [0,1]. Piece i covers [b_i, b_{i+1}); the last
// piece is closed at 1. Breakpoints are exact rationals 0 = b_0 < ... < b_m = 1.
class StepFn {
public:
  StepFn(std::vector<Rational> breakpoints, std::vector<double> values);

  static StepFn constant(double value);
  // Uniform partition {k/n}, the layout of a vector in C^n under the
  // normalized trace.
  static StepFn uniform(std::span<const double> values);
  static StepFn indicator(Rational from, Rational to);

  std::size_t pieces() const { return values_.size(); }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  Rational length(std::size_t piece) const { return breakpoints_[piece + 1] - breakpoints_[piece]; }

  double operator()(double x) const;
  double at(const Rational& x) const;

  double integral() const;
  double max_value() const;
  double min_value() const;
  bool is_nonincreasing(double tol = kValueTol) const;
  bool is_nonnegative(double tol = 0.0) const;
  bool is_uniform() const;

  StepFn abs() const;
  StepFn scaled(double factor) const;
  // Merges adjacent pieces whose values are exactly equal.
  StepFn coalesced() const;

private:
  std::vector<Rational> breakpoints_;
  std::vector<double> values_;
};

// Nonnegative nonincreasing step function with mean at most 1: the weights
// that define |||T|||_f = \int f(s) mu_s(T) ds.
class WeightFn {
public:
  explicit WeightFn(StepFn f);
  static WeightFn uniform(std::span<const double> values) { return WeightFn(StepFn::uniform(values)); }

  const StepFn& fn() const { return fn_; }
  double mean() const { return fn_.integral(); }

private:
  StepFn fn_;
};

// Nonincreasing right-continuous rearrangement f* of f. Level sets with equal
// values are merged, so the result is canonical.
StepFn rearrange(const StepFn& f);

bool equimeasurable(const StepFn& f, const StepFn& g, double tol = kValueTol);

// \int_0^1 f g dx.
double pairing(const StepFn& f, const StepFn& g);

// Both functions re-expressed over the union of their breakpoints.
std::pair<StepFn, StepFn> refine(const StepFn& f, const StepFn& g);

// \int_0^t f dx for 0 < t <= 1. When t carries an exact rational it is
// located among the breakpoints exactly; otherwise in floating point.
double partial_integral(const StepFn& f, const Scalar& t);

}  // namespace gaugenorm
