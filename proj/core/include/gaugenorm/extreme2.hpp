#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaugenorm/norm_spec.hpp"

namespace gaugenorm {

// Tolerance for profile invariants (slopes, endpoint, sandwich).
inline constexpr double kProfileTol = 1e-12;

struct Atom {
  double t;  // in [1/2, 1]
  double w;  // > 0
};

// Finite probability measure on [1/2, 1]. Atoms are kept sorted by t and
// atoms closer than 1e-12 are merged.
class AtomicMeasure {
public:
  explicit AtomicMeasure(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  double total() const;

private:
  std::vector<Atom> atoms_;
};

// Norm-profile function s -> |||diag(1, s)||| on [0,1], either piecewise
// linear through (knot, value) pairs or the closed form
// f_p(s) = ((1 + s^p)/2)^{1/p}.
class Profile {
public:
  static Profile piecewise_linear(std::vector<double> knots, std::vector<double> values);
  static Profile lp(double p);

  bool is_lp() const { return exponent_.has_value(); }
  std::optional<double> lp_exponent() const { return exponent_; }

  double operator()(double s) const;
  // For an L^p profile these are the sampling nodes.
  const std::vector<double>& knots() const { return knots_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double> slopes() const;
  // Piecewise-linear view (identity for piecewise-linear profiles).
  Profile sampled() const;

  // "s,f" rows, 6 significant digits.
  std::string to_csv() const;

private:
  Profile() = default;
  std::vector<double> knots_;
  std::vector<double> values_;
  std::optional<double> exponent_;
};

// Sampling grid for non-polyhedral profiles: Chebyshev-Lobatto nodes on
// [0,1], 257 interior points plus both endpoints.
std::vector<double> profile_grid();

struct Admissibility {
  bool nondecreasing = false;
  bool convex = false;
  bool endpoint_one = false;     // f(1) = 1
  bool left_derivative = false;  // f'(1-) <= 1/2
  bool sandwich = false;         // (1+s)/2 <= f(s) <= 1 at all knots
  // The equivalent characterizations: increasing convex with the sandwich;
  // increasing convex with f(1) = 1 and f'(1-) <= 1/2; and realizable as a
  // mixture of <t>-norm profiles (decompose/reconstruct reproduces f).
  bool sandwich_form = false;
  bool derivative_form = false;
  bool mixture_form = false;
  std::string violated;  // first violated invariant, empty when admissible

  bool admissible() const { return violated.empty(); }
};

Admissibility admissibility(const Profile& p);
bool check_admissible(const Profile& p);

// Profile of the normalized norm |||.||| / |||1||| on M_2. Polyhedral specs
// give the exact upper envelope of their linear pieces; L^p gives the
// closed form.
Profile profile_of(const NormSpec& spec);

// Atoms of the <t>-norm mixture reproducing a piecewise-linear admissible
// profile. With slopes alpha_i / 2 on successive pieces [a_i, a_{i+1}]:
// weight alpha_0 at t = 1/2, alpha_i - alpha_{i-1} at t = (1 + a_i)/2 and
// 1 - alpha_{m-1} at t = 1. Throws DomainError naming the violated invariant.
AtomicMeasure decompose(const Profile& p);

// s -> sum_j w_j max{t_j, (1+s)/2}, knots at 2 t_j - 1.
Profile reconstruct(const AtomicMeasure& mu);

// max |a(s) - b(s)| over the union of both knot sets.
double max_profile_difference(const Profile& a, const Profile& b);

double lp_profile(double p, double s);
// Mixing density 4 f_p''(2t - 1) of the L^p profile over the <t>-norms.
double lp_density(double p, double t);
// \int_{1/2}^1 max{t, (1+s)/2} 4 f_p''(2t-1) dt by adaptive Simpson.
double lp_density_integral(double p, double s);
// max over the grid of |lp_density_integral(p, s) - f_p(s)|; p > 1.
double lp_density_check(double p, std::span<const double> s_grid);

struct ExtremalityReport {
  double t = 0.0;
  std::size_t trials = 0;
  std::size_t infeasible = 0;     // the complementary part was not admissible
  std::size_t forced_equal = 0;   // feasible and both parts equal f
  std::size_t violations = 0;     // feasible with a part different from f
  AtomicMeasure decomposition{{{1.0, 1.0}}};
  bool passed() const { return violations == 0; }
};

// Evidence that the <t>-norm is extreme: writes f = a f1 + (1-a) f2 with f1
// from random two-atom measures and checks that whenever f2 is admissible
// both parts coincide with f.
ExtremalityReport not_convex_combination(double t, std::size_t trials, std::uint64_t seed);

}  // namespace gaugenorm
