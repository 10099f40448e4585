#include "gaugenorm/stepfn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gaugenorm/errors.hpp"

namespace gaugenorm {

StepFn::StepFn(std::vector<Rational> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (values_.empty()) throw DomainError("step function needs at least one piece");
  if (breakpoints_.size() != values_.size() + 1)
    throw DomainError("step function: expected " + std::to_string(values_.size() + 1) + " breakpoints, got " +
                      std::to_string(breakpoints_.size()));
  if (breakpoints_.front() != Rational(0) || breakpoints_.back() != Rational(1))
    throw DomainError("step function breakpoints must start at 0 and end at 1");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i - 1] < breakpoints_[i]))
      throw DomainError("step function breakpoints must be strictly increasing");
  for (double v : values_)
    if (!std::isfinite(v)) throw DomainError("step function values must be finite");
}

StepFn StepFn::constant(double value) { return StepFn({Rational(0), Rational(1)}, {value}); }

StepFn StepFn::uniform(std::span<const double> values) {
  const auto n = static_cast<std::int64_t>(values.size());
  if (n == 0) throw DomainError("uniform step function needs at least one value");
  std::vector<Rational> bps;
  bps.reserve(values.size() + 1);
  for (std::int64_t k = 0; k <= n; ++k) bps.emplace_back(k, n);
  return StepFn(std::move(bps), std::vector<double>(values.begin(), values.end()));
}

StepFn StepFn::indicator(Rational from, Rational to) {
  if (from < Rational(0) || to > Rational(1) || !(from < to)) throw DomainError("indicator interval must lie in [0,1]");
  std::vector<Rational> bps{Rational(0)};
  std::vector<double> vals;
  if (from > Rational(0)) {
    bps.push_back(from);
    vals.push_back(0.0);
  }
  bps.push_back(to);
  vals.push_back(1.0);
  if (to < Rational(1)) {
    bps.emplace_back(1);
    vals.push_back(0.0);
  }
  return StepFn(std::move(bps), std::move(vals));
}

double StepFn::operator()(double x) const {
  for (std::size_t i = 0; i + 1 < values_.size(); ++i)
    if (x < breakpoints_[i + 1].to_double()) return values_[i];
  return values_.back();
}

double StepFn::at(const Rational& x) const {
  auto it = std::upper_bound(breakpoints_.begin() + 1, breakpoints_.end() - 1, x);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

double StepFn::integral() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) acc += length(i).to_double() * values_[i];
  return acc;
}

double StepFn::max_value() const { return *std::max_element(values_.begin(), values_.end()); }
double StepFn::min_value() const { return *std::min_element(values_.begin(), values_.end()); }

bool StepFn::is_nonincreasing(double tol) const {
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] > values_[i - 1] + tol) return false;
  return true;
}

bool StepFn::is_nonnegative(double tol) const {
  return std::all_of(values_.begin(), values_.end(), [tol](double v) { return v >= -tol; });
}

bool StepFn::is_uniform() const {
  const Rational w = length(0);
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (length(i) != w) return false;
  return true;
}

StepFn StepFn::abs() const {
  std::vector<double> vals(values_.size());
  std::transform(values_.begin(), values_.end(), vals.begin(), [](double v) { return std::fabs(v); });
  return StepFn(breakpoints_, std::move(vals));
}

StepFn StepFn::scaled(double factor) const {
  std::vector<double> vals(values_.size());
  std::transform(values_.begin(), values_.end(), vals.begin(), [factor](double v) { return factor * v; });
  return StepFn(breakpoints_, std::move(vals));
}

StepFn StepFn::coalesced() const {
  std::vector<Rational> bps{breakpoints_.front()};
  std::vector<double> vals{values_.front()};
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] == vals.back()) continue;
    bps.push_back(breakpoints_[i]);
    vals.push_back(values_[i]);
  }
  bps.push_back(breakpoints_.back());
  return StepFn(std::move(bps), std::move(vals));
}

WeightFn::WeightFn(StepFn f) : fn_(std::move(f)) {
  if (!fn_.is_nonnegative()) throw DomainError("weight function must be nonnegative");
  if (!fn_.is_nonincreasing()) throw DomainError("weight function must be nonincreasing");
  if (fn_.integral() > 1.0 + kValueTol) throw DomainError("weight function mean must be at most 1");
}

StepFn rearrange(const StepFn& f) {
  struct Level {
    double value;
    Rational mass;
  };
  std::vector<Level> levels;
  levels.reserve(f.pieces());
  for (std::size_t i = 0; i < f.pieces(); ++i) levels.push_back({f.values()[i], f.length(i)});
  std::stable_sort(levels.begin(), levels.end(), [](const Level& a, const Level& b) { return a.value > b.value; });

  std::vector<Rational> bps{Rational(0)};
  std::vector<double> vals;
  Rational cursor(0);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    cursor += levels[i].mass;
    if (i + 1 < levels.size() && levels[i + 1].value == levels[i].value) continue;
    vals.push_back(levels[i].value);
    bps.push_back(cursor);
  }
  return StepFn(std::move(bps), std::move(vals));
}

std::pair<StepFn, StepFn> refine(const StepFn& f, const StepFn& g) {
  std::vector<Rational> merged;
  merged.reserve(f.breakpoints().size() + g.breakpoints().size());
  std::set_union(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(), g.breakpoints().end(),
                 std::back_inserter(merged));
  std::vector<double> fv, gv;
  fv.reserve(merged.size() - 1);
  gv.reserve(merged.size() - 1);
  std::size_t i = 0, j = 0;
  for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
    while (f.breakpoints()[i + 1] <= merged[k]) ++i;
    while (g.breakpoints()[j + 1] <= merged[k]) ++j;
    fv.push_back(f.values()[i]);
    gv.push_back(g.values()[j]);
  }
  return {StepFn(merged, std::move(fv)), StepFn(merged, std::move(gv))};
}

bool equimeasurable(const StepFn& f, const StepFn& g, double tol) {
  auto [a, b] = refine(rearrange(f), rearrange(g));
  for (std::size_t i = 0; i < a.pieces(); ++i)
    if (std::fabs(a.values()[i] - b.values()[i]) > tol) return false;
  return true;
}

double pairing(const StepFn& f, const StepFn& g) {
  auto [a, b] = refine(f, g);
  double acc = 0.0;
  for (std::size_t i = 0; i < a.pieces(); ++i) acc += a.length(i).to_double() * a.values()[i] * b.values()[i];
  return acc;
}

double partial_integral(const StepFn& f, const Scalar& t) {
  if (!(t.value > 0.0) || t.value > 1.0 || (t.exact && (*t.exact <= Rational(0) || *t.exact > Rational(1))))
    throw DomainError("partial integral needs 0 < t <= 1, got " + t.str());
  const auto& bps = f.breakpoints();
  double acc = 0.0;
  for (std::size_t i = 0; i < f.pieces(); ++i) {
    const double v = f.values()[i];
    if (t.exact) {
      if (bps[i + 1] <= *t.exact) {
        acc += f.length(i).to_double() * v;
        if (bps[i + 1] == *t.exact) break;
      } else {
        acc += (*t.exact - bps[i]).to_double() * v;
        break;
      }
    } else {
      const double right = bps[i + 1].to_double();
      if (right <= t.value) {
        acc += f.length(i).to_double() * v;
      } else {
        acc += (t.value - bps[i].to_double()) * v;
        break;
      }
    }
  }
  return acc;
}

}  // namespace gaugenorm
