#include "gaugenorm/norm_spec.hpp"

#include <cmath>
#include <sstream>

#include "gaugenorm/errors.hpp"
#include "overloaded.hpp"

namespace gaugenorm {

namespace {

using detail::overloaded;

bool in_closed(const Scalar& t, const Rational& lo, const Rational& hi) {
  if (t.exact) return lo <= *t.exact && *t.exact <= hi;
  return lo.to_double() <= t.value && t.value <= hi.to_double();
}

}  // namespace

NormSpec NormSpec::lp(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("L^p norm needs finite p >= 1");
  return NormSpec(spec::Lp{p});
}

NormSpec NormSpec::kyfan(Scalar t) {
  if (!in_closed(t, Rational(0), Rational(1))) throw DomainError("Ky Fan parameter must lie in [0,1], got " + t.str());
  if (t.exact ? *t.exact == Rational(0) : t.value == 0.0) return NormSpec(spec::KyFanZero{});
  return NormSpec(spec::KyFan{t});
}

NormSpec NormSpec::weight(WeightFn f) {
  if (!(f.mean() > 0.0)) throw DomainError("weight norm needs a weight with positive mean");
  return NormSpec(spec::Weight{std::move(f)});
}

NormSpec NormSpec::sup_of(std::vector<WeightFn> fs) {
  if (fs.empty()) throw DomainError("sup-of norm needs at least one weight");
  bool any_positive = false;
  for (const auto& f : fs) any_positive = any_positive || f.mean() > 0.0;
  if (!any_positive) throw DomainError("sup-of norm needs a weight with positive mean");
  return NormSpec(spec::SupOf{std::move(fs)});
}

NormSpec NormSpec::tbracket(Scalar t) {
  if (!in_closed(t, Rational(1, 2), Rational(1)))
    throw DomainError("<t> norm parameter must lie in [1/2,1], got " + t.str());
  return NormSpec(spec::TBracket{t});
}

NormSpec NormSpec::csup(StepFn c) {
  if (!c.is_nonnegative() || c.max_value() > 1.0 + kValueTol)
    throw DomainError("c(t) profile must take values in [0,1]");
  if (std::fabs(c.max_value() - 1.0) > kValueTol) throw DomainError("c(t) profile must attain the value 1");
  return NormSpec(spec::CSup{std::move(c)});
}

std::string NormSpec::kind() const {
  return std::visit(overloaded{
                        [](const spec::Operator&) { return std::string("operator"); },
                        [](const spec::Trace&) { return std::string("trace"); },
                        [](const spec::Lp&) { return std::string("lp"); },
                        [](const spec::KyFan&) { return std::string("kyfan"); },
                        [](const spec::KyFanZero&) { return std::string("kyfanzero"); },
                        [](const spec::Weight&) { return std::string("weight"); },
                        [](const spec::SupOf&) { return std::string("supof"); },
                        [](const spec::TBracket&) { return std::string("tbracket"); },
                        [](const spec::CSup&) { return std::string("csup"); },
                    },
                    v_);
}

std::string NormSpec::describe() const {
  std::ostringstream os;
  os << kind();
  std::visit(overloaded{
                 [&](const spec::Lp& s) { os << "(p=" << s.p << ")"; },
                 [&](const spec::KyFan& s) { os << "(t=" << s.t.str() << ")"; },
                 [&](const spec::TBracket& s) { os << "(t=" << s.t.str() << ")"; },
                 [&](const spec::Weight& s) { os << "(" << s.f.fn().pieces() << " pieces)"; },
                 [&](const spec::SupOf& s) { os << "(" << s.fs.size() << " weights)"; },
                 [&](const spec::CSup& s) { os << "(" << s.c.pieces() << " pieces)"; },
                 [](const auto&) {},
             },
             v_);
  return os.str();
}

}  // namespace gaugenorm
