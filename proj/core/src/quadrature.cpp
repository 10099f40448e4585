#include "gaugenorm/quadrature.hpp"

#include <cmath>

namespace gaugenorm {

namespace {

// Guards against a coarse panel that happens to agree with its halves.
constexpr int kMinDepth = 4;

struct Panel {
  double a, b, fa, fm, fb, whole;
};

double recurse(const std::function<double(double)>& f, const Panel& p, double tol, int level, int max_depth) {
  const double m = 0.5 * (p.a + p.b);
  const double lm = 0.5 * (p.a + m);
  const double rm = 0.5 * (m + p.b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - p.a) / 6.0 * (p.fa + 4.0 * flm + p.fm);
  const double right = (p.b - m) / 6.0 * (p.fm + 4.0 * frm + p.fb);
  const double delta = left + right - p.whole;
  if (level >= max_depth || (level >= kMinDepth && std::fabs(delta) <= 15.0 * tol)) return left + right + delta / 15.0;
  return recurse(f, {p.a, m, p.fa, flm, p.fm, left}, 0.5 * tol, level + 1, max_depth) +
         recurse(f, {m, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, level + 1, max_depth);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, const SimpsonOptions& options) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return recurse(f, {a, b, fa, fm, fb, whole}, options.tol, 0, options.max_depth);
}

}  // namespace gaugenorm
