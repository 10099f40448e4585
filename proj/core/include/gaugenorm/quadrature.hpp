#pragma once

#include <functional>

namespace gaugenorm {

struct SimpsonOptions {
  double tol = 1e-12;
  int max_depth = 50;
};

// Adaptive Simpson with Richardson correction on [a, b]. The integrand must
// be finite on the closed interval; split at known kinks before calling.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, const SimpsonOptions& options = {});

}  // namespace gaugenorm
