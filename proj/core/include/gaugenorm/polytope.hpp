#pragma once

#include <cstddef>
#include <vector>

namespace gaugenorm {

// Vertices of the bounded polytope {z >= 0 : A z <= b} by the
// double-description method. The homogenized cone {(z, lambda) >= 0 :
// b lambda - A z >= 0} starts as the nonnegative orthant, whose extreme rays
// are known, and each row of A is intersected in turn. Adjacency uses the
// combinatorial test on sets of tight constraints.
//
// Throws DomainError if the polytope is unbounded and NumericalError if the
// ray count exceeds max_rays.
struct VertexEnumOptions {
  double tol = 1e-9;
  std::size_t max_rays = 200000;
};

std::vector<std::vector<double>> enumerate_vertices_orthant(const std::vector<std::vector<double>>& rows,
                                                           const std::vector<double>& bounds,
                                                           const VertexEnumOptions& options = {});

}  // namespace gaugenorm
