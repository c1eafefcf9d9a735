#pragma once

#include "gwgr/numerics.hpp"
#include "gwgr/sympoly.hpp"

#include <vector>

namespace gwgr {

// A critical point of W_1 = W + (-1)^r X_1, given by an unordered set of r
// distinct Chern roots q with q^k = (-1)^{r-1}, and its image Z_i = e_i(q).
struct CriticalPoint {
  std::vector<UnityAngle> q;     // strictly increasing
  std::vector<GuardedComplex> z;  // z[i] = e_{i+1}(q)
};

// All C(k, r) critical points, in lexicographic order of root indices.
std::vector<CriticalPoint> enumerate_critical_points(int r, int k);

// Z-coordinates from exact roots: each monomial of e_i is an exact angle,
// so rounding only enters at the final conversion and summation.
std::vector<GuardedComplex> symmetric_coordinates(const std::vector<UnityAngle>& q);

struct CriticalValidationReport {
  int r = 0, k = 0;
  std::size_t points = 0;
  double max_gradient_residual = 0.0;
  double min_hessian_modulus = 0.0;
  std::size_t worst_point = 0;  // index of the point with the largest residual
};

// Evaluates every partial of W_1 and the Hessian class h at every point.
// Throws ValidationFailure if a gradient residual exceeds tol or |h(Z)| <= tol.
CriticalValidationReport validate_critical_points(int r, int k, double tol);

}  // namespace gwgr
