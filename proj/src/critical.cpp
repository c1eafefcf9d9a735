#include "gwgr/critical.hpp"

#include "gwgr/errors.hpp"

#include <sstream>

namespace gwgr {

std::vector<GuardedComplex> symmetric_coordinates(const std::vector<UnityAngle>& q) {
  const int r = static_cast<int>(q.size());
  std::vector<ComplexAccumulator> acc(r);
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    UnityAngle product;
    for (int v = 0; v < r; ++v)
      if (mask & (1u << v)) product = product * q[v];
    acc[std::popcount(mask) - 1].add(product.to_complex());
  }
  std::vector<GuardedComplex> z;
  for (const auto& a : acc) z.push_back(a.result());
  return z;
}

std::vector<CriticalPoint> enumerate_critical_points(int r, int k) {
  check_grassmannian(r, k);
  const auto roots = roots_of_sign(k, r);
  std::vector<CriticalPoint> points;

  // r-subsets of {0..k-1} in lexicographic order
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    CriticalPoint p;
    for (int i : idx) p.q.push_back(roots[i]);
    p.z = symmetric_coordinates(p.q);
    points.push_back(std::move(p));

    int i = r - 1;
    while (i >= 0 && idx[i] == k - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return points;
}

CriticalValidationReport validate_critical_points(int r, int k, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("validate_critical_points: tol must be positive");
  const auto grad = gradient(deformed_potential(r, k));
  const auto h = hessian_class(r, k);
  const auto points = enumerate_critical_points(r, k);

  CriticalValidationReport report;
  report.r = r;
  report.k = k;
  report.points = points.size();
  report.min_hessian_modulus = std::numeric_limits<double>::infinity();
  std::size_t worst_hessian = 0;

  for (std::size_t p = 0; p < points.size(); ++p) {
    for (const auto& partial : grad) {
      const auto v = poly_eval(partial, points[p].z);
      const double residual = std::abs(v.value());
      if (residual > report.max_gradient_residual) {
        report.max_gradient_residual = residual;
        report.worst_point = p;
      }
    }
    const double hmod = std::abs(poly_eval(h, points[p].z).value());
    if (hmod < report.min_hessian_modulus) {
      report.min_hessian_modulus = hmod;
      worst_hessian = p;
    }
  }

  auto describe = [&](std::size_t p) {
    std::ostringstream os;
    os << "point #" << p << " q=(";
    for (std::size_t i = 0; i < points[p].q.size(); ++i)
      os << (i ? ", " : "") << points[p].q[i].to_string();
    os << ")";
    return os.str();
  };

  if (report.max_gradient_residual > tol) {
    std::ostringstream os;
    os << "G(" << r << "," << k << "): gradient residual " << report.max_gradient_residual
       << " exceeds " << tol << " at " << describe(report.worst_point);
    throw ValidationFailure(os.str());
  }
  if (!(report.min_hessian_modulus > tol)) {
    std::ostringstream os;
    os << "G(" << r << "," << k << "): degenerate Hessian |h|=" << report.min_hessian_modulus
       << " at " << describe(worst_hessian);
    throw ValidationFailure(os.str());
  }
  return report;
}

}  // namespace gwgr
