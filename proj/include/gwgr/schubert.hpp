#pragma once

// Classical intersection numbers on G(r,k) by the Pieri rule, independent of
// the residue machinery.

#include "gwgr/numerics.hpp"

#include <map>
#include <vector>

namespace gwgr::schubert {

using Partition = std::vector<int>;  // r weakly decreasing parts in [0, k-r]

// sigma_lambda * sigma_{1^i}: add a vertical strip of i boxes inside the
// r x (k-r) rectangle.
std::map<Partition, BigInt> multiply_by_column(const std::map<Partition, BigInt>& classes,
                                               int i, int r, int k);

// Degree of X_1^{s_1} ... X_r^{s_r} with X_i = sigma_{1^i} = c_i(S^*).
// Zero unless sum i s_i = r(k-r).
BigInt intersection_number(int r, int k, const std::vector<int>& s);

}  // namespace gwgr::schubert
