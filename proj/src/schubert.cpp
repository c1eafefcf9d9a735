#include "gwgr/schubert.hpp"

#include "gwgr/sympoly.hpp"

namespace gwgr::schubert {

std::map<Partition, BigInt> multiply_by_column(const std::map<Partition, BigInt>& classes,
                                               int i, int r, int k) {
  std::map<Partition, BigInt> out;
  for (const auto& [lambda, c] : classes) {
    for (unsigned rows = 0; rows < (1u << r); ++rows) {
      if (std::popcount(rows) != i) continue;
      Partition mu = lambda;
      bool ok = true;
      for (int j = 0; j < r && ok; ++j) {
        if (rows & (1u << j)) ok = ++mu[j] <= k - r;
        if (ok && j > 0) ok = mu[j] <= mu[j - 1];
      }
      if (ok) out[mu] += c;
    }
  }
  return out;
}

BigInt intersection_number(int r, int k, const std::vector<int>& s) {
  check_grassmannian(r, k);
  if (static_cast<int>(s.size()) != r) throw std::invalid_argument("need r exponents");
  std::map<Partition, BigInt> classes{{Partition(r, 0), BigInt(1)}};
  for (int i = 1; i <= r; ++i)
    for (int t = 0; t < s[i - 1]; ++t) classes = multiply_by_column(classes, i, r, k);
  auto it = classes.find(Partition(r, k - r));
  return it == classes.end() ? BigInt(0) : it->second;
}

}  // namespace gwgr::schubert
