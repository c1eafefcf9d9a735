#include "gwgr/sympoly.hpp"

#include "gwgr/errors.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace gwgr {

void check_grassmannian(int r, int k) {
  if (r < 1 || r >= k) throw InvalidGrassmannian(r, k);
}

namespace {

// The potential itself only needs r <= k; G(k,k) is a point.
void check_potential_range(int r, int k) {
  if (r < 1 || r > k) throw InvalidGrassmannian(r, k);
}

}  // namespace

std::vector<std::string> default_variable_names(int r) {
  std::vector<std::string> names;
  for (int i = 1; i <= r; ++i) names.push_back("X" + std::to_string(i));
  return names;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(int variable_count) : nvars_(variable_count) {
  if (variable_count < 0) throw std::invalid_argument("MultiPoly: negative variable count");
}

MultiPoly MultiPoly::constant(int variable_count, const BigRational& c) {
  MultiPoly p(variable_count);
  p.add_term(Exponents(variable_count, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int variable_count, int index) {
  if (index < 0 || index >= variable_count)
    throw std::out_of_range("MultiPoly::variable: index out of range");
  Exponents e(variable_count, 0);
  e[index] = 1;
  return monomial(variable_count, std::move(e), 1);
}

MultiPoly MultiPoly::monomial(int variable_count, Exponents exponents, const BigRational& c) {
  if (static_cast<int>(exponents.size()) != variable_count)
    throw std::invalid_argument("MultiPoly::monomial: exponent length mismatch");
  for (int x : exponents)
    if (x < 0) throw std::invalid_argument("MultiPoly::monomial: negative exponent");
  MultiPoly p(variable_count);
  p.add_term(exponents, c);
  return p;
}

void MultiPoly::add_term(const Exponents& e, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigRational MultiPoly::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? BigRational(0) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (other.nvars_ != nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  MultiPoly out(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(nvars_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(int index) const {
  if (index < 0 || index >= nvars_) throw std::out_of_range("MultiPoly::derivative: bad index");
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents d = e;
    --d[index];
    out.add_term(d, c * e[index]);
  }
  return out;
}

std::optional<int> MultiPoly::weighted_degree(std::span<const int> weights) const {
  if (static_cast<int>(weights.size()) != nvars_)
    throw std::invalid_argument("weighted_degree: weight count mismatch");
  std::optional<int> degree;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int i = 0; i < nvars_; ++i) d += weights[i] * e[i];
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree;
}

std::optional<int> MultiPoly::weighted_degree() const {
  std::vector<int> w(nvars_);
  for (int i = 0; i < nvars_; ++i) w[i] = i + 1;
  return weighted_degree(w);
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw std::invalid_argument("substitute: image count mismatch");
  const int target = nvars_ == 0 ? 0 : images[0].variable_count();
  for (const auto& img : images)
    if (img.variable_count() != target)
      throw std::invalid_argument("substitute: images disagree on variable count");

  // powers[i][e] = images[i]^e, filled lazily
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  auto power = [&](int i, int e) -> const MultiPoly& {
    auto& table = powers[i];
    if (table.empty()) table.push_back(constant(target, 1));
    while (static_cast<int>(table.size()) <= e) table.push_back(table.back() * images[i]);
    return table[e];
  };

  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(target, c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

BigRational MultiPoly::evaluate(std::span<const BigRational> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluate: point has wrong dimension");
  BigRational sum = 0;
  for (const auto& [e, c] : terms_) {
    BigRational term = c;
    for (int i = 0; i < nvars_; ++i) term *= rpow(point[i], e[i]);
    sum += term;
  }
  return sum;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  const auto& vars = names.empty() ? default_variable_names(nvars_) : names;
  if (static_cast<int>(vars.size()) != nvars_)
    throw std::invalid_argument("to_string: name count mismatch");
  if (terms_.empty()) return "0";

  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const BigRational mag = negative ? BigRational(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    bool constant_term = true;
    for (int x : e) constant_term = constant_term && x == 0;
    bool wrote = false;
    if (mag != 1 || constant_term) {
      os << gwgr::to_string(mag);
      wrote = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << ' ';
      os << vars[i];
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

GuardedComplex poly_eval(const MultiPoly& p, std::span<const GuardedComplex> point) {
  const int n = p.variable_count();
  if (static_cast<int>(point.size()) != n)
    throw std::invalid_argument("poly_eval: point has wrong dimension");

  std::vector<std::vector<GuardedComplex>> powers(n, {GuardedComplex(1.0)});
  auto power = [&](int i, int e) -> const GuardedComplex& {
    auto& table = powers[i];
    while (static_cast<int>(table.size()) <= e) table.push_back(table.back() * point[i]);
    return table[e];
  };

  ComplexAccumulator acc;
  for (const auto& [e, c] : p.terms()) {
    GuardedComplex term = GuardedComplex::from_rational(c);
    for (int i = 0; i < n; ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    acc.add(term);
  }
  return acc.result();
}

// ---------------------------------------------------------------------------
// Symmetric functions and the potential

PowerSumTable power_sums(int r, int n_max) {
  if (r < 1) throw std::invalid_argument("power_sums: r must be positive");
  PowerSumTable table;
  table.r = r;
  auto e = [r](int i) { return MultiPoly::variable(r, i - 1); };
  for (int n = 1; n <= n_max; ++n) {
    // p_n = sum_{i=1}^{min(n-1,r)} (-1)^{i-1} e_i p_{n-i} + (-1)^{n-1} n e_n
    MultiPoly pn(r);
    for (int i = 1; i <= std::min(n - 1, r); ++i) {
      MultiPoly term = e(i) * table(n - i);
      if (i % 2 == 0) term = -term;
      pn += term;
    }
    if (n <= r) pn += e(n) * BigRational(n % 2 == 1 ? n : -n);
    table.sums.push_back(std::move(pn));
  }
  return table;
}

MultiPoly lg_potential(int r, int k) {
  check_potential_range(r, k);
  return power_sums(r, k + 1)(k + 1) * BigRational(1, k + 1);
}

namespace {

// Truncated power series in t with polynomial coefficients.
using PolySeries = std::vector<MultiPoly>;

PolySeries series_mul(const PolySeries& a, const PolySeries& b, int order, int r) {
  PolySeries out(order + 1, MultiPoly(r));
  for (int i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

MultiPoly log_coefficient(int r, int j) {
  if (r < 1) throw std::invalid_argument("log_coefficient: r must be positive");
  if (j <= 0) return MultiPoly(r);
  // u = X1 t + ... + Xr t^r; -log(1+u) = sum_{n>=1} (-1)^n u^n / n
  PolySeries u(j + 1, MultiPoly(r));
  for (int i = 1; i <= std::min(r, j); ++i) u[i] = MultiPoly::variable(r, i - 1);
  PolySeries un = u;
  MultiPoly result(r);
  for (int n = 1; n <= j; ++n) {
    if (n > 1) un = series_mul(un, u, j, r);
    result += un[j] * BigRational(n % 2 == 0 ? 1 : -1, n);
  }
  return result;
}

MultiPoly lg_potential_via_log(int r, int k) {
  check_potential_range(r, k);
  MultiPoly w = log_coefficient(r, k + 1);
  if ((k + 1) % 2 == 1) w = -w;
  return w;
}

MultiPoly deformed_potential(int r, int k) {
  MultiPoly w = lg_potential(r, k);
  w += MultiPoly::variable(r, 0) * BigRational(r % 2 == 0 ? 1 : -1);
  return w;
}

std::vector<MultiPoly> relation_polys(int r, int k) {
  check_grassmannian(r, k);
  // Y_0 = 1, Y_i = -sum_{j=1}^{min(i,r)} X_j Y_{i-j}
  std::vector<MultiPoly> y{MultiPoly::constant(r, 1)};
  for (int i = 1; i <= k; ++i) {
    MultiPoly yi(r);
    for (int j = 1; j <= std::min(i, r); ++j) yi -= MultiPoly::variable(r, j - 1) * y[i - j];
    y.push_back(std::move(yi));
  }
  y.erase(y.begin());
  return y;
}

std::vector<MultiPoly> ideal_generators(int r, int k) {
  auto y = relation_polys(r, k);
  return {y.begin() + (k - r), y.end()};
}

std::vector<MultiPoly> gradient(const MultiPoly& p) {
  std::vector<MultiPoly> g;
  for (int i = 0; i < p.variable_count(); ++i) g.push_back(p.derivative(i));
  return g;
}

std::vector<std::vector<MultiPoly>> hessian_matrix(const MultiPoly& p) {
  const int n = p.variable_count();
  std::vector<std::vector<MultiPoly>> h(n, std::vector<MultiPoly>(n, MultiPoly(n)));
  for (int i = 0; i < n; ++i) {
    const MultiPoly di = p.derivative(i);
    for (int j = i; j < n; ++j) h[i][j] = h[j][i] = di.derivative(j);
  }
  return h;
}

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw std::invalid_argument("determinant: empty matrix");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("determinant: not square");
  const int nvars = m[0][0].variable_count();

  // Laplace expansion along rows with memoised minors keyed by column set.
  std::unordered_map<unsigned, MultiPoly> minors;
  minors.emplace(0u, MultiPoly::constant(nvars, 1));
  for (int row = n - 1; row >= 0; --row) {
    const int size = n - row;
    std::unordered_map<unsigned, MultiPoly> next;
    for (unsigned cols = 0; cols < (1u << n); ++cols) {
      if (std::popcount(cols) != size) continue;
      MultiPoly acc(nvars);
      int position = 0;
      for (int c = 0; c < n; ++c) {
        if (!(cols & (1u << c))) continue;
        const auto& entry = m[row][c];
        if (!entry.is_zero()) {
          MultiPoly term = entry * minors.at(cols & ~(1u << c));
          if (position % 2 == 1) term = -term;
          acc += term;
        }
        ++position;
      }
      next.emplace(cols, std::move(acc));
    }
    minors = std::move(next);
  }
  return minors.at((1u << n) - 1);
}

MultiPoly hessian_class(int r, int k) {
  MultiPoly det = determinant(hessian_matrix(lg_potential(r, k)));
  if ((r * (r - 1) / 2) % 2 == 1) det = -det;
  return det;
}

MultiPoly elementary_symmetric(int r, int i) {
  MultiPoly out(r);
  if (i < 0 || i > r) return out;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    if (std::popcount(mask) != i) continue;
    Exponents e(r, 0);
    for (int v = 0; v < r; ++v) e[v] = (mask >> v) & 1u;
    out += MultiPoly::monomial(r, e, 1);
  }
  return out;
}

}  // namespace gwgr
