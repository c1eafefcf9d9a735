#pragma once

// Exact multivariate polynomials in X1..Xr and the Grassmannian
// Landau-Ginzburg data built from them.

#include "gwgr/numerics.hpp"

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gwgr {

using Exponents = std::vector<int>;

// Sparse polynomial with rational coefficients. Terms are kept in descending
// lexicographic order of exponent vectors, which is also the print order.
// No zero coefficient is ever stored.
class MultiPoly {
public:
  using TermMap = std::map<Exponents, BigRational, std::greater<>>;

  explicit MultiPoly(int variable_count = 0);

  static MultiPoly constant(int variable_count, const BigRational& c);
  // X_{index+1}
  static MultiPoly variable(int variable_count, int index);
  static MultiPoly monomial(int variable_count, Exponents exponents, const BigRational& c);

  int variable_count() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigRational coefficient(const Exponents& exponents) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const BigRational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigRational& c) { return a *= c; }
  friend MultiPoly operator*(const BigRational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly pow(unsigned e) const;
  // d/dX_{index+1}
  MultiPoly derivative(int index) const;

  // Weighted degree with deg X_i = weights[i-1]; nullopt for the zero
  // polynomial or when terms have different weighted degrees.
  std::optional<int> weighted_degree(std::span<const int> weights) const;
  // Same with the Grassmannian grading deg X_i = i.
  std::optional<int> weighted_degree() const;

  // Replace X_i by images[i-1]; all images share one variable count.
  MultiPoly substitute(std::span<const MultiPoly> images) const;

  BigRational evaluate(std::span<const BigRational> point) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

private:
  void add_term(const Exponents& e, const BigRational& c);

  int nvars_;
  TermMap terms_;
};

// Evaluation at complex points with error tracking: monomials are built from
// per-variable power tables and combined by compensated summation.
GuardedComplex poly_eval(const MultiPoly& p, std::span<const GuardedComplex> point);

// Power sums p_1..p_n of r Chern roots written in the elementary symmetric
// variables X_i = e_i, obtained from Newton's identities.
struct PowerSumTable {
  int r = 0;
  std::vector<MultiPoly> sums;  // sums[i] = p_{i+1}

  const MultiPoly& operator()(int n) const { return sums.at(n - 1); }
};

PowerSumTable power_sums(int r, int n_max);

// t^j coefficient W_j of -log(1 + X1 t + ... + Xr t^r).
MultiPoly log_coefficient(int r, int j);

// W = p_{k+1}/(k+1), via Newton's identities. Accepts 1 <= r <= k.
MultiPoly lg_potential(int r, int k);
// W = (-1)^{k+1} W_{k+1}, via the formal logarithm.
MultiPoly lg_potential_via_log(int r, int k);
// W_1 = W + (-1)^r X_1
MultiPoly deformed_potential(int r, int k);

// Y_1..Y_k, the coefficients of 1/(1 + X1 t + ... + Xr t^r).
std::vector<MultiPoly> relation_polys(int r, int k);
// Y_{k-r+1}..Y_k, which generate the cohomology relations.
std::vector<MultiPoly> ideal_generators(int r, int k);

std::vector<MultiPoly> gradient(const MultiPoly& p);
std::vector<std::vector<MultiPoly>> hessian_matrix(const MultiPoly& p);
MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m);

// h = (-1)^{r(r-1)/2} det(d^2 W / dX_i dX_j)
MultiPoly hessian_class(int r, int k);

// Elementary symmetric polynomial e_i in r variables.
MultiPoly elementary_symmetric(int r, int i);

void check_grassmannian(int r, int k);

std::vector<std::string> default_variable_names(int r);

}  // namespace gwgr
