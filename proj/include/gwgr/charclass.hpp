#pragma once

// Truncated power series over small graded nilpotent rings, used for Chern and
// Segre class bookkeeping.

#include "gwgr/numerics.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gwgr {

using Monomial = std::vector<int>;  // exponent per generator

// Presentation of a graded ring: generators with degrees, nilpotency
// relations g^p = 0, monomial rewrite rules lhs -> factor * rhs, a top degree
// above which everything vanishes, and a linear functional on the top-degree
// monomials (unlisted ones evaluate to zero).
//
// A monomial is normalised by repeatedly applying the first applicable rule
// in rule order; check_confluence() verifies that the order is irrelevant.
class GradedRingSpec {
public:
  struct Generator {
    std::string name;
    int degree = 1;
  };

  // lhs -> factor * rhs. A zero factor makes lhs vanish.
  struct Rule {
    Monomial lhs;
    BigRational factor;
    Monomial rhs;
  };

  GradedRingSpec(std::vector<Generator> generators, int top_degree);

  GradedRingSpec& nilpotent(std::string_view generator, int power);
  GradedRingSpec& rewrite(Monomial lhs, BigRational factor, Monomial rhs);
  GradedRingSpec& evaluate_as(Monomial top_monomial, BigRational value);

  int generator_count() const noexcept { return static_cast<int>(generators_.size()); }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  int top_degree() const noexcept { return top_degree_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  int generator_index(std::string_view name) const;
  int degree(const Monomial& m) const;

  // Monomial from (name, exponent) pairs.
  Monomial monomial(std::initializer_list<std::pair<std::string_view, int>> factors) const;

  // Normal form as (coefficient, monomial); coefficient 0 means the monomial
  // vanishes. `order` permutes the rule list (empty = declared order).
  std::pair<BigRational, Monomial> normalize(Monomial m, const std::vector<std::size_t>& order = {}) const;

  BigRational evaluate_monomial(const Monomial& normal_top) const;

  // All monomials of degree <= top_degree with exponents below any nilpotency
  // bound (the finite spanning set used by the checks).
  std::vector<Monomial> spanning_monomials() const;

  // Every spanning monomial normalises identically under every rule order
  // (all permutations when there are at most 6 rules, else forward and
  // reverse orders).
  bool check_confluence() const;

  std::string to_string(const Monomial& m) const;

private:
  std::vector<Generator> generators_;
  int top_degree_;
  std::vector<Rule> rules_;
  std::map<Monomial, BigRational> functional_;
};

// Element of the ring presented by a spec, kept in normal form.
class RingElement {
public:
  RingElement() = default;
  explicit RingElement(std::shared_ptr<const GradedRingSpec> spec);

  static RingElement scalar(std::shared_ptr<const GradedRingSpec> spec, const BigRational& c);
  static RingElement generator(std::shared_ptr<const GradedRingSpec> spec, std::string_view name);
  static RingElement monomial(std::shared_ptr<const GradedRingSpec> spec, const Monomial& m,
                              const BigRational& c = 1);

  const std::shared_ptr<const GradedRingSpec>& spec() const noexcept { return spec_; }
  const std::map<Monomial, BigRational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  BigRational constant_term() const;

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const BigRational& c);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(RingElement a, const BigRational& c) { return a *= c; }
  friend RingElement operator*(const BigRational& c, RingElement a) { return a *= c; }
  RingElement operator-() const;
  RingElement pow(unsigned e) const;

  friend bool operator==(const RingElement& a, const RingElement& b) { return a.terms_ == b.terms_; }

  // Functional applied to the top-degree part; lower degrees integrate to 0.
  BigRational evaluate() const;

  std::string to_string() const;

private:
  void add_normalized(const Monomial& m, const BigRational& c);

  std::shared_ptr<const GradedRingSpec> spec_;
  std::map<Monomial, BigRational> terms_;
};

// Power series sum_{i<=order} c_i t^i with ring coefficients.
class RingSeries {
public:
  RingSeries(std::shared_ptr<const GradedRingSpec> spec, int order);
  RingSeries(std::vector<RingElement> coefficients, int order);

  static RingSeries one(std::shared_ptr<const GradedRingSpec> spec, int order);
  // a + b t
  static RingSeries linear(const RingElement& a, const RingElement& b, int order);
  // exp(x t) = sum x^i t^i / i!
  static RingSeries exponential(const RingElement& x, int order);

  int order() const noexcept { return order_; }
  const std::shared_ptr<const GradedRingSpec>& spec() const noexcept { return spec_; }
  // Throws TruncationTooLow for i > order.
  const RingElement& coefficient(int i) const;
  RingElement& coefficient(int i);

  RingSeries& operator+=(const RingSeries& o);
  friend RingSeries operator+(RingSeries a, const RingSeries& b) { return a += b; }
  friend RingSeries operator*(const RingSeries& a, const RingSeries& b);
  friend RingSeries operator*(RingSeries a, const BigRational& c);
  RingSeries operator-() const;
  // Negative powers go through series_inverse.
  RingSeries pow(long long e) const;
  RingSeries truncated(int order) const;

  friend bool operator==(const RingSeries& a, const RingSeries& b);

private:
  std::shared_ptr<const GradedRingSpec> spec_;
  int order_;
  std::vector<RingElement> coeffs_;
};

// s with s * c = 1 through the truncation order; c_0 must be 1.
RingSeries series_inverse(const RingSeries& c);

// pi_* X^l = s_{l - fiber_rank + 1}, and 0 when l < fiber_rank - 1.
RingElement pushforward_power(long long l, long long fiber_rank, const RingSeries& segre);

// Integral of s_g(V) over the Jacobian for c(V) = exp(-k theta), with
// theta^g = g!. Equals k^g.
BigRational theta_integral(int g, int k, int d);

// Evaluation of the t^{M-n} coefficient of
//   -s_normal * (1 + c1E t)^m * (c1L + c2E t)^n.
BigRational blowup_correction(long long m, long long n, long long top_dim,
                              const RingSeries& s_normal, const RingElement& c1E,
                              const RingElement& c2E, const RingElement& c1L);

// Ring data for the even-degree initial chamber (diagonal of P x P).
struct BlowupInstance {
  std::shared_ptr<const GradedRingSpec> spec;
  RingSeries s_normal;
  RingElement c1E, c2E, c1L;
  long long m = 0, n = 0, top_dim = 0;

  BigRational evaluate() const;
};

// Even d >= 2: ring Q[w, e]/(e^2, w^{kd/2}) with w^{kd/2-1} e = 2/d and
// normal Segre series (1 + w t)^{-kd/2}. Expected value -k 2^m.
BlowupInstance even_degree_diagonal_instance(int d, int k, int n);

// Wall at l (floor(d/2) < l <= d): ring Q[y, e, w] with e^2 = 0,
// y^{b+1} = 0, y^b = b e y^{b-1} (b = k(d-l)+1), w^{2l-d} = 0 and
// e y^{b-1} w^{2l-d-1} = k/l; normal Segre series (1 - w t)^{2l-d-kl}.
// Expected value (-1)^d k^2 C(kd - 2n, kl - n).
BlowupInstance wall_crossing_instance(int d, int k, int n, int l);

// -2m(2/d)2^{m-2} - n(2/d)2^m == -k 2^m in exact rationals, m = kd - 2n.
bool identity_517(int d, int k, int n);

}  // namespace gwgr
