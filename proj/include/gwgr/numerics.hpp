#pragma once

// Exact integer/rational types, exact roots of unity and a complex carrier
// with a running forward-error bound.

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gwgr {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// C(n, m) exactly; zero when m < 0 or m > n.
BigInt binomial(std::int64_t n, std::int64_t m);

BigInt pow2(std::int64_t e);
BigInt ipow(const BigInt& base, std::int64_t e);
BigRational rpow(const BigRational& base, std::int64_t e);  // e may be negative
BigInt factorial(std::int64_t n);

bool is_integer(const BigRational& q);
std::string to_string(const BigRational& q);  // "p" or "p/q"

// Unit roundoff of IEEE double.
inline constexpr double kUnitRoundoff = 0x1p-53;

// Complex double together with a bound on the accumulated forward error,
// measured as |d re| + |d im|.
class GuardedComplex {
public:
  GuardedComplex() = default;
  GuardedComplex(double re, double im = 0.0, double err = 0.0);

  double re() const noexcept { return value_.real(); }
  double im() const noexcept { return value_.imag(); }
  double err() const noexcept { return err_; }
  std::complex<double> value() const noexcept { return value_; }

  // |re| + |im|
  double norm1() const noexcept;

  GuardedComplex operator-() const;
  friend GuardedComplex operator+(const GuardedComplex& a, const GuardedComplex& b);
  friend GuardedComplex operator-(const GuardedComplex& a, const GuardedComplex& b);
  friend GuardedComplex operator*(const GuardedComplex& a, const GuardedComplex& b);
  friend GuardedComplex operator/(const GuardedComplex& a, const GuardedComplex& b);
  GuardedComplex& operator+=(const GuardedComplex& b) { return *this = *this + b; }
  GuardedComplex& operator*=(const GuardedComplex& b) { return *this = *this * b; }

  // Rational coefficients enter through the nearest double.
  static GuardedComplex from_rational(const BigRational& q);

  // Integer power by squaring; negative exponents go through division.
  GuardedComplex pow(std::int64_t e) const;

private:
  std::complex<double> value_{};
  double err_ = 0.0;
};

// Neumaier-compensated summation of complex terms. The reported error bound
// is the sum of the inputs' bounds plus the summation error.
class ComplexAccumulator {
public:
  void add(const GuardedComplex& term);
  GuardedComplex result() const;
  std::size_t count() const noexcept { return count_; }

private:
  static void add_component(double& sum, double& carry, double x);

  double re_ = 0.0, re_carry_ = 0.0;
  double im_ = 0.0, im_carry_ = 0.0;
  double abs_total_ = 0.0;
  double input_err_ = 0.0;
  std::size_t count_ = 0;
};

GuardedComplex compensated_sum(std::span<const GuardedComplex> terms);

// Nearest integer to z.re. Throws NonIntegerResult unless
// |z.re - n| + |z.im| <= max(tol, z.err).
BigInt round_to_integer(const GuardedComplex& z, double tol);

// exp(2 pi i j / N) stored exactly as the reduced fraction j/N in [0, 1).
class UnityAngle {
public:
  UnityAngle() = default;  // angle 0, i.e. the value 1
  UnityAngle(std::int64_t j, std::int64_t n);

  std::int64_t numerator() const noexcept { return j_; }
  std::int64_t denominator() const noexcept { return n_; }

  friend UnityAngle operator*(const UnityAngle& a, const UnityAngle& b);
  UnityAngle pow(std::int64_t e) const;
  UnityAngle inverse() const;

  friend bool operator==(const UnityAngle&, const UnityAngle&) = default;
  friend auto operator<=>(const UnityAngle& a, const UnityAngle& b) {
    // compare j_a/N_a with j_b/N_b
    return static_cast<__int128>(a.j_) * b.n_ <=> static_cast<__int128>(b.j_) * a.n_;
  }

  GuardedComplex to_complex() const;
  std::string to_string() const;  // "j/N"

private:
  std::int64_t j_ = 0;
  std::int64_t n_ = 1;
};

// The k solutions of q^k = (-1)^(r-1), in increasing angle order.
std::vector<UnityAngle> roots_of_sign(int k, int r);

}  // namespace gwgr
