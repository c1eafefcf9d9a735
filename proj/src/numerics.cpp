#include "gwgr/numerics.hpp"

#include "gwgr/errors.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace gwgr {

BigInt binomial(std::int64_t n, std::int64_t m) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (m < 0 || m > n) return 0;
  m = std::min(m, n - m);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= m; ++i) {
    result *= n - m + i;
    result /= i;  // exact: result is C(n-m+i, i)
  }
  return result;
}

BigInt pow2(std::int64_t e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  BigInt one = 1;
  return one << static_cast<unsigned>(e);
}

BigInt ipow(const BigInt& base, std::int64_t e) {
  if (e < 0) throw std::invalid_argument("ipow: negative exponent");
  return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

BigRational rpow(const BigRational& base, std::int64_t e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("rpow: zero to a negative power");
    return rpow(BigRational(1) / base, -e);
  }
  BigRational result = 1;
  BigRational b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

BigInt factorial(std::int64_t n) {
  BigInt result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

bool is_integer(const BigRational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

std::string to_string(const BigRational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (!is_integer(q)) os << '/' << boost::multiprecision::denominator(q);
  return os.str();
}

// ---------------------------------------------------------------------------
// GuardedComplex

GuardedComplex::GuardedComplex(double re, double im, double err)
    : value_(re, im), err_(err) {
  if (!(err >= 0.0)) throw std::invalid_argument("GuardedComplex: negative error bound");
}

double GuardedComplex::norm1() const noexcept {
  return std::abs(value_.real()) + std::abs(value_.imag());
}

GuardedComplex GuardedComplex::operator-() const {
  return {-re(), -im(), err_};
}

GuardedComplex operator+(const GuardedComplex& a, const GuardedComplex& b) {
  const auto v = a.value_ + b.value_;
  GuardedComplex out(v.real(), v.imag());
  out.err_ = a.err_ + b.err_ + kUnitRoundoff * out.norm1();
  return out;
}

GuardedComplex operator-(const GuardedComplex& a, const GuardedComplex& b) {
  return a + (-b);
}

GuardedComplex operator*(const GuardedComplex& a, const GuardedComplex& b) {
  const auto v = a.value_ * b.value_;
  GuardedComplex out(v.real(), v.imag());
  const double na = a.norm1(), nb = b.norm1();
  // |xy|_1 <= sqrt2 |x|_1 |y|_1; four roundings per component pair.
  out.err_ = std::sqrt(2.0) * (na * b.err_ + nb * a.err_ + a.err_ * b.err_) +
             4.0 * kUnitRoundoff * na * nb;
  return out;
}

GuardedComplex operator/(const GuardedComplex& a, const GuardedComplex& b) {
  const double bmod = std::abs(b.value_);
  if (bmod == 0.0) throw std::domain_error("GuardedComplex: division by zero");
  const auto v = a.value_ / b.value_;
  GuardedComplex out(v.real(), v.imag());
  if (b.err_ >= bmod) {
    out.err_ = std::numeric_limits<double>::infinity();
    return out;
  }
  const double qn = out.norm1();
  out.err_ = std::sqrt(2.0) * (a.err_ + qn * b.err_) / (bmod - b.err_) +
             8.0 * kUnitRoundoff * qn;
  return out;
}

GuardedComplex GuardedComplex::from_rational(const BigRational& q) {
  const double x = q.convert_to<double>();
  return {x, 0.0, kUnitRoundoff * std::abs(x)};
}

GuardedComplex GuardedComplex::pow(std::int64_t e) const {
  if (e < 0) return GuardedComplex(1.0) / pow(-e);
  GuardedComplex result(1.0);
  GuardedComplex b = *this;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return result;
}

// ---------------------------------------------------------------------------
// ComplexAccumulator

void ComplexAccumulator::add_component(double& sum, double& carry, double x) {
  const double t = sum + x;
  if (std::abs(sum) >= std::abs(x))
    carry += (sum - t) + x;
  else
    carry += (x - t) + sum;
  sum = t;
}

void ComplexAccumulator::add(const GuardedComplex& term) {
  add_component(re_, re_carry_, term.re());
  add_component(im_, im_carry_, term.im());
  abs_total_ += term.norm1();
  input_err_ += term.err();
  ++count_;
}

GuardedComplex ComplexAccumulator::result() const {
  const double re = re_ + re_carry_;
  const double im = im_ + im_carry_;
  const double n = static_cast<double>(count_) + 1.0;
  const double u = kUnitRoundoff;
  // Neumaier: |S_hat - S| <= 2u|S| + O(n u^2) sum|x_i|, applied per component.
  // The running sums above are themselves rounded, hence the (1 + n u) slack.
  const double bound = 2.0 * u * (std::abs(re) + std::abs(im)) +
                       2.0 * n * n * u * u * abs_total_;
  return {re, im, input_err_ * (1.0 + n * u) + bound};
}

GuardedComplex compensated_sum(std::span<const GuardedComplex> terms) {
  ComplexAccumulator acc;
  for (const auto& t : terms) acc.add(t);
  return acc.result();
}

BigInt round_to_integer(const GuardedComplex& z, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("round_to_integer: tol must be positive");
  if (!std::isfinite(z.re()) || !std::isfinite(z.im()))
    throw NonIntegerResult("non-finite value", std::numeric_limits<double>::infinity());
  const double nearest = std::nearbyint(z.re());
  const double residual = std::abs(z.re() - nearest) + std::abs(z.im());
  const double allowed = std::max(tol, z.err());
  if (residual > allowed) {
    std::ostringstream os;
    os.precision(17);
    os << "value " << z.re() << (z.im() < 0 ? " - " : " + ") << std::abs(z.im())
       << "i is not an integer: residual " << residual << " exceeds " << allowed;
    throw NonIntegerResult(os.str(), residual);
  }
  // doubles in range are integral here; cpp_int takes them exactly
  return BigInt(nearest);
}

// ---------------------------------------------------------------------------
// UnityAngle

UnityAngle::UnityAngle(std::int64_t j, std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("UnityAngle: denominator must be positive");
  j %= n;
  if (j < 0) j += n;
  const auto g = std::gcd(j, n);
  j_ = j / g;
  n_ = n / g;
}

UnityAngle operator*(const UnityAngle& a, const UnityAngle& b) {
  const auto l = std::lcm(a.n_, b.n_);
  const auto ja = static_cast<__int128>(a.j_) * (l / a.n_);
  const auto jb = static_cast<__int128>(b.j_) * (l / b.n_);
  return UnityAngle(static_cast<std::int64_t>((ja + jb) % l), l);
}

UnityAngle UnityAngle::pow(std::int64_t e) const {
  __int128 j = static_cast<__int128>(j_) * e;
  j %= n_;
  return UnityAngle(static_cast<std::int64_t>(j), n_);
}

UnityAngle UnityAngle::inverse() const { return UnityAngle(-j_, n_); }

GuardedComplex UnityAngle::to_complex() const {
  // Exact values on the axes.
  if (j_ == 0) return {1.0, 0.0};
  if (4 * j_ == n_) return {0.0, 1.0};
  if (2 * j_ == n_) return {-1.0, 0.0};
  if (4 * j_ == 3 * n_) return {0.0, -1.0};
  // Fold into [-1/2, 1/2) before scaling so the argument stays small.
  double frac = static_cast<double>(j_) / static_cast<double>(n_);
  if (2 * j_ > n_) frac -= 1.0;
  const double theta = 2.0 * std::numbers::pi * frac;
  return {std::cos(theta), std::sin(theta), 8.0 * kUnitRoundoff};
}

std::string UnityAngle::to_string() const {
  return std::to_string(j_) + "/" + std::to_string(n_);
}

std::vector<UnityAngle> roots_of_sign(int k, int r) {
  if (k < 1) throw std::invalid_argument("roots_of_sign: k must be positive");
  std::vector<UnityAngle> roots;
  roots.reserve(k);
  const bool odd = (r % 2) != 0;
  for (int j = 0; j < k; ++j)
    roots.push_back(odd ? UnityAngle(j, k) : UnityAngle(2 * j + 1, 2 * k));
  return roots;
}

}  // namespace gwgr
