#include "gwgr/errors.hpp"
#include "gwgr/sympoly.hpp"

#include <doctest.h>

#include <random>

using namespace gwgr;

namespace {

MultiPoly x(int r, int i) { return MultiPoly::variable(r, i); }
MultiPoly c(int r, BigRational v) { return MultiPoly::constant(r, v); }

}  // namespace

TEST_CASE("lg_potential examples") {
  CHECK(lg_potential(1, 4).to_string() == "1/5 X1^5");
  CHECK(lg_potential(1, 1).to_string() == "1/2 X1^2");
  const auto x1 = x(2, 0), x2 = x(2, 1);
  MultiPoly expected = x1.pow(4) - c(2, 4) * x1.pow(2) * x2 + c(2, 2) * x2.pow(2);
  expected *= BigRational(1, 4);
  CHECK(lg_potential(2, 3) == expected);
  CHECK(lg_potential(2, 3).to_string() == "1/4 X1^4 - X1^2 X2 + 1/2 X2^2");
}

TEST_CASE("lg_potential_via_log agrees with Newton construction") {
  CHECK(lg_potential_via_log(1, 2).to_string() == "1/3 X1^3");
  CHECK(lg_potential_via_log(1, 1).to_string() == "1/2 X1^2");
  for (int k = 2; k <= 8; ++k)
    for (int r = 1; r < k; ++r) CHECK(lg_potential(r, k) == lg_potential_via_log(r, k));
}

TEST_CASE("relation_polys") {
  const auto y = relation_polys(1, 2);
  REQUIRE(y.size() == 2);
  CHECK(y[0] == -x(1, 0));
  CHECK(y[1] == x(1, 0).pow(2));
  const auto y3 = relation_polys(2, 3);
  CHECK(y3[1].to_string() == "X1^2 - X2");
  CHECK(y3[2].to_string() == "-X1^3 + 2 X1 X2");
  // The generating function identity: (1 + X1 t + ... ) * (1 + Y1 t + ...) = 1.
  for (int r = 1; r <= 3; ++r) {
    const auto ys = relation_polys(r, 7);
    for (int j = 1; j <= 7; ++j) {
      MultiPoly total = ys[j - 1];
      for (int i = 1; i <= std::min(r, j); ++i)
        total += x(r, i - 1) * (i == j ? c(r, 1) : ys[j - i - 1]);
      CHECK(total.is_zero());
    }
  }
}

// Oracle for the gradient: the t^{k+1} coefficient of -log(1 + sum X_i t^i)
// differentiates to -Y_{k+1-i}.
TEST_CASE("gradient of W_{k+1} is the negated relation") {
  for (int k = 2; k <= 8; ++k) {
    for (int r = 1; r < k; ++r) {
      const auto w = log_coefficient(r, k + 1);
      const auto y = relation_polys(r, k);
      for (int i = 1; i <= r; ++i) CHECK(w.derivative(i - 1) == -y[k - i]);
      // W = (-1)^{k+1} W_{k+1}
      MultiPoly signed_w = w;
      if (k % 2 == 0) signed_w = -signed_w;
      CHECK(signed_w == lg_potential(r, k));
    }
  }
  // r = 1, k = 2 by hand: W_3 = -X^3/3.
  CHECK(log_coefficient(1, 3).to_string() == "-1/3 X1^3");
}

TEST_CASE("hessian_class") {
  for (int k = 2; k <= 7; ++k) {
    MultiPoly expected = x(1, 0).pow(k - 1);
    expected *= BigRational(k);
    CHECK(hessian_class(1, k) == expected);
  }
  // Hand oracle for (2,3): W_X1X1 = 3X1^2 - 2X2, W_X1X2 = -2X1, W_X2X2 = 1,
  // det = 3X1^2 - 2X2 - 4X1^2 = -X1^2 - 2X2, times (-1)^1.
  CHECK(hessian_class(2, 3).to_string() == "X1^2 + 2 X2");
  for (int r = 1; r <= 3; ++r)
    for (int k = r + 1; k <= 6; ++k) CHECK(hessian_class(r, k).weighted_degree() == r * (k - r));
}

TEST_CASE("determinant by Laplace matches a 3x3 hand expansion") {
  const auto a = x(3, 0), b = x(3, 1), cc = x(3, 2);
  std::vector<std::vector<MultiPoly>> m{{a, b, c(3, 1)}, {c(3, 2), cc, a}, {b, c(3, 0), c(3, 3)}};
  // a(3c - 0) - b(6 - a b) + 1(0 - c b)
  MultiPoly expected = c(3, 3) * a * cc - c(3, 6) * b + a * b * b - cc * b;
  CHECK(determinant(m) == expected);
}

TEST_CASE("weighted homogeneity") {
  for (int r = 1; r <= 4; ++r) {
    for (int k = r + 1; k <= 8; ++k) {
      CHECK(lg_potential(r, k).weighted_degree() == k + 1);
      const auto y = relation_polys(r, k);
      for (int i = 1; i <= k; ++i)
        if (!y[i - 1].is_zero()) CHECK(y[i - 1].weighted_degree() == i);
    }
  }
}

TEST_CASE("specialisation to Chern roots gives power sums") {
  for (int r = 1; r <= 3; ++r) {
    std::vector<MultiPoly> e;
    for (int i = 1; i <= r; ++i) e.push_back(elementary_symmetric(r, i));
    for (int k = r + 1; k <= 6; ++k) {
      MultiPoly expected(r);
      for (int i = 0; i < r; ++i) {
        Exponents ex(r, 0);
        ex[i] = k + 1;
        expected += MultiPoly::monomial(r, ex, BigRational(1, k + 1));
      }
      CHECK(lg_potential(r, k).substitute(e) == expected);
    }
  }
}

TEST_CASE("poly_eval") {
  const GuardedComplex two(2.0);
  CHECK(poly_eval(x(1, 0).pow(2), std::span(&two, 1)).re() == doctest::Approx(4.0));
  const GuardedComplex one(1.0);
  CHECK(poly_eval(lg_potential(1, 3), std::span(&one, 1)).re() == doctest::Approx(0.25));
  const auto zeta = UnityAngle(1, 3).to_complex();
  const auto h = poly_eval(hessian_class(1, 3), std::span(&zeta, 1));
  const auto expected = UnityAngle(2, 3).to_complex();
  CHECK(std::abs(h.value() - 3.0 * expected.value()) <= h.err() + 3 * expected.err());

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> small(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BigRational> pt{BigRational(small(rng), 3), BigRational(small(rng), 7)};
    std::vector<GuardedComplex> gpt{GuardedComplex::from_rational(pt[0]),
                                    GuardedComplex::from_rational(pt[1])};
    const auto p = hessian_class(2, 5);
    const double exact = p.evaluate(pt).convert_to<double>();
    const auto got = poly_eval(p, gpt);
    CHECK(std::abs(got.re() - exact) <= got.err() + 1e-300);
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(check_grassmannian(3, 3), InvalidGrassmannian);
  CHECK_THROWS_AS(check_grassmannian(0, 3), InvalidGrassmannian);
  CHECK_NOTHROW(check_grassmannian(2, 5));
}
