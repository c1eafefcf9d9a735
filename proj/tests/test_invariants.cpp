#include "gwgr/errors.hpp"
#include "gwgr/invariants.hpp"
#include "gwgr/schubert.hpp"

#include <doctest.h>

using namespace gwgr;

namespace {

// Independent evaluation of the elliptic G(2,k) sum over ordered pairs of
// distinct k-th roots of unity. Expanding (x1 + x2)^m (x1 x2)^n and using
// sum_x x^j = k [k | j] gives
//   (-1)^d / 2 * (k^2 sum_q C(m,q) [k | q + n] - k 2^m).
BigInt elliptic_oracle(int d, int k, int n) {
  const int m = k * d - 2 * n;
  BigInt all_pairs = 0;
  for (int q = 0; q <= m; ++q)
    if ((q + n) % k == 0) all_pairs += binomial(m, q);
  BigInt twice = BigInt(k) * k * all_pairs - BigInt(k) * pow2(m);
  if (d % 2 == 1) twice = -twice;
  REQUIRE(twice % 2 == 0);
  return twice / 2;
}

}  // namespace

TEST_CASE("query arithmetic") {
  const auto q = InvariantQuery::rank_two(1, 2, 3, 1);
  CHECK(q.s == std::vector<int>{4, 1});
  CHECK(q.expected_dimension() == 6);
  CHECK(q.weighted_degree() == 6);
  CHECK_THROWS_AS((InvariantQuery{1, 2, 2, 3, {5, 0}}.validate()), DimensionMismatch);
  CHECK_THROWS_AS((InvariantQuery{1, 2, 2, 3, {6}}.validate()), DimensionMismatch);
  CHECK_THROWS_AS((InvariantQuery{1, 2, 3, 3, {2, 2, 0}}.validate()), InvalidGrassmannian);
  CHECK(is_formal_value(InvariantQuery{2, 2, 1, 3, {3}}));
  CHECK_FALSE(is_formal_value(InvariantQuery{2, 3, 1, 3, {6}}));
}

TEST_CASE("vafa_intriligator examples") {
  CHECK(vafa_intriligator(InvariantQuery{1, 2, 2, 3, {6, 0}}).value == 3);
  CHECK(vafa_intriligator(InvariantQuery{2, 3, 1, 4, {9}}).value == 16);
  CHECK(vafa_intriligator(InvariantQuery{0, 0, 2, 4, {4, 0}}).value == 2);
  CHECK(vafa_intriligator(InvariantQuery{0, 0, 2, 4, {2, 1}}).value == 1);
  CHECK(vafa_intriligator(InvariantQuery{0, 0, 2, 4, {0, 2}}).value == 1);
  CHECK(vafa_intriligator(InvariantQuery{0, 0, 3, 6, {9, 0, 0}}).value == 42);
  CHECK_THROWS_AS(vafa_intriligator(InvariantQuery{1, 2, 2, 3, {5, 0}}), DimensionMismatch);
}

TEST_CASE("classical limit matches Pieri counting") {
  for (int k = 4; k <= 7; ++k) {
    for (int r = 2; r <= 3 && r < k; ++r) {
      const int dim = r * (k - r);
      std::vector<int> s(r, 0);
      auto recurse = [&](auto&& self, int i, int left) -> void {
        if (i == 0) {
          s[0] = left;
          const InvariantQuery q{0, 0, r, k, s};
          CHECK(vafa_intriligator(q).value == schubert::intersection_number(r, k, s));
          return;
        }
        for (int e = 0; e * (i + 1) <= left; ++e) {
          s[i] = e;
          self(self, i - 1, left - e * (i + 1));
        }
      };
      recurse(recurse, r - 1, dim);
    }
  }
}

TEST_CASE("brute force examples") {
  CHECK(brute_force_r2(2, 3, 0).value == 3);
  CHECK(brute_force_r2(2, 3, 3).value == 3);
}

TEST_CASE("closed form examples") {
  CHECK(closed_form_r2_g1(2, 3, 0).value == 3);
  CHECK(closed_form_r2_g1(2, 3, 3).value == 3);
  // -96 + (9/2)(C(6,0) + C(6,3) + C(6,6)) = 3
  CHECK(BigRational(-96) + BigRational(9, 2) * BigRational(1 + 20 + 1) == BigRational(3));
  CHECK(closed_form_r2_g1(2, 3, 0).exact);
}

TEST_CASE("elliptic pipelines match the independent expansion") {
  for (int k = 3; k <= 6; ++k) {
    for (int d = 1; d <= 6; ++d) {
      for (int n = 0; 2 * n <= k * d; ++n) {
        const BigInt expected = elliptic_oracle(d, k, n);
        CHECK(closed_form_r2_g1(d, k, n).value == expected);
        CHECK(flip_pipeline_r2_g1(d, k, n).value == expected);
        if (k * d <= 30) {
          CHECK(brute_force_r2(d, k, n).value == expected);
          CHECK(vafa_intriligator(InvariantQuery::rank_two(1, d, k, n)).value == expected);
        }
      }
    }
  }
}

TEST_CASE("flip initial terms") {
  // odd d: k 2^{m-1}
  CHECK(flip_initial_term(3, 3, 0) == BigRational(3) * BigRational(pow2(8)));
  // even d: (k^2/2) C(m, m/2) - k 2^{m-1}
  CHECK(flip_initial_term(2, 3, 0) == BigRational(9, 2) * BigRational(20) - BigRational(96));
  CHECK(flip_wall_correction(2, 3, 0, 2) == 9 * binomial(6, 6));
  CHECK(flip_wall_correction(3, 3, 0, 2) == -9 * binomial(9, 6));
  CHECK(flip_wall_correction(1, 3, 1, 1) == 0);  // C(1, 2) = 0
}

TEST_CASE("projective invariant equals k^g") {
  CHECK(projective_invariant(1, 3, 2).value == 2);
  CHECK(projective_invariant(0, 2, 5).value == 1);
  CHECK(projective_invariant(3, 4, 3).value == 27);
  for (int g = 0; g <= 3; ++g) {
    for (int k = 2; k <= 6; ++k) {
      for (int d = 1; d <= 4; ++d) {
        const int m = k * d - (k - 1) * (g - 1);
        if (m < 0) continue;
        CHECK(vafa_intriligator(InvariantQuery{g, d, 1, k, {m}}).value == ipow(BigInt(k), g));
      }
    }
  }
}

TEST_CASE("higher genus rank two is integral and matches the root-form oracle") {
  for (int g = 2; g <= 3; ++g) {
    for (int k = 3; k <= 4; ++k) {
      for (int d = 1; d <= 3; ++d) {
        const long long dim = static_cast<long long>(k) * d - 2LL * (k - 2) * (g - 1);
        for (int n = 0; 2 * n <= dim; ++n) {
          const InvariantQuery q{g, d, 2, k, {static_cast<int>(dim - 2 * n), n}};
          const auto vi = vafa_intriligator(q, 1e-6);
          CHECK(vi.residual < 1e-6);
          CHECK(brute_force_r2_genus(g, d, k, n, 1e-6).value == vi.value);
        }
      }
    }
  }
}

TEST_CASE("dispatcher") {
  const InvariantQuery q{1, 3, 2, 3, {9, 0}};
  const auto all = invariant(q, {}, 1e-9);
  REQUIRE(all.size() == 4);
  for (const auto& r : all) CHECK(r.value == all[0].value);

  CHECK_THROWS_AS(invariant(InvariantQuery{2, 3, 2, 3, {7, 0}}, {Pipeline::closed}, 1e-9),
                  PipelineNotApplicable);
  CHECK_THROWS_AS(invariant(InvariantQuery{1, 2, 2, 3, {5, 0}}, {}, 1e-9), DimensionMismatch);
  CHECK_THROWS_AS(invariant(InvariantQuery{1, 2, 1, 3, {6}}, {Pipeline::flip}, 1e-9),
                  PipelineNotApplicable);

  // Beyond the floating budget only the exact pipelines run.
  const auto big = invariant(InvariantQuery::rank_two(1, 13, 4, 3), {}, 1e-9);
  CHECK(big.size() == 2);
  CHECK(big[0].value == elliptic_oracle(13, 4, 3));
  CHECK_THROWS_AS(vafa_intriligator(InvariantQuery::rank_two(1, 13, 4, 3)), PrecisionBudgetExceeded);
}

TEST_CASE("pipeline names") {
  for (auto p : {Pipeline::vi, Pipeline::oracle, Pipeline::closed, Pipeline::flip, Pipeline::projective})
    CHECK(parse_pipeline(to_string(p)) == p);
  CHECK_FALSE(parse_pipeline("nope").has_value());
}
