#pragma once

// Gromov invariants <X_1^{s_1} ... X_r^{s_r}> for degree-d maps from a genus-g
// curve to G(r,k), computed along several independent routes.

#include "gwgr/numerics.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gwgr {

enum class Pipeline {
  vi,          // residue sum over critical points of W_1
  oracle,      // direct sum over pairs of roots of unity (r = 2)
  closed,      // exact closed form (g = 1, r = 2)
  flip,        // initial term plus wall-crossing corrections (g = 1, r = 2)
  projective,  // k^g (r = 1)
};

std::string_view to_string(Pipeline p);
std::optional<Pipeline> parse_pipeline(std::string_view name);

// Floating pipelines carry terms up to 2^{kd}; beyond this the double
// mantissa no longer pins the integer.
inline constexpr int kMaxFloatingKd = 48;
inline constexpr double kDefaultTolerance = 1e-9;

struct InvariantQuery {
  int g = 0;
  int d = 0;
  int r = 1;
  int k = 2;
  std::vector<int> s;

  // kd - r(k-r)(g-1)
  long long expected_dimension() const;
  long long weighted_degree() const;  // sum i * s_i
  // Throws InvalidGrassmannian or DimensionMismatch.
  void validate() const;
  // <X1^{m} X2^{n}> on G(2,k) with m filled in from the dimension.
  static InvariantQuery rank_two(int g, int d, int k, int n);

  friend bool operator==(const InvariantQuery&, const InvariantQuery&) = default;
};

struct PipelineResult {
  BigInt value;
  Pipeline pipeline = Pipeline::vi;
  double residual = 0.0;  // distance to the integer; 0 for exact pipelines
  double error_bound = 0.0;
  bool exact = false;

  friend bool operator==(const PipelineResult&, const PipelineResult&) = default;
};

// The degree lies outside d > 2g - 2, where the residue formula is only a
// formal expression.
bool is_formal_value(const InvariantQuery& q);

void check_precision_budget(int k, int d);

PipelineResult vafa_intriligator(const InvariantQuery& query, double tol = kDefaultTolerance);

// (-1)^d / 2 * sum over ordered pairs of distinct k-th roots of unity of
// (x1 + x2)^{kd-2n} (x1 x2)^n.
PipelineResult brute_force_r2(int d, int k, int n, double tol = kDefaultTolerance);

// The same double sum for any genus, written directly in the Chern roots
// q^k = -1 with h = -k^2 (q1 q2)^{k-1} / (q1 - q2)^2.
PipelineResult brute_force_r2_genus(int g, int d, int k, int n, double tol = kDefaultTolerance);

// (-1)^{d+1} k 2^{m-1} - (-1)^{d+1} (k^2/2) sum_{n/k <= p <= d-n/k} C(m, kp-n),
// m = kd - 2n, in exact rationals.
BigRational closed_form_r2_g1_value(int d, int k, int n);
PipelineResult closed_form_r2_g1(int d, int k, int n);

PipelineResult projective_invariant(int g, int d, int k);

// Pairing on the first chamber: k 2^{m-1} for odd d,
// (k^2/2) C(m, m/2) - k 2^{m-1} for even d.
BigRational flip_initial_term(int d, int k, int n);
// Change across the wall at l: (-1)^d k^2 C(m, kl - n).
BigInt flip_wall_correction(int d, int k, int n, int l);
PipelineResult flip_pipeline_r2_g1(int d, int k, int n);

std::vector<Pipeline> applicable_pipelines(const InvariantQuery& query);

// Runs the requested pipelines (all applicable ones when empty) and throws
// CrossCheckMismatch unless every value agrees.
std::vector<PipelineResult> invariant(const InvariantQuery& query,
                                      const std::vector<Pipeline>& pipelines = {},
                                      double tol = kDefaultTolerance);

}  // namespace gwgr
