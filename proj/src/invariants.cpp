#include "gwgr/invariants.hpp"

#include "gwgr/critical.hpp"
#include "gwgr/errors.hpp"
#include "gwgr/sympoly.hpp"

#include <algorithm>
#include <sstream>

namespace gwgr {

std::string_view to_string(Pipeline p) {
  switch (p) {
    case Pipeline::vi: return "vi";
    case Pipeline::oracle: return "oracle";
    case Pipeline::closed: return "closed";
    case Pipeline::flip: return "flip";
    case Pipeline::projective: return "projective";
  }
  return "?";
}

std::optional<Pipeline> parse_pipeline(std::string_view name) {
  for (auto p : {Pipeline::vi, Pipeline::oracle, Pipeline::closed, Pipeline::flip,
                 Pipeline::projective})
    if (to_string(p) == name) return p;
  return std::nullopt;
}

long long InvariantQuery::expected_dimension() const {
  return static_cast<long long>(k) * d - static_cast<long long>(r) * (k - r) * (g - 1);
}

long long InvariantQuery::weighted_degree() const {
  long long total = 0;
  for (std::size_t i = 0; i < s.size(); ++i) total += static_cast<long long>(i + 1) * s[i];
  return total;
}

void InvariantQuery::validate() const {
  check_grassmannian(r, k);
  if (g < 0) throw DimensionMismatch("genus must be nonnegative");
  if (d < 0) throw DimensionMismatch("degree must be nonnegative");
  if (static_cast<int>(s.size()) != r) {
    std::ostringstream os;
    os << "expected " << r << " exponents, got " << s.size();
    throw DimensionMismatch(os.str());
  }
  for (int x : s)
    if (x < 0) throw DimensionMismatch("exponents must be nonnegative");
  if (weighted_degree() != expected_dimension()) {
    std::ostringstream os;
    os << "dimension mismatch: sum i*s_i = " << weighted_degree()
       << " but kd - r(k-r)(g-1) = " << expected_dimension();
    throw DimensionMismatch(os.str());
  }
}

InvariantQuery InvariantQuery::rank_two(int g, int d, int k, int n) {
  InvariantQuery q{g, d, 2, k, {0, n}};
  q.s[0] = static_cast<int>(q.expected_dimension() - 2LL * n);
  return q;
}

bool is_formal_value(const InvariantQuery& q) { return q.d <= 2 * q.g - 2; }

void check_precision_budget(int k, int d) {
  if (static_cast<long long>(k) * d > kMaxFloatingKd) {
    std::ostringstream os;
    os << "kd = " << static_cast<long long>(k) * d << " exceeds the floating-point budget of "
       << kMaxFloatingKd << "; use an exact pipeline";
    throw PrecisionBudgetExceeded(os.str());
  }
}

namespace {

PipelineResult finish_floating(const GuardedComplex& sum, Pipeline pipeline, double tol) {
  // Once the bound reaches 1/4 the nearest integer is no longer determined.
  if (!(sum.err() < 0.25)) {
    std::ostringstream os;
    os << to_string(pipeline) << ": accumulated error bound " << sum.err()
       << " is too large to identify an integer";
    throw PrecisionBudgetExceeded(os.str());
  }
  PipelineResult result;
  result.value = round_to_integer(sum, tol);
  result.pipeline = pipeline;
  result.residual = std::abs(sum.re() - result.value.convert_to<double>()) + std::abs(sum.im());
  result.error_bound = sum.err();
  result.exact = false;
  return result;
}

void check_rank_two_index(int d, int k, int n) {
  if (k < 3) throw InvalidGrassmannian(2, k);
  if (d < 0) throw DimensionMismatch("degree must be nonnegative");
  if (n < 0 || 2LL * n > static_cast<long long>(k) * d) {
    std::ostringstream os;
    os << "n = " << n << " outside 0.." << (static_cast<long long>(k) * d) / 2;
    throw DimensionMismatch(os.str());
  }
}

PipelineResult exact_result(const BigRational& v, Pipeline pipeline) {
  if (!is_integer(v)) {
    throw NonIntegerResult(std::string(to_string(pipeline)) + ": exact value " + to_string(v) +
                               " is not an integer",
                           0.5);
  }
  PipelineResult result;
  result.value = boost::multiprecision::numerator(v);
  result.pipeline = pipeline;
  result.exact = true;
  return result;
}

}  // namespace

PipelineResult vafa_intriligator(const InvariantQuery& query, double tol) {
  query.validate();
  check_precision_budget(query.k, query.d);
  const int r = query.r;

  const MultiPoly h = hessian_class(r, query.k);
  const auto points = enumerate_critical_points(r, query.k);

  ComplexAccumulator acc;
  for (const auto& point : points) {
    const GuardedComplex hz = poly_eval(h, point.z);
    if (query.g == 0 && !(std::abs(hz.value()) > std::max(tol, hz.err())))
      throw ValidationFailure("degenerate Hessian at a critical point; h^{-1} undefined");
    GuardedComplex term = hz.pow(query.g - 1);
    for (int i = 0; i < r - 1; ++i)
      if (query.s[i] > 0) term = term * point.z[i].pow(query.s[i]);
    // Z_r = q_1 ... q_r is a root of unity; take its power exactly.
    UnityAngle top;
    for (const auto& q : point.q) top = top * q;
    term = term * top.pow(query.s[r - 1]).to_complex();
    acc.add(term);
  }
  return finish_floating(acc.result(), Pipeline::vi, tol);
}

PipelineResult brute_force_r2(int d, int k, int n, double tol) {
  check_rank_two_index(d, k, n);
  check_precision_budget(k, d);
  const int m = k * d - 2 * n;

  ComplexAccumulator acc;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      const UnityAngle x1(a, k), x2(b, k);
      const GuardedComplex sum = x1.to_complex() + x2.to_complex();
      acc.add(sum.pow(m) * (x1 * x2).pow(n).to_complex());
    }
  }
  GuardedComplex total = acc.result();
  total = total * GuardedComplex(d % 2 == 0 ? 0.5 : -0.5);
  return finish_floating(total, Pipeline::oracle, tol);
}

PipelineResult brute_force_r2_genus(int g, int d, int k, int n, double tol) {
  if (g < 0) throw DimensionMismatch("genus must be nonnegative");
  const auto query = InvariantQuery::rank_two(g, d, k, n);
  query.validate();
  check_precision_budget(k, d);
  const int m = query.s[0];
  const auto roots = roots_of_sign(k, 2);

  ComplexAccumulator acc;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      const auto& q1 = roots[a];
      const auto& q2 = roots[b];
      const GuardedComplex z1 = q1.to_complex(), z2 = q2.to_complex();
      const GuardedComplex diff = z1 - z2;
      const GuardedComplex h = GuardedComplex(-static_cast<double>(k) * k) *
                               (q1 * q2).pow(k - 1).to_complex() / (diff * diff);
      GuardedComplex term = h.pow(g - 1) * (z1 + z2).pow(m) * (q1 * q2).pow(n).to_complex();
      acc.add(term);
    }
  }
  GuardedComplex total = acc.result() * GuardedComplex(0.5);
  return finish_floating(total, Pipeline::oracle, tol);
}

BigRational closed_form_r2_g1_value(int d, int k, int n) {
  check_rank_two_index(d, k, n);
  const long long m = static_cast<long long>(k) * d - 2LL * n;
  const BigRational sign = (d + 1) % 2 == 0 ? 1 : -1;

  BigInt binomial_sum = 0;
  // integer p with n <= kp <= kd - n
  for (long long p = (n + k - 1) / k; static_cast<long long>(k) * p <= m + n; ++p)
    binomial_sum += binomial(m, k * p - n);

  const BigRational first = sign * k * rpow(BigRational(2), m - 1);
  const BigRational second = sign * BigRational(k * k, 2) * BigRational(binomial_sum);
  return first - second;
}

PipelineResult closed_form_r2_g1(int d, int k, int n) {
  return exact_result(closed_form_r2_g1_value(d, k, n), Pipeline::closed);
}

PipelineResult projective_invariant(int g, int d, int k) {
  if (k < 2) throw InvalidGrassmannian(1, k);
  if (g < 0) throw DimensionMismatch("genus must be nonnegative");
  if (d < 0) throw DimensionMismatch("degree must be nonnegative");
  PipelineResult result;
  result.value = ipow(BigInt(k), g);
  result.pipeline = Pipeline::projective;
  result.exact = true;
  return result;
}

BigRational flip_initial_term(int d, int k, int n) {
  check_rank_two_index(d, k, n);
  const long long m = static_cast<long long>(k) * d - 2LL * n;
  const BigRational half_power = k * rpow(BigRational(2), m - 1);
  if (d % 2 == 1) return half_power;
  return BigRational(k * k, 2) * BigRational(binomial(m, m / 2)) - half_power;
}

BigInt flip_wall_correction(int d, int k, int n, int l) {
  check_rank_two_index(d, k, n);
  const long long m = static_cast<long long>(k) * d - 2LL * n;
  BigInt c = BigInt(k) * k * binomial(m, static_cast<long long>(k) * l - n);
  return d % 2 == 0 ? c : BigInt(-c);
}

PipelineResult flip_pipeline_r2_g1(int d, int k, int n) {
  BigRational total = flip_initial_term(d, k, n);
  for (int l = d / 2 + 1; l <= d; ++l) total += BigRational(flip_wall_correction(d, k, n, l));
  return exact_result(total, Pipeline::flip);
}

std::vector<Pipeline> applicable_pipelines(const InvariantQuery& query) {
  std::vector<Pipeline> out{Pipeline::vi};
  if (query.r == 1) out.push_back(Pipeline::projective);
  if (query.r == 2) {
    out.push_back(Pipeline::oracle);
    if (query.g == 1) {
      out.push_back(Pipeline::closed);
      out.push_back(Pipeline::flip);
    }
  }
  return out;
}

namespace {

bool is_floating(Pipeline p) { return p == Pipeline::vi || p == Pipeline::oracle; }

PipelineResult run_pipeline(const InvariantQuery& q, Pipeline p, double tol) {
  switch (p) {
    case Pipeline::vi: return vafa_intriligator(q, tol);
    case Pipeline::oracle:
      return q.g == 1 ? brute_force_r2(q.d, q.k, q.s[1], tol)
                      : brute_force_r2_genus(q.g, q.d, q.k, q.s[1], tol);
    case Pipeline::closed: return closed_form_r2_g1(q.d, q.k, q.s[1]);
    case Pipeline::flip: return flip_pipeline_r2_g1(q.d, q.k, q.s[1]);
    case Pipeline::projective: return projective_invariant(q.g, q.d, q.k);
  }
  throw std::logic_error("unknown pipeline");
}

}  // namespace

std::vector<PipelineResult> invariant(const InvariantQuery& query,
                                      const std::vector<Pipeline>& pipelines, double tol) {
  query.validate();
  const auto applicable = applicable_pipelines(query);

  std::vector<Pipeline> selected;
  if (pipelines.empty()) {
    const bool in_budget = static_cast<long long>(query.k) * query.d <= kMaxFloatingKd;
    for (auto p : applicable)
      if (in_budget || !is_floating(p)) selected.push_back(p);
    if (selected.empty()) check_precision_budget(query.k, query.d);
  } else {
    for (auto p : pipelines) {
      if (std::find(applicable.begin(), applicable.end(), p) == applicable.end()) {
        std::ostringstream os;
        os << "pipeline '" << to_string(p) << "' does not apply to g=" << query.g
           << ", r=" << query.r;
        throw PipelineNotApplicable(os.str());
      }
      if (std::find(selected.begin(), selected.end(), p) == selected.end()) selected.push_back(p);
    }
  }

  std::vector<PipelineResult> results;
  for (auto p : selected) results.push_back(run_pipeline(query, p, tol));

  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].value != results[0].value) {
      std::ostringstream os;
      os << "pipelines disagree: " << to_string(results[0].pipeline) << " = "
         << results[0].value << ", " << to_string(results[i].pipeline) << " = "
         << results[i].value;
      throw CrossCheckMismatch(os.str());
    }
  }
  return results;
}

}  // namespace gwgr
