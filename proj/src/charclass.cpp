#include "gwgr/charclass.hpp"

#include "gwgr/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gwgr {

namespace {

constexpr int kMaxRewriteSteps = 100000;

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// GradedRingSpec

GradedRingSpec::GradedRingSpec(std::vector<Generator> generators, int top_degree)
    : generators_(std::move(generators)), top_degree_(top_degree) {
  if (top_degree < 0) throw RingSpecError("top degree must be nonnegative");
  for (const auto& g : generators_)
    if (g.degree < 1) throw RingSpecError("generator '" + g.name + "' needs positive degree");
}

int GradedRingSpec::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return static_cast<int>(i);
  throw RingSpecError("unknown generator '" + std::string(name) + "'");
}

int GradedRingSpec::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += generators_[i].degree * m[i];
  return d;
}

Monomial GradedRingSpec::monomial(
    std::initializer_list<std::pair<std::string_view, int>> factors) const {
  Monomial m(generators_.size(), 0);
  for (const auto& [name, e] : factors) m[generator_index(name)] += e;
  return m;
}

GradedRingSpec& GradedRingSpec::nilpotent(std::string_view generator, int power) {
  if (power < 1) throw RingSpecError("nilpotency power must be positive");
  Monomial lhs(generators_.size(), 0);
  lhs[generator_index(generator)] = power;
  rules_.push_back({std::move(lhs), 0, Monomial(generators_.size(), 0)});
  return *this;
}

GradedRingSpec& GradedRingSpec::rewrite(Monomial lhs, BigRational factor, Monomial rhs) {
  if (lhs.size() != generators_.size() || rhs.size() != generators_.size())
    throw RingSpecError("rewrite rule has wrong arity");
  if (degree(lhs) == 0) throw RingSpecError("rewrite rule with constant left side");
  if (factor != 0 && degree(lhs) != degree(rhs))
    throw RingSpecError("rewrite rule " + to_string(lhs) + " -> " + to_string(rhs) +
                        " does not preserve degree");
  rules_.push_back({std::move(lhs), std::move(factor), std::move(rhs)});
  return *this;
}

GradedRingSpec& GradedRingSpec::evaluate_as(Monomial top_monomial, BigRational value) {
  if (top_monomial.size() != generators_.size())
    throw RingSpecError("evaluation monomial has wrong arity");
  if (degree(top_monomial) != top_degree_)
    throw RingSpecError("evaluation given on " + to_string(top_monomial) +
                        ", which is not of top degree");
  functional_[std::move(top_monomial)] = std::move(value);
  return *this;
}

std::pair<BigRational, Monomial> GradedRingSpec::normalize(
    Monomial m, const std::vector<std::size_t>& order) const {
  std::vector<std::size_t> default_order;
  const auto* rule_order = &order;
  if (order.empty()) {
    default_order.resize(rules_.size());
    std::iota(default_order.begin(), default_order.end(), 0);
    rule_order = &default_order;
  }

  BigRational coefficient = 1;
  for (int step = 0; step < kMaxRewriteSteps; ++step) {
    if (degree(m) > top_degree_) return {0, std::move(m)};
    const Rule* applied = nullptr;
    for (auto idx : *rule_order) {
      if (divides(rules_[idx].lhs, m)) {
        applied = &rules_[idx];
        break;
      }
    }
    if (applied == nullptr) return {coefficient, std::move(m)};
    if (applied->factor == 0) return {0, std::move(m)};
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += applied->rhs[i] - applied->lhs[i];
    coefficient *= applied->factor;
  }
  throw RingSpecError("rewrite system does not terminate on " + to_string(m));
}

BigRational GradedRingSpec::evaluate_monomial(const Monomial& normal_top) const {
  auto it = functional_.find(normal_top);
  return it == functional_.end() ? BigRational(0) : it->second;
}

std::vector<Monomial> GradedRingSpec::spanning_monomials() const {
  const std::size_t n = generators_.size();
  std::vector<int> bound(n);
  for (std::size_t i = 0; i < n; ++i) bound[i] = top_degree_ / generators_[i].degree;
  for (const auto& rule : rules_) {
    // single-generator nilpotency
    if (rule.factor != 0) continue;
    int nonzero = 0, which = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (rule.lhs[i] != 0) ++nonzero, which = static_cast<int>(i);
    if (nonzero == 1) bound[which] = std::min(bound[which], rule.lhs[which] - 1);
  }

  std::vector<Monomial> out;
  Monomial m(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int deg) -> void {
    if (i == n) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= bound[i] && deg + e * generators_[i].degree <= top_degree_; ++e) {
      m[i] = e;
      self(self, i + 1, deg + e * generators_[i].degree);
    }
    m[i] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

bool GradedRingSpec::check_confluence() const {
  std::vector<std::size_t> order(rules_.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<std::size_t>> orders;
  if (rules_.size() <= 6) {
    do orders.push_back(order);
    while (std::next_permutation(order.begin(), order.end()));
  } else {
    orders.push_back(order);
    std::reverse(order.begin(), order.end());
    orders.push_back(order);
  }

  for (const auto& m : spanning_monomials()) {
    std::optional<std::pair<BigRational, Monomial>> reference;
    for (const auto& o : orders) {
      auto nf = normalize(m, o);
      if (nf.first == 0) nf.second.assign(m.size(), 0);
      if (!reference)
        reference = std::move(nf);
      else if (*reference != nf)
        return false;
    }
  }
  return true;
}

std::string GradedRingSpec::to_string(const Monomial& m) const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (any) os << ' ';
    os << generators_[i].name;
    if (m[i] > 1) os << '^' << m[i];
    any = true;
  }
  if (!any) os << '1';
  return os.str();
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(std::shared_ptr<const GradedRingSpec> spec) : spec_(std::move(spec)) {}

RingElement RingElement::scalar(std::shared_ptr<const GradedRingSpec> spec, const BigRational& c) {
  const Monomial unit(spec->generator_count(), 0);
  return monomial(std::move(spec), unit, c);
}

RingElement RingElement::generator(std::shared_ptr<const GradedRingSpec> spec,
                                   std::string_view name) {
  Monomial m(spec->generator_count(), 0);
  m[spec->generator_index(name)] = 1;
  return monomial(std::move(spec), m, 1);
}

RingElement RingElement::monomial(std::shared_ptr<const GradedRingSpec> spec, const Monomial& m,
                                  const BigRational& c) {
  RingElement e(std::move(spec));
  e.add_normalized(m, c);
  return e;
}

void RingElement::add_normalized(const Monomial& m, const BigRational& c) {
  if (c == 0) return;
  auto [factor, nf] = spec_->normalize(m);
  if (factor == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(nf), factor * c);
  if (!inserted) {
    it->second += factor * c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool RingElement::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [m, c] = *terms_.begin();
  return c == 1 && std::all_of(m.begin(), m.end(), [](int x) { return x == 0; });
}

BigRational RingElement::constant_term() const {
  for (const auto& [m, c] : terms_)
    if (std::all_of(m.begin(), m.end(), [](int x) { return x == 0; })) return c;
  return 0;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  if (!spec_) spec_ = o.spec_;
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) { return *this += -o; }

RingElement& RingElement::operator*=(const BigRational& c) {
  if (c == 0) terms_.clear();
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  RingElement out(a.spec_ ? a.spec_ : b.spec_);
  if (a.is_zero() || b.is_zero()) return out;
  Monomial m;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      m.resize(ma.size());
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_normalized(m, ca * cb);
    }
  }
  return out;
}

RingElement RingElement::operator-() const {
  RingElement out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

RingElement RingElement::pow(unsigned e) const {
  RingElement result = scalar(spec_, 1);
  RingElement base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

BigRational RingElement::evaluate() const {
  BigRational total = 0;
  for (const auto& [m, c] : terms_)
    if (spec_->degree(m) == spec_->top_degree()) total += c * spec_->evaluate_monomial(m);
  return total;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << gwgr::to_string(c);
    if (std::any_of(m.begin(), m.end(), [](int x) { return x != 0; }))
      os << ' ' << spec_->to_string(m);
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RingSeries

RingSeries::RingSeries(std::shared_ptr<const GradedRingSpec> spec, int order)
    : spec_(std::move(spec)), order_(order) {
  if (order < 0) throw TruncationTooLow("series truncation order must be nonnegative");
  coeffs_.assign(order + 1, RingElement(spec_));
}

RingSeries::RingSeries(std::vector<RingElement> coefficients, int order)
    : order_(order) {
  if (order < 0) throw TruncationTooLow("series truncation order must be nonnegative");
  for (const auto& c : coefficients)
    if (c.spec()) spec_ = c.spec();
  if (!spec_) throw RingSpecError("series coefficients carry no ring");
  coefficients.resize(order + 1, RingElement(spec_));
  coeffs_ = std::move(coefficients);
}

RingSeries RingSeries::one(std::shared_ptr<const GradedRingSpec> spec, int order) {
  RingSeries s(spec, order);
  s.coeffs_[0] = RingElement::scalar(spec, 1);
  return s;
}

RingSeries RingSeries::linear(const RingElement& a, const RingElement& b, int order) {
  std::vector<RingElement> c{a};
  if (order >= 1) c.push_back(b);
  return RingSeries(std::move(c), order);
}

RingSeries RingSeries::exponential(const RingElement& x, int order) {
  RingSeries s = one(x.spec(), order);
  RingElement power = RingElement::scalar(x.spec(), 1);
  for (int i = 1; i <= order; ++i) {
    power = power * x * BigRational(1, i);
    s.coeffs_[i] = power;
  }
  return s;
}

const RingElement& RingSeries::coefficient(int i) const {
  if (i < 0 || i > order_)
    throw TruncationTooLow("coefficient t^" + std::to_string(i) + " beyond truncation order " +
                           std::to_string(order_));
  return coeffs_[i];
}

RingElement& RingSeries::coefficient(int i) {
  return const_cast<RingElement&>(std::as_const(*this).coefficient(i));
}

RingSeries& RingSeries::operator+=(const RingSeries& o) {
  order_ = std::min(order_, o.order_);
  coeffs_.resize(order_ + 1);
  for (int i = 0; i <= order_; ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

RingSeries operator*(const RingSeries& a, const RingSeries& b) {
  const int order = std::min(a.order_, b.order_);
  RingSeries out(a.spec_, order);
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j)
      if (!b.coeffs_[j].is_zero()) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

RingSeries operator*(RingSeries a, const BigRational& c) {
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

RingSeries RingSeries::operator-() const { return *this * BigRational(-1); }

RingSeries RingSeries::pow(long long e) const {
  if (e < 0) return series_inverse(*this).pow(-e);
  RingSeries result = one(spec_, order_);
  RingSeries base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

RingSeries RingSeries::truncated(int order) const {
  if (order > order_) throw TruncationTooLow("cannot extend a truncated series");
  RingSeries out = *this;
  out.order_ = order;
  out.coeffs_.resize(order + 1);
  return out;
}

bool operator==(const RingSeries& a, const RingSeries& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

RingSeries series_inverse(const RingSeries& c) {
  if (!c.coefficient(0).is_one())
    throw NonUnitConstantTerm("series constant term is " + c.coefficient(0).to_string() +
                              ", expected 1");
  RingSeries s = RingSeries::one(c.spec(), c.order());
  for (int n = 1; n <= c.order(); ++n) {
    RingElement acc(c.spec());
    for (int j = 1; j <= n; ++j) acc += c.coefficient(j) * s.coefficient(n - j);
    s.coefficient(n) = -acc;
  }
  return s;
}

RingElement pushforward_power(long long l, long long fiber_rank, const RingSeries& segre) {
  if (l < fiber_rank - 1) return RingElement(segre.spec());
  return segre.coefficient(static_cast<int>(l - fiber_rank + 1));
}

BigRational theta_integral(int g, int k, int d) {
  if (g < 0) throw std::invalid_argument("theta_integral: genus must be nonnegative");
  auto spec = std::make_shared<GradedRingSpec>(
      std::vector<GradedRingSpec::Generator>{{"theta", 1}}, g);
  spec->nilpotent("theta", g + 1);
  spec->evaluate_as(spec->monomial({{"theta", g}}), BigRational(factorial(g)));
  std::shared_ptr<const GradedRingSpec> ring = spec;

  const RingElement theta = RingElement::generator(ring, "theta");
  const RingSeries chern = RingSeries::exponential(theta * BigRational(-k), g);
  const RingSeries segre = series_inverse(chern);

  // V has rank k(d+1-g); <X^m> = pi_* X^{rank-1+g} = s_g(V)
  const long long rank = static_cast<long long>(k) * (d + 1 - g);
  const RingElement sg =
      rank >= 1 ? pushforward_power(rank - 1 + g, rank, segre) : segre.coefficient(g);
  return sg.evaluate();
}

BigRational blowup_correction(long long m, long long n, long long top_dim,
                              const RingSeries& s_normal, const RingElement& c1E,
                              const RingElement& c2E, const RingElement& c1L) {
  const long long target = top_dim - n;
  if (target < 0) return 0;
  if (s_normal.order() < target)
    throw TruncationTooLow("normal Segre series truncated at " +
                           std::to_string(s_normal.order()) + ", need t^" +
                           std::to_string(target));
  const int order = static_cast<int>(target);
  const auto& ring = s_normal.spec();
  const RingSeries chern_part =
      RingSeries::linear(RingElement::scalar(ring, 1), c1E, order).pow(m);
  const RingSeries line_part = RingSeries::linear(c1L, c2E, order).pow(n);
  const RingSeries product = s_normal.truncated(order) * chern_part * line_part;
  return -product.coefficient(order).evaluate();
}

BigRational BlowupInstance::evaluate() const {
  return blowup_correction(m, n, top_dim, s_normal, c1E, c2E, c1L);
}

BlowupInstance even_degree_diagonal_instance(int d, int k, int n) {
  if (d < 2 || d % 2 != 0) throw std::invalid_argument("diagonal instance needs even d >= 2");
  const long long half = static_cast<long long>(k) * d / 2;
  if (n < 0 || n > half) throw std::invalid_argument("diagonal instance: n out of range");
  const long long m = static_cast<long long>(k) * d - 2LL * n;

  auto spec = std::make_shared<GradedRingSpec>(
      std::vector<GradedRingSpec::Generator>{{"w", 1}, {"e", 1}}, static_cast<int>(half));
  spec->nilpotent("e", 2).nilpotent("w", static_cast<int>(half));
  spec->evaluate_as(spec->monomial({{"w", static_cast<int>(half) - 1}, {"e", 1}}),
                    BigRational(2, d));
  std::shared_ptr<const GradedRingSpec> ring = spec;

  const auto w = RingElement::generator(ring, "w");
  const auto e = RingElement::generator(ring, "e");
  const auto one = RingElement::scalar(ring, 1);
  const int order = static_cast<int>(half - n);
  // s(nu(Delta)) = c_t((rho_* L)^k (1))^{-1} = (1 + w t)^{-kd/2}
  RingSeries s_normal = RingSeries::linear(one, w, order).pow(-half);
  const auto c1L = w + e;
  return BlowupInstance{ring, std::move(s_normal), c1L * BigRational(2), c1L * c1L, c1L,
                        m, n, half};
}

BlowupInstance wall_crossing_instance(int d, int k, int n, int l) {
  if (l <= d / 2 || l > d) throw std::invalid_argument("wall instance needs floor(d/2) < l <= d");
  if (n < 0 || 2LL * n > static_cast<long long>(k) * d)
    throw std::invalid_argument("wall instance: n out of range");
  const long long m = static_cast<long long>(k) * d - 2LL * n;
  const int base = k * (d - l) + 1;  // dim P(d-l,k) x J_l
  const int fiber = 2 * l - d - 1;   // fiber dimension of P(W^-)
  const int top = base + fiber;

  auto spec = std::make_shared<GradedRingSpec>(
      std::vector<GradedRingSpec::Generator>{{"y", 1}, {"e", 1}, {"w", 1}}, top);
  spec->nilpotent("e", 2).nilpotent("y", base + 1).nilpotent("w", fiber + 1);
  spec->rewrite(spec->monomial({{"y", base}}), BigRational(base),
                spec->monomial({{"e", 1}, {"y", base - 1}}));
  spec->evaluate_as(spec->monomial({{"e", 1}, {"y", base - 1}, {"w", fiber}}), BigRational(k, l));
  std::shared_ptr<const GradedRingSpec> ring = spec;

  const auto y = RingElement::generator(ring, "y");
  const auto e = RingElement::generator(ring, "e");
  const auto w = RingElement::generator(ring, "w");
  const auto one = RingElement::scalar(ring, 1);
  const int order = static_cast<int>(std::max<long long>(top - n, 0));
  // c_t(k rho_* L_l (-z))^{-1} c_t(E) with c_t(E) -> (1 - w t)^{2l-d}
  RingSeries s_normal = RingSeries::linear(one, -w, order).pow(2LL * l - d - 1LL * k * l);
  return BlowupInstance{ring, std::move(s_normal), y - w, (y - e) * (e - w), y - e, m, n, top};
}

bool identity_517(int d, int k, int n) {
  if (d % 2 != 0 || d <= 0) throw std::invalid_argument("identity_517 needs even positive d");
  const long long m = static_cast<long long>(k) * d - 2LL * n;
  const BigRational two_over_d(2, d);
  const BigRational lhs = BigRational(-2 * m) * two_over_d * rpow(BigRational(2), m - 2) -
                          BigRational(n) * two_over_d * rpow(BigRational(2), m);
  const BigRational rhs = BigRational(-k) * rpow(BigRational(2), m);
  return lhs == rhs;
}

}  // namespace gwgr
