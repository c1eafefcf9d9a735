#include "gwgr/verify.hpp"

#include "gwgr/charclass.hpp"
#include "gwgr/critical.hpp"
#include "gwgr/errors.hpp"
#include "gwgr/invariants.hpp"
#include "gwgr/schubert.hpp"
#include "gwgr/sympoly.hpp"

#include <sstream>

namespace gwgr {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string invariant_command(const InvariantQuery& q) {
  std::ostringstream os;
  os << "gwgr invariant --genus " << q.g << " --degree " << q.d << " --r " << q.r << " --k "
     << q.k << " --exponents " << join(q.s);
  return os.str();
}

std::string verify_command(std::string_view suite, int max_k, std::optional<int> max_d,
                           double tol) {
  std::ostringstream os;
  os << "gwgr verify --suite " << suite << " --max-k " << max_k;
  if (max_d) os << " --max-d " << *max_d;
  if (tol != kDefaultTolerance) os << " --tol " << tol;
  return os.str();
}

// Runs body; any exception becomes a failed check carrying its message.
template <class F>
CheckResult check(std::string suite, std::string name, std::string reproduce, F&& body) {
  CheckResult c{std::move(suite), std::move(name), false, {}, std::move(reproduce)};
  try {
    std::string detail;
    c.passed = body(detail);
    c.detail = std::move(detail);
  } catch (const std::exception& e) {
    c.passed = false;
    c.detail = e.what();
  }
  return c;
}

void sympoly_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  const int max_k = opt.max_k.value_or(8);
  for (int k = 2; k <= max_k; ++k) {
    for (int r = 1; r < k; ++r) {
      const std::string tag = "G(" + std::to_string(r) + "," + std::to_string(k) + ")";
      const std::string repro = verify_command("sympoly", k, std::nullopt, opt.tol);
      out.push_back(check("sympoly", "potential: Newton == log " + tag, repro, [&](std::string&) {
        return lg_potential(r, k) == lg_potential_via_log(r, k);
      }));
      out.push_back(check("sympoly", "gradient: dW_{k+1}/dX_i == -Y_{k+1-i} " + tag, repro,
                          [&](std::string& detail) {
                            const auto wk1 = log_coefficient(r, k + 1);
                            const auto y = relation_polys(r, k);
                            for (int i = 1; i <= r; ++i) {
                              if (wk1.derivative(i - 1) != -y[k - i]) {
                                detail = "fails at i = " + std::to_string(i);
                                return false;
                              }
                            }
                            return true;
                          }));
      out.push_back(check("sympoly", "grading " + tag, repro, [&](std::string& detail) {
        const auto w = lg_potential(r, k);
        if (w.weighted_degree() != k + 1) return detail = "W not of degree k+1", false;
        const auto y = relation_polys(r, k);
        for (int i = 1; i <= k; ++i)
          if (!y[i - 1].is_zero() && y[i - 1].weighted_degree() != i)
            return detail = "Y_" + std::to_string(i) + " not homogeneous", false;
        if (r <= 4) {
          const auto h = hessian_class(r, k);
          if (h.weighted_degree() != r * (k + 1) - r * (r + 1))
            return detail = "h has degree " + std::to_string(h.weighted_degree().value_or(-1)),
                   false;
        }
        return true;
      }));
      if (r <= 3 && k <= 6) {
        out.push_back(check("sympoly", "specialisation to Chern roots " + tag, repro,
                            [&](std::string&) {
                              std::vector<MultiPoly> e;
                              for (int i = 1; i <= r; ++i) e.push_back(elementary_symmetric(r, i));
                              MultiPoly expected(r);
                              for (int i = 0; i < r; ++i) {
                                Exponents x(r, 0);
                                x[i] = k + 1;
                                expected += MultiPoly::monomial(r, x, BigRational(1, k + 1));
                              }
                              return lg_potential(r, k).substitute(e) == expected;
                            }));
      }
    }
  }
}

void critical_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  const int max_k = opt.max_k.value_or(10);
  for (int k = 2; k <= max_k; ++k) {
    for (int r = 1; r <= std::min(3, k - 1); ++r) {
      const std::string tag = "G(" + std::to_string(r) + "," + std::to_string(k) + ")";
      const std::string repro = verify_command("critical", k, std::nullopt, opt.tol);
      out.push_back(check("critical", "count and exact roots " + tag, repro, [&](std::string& detail) {
        const auto pts = enumerate_critical_points(r, k);
        if (BigInt(pts.size()) != binomial(k, r)) return detail = "wrong count", false;
        const UnityAngle sign = UnityAngle(r - 1, 2);
        for (const auto& p : pts) {
          for (std::size_t i = 0; i < p.q.size(); ++i) {
            if (p.q[i].pow(k) != sign) return detail = "root fails q^k = (-1)^(r-1)", false;
            if (i > 0 && !(p.q[i - 1] < p.q[i])) return detail = "roots not distinct", false;
          }
        }
        return true;
      }));
      out.push_back(check("critical", "gradient and Hessian " + tag, repro, [&](std::string& detail) {
        const auto rep = validate_critical_points(r, k, opt.tol);
        std::ostringstream os;
        os << "max residual " << rep.max_gradient_residual << ", min |h| " << rep.min_hessian_modulus;
        detail = os.str();
        return true;
      }));
    }
  }
}

void pipelines_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  const int max_k = opt.max_k.value_or(5);
  const int max_d = opt.max_d.value_or(5);
  const double tol = std::max(opt.tol, 1e-6);

  for (int k = 3; k <= max_k; ++k) {
    for (int d = 1; d <= max_d; ++d) {
      if (k * d > kMaxFloatingKd) continue;
      for (int n = 0; 2 * n <= k * d; ++n) {
        const auto q = InvariantQuery::rank_two(1, d, k, n);
        out.push_back(check("pipelines", "four-way g=1 k=" + std::to_string(k) + " d=" +
                                             std::to_string(d) + " n=" + std::to_string(n),
                            invariant_command(q), [&](std::string& detail) {
                              const auto res = invariant(q, {}, tol);
                              std::ostringstream os;
                              os << "value " << res.front().value;
                              detail = os.str();
                              return res.size() == 4;
                            }));
      }
    }
  }

  for (int g = 0; g <= 3; ++g) {
    for (int k = 2; k <= std::max(max_k, 2); ++k) {
      for (int d = 1; d <= std::min(max_d, 4); ++d) {
        const long long m = static_cast<long long>(k) * d - static_cast<long long>(k - 1) * (g - 1);
        if (m < 0 || k * d > kMaxFloatingKd) continue;
        const InvariantQuery q{g, d, 1, k, {static_cast<int>(m)}};
        out.push_back(check("pipelines", "projective g=" + std::to_string(g) + " k=" +
                                             std::to_string(k) + " d=" + std::to_string(d),
                            invariant_command(q), [&](std::string&) {
                              return vafa_intriligator(q, tol).value == ipow(BigInt(k), g) &&
                                     theta_integral(g, k, d) == BigRational(ipow(BigInt(k), g));
                            }));
      }
    }
  }

  for (int k : {4, 5}) {
    const int dim = 2 * (k - 2);
    for (int n = 0; 2 * n <= dim; ++n) {
      const InvariantQuery q{0, 0, 2, k, {dim - 2 * n, n}};
      out.push_back(check("pipelines", "classical G(2," + std::to_string(k) + ") X1^" +
                                           std::to_string(dim - 2 * n) + " X2^" + std::to_string(n),
                          invariant_command(q), [&](std::string& detail) {
                            const auto vi = vafa_intriligator(q, tol).value;
                            const auto pieri = schubert::intersection_number(2, k, q.s);
                            std::ostringstream os;
                            os << "vi " << vi << ", Pieri " << pieri;
                            detail = os.str();
                            return vi == pieri;
                          }));
    }
  }
}

void charclass_suite(const VerifyOptions& opt, std::vector<CheckResult>& out) {
  const int max_k = opt.max_k.value_or(5);
  const int max_d = opt.max_d.value_or(6);

  for (int d = 2; d <= max_d; d += 2) {
    for (int k = 2; k <= max_k; ++k) {
      if (k * d > 30) continue;
      for (int n = 0; 2 * n <= k * d; ++n) {
        const std::string tag = "d=" + std::to_string(d) + " k=" + std::to_string(k) +
                                " n=" + std::to_string(n);
        out.push_back(check("charclass", "even-degree diagonal " + tag,
                            verify_command("charclass", k, d, opt.tol), [&](std::string& detail) {
          const auto inst = even_degree_diagonal_instance(d, k, n);
          const auto v = inst.evaluate();
          const BigRational expected = BigRational(-k) * rpow(BigRational(2), k * d - 2 * n);
          detail = "value " + to_string(v);
          return v == expected && identity_517(d, k, n);
        }));
      }
    }
  }

  for (int d = 1; d <= std::min(max_d, 5); ++d) {
    for (int k : {3, 4}) {
      if (k > max_k) continue;
      for (int l = d / 2 + 1; l <= d; ++l) {
        for (int n = 0; 2 * n <= k * d; ++n) {
          const std::string tag = "d=" + std::to_string(d) + " k=" + std::to_string(k) +
                                  " l=" + std::to_string(l) + " n=" + std::to_string(n);
          out.push_back(check("charclass", "wall crossing " + tag,
                              verify_command("charclass", k, d, opt.tol), [&](std::string& detail) {
            const auto inst = wall_crossing_instance(d, k, n, l);
            const auto v = inst.evaluate();
            detail = "value " + to_string(v);
            return v == BigRational(flip_wall_correction(d, k, n, l)) &&
                   inst.spec->check_confluence();
          }));
        }
      }
    }
  }

  for (int g = 0; g <= 6; ++g) {
    out.push_back(check("charclass", "theta integral g=" + std::to_string(g),
                        verify_command("charclass", max_k, max_d, opt.tol),
                        [&](std::string&) {
                          for (int k = 1; k <= 6; ++k)
                            if (theta_integral(g, k, g + 1) != BigRational(ipow(BigInt(k), g)))
                              return false;
                          return true;
                        }));
  }
}

}  // namespace

bool is_known_suite(std::string_view suite) {
  return suite == "sympoly" || suite == "critical" || suite == "pipelines" ||
         suite == "charclass" || suite == "all";
}

std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options) {
  if (!is_known_suite(suite)) throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (all || suite == "sympoly") sympoly_suite(options, out);
  if (all || suite == "critical") critical_suite(options, out);
  if (all || suite == "pipelines") pipelines_suite(options, out);
  if (all || suite == "charclass") charclass_suite(options, out);
  return out;
}

}  // namespace gwgr
