// gwgr: Gromov invariants of Grassmannians from the command line.

#include "gwgr/critical.hpp"
#include "gwgr/errors.hpp"
#include "gwgr/invariants.hpp"
#include "gwgr/report.hpp"
#include "gwgr/sympoly.hpp"
#include "gwgr/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitResult = 3;

double default_tolerance() {
  if (const char* env = std::getenv("GWGR_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0) return v;
    std::cerr << "warning: ignoring invalid GWGR_TOL='" << env << "'\n";
  }
  return gwgr::kDefaultTolerance;
}

std::string complex_string(const gwgr::GuardedComplex& z) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(12);
  const double re = std::abs(z.re()) < 5e-13 ? 0.0 : z.re();
  const double im = std::abs(z.im()) < 5e-13 ? 0.0 : z.im();
  os << re << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
  return os.str();
}

struct InvariantArgs {
  int genus = 0, degree = 0, r = 0, k = 0;
  std::vector<int> exponents;
  std::string pipeline = "all";
  std::string format = "text";
  double tol = 0.0;
};

int run_invariant(const InvariantArgs& a) {
  const gwgr::InvariantQuery query{a.genus, a.degree, a.r, a.k, a.exponents};
  std::vector<gwgr::Pipeline> pipelines;
  if (a.pipeline != "all") pipelines.push_back(*gwgr::parse_pipeline(a.pipeline));
  const auto results = gwgr::invariant(query, pipelines, a.tol);
  const auto record = gwgr::make_record(query, results, a.tol);
  if (a.format == "json")
    std::cout << gwgr::to_json(record).dump(2) << '\n';
  else if (a.format == "csv")
    std::cout << gwgr::render_csv(record);
  else
    std::cout << gwgr::render_text(record);
  return record.agree ? kExitOk : kExitResult;
}

struct TableArgs {
  int genus = 1, r = 2, k = 0, degree = 0;
  std::string format = "text";
  double tol = 0.0;
};

int run_table(const TableArgs& a) {
  if (a.genus != 1 || a.r != 2)
    throw gwgr::PipelineNotApplicable("tables are available for genus 1 and r = 2 only");
  if (a.k < 3) throw gwgr::InvalidGrassmannian(a.r, a.k);
  if (a.degree < 0) throw gwgr::DimensionMismatch("degree must be nonnegative");
  const auto table = gwgr::make_table(a.degree, a.k, a.tol);
  if (a.format == "json")
    std::cout << gwgr::table_to_json(table).dump(2) << '\n';
  else if (a.format == "csv")
    std::cout << gwgr::render_table_csv(table);
  else
    std::cout << gwgr::render_table_text(table);
  return table.agree ? kExitOk : kExitResult;
}

int run_ring(int r, int k, const std::string& format) {
  gwgr::check_grassmannian(r, k);
  const auto w = gwgr::lg_potential(r, k);
  const auto gens = gwgr::ideal_generators(r, k);
  const auto h = gwgr::hessian_class(r, k);
  if (format == "json") {
    nlohmann::json j{{"r", r}, {"k", k}, {"W", w.to_string()}, {"h", h.to_string()}};
    nlohmann::json ideal = nlohmann::json::object();
    for (int i = 0; i < r; ++i) ideal["Y" + std::to_string(k - r + 1 + i)] = gens[i].to_string();
    j["ideal"] = ideal;
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "W = " << w.to_string() << '\n';
  for (int i = 0; i < r; ++i)
    std::cout << "Y" << k - r + 1 + i << " = " << gens[i].to_string() << '\n';
  std::cout << "h = " << h.to_string() << '\n';
  return kExitOk;
}

int run_critical(int r, int k, const std::string& format) {
  const auto points = gwgr::enumerate_critical_points(r, k);
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : points) {
      nlohmann::json q = nlohmann::json::array(), z = nlohmann::json::array();
      for (const auto& a : p.q) q.push_back(a.to_string());
      for (const auto& c : p.z) z.push_back({c.re(), c.im()});
      arr.push_back({{"q", q}, {"z", z}});
    }
    std::cout << nlohmann::json{{"r", r}, {"k", k}, {"points", arr}}.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "G(" << r << "," << k << "): " << points.size()
            << " critical points, q = exp(2 pi i a) with q^k = " << (r % 2 ? "1" : "-1") << '\n';
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::cout << "#" << i << "  a = (";
    for (std::size_t j = 0; j < points[i].q.size(); ++j)
      std::cout << (j ? ", " : "") << points[i].q[j].to_string();
    std::cout << ")\n";
    for (std::size_t j = 0; j < points[i].z.size(); ++j)
      std::cout << "    Z" << j + 1 << " = " << complex_string(points[i].z[j]) << '\n';
  }
  return kExitOk;
}

int run_verify(const std::string& suite, const gwgr::VerifyOptions& options) {
  const auto checks = gwgr::run_suite(suite, options);
  std::size_t failed = 0;
  for (const auto& c : checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.suite << ": " << c.name;
    if (!c.detail.empty() && !c.passed) std::cout << " (" << c.detail << ")";
    std::cout << '\n';
    if (!c.passed) {
      ++failed;
      if (!c.reproduce.empty()) std::cout << "  reproduce: " << c.reproduce << '\n';
    }
  }
  std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitResult;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gromov invariants of maps from Riemann surfaces to Grassmannians"};
  app.require_subcommand(1);
  const double tol_default = default_tolerance();
  const std::vector<std::string> formats{"text", "json", "csv"};

  InvariantArgs inv;
  inv.tol = tol_default;
  auto* inv_cmd = app.add_subcommand("invariant", "compute <X1^s1 ... Xr^sr>");
  inv_cmd->add_option("--genus", inv.genus, "genus g of the curve")->required();
  inv_cmd->add_option("--degree", inv.degree, "degree d of the maps")->required();
  inv_cmd->add_option("--r", inv.r, "rank r of G(r,k)")->required();
  inv_cmd->add_option("--k", inv.k, "k of G(r,k)")->required();
  inv_cmd->add_option("--exponents", inv.exponents, "s1,s2,...")->required()->delimiter(',');
  inv_cmd->add_option("--pipeline", inv.pipeline)
      ->check(CLI::IsMember({"vi", "oracle", "closed", "flip", "projective", "all"}));
  inv_cmd->add_option("--format", inv.format)->check(CLI::IsMember(formats));
  inv_cmd->add_option("--tol", inv.tol)->check(CLI::PositiveNumber);

  TableArgs tab;
  tab.tol = tol_default;
  auto* tab_cmd = app.add_subcommand("table", "all <X1^{kd-2n} X2^n> for g = 1, r = 2");
  tab_cmd->add_option("--genus", tab.genus)->required();
  tab_cmd->add_option("--r", tab.r)->required();
  tab_cmd->add_option("--k", tab.k)->required();
  tab_cmd->add_option("--degree", tab.degree)->required();
  tab_cmd->add_option("--format", tab.format)->check(CLI::IsMember(formats));
  tab_cmd->add_option("--tol", tab.tol)->check(CLI::PositiveNumber);

  int ring_r = 0, ring_k = 0;
  std::string ring_format = "text";
  auto* ring_cmd = app.add_subcommand("ring", "print W, the relations and h");
  ring_cmd->add_option("--r", ring_r)->required();
  ring_cmd->add_option("--k", ring_k)->required();
  ring_cmd->add_option("--format", ring_format)->check(CLI::IsMember({"text", "json"}));

  int crit_r = 0, crit_k = 0;
  std::string crit_format = "text";
  auto* crit_cmd = app.add_subcommand("critical", "list critical points of W1");
  crit_cmd->add_option("--r", crit_r)->required();
  crit_cmd->add_option("--k", crit_k)->required();
  crit_cmd->add_option("--format", crit_format)->check(CLI::IsMember({"text", "json"}));

  std::string suite = "all";
  gwgr::VerifyOptions verify_options;
  verify_options.tol = tol_default;
  auto* ver_cmd = app.add_subcommand("verify", "run the property suites");
  ver_cmd->add_option("--suite", suite, "sympoly|critical|pipelines|charclass|all");
  ver_cmd->add_option("--max-k", verify_options.max_k);
  ver_cmd->add_option("--max-d", verify_options.max_d);
  ver_cmd->add_option("--tol", verify_options.tol)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*inv_cmd) return run_invariant(inv);
    if (*tab_cmd) return run_table(tab);
    if (*ring_cmd) return run_ring(ring_r, ring_k, ring_format);
    if (*crit_cmd) return run_critical(crit_r, crit_k, crit_format);
    if (*ver_cmd) {
      if (!gwgr::is_known_suite(suite)) {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return kExitUsage;
      }
      return run_verify(suite, verify_options);
    }
  } catch (const gwgr::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const gwgr::ResultError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResult;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
