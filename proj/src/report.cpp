#include "gwgr/report.hpp"

#include "gwgr/errors.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace gwgr {

namespace {

std::string bigint_string(const BigInt& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string residual_string(double r) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << r;
  return os.str();
}

std::string monomial_label(const InvariantQuery& q) {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < q.s.size(); ++i) os << (i ? " " : "") << 'X' << i + 1 << '^' << q.s[i];
  os << '>';
  return os.str();
}

std::string_view pipeline_description(Pipeline p) {
  switch (p) {
    case Pipeline::vi:
      return "sum of h^(g-1) Z^s over the critical points of W1 = W + (-1)^r X1";
    case Pipeline::oracle:
      return "direct double sum over ordered pairs of distinct roots (r = 2)";
    case Pipeline::closed:
      return "exact binomial closed form for elliptic curves (g = 1, r = 2)";
    case Pipeline::flip:
      return "first-chamber pairing plus wall-crossing corrections (g = 1, r = 2)";
    case Pipeline::projective:
      return "k^g from the Segre class of the projective bundle over the Jacobian (r = 1)";
  }
  return "";
}

}  // namespace

OutputRecord make_record(const InvariantQuery& query, std::vector<PipelineResult> results,
                         double tolerance) {
  OutputRecord rec;
  rec.query = query;
  rec.results = std::move(results);
  rec.agree = std::all_of(rec.results.begin(), rec.results.end(),
                          [&](const PipelineResult& r) { return r.value == rec.results[0].value; });
  rec.formal_value = is_formal_value(query);
  rec.tolerance = tolerance;
  rec.precision_budget = kMaxFloatingKd;
  return rec;
}

nlohmann::json to_json(const OutputRecord& record) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : record.results) {
    results.push_back({{"pipeline", std::string(to_string(r.pipeline))},
                       {"value", bigint_string(r.value)},
                       {"residual", r.residual},
                       {"error_bound", r.error_bound},
                       {"exact", r.exact}});
  }
  const auto& q = record.query;
  return {{"query", {{"g", q.g}, {"d", q.d}, {"r", q.r}, {"k", q.k}, {"s", q.s}}},
          {"results", std::move(results)},
          {"agree", record.agree},
          {"formal_value", record.formal_value},
          {"tolerance", record.tolerance},
          {"precision_budget", record.precision_budget}};
}

OutputRecord record_from_json(const nlohmann::json& j) {
  OutputRecord rec;
  const auto& q = j.at("query");
  rec.query.g = q.at("g").get<int>();
  rec.query.d = q.at("d").get<int>();
  rec.query.r = q.at("r").get<int>();
  rec.query.k = q.at("k").get<int>();
  rec.query.s = q.at("s").get<std::vector<int>>();
  for (const auto& r : j.at("results")) {
    PipelineResult pr;
    const auto name = r.at("pipeline").get<std::string>();
    const auto p = parse_pipeline(name);
    if (!p) throw std::invalid_argument("unknown pipeline '" + name + "'");
    pr.pipeline = *p;
    pr.value = BigInt(r.at("value").get<std::string>());
    pr.residual = r.at("residual").get<double>();
    pr.error_bound = r.value("error_bound", 0.0);
    pr.exact = r.at("exact").get<bool>();
    rec.results.push_back(std::move(pr));
  }
  rec.agree = j.at("agree").get<bool>();
  rec.formal_value = j.at("formal_value").get<bool>();
  rec.tolerance = j.value("tolerance", kDefaultTolerance);
  rec.precision_budget = j.value("precision_budget", kMaxFloatingKd);
  return rec;
}

std::string pipeline_legend(const std::vector<Pipeline>& pipelines) {
  std::ostringstream os;
  for (auto p : pipelines) os << "  " << to_string(p) << ": " << pipeline_description(p) << '\n';
  return os.str();
}

std::string render_text(const OutputRecord& record) {
  const auto& q = record.query;
  std::ostringstream os;
  os << "G(" << q.r << "," << q.k << ")  genus " << q.g << "  degree " << q.d << "  "
     << monomial_label(q) << '\n';

  std::size_t width = 1;
  for (const auto& r : record.results) width = std::max(width, bigint_string(r.value).size());
  std::vector<Pipeline> used;
  for (const auto& r : record.results) {
    os << "  " << std::left << std::setw(11) << to_string(r.pipeline) << std::right
       << std::setw(static_cast<int>(width)) << bigint_string(r.value) << "  ";
    if (r.exact)
      os << "exact";
    else
      os << "residual " << residual_string(r.residual);
    os << '\n';
    used.push_back(r.pipeline);
  }
  os << "agree: " << (record.agree ? "yes" : "NO") << '\n';
  if (record.formal_value) os << "note: d <= 2g-2, value is formal\n";
  os << "--\n" << pipeline_legend(used);
  return os.str();
}

std::string render_csv(const OutputRecord& record) {
  const auto& q = record.query;
  std::ostringstream os;
  os << "g,d,r,k";
  for (std::size_t i = 0; i < q.s.size(); ++i) os << ",s" << i + 1;
  os << ",pipeline,value,residual,exact\n";
  for (const auto& r : record.results) {
    os << q.g << ',' << q.d << ',' << q.r << ',' << q.k;
    for (int x : q.s) os << ',' << x;
    os << ',' << to_string(r.pipeline) << ',' << r.value << ',' << residual_string(r.residual)
       << ',' << (r.exact ? 1 : 0) << '\n';
  }
  return os.str();
}

TableReport make_table(int d, int k, double tol) {
  TableReport t;
  t.d = d;
  t.k = k;
  const bool floating = static_cast<long long>(k) * d <= kMaxFloatingKd;
  if (floating) t.pipelines = {Pipeline::vi, Pipeline::oracle};
  t.pipelines.push_back(Pipeline::closed);
  t.pipelines.push_back(Pipeline::flip);

  for (int n = 0; 2LL * n <= static_cast<long long>(k) * d; ++n) {
    const auto query = InvariantQuery::rank_two(1, d, k, n);
    TableRow row;
    row.n = n;
    row.m = query.s[0];
    std::optional<BigInt> first;
    for (auto p : t.pipelines) {
      PipelineResult r;
      switch (p) {
        case Pipeline::vi: r = vafa_intriligator(query, tol); break;
        case Pipeline::oracle: r = brute_force_r2(d, k, n, tol); break;
        case Pipeline::closed: r = closed_form_r2_g1(d, k, n); break;
        case Pipeline::flip: r = flip_pipeline_r2_g1(d, k, n); break;
        case Pipeline::projective: break;
      }
      if (!first) first = r.value;
      row.agree = row.agree && r.value == *first;
      row.values.push_back(r.value);
    }
    t.agree = t.agree && row.agree;
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string render_table_text(const TableReport& t) {
  std::vector<std::string> header{"n", "m"};
  for (auto p : t.pipelines) header.emplace_back(to_string(p));
  header.emplace_back("agree");

  std::vector<std::vector<std::string>> cells;
  for (const auto& row : t.rows) {
    std::vector<std::string> line{std::to_string(row.n), std::to_string(row.m)};
    for (const auto& v : row.values) line.push_back(v ? bigint_string(*v) : "-");
    line.emplace_back(row.agree ? "yes" : "NO");
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& line : cells) width[c] = std::max(width[c], line[c].size());
  }

  std::ostringstream os;
  os << "G(2," << t.k << ")  genus 1  degree " << t.d << "  <X1^m X2^n>, m + 2n = " << t.k * t.d
     << '\n';
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c)
      os << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << line[c];
    os << '\n';
  };
  emit(header);
  for (const auto& line : cells) emit(line);
  os << "--\n" << pipeline_legend(t.pipelines);
  return os.str();
}

std::string render_table_csv(const TableReport& t) {
  std::ostringstream os;
  os << "n,m,vi,oracle,closed,flip,agree\n";
  for (const auto& row : t.rows) {
    os << row.n << ',' << row.m;
    for (auto p : {Pipeline::vi, Pipeline::oracle, Pipeline::closed, Pipeline::flip}) {
      os << ',';
      auto it = std::find(t.pipelines.begin(), t.pipelines.end(), p);
      if (it != t.pipelines.end()) {
        const auto& v = row.values[it - t.pipelines.begin()];
        if (v) os << *v;
      }
    }
    os << ',' << (row.agree ? 1 : 0) << '\n';
  }
  return os.str();
}

nlohmann::json table_to_json(const TableReport& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json values = nlohmann::json::object();
    for (std::size_t i = 0; i < t.pipelines.size(); ++i)
      if (row.values[i]) values[std::string(to_string(t.pipelines[i]))] = bigint_string(*row.values[i]);
    rows.push_back({{"n", row.n}, {"m", row.m}, {"values", values}, {"agree", row.agree}});
  }
  return {{"g", 1}, {"r", 2}, {"k", t.k}, {"d", t.d}, {"rows", rows}, {"agree", t.agree}};
}

}  // namespace gwgr
