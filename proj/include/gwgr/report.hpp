#pragma once

// Output records for the command line: text, JSON and CSV renderings.

#include "gwgr/invariants.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gwgr {

struct OutputRecord {
  InvariantQuery query;
  std::vector<PipelineResult> results;
  bool agree = true;
  bool formal_value = false;
  double tolerance = kDefaultTolerance;
  int precision_budget = kMaxFloatingKd;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord make_record(const InvariantQuery& query, std::vector<PipelineResult> results,
                         double tolerance);

nlohmann::json to_json(const OutputRecord& record);
// Throws nlohmann::json::exception or std::invalid_argument on schema errors.
OutputRecord record_from_json(const nlohmann::json& j);

std::string render_text(const OutputRecord& record);
std::string render_csv(const OutputRecord& record);

// One line per pipeline describing what it computes.
std::string pipeline_legend(const std::vector<Pipeline>& pipelines);

// Rank-two genus-one table, one row per n = 0..floor(kd/2).
struct TableRow {
  int n = 0;
  long long m = 0;
  std::vector<std::optional<BigInt>> values;  // indexed like TableReport::pipelines
  bool agree = true;
};

struct TableReport {
  int d = 0, k = 0;
  std::vector<Pipeline> pipelines;
  std::vector<TableRow> rows;
  bool agree = true;
};

// Runs vi/oracle (when within the floating budget), closed and flip for every
// row. Disagreements are recorded rather than thrown.
TableReport make_table(int d, int k, double tol);
std::string render_table_text(const TableReport& t);
std::string render_table_csv(const TableReport& t);
nlohmann::json table_to_json(const TableReport& t);

}  // namespace gwgr
