#include "gwgr/report.hpp"

#include <doctest.h>

using namespace gwgr;

TEST_CASE("JSON schema and round trip") {
  const InvariantQuery q{1, 2, 2, 3, {6, 0}};
  const auto rec = make_record(q, invariant(q, {}, 1e-9), 1e-9);
  const auto j = to_json(rec);
  CHECK(j.at("query").at("s") == nlohmann::json::array({6, 0}));
  CHECK(j.at("results").at(0).at("value") == "3");
  CHECK(j.at("agree") == true);
  CHECK(j.at("formal_value") == false);
  CHECK(record_from_json(nlohmann::json::parse(j.dump())) == rec);
}

TEST_CASE("JSON keeps integers beyond 64 bits") {
  const auto q = InvariantQuery::rank_two(1, 40, 5, 0);
  const auto rec = make_record(q, invariant(q, {Pipeline::closed, Pipeline::flip}, 1e-9), 1e-9);
  const auto back = record_from_json(nlohmann::json::parse(to_json(rec).dump()));
  CHECK(back == rec);
  CHECK(back.results[0].value > BigInt(1) << 100);
}

TEST_CASE("record_from_json rejects bad input") {
  CHECK_THROWS(record_from_json(nlohmann::json::parse(R"({"query":{}})")));
  auto j = to_json(make_record(InvariantQuery{0, 0, 2, 4, {4, 0}}, {vafa_intriligator({0, 0, 2, 4, {4, 0}})}, 1e-9));
  j["results"][0]["pipeline"] = "bogus";
  CHECK_THROWS_AS(record_from_json(j), std::invalid_argument);
}

TEST_CASE("CSV layout") {
  const InvariantQuery q{2, 3, 1, 4, {9}};
  const auto csv = render_csv(make_record(q, invariant(q, {}, 1e-9), 1e-9));
  CHECK(csv.rfind("g,d,r,k,s1,pipeline,value,residual,exact\n", 0) == 0);
  CHECK(csv.find("2,3,1,4,9,vi,16,") != std::string::npos);
  CHECK(csv.find("2,3,1,4,9,projective,16,") != std::string::npos);
}

TEST_CASE("table rows") {
  const auto t = make_table(2, 3, 1e-9);
  CHECK(t.rows.size() == 4);
  CHECK(t.agree);
  CHECK(t.rows[0].values[0] == BigInt(3));
  CHECK(make_table(1, 3, 1e-9).rows.size() == 2);
  const auto csv = render_table_csv(t);
  CHECK(csv.rfind("n,m,vi,oracle,closed,flip,agree\n0,6,3,3,3,3,1\n", 0) == 0);

  // Beyond the floating budget the vi and oracle columns stay empty.
  const auto big = make_table(13, 4, 1e-9);
  CHECK(big.pipelines.size() == 2);
  CHECK(render_table_csv(big).find("\n0,52,,,") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
  const InvariantQuery q{1, 3, 2, 4, {8, 2}};
  const auto a = make_record(q, invariant(q, {}, 1e-9), 1e-9);
  const auto b = make_record(q, invariant(q, {}, 1e-9), 1e-9);
  CHECK(render_text(a) == render_text(b));
  CHECK(render_csv(a) == render_csv(b));
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(render_table_text(make_table(3, 4, 1e-9)) == render_table_text(make_table(3, 4, 1e-9)));
}

TEST_CASE("formal values are flagged") {
  const InvariantQuery q{2, 1, 1, 3, {1}};
  const auto rec = make_record(q, invariant(q, {}, 1e-9), 1e-9);
  CHECK(rec.formal_value);
  CHECK(render_text(rec).find("formal") != std::string::npos);
}
