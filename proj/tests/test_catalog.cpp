#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "strata/catalog/catalog.hpp"
#include "strata/catalog/claims.hpp"
#include "strata/catalog/report.hpp"

using strata::Error;
using namespace strata::catalog;

namespace {

const StratumRecord& by_name(const std::vector<StratumRecord>& records, const std::string& name) {
  auto it = std::find_if(records.begin(), records.end(), [&](const auto& r) { return r.name == name; });
  REQUIRE(it != records.end());
  return *it;
}

}  // namespace

TEST_CASE("catalog records") {
  auto records = catalog();
  CHECK(records.size() == 10);
  CHECK(std::count_if(records.begin(), records.end(),
                      [](const auto& r) { return r.kind == RecordKind::stratum; }) == 5);
  CHECK(std::count_if(records.begin(), records.end(),
                      [](const auto& r) { return r.kind == RecordKind::hyperelliptic_gerbe; }) == 3);

  const auto& r14 = by_name(records, "PH(1^4)");
  CHECK(r14.dim_H == 9);
  CHECK(r14.dim_PH == 8);
  CHECK(!r14.fundamental_group_ref);

  const auto& r31 = by_name(records, "PH(3,1)");
  CHECK(*r31.kodaira_type == "II (add)");
  CHECK(*r31.ambient_root_type == "E7");
  CHECK(r31.model.text() == "S(E7,C)");

  const auto& r4 = by_name(records, "PH(4)");
  CHECK(*r4.kodaira_type == "III (add)");
  CHECK(r4.model.text() == "S(E6,C)");

  CHECK(by_name(records, "PH(2,1^2)").model.text() == "S_(A6)(E7,Cx)");
  CHECK(by_name(records, "PH(2^2)").model.text() == "S_(A5)(E6,Cx)");
  CHECK(by_name(records, "PH(1^4)_hyp").model.text() == "S(A7,Cx)");
  CHECK(by_name(records, "PH(2,2)_hyp").model.text() == "S(A5,Cx)");
  CHECK(by_name(records, "PH(2,1^2)_hyp").model.dimension() == 6);
}

TEST_CASE("model dimensions") {
  CHECK(ModelDescriptor{ModelKind::additive, "E6", ""}.dimension() == 5);
  CHECK(ModelDescriptor{ModelKind::multiplicative, "E7", ""}.dimension() == 7);
  CHECK(ModelDescriptor{ModelKind::elliptic, "E7", "A7"}.dimension() == 8);
  // A wrong gerbe base would be caught by the dimension check.
  CHECK(ModelDescriptor{ModelKind::multiplicative, "E6", ""}.dimension() != 5);
}

TEST_CASE("dimension consistency") {
  auto records = catalog();
  auto checks = dimension_consistency(records);
  REQUIRE(checks.size() == records.size());
  for (const auto& c : checks) {
    INFO(c.name);
    CHECK(c.ok);
  }
  auto broken = records;
  broken[0].model = {ModelKind::multiplicative, "E7", "A7"};
  CHECK_FALSE(dimension_consistency(broken)[0].ok);
}

TEST_CASE("group references resolve") {
  std::set<std::string> refs;
  for (const auto& r : presentation_refs()) refs.insert(r);
  for (const auto& rec : catalog()) {
    if (!rec.fundamental_group_ref) continue;
    INFO(rec.name);
    CHECK(refs.count(*rec.fundamental_group_ref) == 1);
    CHECK_NOTHROW(presentation_for(*rec.fundamental_group_ref));
  }
  CHECK_THROWS_AS(presentation_for("artin/E8"), Error);
  CHECK_THROWS_AS(presentation_for("braid/9"), Error);

  auto e6 = finite_artin_presentation("E6");
  CHECK(e6.generators.size() == 6);
  CHECK(e6.count("braid") == 5);
  CHECK(e6.count("commutation") == 10);
  CHECK(e6.generators.front() == "t1");
  // Bourbaki E6: node 2 hangs off node 4.
  CHECK(e6.relators[0].word.str(e6.generators) == "t1*t2*t1^-1*t2^-1");
}

TEST_CASE("presentation JSON round trip") {
  for (const auto& ref : presentation_refs()) {
    INFO(ref);
    auto p = presentation_for(ref);
    auto text = p.to_json().dump();
    auto back = strata::artin::GroupPresentation::from_json(nlohmann::ordered_json::parse(text));
    CHECK(back == p);
    CHECK(back.to_json().dump() == text);
  }
}

TEST_CASE("claim registry") {
  const auto& reg = claim_registry();
  REQUIRE(reg.size() == 20);
  std::set<std::string> ids;
  for (std::size_t k = 0; k < reg.size(); ++k) {
    CHECK(reg[k].id == "C" + std::to_string(k + 1));
    ids.insert(reg[k].id);
  }
  CHECK(ids.size() == 20);

  auto run = run_claims({"C1"});
  REQUIRE(run.results.size() == 1);
  CHECK(run.results[0].pass);
  CHECK(run.results[0].observed == "56 classes, 28 pairs");

  CHECK_THROWS_WITH_AS(run_claims({"C21"}), "no such claim: C21", Error);
  CHECK_THROWS_AS(run_claims({"C1", "bogus"}), Error);
}

TEST_CASE("claims are independent of the subset they run in") {
  // Cheap claims only; each must report the same JSON alone or in a batch.
  std::vector<std::string> pool = {"C1", "C2", "C3", "C4", "C6", "C10", "C11", "C13", "C14", "C15", "C17", "C18",
                                   "C19"};
  auto full = claims_json(run_claims(pool));
  std::map<std::string, std::string> reference;
  for (const auto& c : full["claims"]) reference[c["id"].get<std::string>()] = c.dump();

  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<std::string> subset;
    std::sample(pool.begin(), pool.end(), std::back_inserter(subset), 1 + rng() % 4, rng);
    std::shuffle(subset.begin(), subset.end(), rng);
    auto run = claims_json(run_claims(subset));
    CHECK(run["summary"]["total"] == subset.size());
    for (const auto& c : run["claims"]) CHECK(c.dump() == reference[c["id"].get<std::string>()]);
  }
}

TEST_CASE("report formats") {
  Table t{{"a", "b"}, {{"x|y", "1,2"}, {"say \"hi\"", "z"}}};
  CHECK(t.markdown() == "| a | b |\n|---|---|\n| x\\|y | 1,2 |\n| say \"hi\" | z |\n");
  CHECK(t.csv() == "a,b\nx|y,\"1,2\"\n\"say \"\"hi\"\"\",z\n");
  CHECK(t.text() == "a         b\nx|y       1,2\nsay \"hi\"  z\n");
  auto j = nlohmann::ordered_json::parse(render_table(t, Format::json, "demo"));
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["rows"][0]["b"] == "1,2");

  CHECK(parse_format("markdown") == Format::markdown);
  CHECK(!parse_format("gap-style"));
}

TEST_CASE("catalog output") {
  auto j = catalog_json(catalog());
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["records"].size() == 10);
  CHECK(j["records"][0]["fundamental_group_ref"].is_null());
  auto md = render_catalog(catalog(), Format::markdown);
  CHECK(md.find("| PH(3,1) | stratum | II (add) | E7 |") != std::string::npos);
  CHECK(render_catalog(catalog(), Format::json) == render_catalog(catalog(), Format::json));
}

TEST_CASE("exceptional table") {
  auto j = nlohmann::ordered_json::parse(render_exceptional(Format::json));
  REQUIRE(j["classes"].size() == 56);
  std::size_t plus = 0;
  for (std::size_t i = 0; i < 56; ++i) {
    const auto& row = j["classes"][i];
    std::size_t partner = row["partner"];
    // Partner involution: same pair, opposite sign, coordinates summing to K.
    const auto& other = j["classes"][partner];
    CHECK(other["partner"] == i);
    CHECK(other["pair"] == row["pair"]);
    CHECK(other["sign"] != row["sign"]);
    std::vector<long> k = {3, -1, -1, -1, -1, -1, -1, -1};
    for (std::size_t c = 0; c < 8; ++c) CHECK(row["coords"][c].get<long>() + other["coords"][c].get<long>() == k[c]);
    CHECK(row["epsilon"] == (row["sign"] == "+" ? 1 : -1));
    plus += row["sign"] == "+";
  }
  CHECK(plus == 28);
  auto csv = render_exceptional(Format::csv);
  CHECK(csv.substr(0, csv.find('\n')) == "index,l,e1,e2,e3,e4,e5,e6,e7,class,sign,pair,partner,epsilon");
}
