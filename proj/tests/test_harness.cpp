#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charlab/harness.hpp"

using namespace charlab;

namespace {

std::vector<CatalogEntry> mini_catalog(std::initializer_list<const char*> exprs) {
  std::vector<std::string> list(exprs.begin(), exprs.end());
  return catalog_from_exprs(list);
}

} // namespace

TEST_CASE("kind names round-trip") {
  for (Kind k : all_kinds()) CHECK(kind_from_name(kind_name(k)) == k);
  CHECK_THROWS_AS(kind_from_name("THM_9_9"), ParseError);
}

TEST_CASE("counterexample instance: lhs 0, rhs 2") {
  auto catalog = mini_catalog({"D(8) x C(2)"});
  auto instances = mine_instances(catalog, Kind::COUNTEREXAMPLE_1, Limits{});
  REQUIRE(instances.size() == 1);
  auto result = check_instance(instances[0]);
  CHECK(result.verdict == "pass");
  CHECK(result.lhs == 0);
  CHECK(result.rhs == 2);
  CHECK(result.witnesses["conjugate_lhs"] == 0);
  CHECK(result.witnesses["conjugate_rhs"] == 2);
}

TEST_CASE("counterexample mining skips other groups") {
  auto catalog = mini_catalog({"Q(8)", "S(4)"});
  CHECK(mine_instances(catalog, Kind::COUNTEREXAMPLE_1, Limits{}).empty());
}

TEST_CASE("THM_1_3 mining over Q8 includes the faithful central instance") {
  auto catalog = mini_catalog({"Q(8)"});
  auto instances = mine_instances(catalog, Kind::THM_1_3, Limits{});
  bool found = false;
  for (const auto& inst : instances) {
    if (inst.sub("G").size() == 8 && inst.sub("N").size() == 2 &&
        inst.characters.at("theta").det_order == 2) {
      found = true;
      auto result = check_instance(inst);
      CHECK(result.verdict == "pass");
      CHECK(result.lhs == 1);
      CHECK(result.rhs == 1);
    }
  }
  CHECK(found);
}

TEST_CASE("class fusion: orbit/fused counts agree where the naive pairing fails") {
  // A = S3, G = A3, N = 1: A fuses the two 3-cycle classes of G/N and the
  // two nontrivial characters of G; the good-class identity holds for
  // orbits against fused classes (2 = 2) while the invariant-character
  // count (1) differs from the literal class count (3).
  auto catalog = mini_catalog({"S(3)"});
  bool found = false;
  for (const auto& inst : mine_instances(catalog, Kind::THM_1_3, Limits{})) {
    if (inst.sub("G").size() != 3 || inst.sub("N").size() != 1) continue;
    found = true;
    auto result = check_instance(inst);
    INFO(result.label, ": ", result.error);
    CHECK(result.verdict == "pass");
    CHECK(result.lhs == 2);
    CHECK(result.rhs == 2);
    CHECK(result.witnesses["invariant_character_count"] == 1);
    CHECK(result.witnesses["literal_good_class_count"] == 3);
    CHECK(result.witnesses["printed_form_holds"] == false);
  }
  CHECK(found);
}

TEST_CASE("all Q8 and S3 instances of the class-counting kinds pass") {
  auto catalog = mini_catalog({"Q(8)", "S(3)"});
  for (Kind kind : {Kind::GALLAGHER_1_2, Kind::THM_1_3, Kind::LEM_1_1}) {
    auto instances = mine_instances(catalog, kind, Limits{});
    CHECK(!instances.empty());
    for (const auto& inst : instances) {
      auto result = check_instance(inst);
      INFO(result.label, ": ", result.error);
      CHECK(result.verdict == "pass");
    }
  }
}

TEST_CASE("COR_1_4 mining finds non-invariant instances that pass") {
  auto catalog = mini_catalog({"D(8) x C(2)", "S(3)"});
  auto instances = mine_instances(catalog, Kind::COR_1_4, Limits{});
  CHECK(!instances.empty());
  for (const auto& inst : instances) {
    auto result = check_instance(inst);
    INFO(result.label, ": ", result.error);
    CHECK(result.verdict == "pass");
    CHECK(result.lhs >= 1);
  }
}

TEST_CASE("OW_2_1 over the wreath product") {
  auto catalog = mini_catalog({"C(3) wr C(2)"});
  auto instances = mine_instances(catalog, Kind::OW_2_1, Limits{});
  REQUIRE(!instances.empty());
  bool base_instance = false;
  for (const auto& inst : instances) {
    if (inst.sub("K").size() == 9 && inst.sub("Q").size() == 2 && inst.p == 2)
      base_instance = true;
    auto result = check_instance(inst);
    INFO(result.label, ": ", result.error);
    CHECK(result.verdict == "pass");
  }
  CHECK(base_instance);
}

TEST_CASE("THM_3_1 spot checks: SL(2,3) at p=3 and S4 over V4 at p=2") {
  {
    auto catalog = mini_catalog({"SL(2,3)"});
    auto instances = mine_instances(catalog, Kind::THM_3_1, Limits{});
    bool found = false;
    for (const auto& inst : instances) {
      if (inst.p != 3 || inst.sub("N").size() != 1) continue;
      found = true;
      auto result = check_instance(inst);
      INFO(result.label, ": ", result.error);
      CHECK(result.verdict == "pass");
      CHECK(result.lhs == 6);
      CHECK(result.rhs == 6);
    }
    CHECK(found);
  }
  {
    auto catalog = mini_catalog({"S(4)"});
    auto instances = mine_instances(catalog, Kind::THM_3_1, Limits{});
    bool found = false;
    for (const auto& inst : instances) {
      if (inst.p != 2 || inst.sub("N").size() != 4) continue;
      if (inst.characters.at("mu").degree != 1) continue;
      if (inst.characters.at("mu").det_order != 1) continue;
      found = true;
      auto result = check_instance(inst);
      INFO(result.label, ": ", result.error);
      CHECK(result.verdict == "pass");
      CHECK(result.lhs == 2);
      CHECK(result.rhs == 2);
    }
    CHECK(found);
  }
}

TEST_CASE("THM_2_4 over the wreath-times-C2 ambient with nontrivial Z") {
  auto catalog = mini_catalog({"(C(3) wr C(2)) x C(2)"});
  auto instances = mine_instances(catalog, Kind::THM_2_4, Limits{});
  REQUIRE(!instances.empty());
  bool rich = false;
  for (const auto& inst : instances) {
    auto result = check_instance(inst);
    INFO(result.label, ": ", result.error);
    CHECK(result.verdict == "pass");
    if (inst.sub("Z").size() > 1 && inst.characters.at("lambda").det_order > 1 &&
        inst.sub("C").size() > 1)
      rich = true;
  }
  CHECK(rich);
}

TEST_CASE("COR_2_2 instances pass") {
  auto catalog = mini_catalog({"C(3) wr C(2)", "S(4)"});
  auto instances = mine_instances(catalog, Kind::COR_2_2, Limits{});
  CHECK(!instances.empty());
  for (const auto& inst : instances) {
    auto result = check_instance(inst);
    INFO(result.label, ": ", result.error);
    CHECK(result.verdict == "pass");
  }
}

TEST_CASE("instance JSON round-trips") {
  auto catalog = mini_catalog({"Q(8)", "C(3) wr C(2)"});
  for (Kind kind : {Kind::THM_1_3, Kind::OW_2_1, Kind::THM_3_1}) {
    for (const auto& inst : mine_instances(catalog, kind, Limits{})) {
      nlohmann::json doc = instance_to_json(inst);
      McKayInstance loaded = instance_from_json(doc);
      CHECK(instance_to_json(loaded) == doc);
      CHECK(loaded.kind == inst.kind);
      CHECK(loaded.subgroups.size() == inst.subgroups.size());
      for (const auto& [key, s] : inst.subgroups)
        CHECK(loaded.sub(key).elements() == s.elements());
    }
  }
}

TEST_CASE("fingerprint drift is caught at load") {
  auto catalog = mini_catalog({"Q(8)"});
  auto instances = mine_instances(catalog, Kind::THM_1_3, Limits{});
  REQUIRE(!instances.empty());
  nlohmann::json doc = instance_to_json(instances[0]);
  doc["characters"]["theta"]["degree"] = 99;
  CHECK_THROWS_AS(instance_from_json(doc), HypothesisError);
}

TEST_CASE("suite runs are deterministic and aggregate correctly") {
  auto catalog = mini_catalog({"Q(8)", "S(3)"});
  SuiteOptions options;
  options.kinds = {Kind::GALLAGHER_1_2, Kind::THM_1_3, Kind::LEM_1_1};
  options.limits.per_ambient = 3;
  auto r1 = run_suite(catalog, options);
  auto r2 = run_suite(catalog, options);
  CHECK(r1.all_pass);
  CHECK(r1.total == r1.passed);
  CHECK(r1.document.dump(2) == r2.document.dump(2));
  CHECK(r1.document["totals"]["all"]["instances"].get<int>() == r1.total);
  // concurrent checking yields the identical report
  options.jobs = 3;
  auto r3 = run_suite(catalog, options);
  CHECK(r1.document.dump(2) == r3.document.dump(2));
}

TEST_CASE("empty catalog gives an empty passing report") {
  SuiteOptions options;
  auto report = run_suite({}, options);
  CHECK(report.total == 0);
  CHECK(report.all_pass);
  CHECK(report.document["instances"].empty());
}

TEST_CASE("sylow orders are the exact p-part across the catalog") {
  for (const auto& entry : default_catalog()) {
    long order = entry.group->order();
    for (long p = 2; p <= order; ++p) {
      if (!is_prime(p) || order % p != 0) continue;
      CHECK(sylow_subgroup(entry.group, p).size() == p_part(order, p));
    }
  }
}

TEST_CASE("bad-element witnesses are serialized in class-count reports") {
  auto catalog = mini_catalog({"Q(8)"});
  bool saw_witness = false;
  for (const auto& inst : mine_instances(catalog, Kind::THM_1_3, Limits{})) {
    auto result = check_instance(inst);
    REQUIRE(result.verdict == "pass");
    for (const auto& w : result.witnesses["bad_element_witnesses"]) {
      saw_witness = true;
      CHECK(w.contains("element"));
      CHECK(w.contains("extension_index"));
      CHECK(w.contains("x"));
    }
  }
  CHECK(saw_witness);  // the faithful central character has bad elements
}

TEST_CASE("hypothesis failures are reported as errors, not crashes") {
  auto catalog = mini_catalog({"Q(8)"});
  auto instances = mine_instances(catalog, Kind::THM_1_3, Limits{});
  REQUIRE(!instances.empty());
  McKayInstance broken = instances[0];
  broken.p = 0;
  // swap theta for a non-invariant character reference on a different group
  broken.kind = Kind::COR_1_4;  // theta is A-invariant: hypothesis must fail
  auto result = check_instance(broken);
  CHECK(result.verdict == "error");
  CHECK(result.error.find("hypothesis") != std::string::npos);
}
