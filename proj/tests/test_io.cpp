#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>

#include "json.hpp"
#include "rookpm/diagram.hpp"
#include "rookpm/report.hpp"

using namespace rookpm;

namespace {

VerifyReport sample_report() {
  VerifyReport r;
  r.preset = "R18-43";
  r.n = 2;
  r.kind = "monoid";
  r.sound = true;
  r.abstract_size = 52;
  r.concrete_size = 52;
  r.complete = true;
  r.classes_peak = 60;
  r.wall_time = 0.25;
  return r;
}

}  // namespace

TEST_CASE("diagram literals tolerate spacing and round-trip") {
  CHECK(to_literal(parse_literal("n=2;")) == "n=2;");
  CHECK(parse_literal("n=2;").num_blocks() == 0);
  CHECK(to_literal(parse_literal("  n=3 ;  2,1' ;3, 3'  ")) == "n=3; 2,1'; 3,3'");

  const RookPartition id2 = RookPartition::identity(2);
  CHECK(to_literal(id2) == "n=2; 1,1'; 2,2'");
  CHECK(parse_literal(to_literal(id2)) == id2);
}

TEST_CASE("diagram literal errors") {
  CHECK_THROWS_AS(parse_literal("nonsense"), ParseError);
  CHECK_THROWS_AS(parse_literal("n=2; 1,1; 1'"), OverlappingBlocks);
  CHECK_THROWS_AS(parse_literal("n=2; 3"), VertexOutOfRange);
  CHECK_THROWS_AS(parse_literal("n=2; ,"), ParseError);
}

TEST_CASE("verification reports serialize with a fixed key order") {
  const VerifyReport r = sample_report();
  CHECK(verify_report_json(r).dump() ==
        "{\"preset\":\"R18-43\",\"n\":2,\"kind\":\"monoid\",\"sound\":true,"
        "\"relation_failures\":[],\"abstract_size\":52,\"concrete_size\":52,"
        "\"complete\":true,\"classes_peak\":60,\"wall_time\":0.25}");

  VerifyReport bad = sample_report();
  bad.sound = false;
  bad.relation_failures = {"R21[1]"};
  nlohmann::json parsed = nlohmann::json::parse(verify_report_json(bad).dump());
  CHECK(parsed["sound"] == false);
  CHECK(parsed["relation_failures"].size() == 1);
  CHECK(parsed["relation_failures"][0] == "R21[1]");
}

TEST_CASE("verification reports have a stable text form") {
  CHECK(verify_report_text(sample_report()) ==
        "preset=R18-43 n=2 kind=monoid\n"
        "sound=true\n"
        "abstract_size=52 concrete_size=52 complete=true classes_peak=60\n");

  VerifyReport bad = sample_report();
  bad.sound = false;
  bad.relation_failures = {"R21[1]", "R22[1,2]"};
  CHECK(verify_report_text(bad) ==
        "preset=R18-43 n=2 kind=monoid\n"
        "sound=false failures: R21[1] R22[1,2]\n"
        "abstract_size=52 concrete_size=52 complete=true classes_peak=60\n");
}

TEST_CASE("live verification reports keep the same key order") {
  Presentation p = instantiate("R18-43", 2);
  std::string dump = verify_report_json(verify_presentation(p)).dump();
  CHECK(dump.rfind("{\"preset\":\"R18-43\",\"n\":2,\"kind\":\"monoid\",\"sound\":true,"
                   "\"relation_failures\":[],\"abstract_size\":52,\"concrete_size\":52,"
                   "\"complete\":true,",
                   0) == 0);
}

TEST_CASE("claim rows print one line each plus a summary") {
  ClaimReport rep;
  rep.rows.push_back({"two plus two is four", true, "checked"});
  rep.rows.push_back({"two plus two is five", false, ""});
  std::ostringstream os;
  print_claim_report(rep, os);
  CHECK(os.str() ==
        "[PASS] two plus two is four (checked)\n"
        "[FAIL] two plus two is five\n"
        "SOME CLAIMS FAILED\n");

  ClaimReport good;
  good.rows.push_back({"two plus two is four", true, ""});
  std::ostringstream os2;
  print_claim_report(good, os2);
  CHECK(os2.str() == "[PASS] two plus two is four\nall claims verified\n");
}
