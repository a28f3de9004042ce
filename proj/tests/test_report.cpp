#include "doctest.h"
#include "support.hpp"
#include "torslice/report.hpp"

using namespace torslice;

TEST_SUITE("report") {

TEST_CASE("reduce report of the 34-letter example") {
  Report r = reduce_report(rgb_example_word(), "example");
  auto j = to_json(r);
  CHECK(j["command"] == "reduce");
  CHECK(j["normal_form"]["syllables"] == "S(4,4)");
  CHECK(j["normal_form"]["a"] == 0);
  CHECK(j["canonical_pair"] == nlohmann::ordered_json::array({"S(-4,-4)", "S(4,4)"}));
  CHECK(j["z2"]["raw"] == nlohmann::ordered_json::array({4, 4}));
  CHECK(j["z2"]["basis"] == nlohmann::ordered_json::array({2, 2}));
  CHECK(j["trivial"] == false);
  CHECK(j["verdict"] == "NotSlice");
  CHECK_FALSE(j.contains("ref"));
  CHECK(render_machine(j) == render_machine(to_json(reduce_report(rgb_example_word(), "example"))));
  CHECK(render_machine(j).back() == '\n');
}

TEST_CASE("invariant report of the trefoil") {
  GaussDiagram d = parse_gauss_code("O1+U2+O3+U1+O2+U3+");
  auto j = to_json(invariant_report(d, "O1+U2+O3+U1+O2+U3+", 2));
  CHECK(j["ref"] == 2);
  CHECK(j["word"] == "a a a a a a");
  CHECK(j["normal_form"]["syllables"] == "");
  CHECK(j["canonical_pair"] == nlohmann::ordered_json::array({"", ""}));
  CHECK(j["trivial"] == true);
  CHECK(j["verdict"] == "Inconclusive");
}

TEST_CASE("words with an odd number of a have no canonical pair") {
  Report r = reduce_report(parse_word("a b"), "a b");
  CHECK_FALSE(r.pair);
  CHECK_FALSE(r.z2);
  auto j = to_json(r);
  CHECK(j["canonical_pair"].is_null());
  CHECK(j["z2"].is_null());
  CHECK(j["normal_form"]["a"] == 1);
  CHECK(j["verdict"] == "NotSlice");
  CHECK(render_human(r).find("n/a") != std::string::npos);
}

TEST_CASE("outside the Z+Z subgroup") {
  auto j = to_json(reduce_report(parse_word("b b"), "b b"));
  CHECK(j["z2"].is_null());
  // the class of b^2 also holds theta(b^2) = (b^-1 t^-1)^2, and S sorts before B
  CHECK(j["canonical_pair"] ==
        nlohmann::ordered_json::array({"S(0,-1).B(-1).S(0,-1).B(-1)", "S(0,1).B(1).S(0,1).B(1)"}));
}

TEST_CASE("human rendering") {
  CHECK(render_human(InvariantValue{}) == "{1, 1}");
  Report r = reduce_report(rgb_example_word(), "x");
  std::string h = render_human(r);
  CHECK(h.find("verdict:     NotSlice") != std::string::npos);
  CHECK(h.find("(B'B^-1)^2 (b'b^-1)^2") != std::string::npos);
}

TEST_CASE("fuzz and selfcheck documents") {
  FuzzOptions o;
  o.trials = 5;
  auto trials = run_fuzz(o);
  auto f = fuzz_json(trials, o);
  CHECK(f["trials"].size() == 5);
  CHECK(f["failed"] == 0);
  CHECK(f["seed"] == 1);
  for (const auto& t : f["trials"]) {
    CHECK(t.contains("initial"));
    CHECK(t.contains("moves"));
    CHECK(t["initial_pair"] == t["final_pair"]);
  }
  auto s = selfcheck_json(run_selfcheck());
  CHECK(s["pass"] == true);
  CHECK(s["checks"].size() == 10);
}

}
