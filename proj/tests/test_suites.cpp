#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catsl11/suites.hpp"

using namespace catsl11;

TEST_CASE("empty report passes and summarizes to zero cases") {
  SuiteReport r;
  r.suite = "empty";
  CHECK(r.pass());
  const auto j = r.to_json();
  CHECK(j.at("summary").at("cases") == 0);
  CHECK(j.at("summary").at("failed") == 0);
  CHECK(j.at("summary").at("pass") == true);
  CHECK(j.at("cases").empty());
}

TEST_CASE("json round trip keeps witnesses and decat reports") {
  SuiteReport r;
  r.suite = "mixed";
  r.config = {{"n", 2}};
  r.add("good", true);
  r.add("bad", false, "x != y", 7);
  r.cases.back().picture = "|\n|";
  DecatReport d;
  d.theorem = "t";
  d.add("a", "1", "1", true);
  r.decat.push_back(d);

  const auto j = r.to_json();
  CHECK(j.at("summary").at("failed") == 1);
  CHECK_FALSE(r.pass());
  const SuiteReport back = SuiteReport::from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.to_json() == j);
  CHECK(back.cases[1].witness == "x != y");
  CHECK(back.cases[1].checked == 7);
}

TEST_CASE("text output flags failures") {
  SuiteReport r;
  r.suite = "s";
  r.add("bad", false, "witness here");
  const std::string text = r.to_text();
  CHECK(text.find("[FAIL] bad") != std::string::npos);
  CHECK(text.find("witness here") != std::string::npos);
  CHECK(text.find("0/1 passed") != std::string::npos);
}

TEST_CASE("append prefixes case names") {
  SuiteReport all, one;
  all.suite = "all";
  one.suite = "hopf";
  one.add("coassociativity", true);
  all.append(one);
  REQUIRE(all.cases.size() == 1);
  CHECK(all.cases[0].name == "hopf: coassociativity");
}

TEST_CASE("small suites pass") {
  CHECK(run_hopf_suite().pass());
  CHECK(run_rep_suite(3).pass());
  CHECK(run_algebra_suite("HRn", 2).pass());
  CHECK(run_formality_suite(2).pass());
  CHECK(run_bimodule_suite("N", 0).pass());
  CHECK(run_bimodule_suite("Cn", 2).pass());
  CHECK(run_decat_suite(2).pass());
  CHECK(run_rook_suite(4).pass());
}

TEST_CASE("dims table for two sites") {
  const auto t = dims_table("HRn", 2);
  CHECK(t.at("dim") == 13);
  std::size_t found = 0;
  for (const auto& h : t.at("hom"))
    if (h.at("src") == "|01⟩" && h.at("tgt") == "|10⟩") {
      CHECK(h.at("dim") == 4);
      ++found;
    }
  CHECK(found == 1);
  CHECK(dims_text(t).find("|11⟩ -> |11⟩: 4") != std::string::npos);
}
