// Check suites shared by the command-line tool and the acceptance runner.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "catsl11/decat.hpp"

namespace catsl11 {

struct SuiteCase {
  std::string name;
  bool pass = true;
  std::size_t checked = 0;   // number of individual comparisons behind this line
  std::size_t failures = 0;
  std::string witness;       // first failure, empty on success
  std::string picture;       // optional ASCII rendering attached to a failure
};

struct SuiteReport {
  std::string suite;
  nlohmann::json config = nlohmann::json::object();
  std::vector<SuiteCase> cases;
  std::vector<DecatReport> decat;  // filled by the decat suite

  bool pass() const;
  void add(const CheckResult& r);
  void add(const AxiomResult& r);
  void add(const std::string& name, bool ok, const std::string& witness = {}, std::size_t checked = 1);
  void append(const SuiteReport& other);  // cases prefixed with the other suite's name

  // Schema: {suite, config, cases[], summary{cases, failed, pass}}.
  nlohmann::json to_json() const;
  static SuiteReport from_json(const nlohmann::json& j);
  std::string to_text() const;
};

SuiteReport run_hopf_suite();
// verify_rep for every size 1..max_n and the two-site table.
SuiteReport run_rep_suite(int max_n);
// which ∈ {A, AoA, B, Rn, HRn, AxRn}; the rook-based ones use the given n.
SuiteReport run_algebra_suite(const std::string& which, int n);
// Formality maps R_n -> H(R_n) and A⊠R_n -> A⊗R_n at the given n.
SuiteReport run_formality_suite(int n);
// which ∈ {N, S, Cn}; n is used for Cn only.
SuiteReport run_bimodule_suite(const std::string& which, int n, bool compare_quotients = true);
SuiteReport run_decat_suite(int n);
// Elementary-diagram combinatorics up to max_n sites and the fixed three-site identities.
SuiteReport run_rook_suite(int max_n, unsigned seed = 20261016u);

// Hom-space and graded dimension tables of a named algebra.
nlohmann::json dims_table(const std::string& which, int n);
std::string dims_text(const nlohmann::json& table);

}  // namespace catsl11
