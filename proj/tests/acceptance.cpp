// Acceptance runner: one PASS/FAIL line per criterion, with wall-clock time.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "catsl11/suites.hpp"

using namespace catsl11;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void absorb(const SuiteReport& r) {
    for (const auto& c : r.cases)
      if (!c.pass) {
        pass = false;
        if (detail.empty()) detail = r.suite + " " + r.config.dump() + ": " + c.name;
      }
  }
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (detail.empty()) detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_s > 0 && secs > budget_s)
    o.require(false, "took " + std::to_string(secs) + " s, budget " + std::to_string(budget_s) + " s");
  std::printf("[%s] %d %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
              o.detail.empty() ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
  failures += !o.pass;
}

}  // namespace

int main() {
  criterion(1, "Hopf superalgebra axioms", 1.0, [] {
    Outcome o;
    o.absorb(run_hopf_suite());
    return o;
  });

  criterion(2, "representations V_1^{⊗n}, n = 1..6, and the two-site table", 30.0, [] {
    Outcome o;
    const SuiteReport r = run_rep_suite(6);
    o.absorb(r);
    bool table = false;
    for (const auto& c : r.cases) table = table || c.name == "two-site table from the iterated coproduct";
    o.require(table, "two-site table not checked");
    return o;
  });

  criterion(3, "dg algebras A, A⊗A, B, R_n, H(R_n), A⊠R_n for n <= 4", 300.0, [] {
    Outcome o;
    for (const char* w : {"A", "AoA", "B"}) o.absorb(run_algebra_suite(w, 0));
    for (int n = 1; n <= 4; ++n)
      for (const char* w : {"Rn", "HRn", "AxRn"}) o.absorb(run_algebra_suite(w, n));
    o.absorb(run_algebra_suite("HRn", 2));  // includes the two-site Hom dimensions
    return o;
  });

  criterion(4, "formality maps for n <= 3", 0, [] {
    Outcome o;
    for (int n = 1; n <= 3; ++n) o.absorb(run_formality_suite(n));
    return o;
  });

  criterion(5, "bimodules N, S, C_n for n <= 3", 0, [] {
    Outcome o;
    o.absorb(run_bimodule_suite("N", 0));
    o.absorb(run_bimodule_suite("S", 0));
    for (int n = 1; n <= 3; ++n) o.absorb(run_bimodule_suite("Cn", n));
    return o;
  });

  criterion(6, "Grothendieck group: 16 products, 4 coproducts, 4·2^n action values for n <= 4", 0, [] {
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
      const SuiteReport r = run_decat_suite(n);
      o.absorb(r);
      for (const auto& d : r.decat) {
        if (d.theorem == "multiplication") o.require(d.cases.size() == 16, "product count");
        if (d.theorem == "comultiplication") o.require(d.cases.size() == 4, "coproduct count");
        if (d.theorem == "action")
          o.require(d.cases.size() == (4u << n), "action count at n=" + std::to_string(n));
      }
    }
    return o;
  });

  criterion(7, "rook diagrams: decorations, d^2 = 0 for n <= 5, crossing identities", 0, [] {
    Outcome o;
    const SuiteReport r = run_rook_suite(5);
    o.absorb(r);
    o.require(r.cases.size() >= 12, "fixed identities missing");
    return o;
  });

  std::printf("%d of 7 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
