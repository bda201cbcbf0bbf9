// Command-line front end for the check suites.
//
//   catsl11 check hopf
//   catsl11 check rep --n N
//   catsl11 check algebra --which A|AoA|B|Rn|HRn|AxRn --n N
//   catsl11 check bimodule --which N|S|Cn --n N
//   catsl11 check decat --n N
//   catsl11 check formality --n N
//   catsl11 check rook --n N [--seed S]
//   catsl11 dims --which ... --n N
//   catsl11 all --n N
//
// Exit status: 0 all checks pass, 1 some check fails, 2 bad arguments.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "catsl11/suites.hpp"

using namespace catsl11;

namespace {

constexpr int kExitPass = 0, kExitFail = 1, kExitBadArgs = 2;

struct Limits {
  int rep = 8;   // V_1^{⊗n}
  int rook = 5;  // everything built on R_n
};

Limits read_limits() {
  Limits l;
  if (const char* env = std::getenv("CAT_SL11_MAX_N")) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used != std::string(env).size() || v < 1) throw std::invalid_argument(env);
      l.rep = l.rook = v;
    } catch (const std::exception&) {
      std::cerr << "CAT_SL11_MAX_N must be a positive integer, got '" << env << "'\n";
      std::exit(kExitBadArgs);
    }
  }
  return l;
}

struct Output {
  std::string format = "text";
  std::string path;

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
  }
  void emit(const SuiteReport& r) const { emit(format == "json" ? r.to_json().dump(2) + "\n" : r.to_text()); }
};

class BadArgs : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_n(int n, int lo, int hi, const std::string& what) {
  if (n < lo || n > hi)
    throw BadArgs(what + ": n must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                  std::to_string(n));
}

bool uses_rook(const std::string& which) {
  return which == "Rn" || which == "HRn" || which == "AxRn" || which == "AoRn" || which == "AoHRn";
}

SuiteReport run_all(int n, unsigned seed, const Limits& lim) {
  require_n(n, 1, lim.rook, "all");
  SuiteReport all;
  all.suite = "all";
  all.config = {{"n", n}, {"seed", seed}};
  all.append(run_hopf_suite());
  all.append(run_rep_suite(n));
  for (const char* w : {"A", "AoA", "B"}) all.append(run_algebra_suite(w, n));
  for (int k = 1; k <= n; ++k)
    for (const char* w : {"Rn", "HRn", "AxRn"}) all.append(run_algebra_suite(w, k));
  for (int k = 1; k <= n; ++k) all.append(run_formality_suite(k));
  all.append(run_bimodule_suite("N", n));
  all.append(run_bimodule_suite("S", n));
  for (int k = 1; k <= n; ++k) all.append(run_bimodule_suite("Cn", k));
  const SuiteReport decat = run_decat_suite(n);
  all.append(decat);
  all.append(run_rook_suite(n, seed));
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  const Limits lim = read_limits();
  CLI::App app{"Checks for the categorified upper-triangular sl(1|1) and its representations"};
  app.require_subcommand(1);

  Output out;
  int n = 3;
  std::string which;
  unsigned seed = 20261016u;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", out.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output,-o", out.path, "write the report to a file");
    sub->add_option("--n", n, "number of tensor factors (default 3)");
  };

  CLI::App* check = app.add_subcommand("check", "run one check suite");
  check->require_subcommand(1);
  CLI::App* hopf = check->add_subcommand("hopf", "Hopf superalgebra axioms");
  CLI::App* rep = check->add_subcommand("rep", "representations V_1^{⊗k} for k = 1..n");
  CLI::App* alg = check->add_subcommand("algebra", "dg algebra axioms");
  alg->add_option("--which", which, "A, AoA, B, Rn, HRn or AxRn")
      ->required()
      ->check(CLI::IsMember({"A", "AoA", "B", "Rn", "HRn", "AxRn", "AoRn", "AoHRn"}));
  CLI::App* bim = check->add_subcommand("bimodule", "dg bimodule axioms");
  bim->add_option("--which", which, "N, S or Cn")->required()->check(CLI::IsMember({"N", "S", "Cn"}));
  CLI::App* decat = check->add_subcommand("decat", "Grothendieck group comparisons");
  CLI::App* formal = check->add_subcommand("formality", "quasi-isomorphisms at the given n");
  CLI::App* rook = check->add_subcommand("rook", "elementary diagram combinatorics up to n sites");
  rook->add_option("--seed", seed, "seed for random rewrite sequences");
  for (CLI::App* s : {hopf, rep, alg, bim, decat, formal, rook}) common(s);

  CLI::App* dims = app.add_subcommand("dims", "Hom-space and graded dimensions");
  dims->add_option("--which", which, "A, AoA, B, Rn, HRn or AxRn")
      ->required()
      ->check(CLI::IsMember({"A", "AoA", "B", "Rn", "HRn", "AxRn", "AoRn", "AoHRn"}));
  common(dims);

  CLI::App* all = app.add_subcommand("all", "every suite at sizes up to n");
  all->add_option("--seed", seed, "seed for random rewrite sequences");
  common(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitBadArgs;
  }

  try {
    std::optional<SuiteReport> report;
    if (*hopf) {
      report = run_hopf_suite();
    } else if (*rep) {
      require_n(n, 1, lim.rep, "rep");
      report = run_rep_suite(n);
    } else if (*alg) {
      if (uses_rook(which)) require_n(n, 1, lim.rook, "algebra " + which);
      report = run_algebra_suite(which, n);
    } else if (*bim) {
      if (which == "Cn") require_n(n, 1, lim.rook, "bimodule Cn");
      report = run_bimodule_suite(which, n);
    } else if (*decat) {
      require_n(n, 1, lim.rook, "decat");
      report = run_decat_suite(n);
    } else if (*formal) {
      require_n(n, 1, lim.rook, "formality");
      report = run_formality_suite(n);
    } else if (*rook) {
      require_n(n, 1, lim.rook, "rook");
      report = run_rook_suite(n, seed);
    } else if (*dims) {
      if (uses_rook(which)) require_n(n, 1, lim.rook, "dims " + which);
      const nlohmann::json table = dims_table(which, n);
      out.emit(out.format == "json" ? table.dump(2) + "\n" : dims_text(table));
      return kExitPass;
    } else if (*all) {
      report = run_all(n, seed, lim);
    }
    if (!report) return kExitBadArgs;
    out.emit(*report);
    return report->pass() ? kExitPass : kExitFail;
  } catch (const BadArgs& e) {
    std::cerr << e.what() << "\n";
    return kExitBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
