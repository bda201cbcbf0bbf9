#include "catsl11/suites.hpp"

#include <sstream>
#include <stdexcept>

#include "catsl11/zoo.hpp"

namespace catsl11 {

bool SuiteReport::pass() const {
  for (const auto& c : cases)
    if (!c.pass) return false;
  return true;
}

void SuiteReport::add(const CheckResult& r) {
  cases.push_back({r.name, r.pass, r.cases, r.failures, r.witness, {}});
}

void SuiteReport::add(const AxiomResult& r) {
  cases.push_back({r.axiom, r.pass, static_cast<std::size_t>(r.cases), r.pass ? 0u : 1u, r.counterexample, {}});
}

void SuiteReport::add(const std::string& name, bool ok, const std::string& witness, std::size_t checked) {
  cases.push_back({name, ok, checked, ok ? 0u : 1u, ok ? std::string() : witness, {}});
}

void SuiteReport::append(const SuiteReport& other) {
  for (auto c : other.cases) {
    c.name = other.suite + ": " + c.name;
    cases.push_back(std::move(c));
  }
  decat.insert(decat.end(), other.decat.begin(), other.decat.end());
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["config"] = config;
  j["cases"] = nlohmann::json::array();
  std::size_t failed = 0;
  for (const auto& c : cases) {
    nlohmann::json e{{"name", c.name}, {"pass", c.pass}, {"checked", c.checked}, {"failures", c.failures}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    if (!c.picture.empty()) e["picture"] = c.picture;
    j["cases"].push_back(std::move(e));
    failed += !c.pass;
  }
  if (!decat.empty()) {
    j["decat"] = nlohmann::json::array();
    for (const auto& r : decat) j["decat"].push_back(r.to_json());
  }
  j["summary"] = {{"cases", cases.size()}, {"failed", failed}, {"pass", failed == 0}};
  return j;
}

SuiteReport SuiteReport::from_json(const nlohmann::json& j) {
  SuiteReport r;
  r.suite = j.at("suite").get<std::string>();
  r.config = j.at("config");
  for (const auto& e : j.at("cases")) {
    SuiteCase c;
    c.name = e.at("name").get<std::string>();
    c.pass = e.at("pass").get<bool>();
    c.checked = e.at("checked").get<std::size_t>();
    c.failures = e.at("failures").get<std::size_t>();
    c.witness = e.value("witness", std::string());
    c.picture = e.value("picture", std::string());
    r.cases.push_back(std::move(c));
  }
  if (j.contains("decat"))
    for (const auto& d : j.at("decat")) r.decat.push_back(DecatReport::from_json(d));
  return r;
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite;
  if (!config.empty()) out << " " << config.dump();
  out << "\n";
  std::size_t failed = 0;
  for (const auto& c : cases) {
    out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << " (" << c.checked << " checked";
    if (c.failures) out << ", " << c.failures << " failed";
    out << ")\n";
    if (!c.pass && !c.witness.empty()) out << "         " << c.witness << "\n";
    if (!c.pass && !c.picture.empty()) {
      std::istringstream lines(c.picture);
      for (std::string line; std::getline(lines, line);) out << "         " << line << "\n";
    }
    failed += !c.pass;
  }
  for (const auto& r : decat) {
    std::size_t bad = 0;
    for (const auto& c : r.cases) bad += !c.pass;
    out << "  " << r.theorem << ": " << r.cases.size() - bad << "/" << r.cases.size() << " cases agree\n";
    for (const auto& c : r.cases)
      if (!c.pass) out << "         " << c.input << ": expected " << c.expected << ", computed " << c.computed << "\n";
  }
  out << "summary: " << cases.size() - failed << "/" << cases.size() << " passed" << (failed ? " (FAIL)" : " (PASS)")
      << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------

SuiteReport run_hopf_suite() {
  SuiteReport r;
  r.suite = "hopf";
  for (const auto& a : check_hopf_axioms()) r.add(a);
  for (const auto& a : check_ut_structure()) r.add(a);
  return r;
}

namespace {

// The action on V_1 ⊗ V_1 written out by hand.
std::vector<std::tuple<UtBasis, BasisState, VnElt>> two_site_table() {
  auto s = [](const char* x) { return BasisState::parse(x); };
  auto v = [&](const char* x, const LaurentPoly& c) { return VnElt::basis(s(x), c); };
  const LaurentPoly one = poly_t(0), t = poly_t(1), one_minus_t = poly_t(0) - poly_t(1);
  const VnElt zero(2);
  return {
      {UtBasis::E, s("00"), zero},
      {UtBasis::F, s("00"), v("01", one) + v("10", t)},
      {UtBasis::E, s("01"), v("00", one_minus_t)},
      {UtBasis::F, s("01"), v("11", t)},
      {UtBasis::E, s("10"), v("00", one_minus_t)},
      {UtBasis::F, s("10"), v("11", -one)},
      {UtBasis::E, s("11"), v("01", one_minus_t) - v("10", one_minus_t)},
      {UtBasis::F, s("11"), zero},
  };
}

}  // namespace

SuiteReport run_rep_suite(int max_n) {
  SuiteReport r;
  r.suite = "rep";
  r.config["n"] = max_n;
  for (int n = 1; n <= max_n; ++n)
    for (auto a : verify_rep(n)) {
      a.axiom = "n=" + std::to_string(n) + ": " + a.axiom;
      r.add(a);
    }
  if (max_n >= 2) {
    std::size_t checked = 0;
    std::string witness;
    for (const auto& [g, x, want] : two_site_table()) {
      ++checked;
      const VnElt got = act_by_comultiplication(g, x);
      if (!(got == want) && witness.empty())
        witness = std::string(basis_name(g)) + x.to_string() + " = " + got.to_string() + ", table has " + want.to_string();
    }
    for (std::uint32_t m = 0; m < 4; ++m) {
      ++checked;
      const BasisState x{2, m};
      if (!(act_T(VnElt::basis(x)) == VnElt::basis(x, poly_t(2))) && witness.empty()) witness = "T" + x.to_string();
    }
    r.add("two-site table from the iterated coproduct", witness.empty(), witness, checked);
  }
  return r;
}

SuiteReport run_algebra_suite(const std::string& which, int n) {
  SuiteReport r;
  r.suite = "algebra";
  r.config = {{"which", which}, {"n", n}};
  ZooEntry z = build_named(which, n);
  for (auto c : check_algebra(z.alg())) {
    c.name = z.alg().name() + ": " + c.name;
    r.add(c);
  }
  r.add(z.alg().name() + ": dimension " + std::to_string(z.alg().dim()), z.alg().stats().finite, z.alg().stats().message);
  if (which == "HRn" && n == 2) {
    auto hom = [&](const char* a, const char* b) {
      return z.alg().hom_dim(static_cast<int>(BasisState::parse(a).mask), static_cast<int>(BasisState::parse(b).mask));
    };
    const std::vector<std::tuple<const char*, const char*, std::size_t>> expected = {
        {"01", "10", 4}, {"11", "11", 4}, {"10", "10", 2}, {"10", "01", 0}, {"00", "00", 1}, {"01", "01", 2}};
    std::string witness;
    for (const auto& [a, b, want] : expected) {
      const std::size_t got = hom(a, b);
      if (got != want && witness.empty())
        witness = std::string("Hom(|") + a + "⟩,|" + b + "⟩) = " + std::to_string(got) + ", want " + std::to_string(want);
    }
    r.add("two-site Hom dimensions", witness.empty(), witness, expected.size());
  }
  return r;
}

SuiteReport run_formality_suite(int n) {
  SuiteReport r;
  r.suite = "formality";
  r.config["n"] = n;
  RookAlgebra R = build_rook_algebra(n, false), H = build_rook_algebra(n, true);
  R.alg.enumerate();
  H.alg.enumerate();
  for (auto c : check_quasi_isomorphism(collapse_decorations(R, H))) {
    c.name = "R_" + std::to_string(n) + " -> H(R_" + std::to_string(n) + "): " + c.name;
    r.add(c);
  }
  ARAlgebra box = build_A_box(R), tensor = build_A_tensor(R);
  box.alg.enumerate();
  tensor.alg.enumerate();
  for (auto c : check_quasi_isomorphism(forget_special(box, tensor))) {
    c.name = "A⊠R_" + std::to_string(n) + " -> A⊗R_" + std::to_string(n) + ": " + c.name;
    r.add(c);
  }
  return r;
}

SuiteReport run_bimodule_suite(const std::string& which, int n, bool compare_quotients) {
  SuiteReport r;
  r.suite = "bimodule";
  r.config = {{"which", which}, {"n", n}};
  auto bundle = build_named_bimodule(which, n);
  const DGBimodule& b = bundle.bimodule();
  for (auto c : verify_bimodule(b)) {
    c.name = b.name() + ": " + c.name;
    r.add(c);
  }
  if (compare_quotients) {
    std::string witness;
    std::size_t checked = 0;
    for (int v = 0; v < b.right().num_vertices(); ++v) {
      ++checked;
      if (block_dims(b, v) != tensor_quotient_dims(b, v) && witness.empty())
        witness = "right vertex " + b.right().vertex_name(v);
    }
    r.add(b.name() + ": generic tensor quotient equals block lookup", witness.empty(), witness, checked);
  }
  return r;
}

SuiteReport run_decat_suite(int n) {
  SuiteReport r;
  r.suite = "decat";
  r.config["n"] = n;
  r.decat = check_decat(n);
  for (const auto& d : r.decat) {
    std::string witness;
    std::size_t failures = 0;
    for (const auto& c : d.cases)
      if (!c.pass) {
        if (witness.empty()) witness = c.input + ": expected " + c.expected + ", computed " + c.computed;
        ++failures;
      }
    r.cases.push_back({d.theorem, failures == 0, d.cases.size(), failures, witness, {}});
  }
  return r;
}

SuiteReport run_rook_suite(int max_n, unsigned seed) {
  SuiteReport r;
  r.suite = "rook";
  r.config = {{"n", max_n}, {"seed", seed}};
  for (int n = 1; n <= max_n; ++n) {
    auto c = check_decoration_conservation(n, 3);
    c.name = "n=" + std::to_string(n) + ": " + c.name;
    r.add(c);
    auto d = check_rook_d_squared(build_rook_algebra(n, false), 3);
    d.name = "n=" + std::to_string(n) + ": " + d.name;
    r.add(d);
  }
  if (max_n >= 3) {
    // One strand crossing another: d r0 = ρ·r1·r2 + r1·r2·ρ in R_3.
    RookAlgebra R = build_rook_algebra(3, false);
    R.alg.enumerate();
    const BasisState x = BasisState::from_positions(3, {2, 3});
    const auto r0 = ElementaryDiagram::make(x, 2, 1);
    const auto r1 = ElementaryDiagram::make(x, 1, 1);
    const auto r2 = ElementaryDiagram::make(r1.y, 2, 2);
    const Word a = R.word({x, {LoopGen{x, 1}, r1, r2}});
    const Word b = R.word({x, {r1, r2, LoopGen{r0.y, 2}}});
    const Elt want = elt_add(R.alg.word_elt(static_cast<int>(x.mask), a), R.alg.word_elt(static_cast<int>(x.mask), b));
    const Elt got = R.alg.d(R.alg.gen_elt(R.arrow(x, 2, 1)));
    r.add("crossing resolution d r0 = r1 r2 r3 + r2 r3 r4", got == want && want.size() == 2,
          "d r0 = " + R.alg.elt_to_string(got) + ", want " + R.alg.elt_to_string(want));
    if (!r.cases.back().pass) r.cases.back().picture = render_ascii(r0);
  }
  if (max_n >= 4) {
    // A strand crossing one strand and one marking is not the composite of two moves.
    RookAlgebra R = build_rook_algebra(4, false);
    const BasisState x = BasisState::from_positions(4, {3, 4});
    const auto direct = ElementaryDiagram::make(x, 2, 1);
    const auto first = ElementaryDiagram::make(x, 2, 2);
    const auto second = ElementaryDiagram::make(first.y, 1, 1);
    const auto nf_direct = R.alg.normal_form(R.word({x, {direct}}));
    const auto nf_pair = R.alg.normal_form(R.word({x, {first, second}}));
    const bool ok = nf_direct && nf_pair && *nf_direct != *nf_pair;
    r.add("a crossing with a marking differs from the composite of its two moves", ok,
          direct.label() + " equals " + first.label() + "·" + second.label());
    if (!ok) r.cases.back().picture = render_ascii(direct);

    auto c = check_normal_form_confluence(R, 2000, seed);
    c.name = "n=4: " + c.name;
    r.add(c);
  }
  return r;
}

nlohmann::json dims_table(const std::string& which, int n) {
  ZooEntry z = build_named(which, n);
  const DGAlgebra& a = z.alg();
  nlohmann::json j;
  j["algebra"] = a.name();
  j["n"] = n;
  j["dim"] = a.dim();
  j["hom"] = nlohmann::json::array();
  for (int s = 0; s < a.num_vertices(); ++s)
    for (int t = 0; t < a.num_vertices(); ++t) {
      const std::size_t d = a.hom_dim(s, t);
      if (d > 0 || a.num_vertices() <= 16) j["hom"].push_back({{"src", a.vertex_name(s)}, {"tgt", a.vertex_name(t)}, {"dim", d}});
    }
  j["graded"] = nlohmann::json::array();
  for (const auto& [deg, d] : graded_dims(a)) j["graded"].push_back({{"degree", deg.to_string()}, {"dim", d}});
  return j;
}

std::string dims_text(const nlohmann::json& table) {
  std::ostringstream out;
  out << table.at("algebra").get<std::string>() << ": dimension " << table.at("dim").get<std::size_t>() << "\n";
  out << "Hom(src, tgt):\n";
  for (const auto& h : table.at("hom"))
    out << "  " << h.at("src").get<std::string>() << " -> " << h.at("tgt").get<std::string>() << ": "
        << h.at("dim").get<std::size_t>() << "\n";
  out << "graded dimensions (h;t1,t2):\n";
  for (const auto& g : table.at("graded"))
    out << "  " << g.at("degree").get<std::string>() << ": " << g.at("dim").get<std::size_t>() << "\n";
  return out.str();
}

}  // namespace catsl11
