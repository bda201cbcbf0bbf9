#include "catsl11/decat.hpp"

#include <stdexcept>

namespace catsl11 {

bool DecatReport::pass() const {
  for (const auto& c : cases)
    if (!c.pass) return false;
  return true;
}

void DecatReport::add(std::string input, std::string expected, std::string computed, bool ok) {
  cases.push_back({std::move(input), std::move(expected), std::move(computed), ok});
}

nlohmann::json DecatReport::to_json() const {
  nlohmann::json j;
  j["theorem"] = theorem;
  j["n"] = n;
  j["cases"] = nlohmann::json::array();
  for (const auto& c : cases)
    j["cases"].push_back({{"input", c.input}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
  return j;
}

DecatReport DecatReport::from_json(const nlohmann::json& j) {
  DecatReport r;
  r.theorem = j.at("theorem").get<std::string>();
  r.n = j.at("n").get<int>();
  for (const auto& c : j.at("cases"))
    r.add(c.at("input").get<std::string>(), c.at("expected").get<std::string>(), c.at("computed").get<std::string>(),
          c.at("pass").get<bool>());
  return r;
}

UtElt k0_as_ut(const K0Class& c) {
  UtElt u;
  for (const auto& [v, p] : c.coords) {
    if (v < 0 || v >= 4) throw std::invalid_argument("k0_as_ut: vertex out of range");
    for (const auto& [e, k] : p.terms())
      if (e[1] != 0) throw std::invalid_argument("k0_as_ut: second t-degree must vanish");
    u.coords[static_cast<std::size_t>(v)] = u.coords[static_cast<std::size_t>(v)] + laurent_substitute(p, 1, 0, "T");
  }
  return u;
}

UtTensorElt k0_as_ut2(const K0Class& c) {
  UtTensorElt u;
  for (const auto& [v, p] : c.coords) {
    if (v < 0 || v >= 16) throw std::invalid_argument("k0_as_ut2: vertex out of range");
    auto& slot = u.coords[static_cast<std::size_t>(v)];
    slot = slot + p;
  }
  return u;
}

VnElt k0_as_vn(const K0Class& c, int n) {
  VnElt out(n);
  for (const auto& [v, p] : c.coords) {
    if (v < 0 || v >= (1 << n)) throw std::invalid_argument("k0_as_vn: vertex out of range");
    for (const auto& [e, k] : p.terms())
      if (e[1] != 0) throw std::invalid_argument("k0_as_vn: second t-degree must vanish");
    out = out + VnElt::basis(BasisState{n, static_cast<std::uint32_t>(v)}, laurent_substitute(p, 1, 0, "t"));
  }
  return out;
}

K0Class k0_of_tensor(const DGBimodule& b, const DGModule& m) {
  K0Class total;
  for (int s = 0; s < m.size(); ++s) {
    const auto& p = m.summand(s);
    total = total + k0_class(tensor_with(b, p.vertex, p.shift()));
  }
  return total;
}

namespace {

DGModule projective(const DGAlgebra& alg, int vertex, Shift s = {}) {
  DGModule m(&alg);
  m.add_summand(vertex, s, "P");
  return m;
}

std::string shift_name(int a) {
  if (a == 0) return "";
  return "{" + std::to_string(a) + "}";
}

LaurentPoly2 T1T2(int a, int b) { return LaurentPoly2::monomial({a, b}); }

}  // namespace

DecatReport check_thm_multiplication() {
  DecatReport r;
  r.theorem = "multiplication";
  auto bundle = build_named_bimodule("N", 0);
  const DGAlgebra& A = *bundle.left_plain;
  const DGAlgebra& AoA = *bundle.right_plain;
  for (UtBasis a : kUtBasis)
    for (UtBasis b : kUtBasis) {
      const DGModule m = chi(projective(A, static_cast<int>(a)), projective(A, static_cast<int>(b)), AoA);
      const UtElt computed = k0_as_ut(k0_of_tensor(bundle.bimodule(), m));
      const UtElt expected = ut_mul_basis(a, b);
      r.add(std::string(basis_name(a)) + "·" + basis_name(b), expected.to_string(), computed.to_string(),
            computed == expected);
    }
  return r;
}

DecatReport check_multiplication_units_and_shifts() {
  DecatReport r;
  r.theorem = "multiplication units and shifts";
  auto bundle = build_named_bimodule("N", 0);
  const DGBimodule& N = bundle.bimodule();
  const DGAlgebra& A = *bundle.left_plain;
  const DGAlgebra& AoA = *bundle.right_plain;
  const int I = static_cast<int>(UtBasis::I);
  for (UtBasis g : kUtBasis) {
    const int v = static_cast<int>(g);
    const UtElt expected = UtElt::basis(g);
    const UtElt left = k0_as_ut(k0_class(tensor_with(N, 4 * v + I)));
    const UtElt right = k0_as_ut(k0_class(tensor_with(N, 4 * I + v)));
    r.add(std::string("N(") + basis_name(g) + ",I)", expected.to_string(), left.to_string(), left == expected);
    r.add(std::string("N(I,") + basis_name(g) + ")", expected.to_string(), right.to_string(), right == expected);
  }
  for (UtBasis a : kUtBasis)
    for (UtBasis b : kUtBasis)
      for (auto [sa, sb] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, -2}}) {
        const DGModule m = chi(projective(A, static_cast<int>(a), {0, sa, 0}),
                               projective(A, static_cast<int>(b), {0, sb, 0}), AoA);
        const UtElt computed = k0_as_ut(k0_of_tensor(N, m));
        const UtElt expected = ut_mul_basis(a, b).scaled(poly_T(sa + sb));
        r.add(std::string(basis_name(a)) + shift_name(sa) + "·" + basis_name(b) + shift_name(sb), expected.to_string(),
              computed.to_string(), computed == expected);
      }
  return r;
}

namespace {

// [S ⊗ P(Γ){shift}] against T1^shift T2^shift Δ(Γ).
DecatReport comultiplication_report(const std::string& title, int shift) {
  DecatReport r;
  r.theorem = title;
  auto bundle = build_named_bimodule("S", 0);
  const DGAlgebra& A = *bundle.right_plain;
  for (UtBasis g : kUtBasis) {
    const UtTensorElt computed =
        k0_as_ut2(k0_of_tensor(bundle.bimodule(), projective(A, static_cast<int>(g), {0, shift, 0})));
    UtTensorElt expected = ut_comul(UtElt::basis(g));
    for (auto& c : expected.coords) c = c * T1T2(shift, shift);
    const std::string input = shift == 0 ? basis_name(g) : "T^" + std::to_string(shift) + "·" + basis_name(g);
    r.add("Δ(" + input + ")", expected.to_string(), computed.to_string(), computed == expected);
  }
  return r;
}

}  // namespace

DecatReport check_thm_comultiplication() { return comultiplication_report("comultiplication", 0); }

DecatReport check_comultiplication_shifts() {
  DecatReport r = comultiplication_report("comultiplication shifts", 1);
  const DecatReport neg = comultiplication_report("comultiplication shifts", -1);
  r.cases.insert(r.cases.end(), neg.cases.begin(), neg.cases.end());
  return r;
}

namespace {

struct ActionSetup {
  BimoduleBundle bundle;
  ARAlgebra product;  // A⊗H(R_n), the target of χ_n
  DGAlgebra A;
  explicit ActionSetup(int n)
      : bundle(build_named_bimodule("Cn", n, false)), product(build_A_tensor(*bundle.hrn)), A(build_A()) {
    A.enumerate();
  }
};

}  // namespace

DecatReport check_thm_action(int n) {
  DecatReport r;
  r.theorem = "action";
  r.n = n;
  ActionSetup s(n);
  for (UtBasis g : kUtBasis)
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const BasisState x{n, mask};
      const DGModule m = chi_n(projective(s.A, static_cast<int>(g)), projective(s.bundle.hrn->alg, static_cast<int>(mask)),
                               s.product);
      const VnElt computed = k0_as_vn(k0_of_tensor(s.bundle.bimodule(), m), n);
      const VnElt expected = act_basis(g, x);
      r.add(std::string(basis_name(g)) + x.to_string(), expected.to_string(), computed.to_string(), computed == expected);
    }
  return r;
}

DecatReport check_action_shifts(int n) {
  DecatReport r;
  r.theorem = "action shifts";
  r.n = n;
  ActionSetup s(n);
  for (UtBasis g : kUtBasis)
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
      for (int a : {1, -1}) {
        const BasisState x{n, mask};
        const DGModule m = chi_n(projective(s.A, static_cast<int>(g), {0, a, 0}),
                                 projective(s.bundle.hrn->alg, static_cast<int>(mask)), s.product);
        const VnElt computed = k0_as_vn(k0_of_tensor(s.bundle.bimodule(), m), n);
        const VnElt expected = act_basis(g, x).scaled(poly_t(n * a));
        r.add(std::string(basis_name(g)) + shift_name(a) + x.to_string(), expected.to_string(), computed.to_string(),
              computed == expected);
      }
  return r;
}

DecatReport check_k0_module_structures(int n) {
  DecatReport r;
  r.theorem = "K0 module structures";
  r.n = n;
  auto count = [&](const std::string& name, int got, int want) {
    r.add("rank " + name, std::to_string(want), std::to_string(got), got == want);
  };
  count("A", build_A().num_vertices(), 4);
  count("A⊗A", build_AoA().num_vertices(), 16);
  count("B", build_B().num_vertices(), 16);
  RookAlgebra H = build_rook_algebra(n, true);
  count("H(R_" + std::to_string(n) + ")", H.alg.num_vertices(), 1 << n);
  RookAlgebra R = build_rook_algebra(n, false);
  const ARAlgebra box = build_A_box(R);
  count("A⊠R_" + std::to_string(n), box.alg.num_vertices(), 4 << n);

  // Shifts act freely: distinct shifts give distinct classes, and the class of
  // P(v){k} is T^k [P(v)].
  DGAlgebra A = build_A();
  for (int v = 0; v < 4; ++v) {
    std::vector<K0Class> seen;
    bool ok = true;
    for (int k = -2; k <= 2; ++k) {
      const K0Class c = k0_class(projective(A, v, {0, k, 0}));
      K0Class want;
      want.coords[v] = LaurentPoly2::monomial({k, 0});
      ok = ok && c == want;
      for (const auto& o : seen) ok = ok && !(o == c);
      seen.push_back(c);
    }
    r.add(std::string("free T-action on P(") + basis_name(static_cast<UtBasis>(v)) + ")", "T^k·[P]", ok ? "T^k·[P]" : "mismatch",
          ok);
  }
  // In A⊠R_n a t-shift by n is the A-side T: (Γ·T, x) = (Γ, t^n x).
  for (UtBasis g : kUtBasis)
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const BasisState x{n, mask};
      const int v = box.vertex(static_cast<AVertex>(g), x);
      const K0Class plain = k0_class(projective(box.alg, v));
      const K0Class moved = k0_class(projective(box.alg, v, {0, n, 0}));
      K0Class want;
      for (const auto& [w, p] : plain.coords) want.coords[w] = p * LaurentPoly2::monomial({n, 0});
      const bool ok = moved == want;
      r.add(std::string("P(") + basis_name(g) + "," + x.to_string() + "){" + std::to_string(n) + "}",
            want.to_string(box.alg), moved.to_string(box.alg), ok);
    }
  return r;
}

std::vector<DecatReport> check_decat(int n) {
  return {check_thm_multiplication(), check_multiplication_units_and_shifts(),
          check_thm_comultiplication(), check_comultiplication_shifts(),
          check_thm_action(n), check_action_shifts(n),
          check_k0_module_structures(n)};
}

}  // namespace catsl11
