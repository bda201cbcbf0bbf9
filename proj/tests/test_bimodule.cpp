#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "catsl11/bimodule.hpp"

using namespace catsl11;

namespace {

int summand(const DGBimodule& b, const std::string& label) {
  for (int s = 0; s < b.module().size(); ++s)
    if (b.module().summand(s).label == label) return s;
  FAIL("no summand " << label);
  return -1;
}

int rgen(const DGBimodule& b, const std::string& name) {
  const int g = b.right().find_generator(name);
  REQUIRE_MESSAGE(g >= 0, name);
  return g;
}

ModElt times(const DGBimodule& b, const std::string& m, const std::string& g) {
  return b.act(b.module().generator(summand(b, m)), rgen(b, g));
}

std::string str(const DGBimodule& b, const ModElt& m) { return b.module().to_string(m); }

// (vertex, shift) pairs of a block, as a set.
std::set<std::tuple<int, int, int, int>> block_shape(const DGBimodule& b, int block) {
  std::set<std::tuple<int, int, int, int>> out;
  for (int s : b.summands_in_block(block)) {
    const auto& p = b.module().summand(s);
    const Shift sh = p.shift();
    out.insert({p.vertex, sh.h, sh.t1, sh.t2});
  }
  return out;
}

const CheckResult& check_named(const std::vector<CheckResult>& rs, const std::string& prefix) {
  for (const auto& r : rs)
    if (r.name.rfind(prefix, 0) == 0) return r;
  throw std::runtime_error("no check " + prefix);
}

void require_all_pass(const DGBimodule& b) {
  for (const auto& r : verify_bimodule(b)) CHECK_MESSAGE(r.pass, b.name() << ": " << r.name << ": " << r.witness);
}

int V(AVertex v) { return static_cast<int>(v); }

}  // namespace

TEST_CASE("N") {
  auto bundle = build_named_bimodule("N", 0);
  const DGBimodule& N = bundle.bimodule();
  require_all_pass(N);

  CHECK(block_shape(N, 4 * V(AVertex::E) + V(AVertex::F)) ==
        std::set<std::tuple<int, int, int, int>>{{V(AVertex::EF), 0, 0, 0}});
  for (int g = 0; g < 4; ++g) {
    CHECK(block_shape(N, 4 * V(AVertex::I) + g) == std::set<std::tuple<int, int, int, int>>{{g, 0, 0, 0}});
    CHECK(block_shape(N, 4 * g + V(AVertex::I)) == std::set<std::tuple<int, int, int, int>>{{g, 0, 0, 0}});
  }
  CHECK(N.summands_in_block(4 * V(AVertex::E) + V(AVertex::E)).empty());
  CHECK(N.summands_in_block(4 * V(AVertex::EF) + V(AVertex::F)).empty());

  CHECK(times(N, "m_(EF,E)(E)", "ρ(EF,I)⊗e(E)").empty());
  CHECK(str(N, times(N, "m'_(EF,E)(E)", "ρ(EF,I)⊗e(E)")) == "m_(I,E)(E)");
  CHECK(str(N, times(N, "m_(I,I)(I)", "ρ(I,EF)⊗e(I)")) == "ρ(I,EF)·m_(EF,I)(EF)");
  const ModElt twice = N.act(times(N, "m_(I,I)(I)", "ρ(I,EF)⊗e(I)"), rgen(N, "ρ(EF,I)⊗e(I)"));
  CHECK(twice.empty());

  // The only differential lives on N(F,E).
  for (int s = 0; s < N.module().size(); ++s)
    if (!N.module().dgen(s).empty()) CHECK(N.block(s) == 4 * V(AVertex::F) + V(AVertex::E));
  CHECK(str(N, N.module().dgen(summand(N, "m_(F,E)(I)"))) == "ρ(I,EF)·m_(F,E)(EF)");
}

TEST_CASE("N with only the diagonal entries in the EF corner breaks a commutation relation") {
  auto bundle = build_named_bimodule("N", 0);
  DGBimodule& N = *bundle.bim;
  const int ef_ef = summand(N, "m_(EF,EF)(EF)");
  const int i_ef = summand(N, "m_(I,EF)(EF)");
  N.set_action(ef_ef, rgen(N, "ρ(EF,I)⊗e(EF)"), {});
  N.set_action(i_ef, rgen(N, "ρ(I,EF)⊗e(EF)"), N.module().generator(ef_ef));
  const auto rs = verify_bimodule(N);
  CHECK_FALSE(check_named(rs, "right action respects").pass);
  CHECK(check_named(rs, "Leibniz").pass);
  CHECK(check_named(rs, "right action has degree").pass);
}

TEST_CASE("S") {
  auto bundle = build_named_bimodule("S", 0);
  const DGBimodule& S = bundle.bimodule();
  require_all_pass(S);
  const int IF = 4 * V(AVertex::I) + V(AVertex::F), FI = 4 * V(AVertex::F) + V(AVertex::I);
  CHECK(block_shape(S, V(AVertex::F)) == std::set<std::tuple<int, int, int, int>>{{IF, 0, 0, 0}, {FI, 0, 0, 1}});
  CHECK(block_shape(S, V(AVertex::E)).size() == 2);
  CHECK(str(S, times(S, "m_EF(EF⊗I)", "ρ(EF,I)")) == "ρ(EF⊗I,I⊗I)·m_I(I⊗I)");
  CHECK(times(S, "m_EF(E⊗F)", "ρ(EF,I)").empty());
  const int mi = summand(S, "m_I(I⊗I)");
  const ModElt up = times(S, "m_I(I⊗I)", "ρ(I,EF)");
  REQUIRE(up.size() == 1);
  CHECK(S.module().term_degree(up[0].first, up[0].second) == S.module().summand(mi).deg);
}

TEST_CASE("C_1 and C_2 pass every check") {
  for (int n : {1, 2}) {
    auto bundle = build_named_bimodule("Cn", n);
    require_all_pass(bundle.bimodule());
  }
}

TEST_CASE("C_n block shapes") {
  auto b2 = build_named_bimodule("Cn", 2);
  const DGBimodule& C2 = b2.bimodule();
  const ARAlgebra& box = *b2.box;
  CHECK(block_shape(C2, box.vertex(AVertex::F, BasisState{2, 0b00})) ==
        std::set<std::tuple<int, int, int, int>>{{0b01, 0, 0, 0}, {0b10, 0, 1, 0}});

  auto b1 = build_named_bimodule("Cn", 1);
  CHECK(block_shape(b1.bimodule(), b1.box->vertex(AVertex::E, BasisState{1, 0b1})) ==
        std::set<std::tuple<int, int, int, int>>{{0b0, 0, 0, 0}, {0b0, 1, 1, 0}});

  // deg m((Fx)_j) = (-β(x, x̄_j); x̄_j - n).
  auto b3 = build_named_bimodule("Cn", 3);
  const CnBimodule& C3 = *b3.cn;
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    const BasisState x{3, mask};
    const auto holes = x.complement();
    for (std::size_t j = 0; j < holes.size(); ++j) {
      const auto& p = C3.bim.module().summand(C3.gen_F[mask][j]);
      CHECK(p.deg == Trigrade{-beta(x, holes[j]), holes[j] - 3, 0});
    }
  }
}

TEST_CASE("C_n worked actions") {
  auto bundle = build_named_bimodule("Cn", 2);
  const DGBimodule& C = bundle.bimodule();
  CHECK(str(C, times(C, "m(I|01⟩)", "ρ(I|01⟩→1 EF|01⟩)")) == "m(EF|01⟩;1,1)");
  // x̄_1 = 1: the lower-left corner maps by the identity.
  CHECK(str(C, times(C, "m'(EF|01⟩;1,1)", "ρ(EF,I)⊠e(|01⟩)")) == "m(I|01⟩)");

  // e(E)⊠ρ squares to zero on every generator.
  auto b3 = build_named_bimodule("Cn", 3);
  const DGBimodule& C3 = b3.bimodule();
  const ARAlgebra& box = *b3.box;
  int checked = 0;
  for (std::size_t r = 0; r < b3.rn->gens.size(); ++r) {
    if (!std::holds_alternative<LoopGen>(b3.rn->gens[r])) continue;
    const int u = box.side[r][static_cast<std::size_t>(AVertex::E)];
    for (int s = 0; s < C3.module().size(); ++s) {
      if (C3.block(s) != C3.right().generator(u).src) continue;
      CHECK(C3.act(C3.act(C3.module().generator(s), u), u).empty());
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("C_3 and C_4: the loop action in C(EF, x) commutes with the horizontal differential only up to homotopy") {
  // Everything except the Leibniz rule holds; the Leibniz failures are exactly
  // the loops on a strand that r_F re-indexes.
  for (int n : {3, 4}) {
    auto bundle = build_named_bimodule("Cn", n);
    const auto rs = verify_bimodule(bundle.bimodule());
    for (const auto& r : rs)
      if (r.name.rfind("Leibniz", 0) != 0) CHECK_MESSAGE(r.pass, r.name << ": " << r.witness);
    const auto& leibniz = check_named(rs, "Leibniz");
    CHECK_FALSE(leibniz.pass);
    CHECK(leibniz.failures == (n == 3 ? 3u : 24u));
    CHECK(leibniz.witness.find("e(EF)⊠ρ(") != std::string::npos);
  }
}

TEST_CASE("generic quotient agrees with block lookup") {
  for (auto [which, n] : std::vector<std::pair<std::string, int>>{{"N", 0}, {"S", 0}, {"Cn", 1}, {"Cn", 2}, {"Cn", 3}}) {
    auto bundle = build_named_bimodule(which, n);
    const DGBimodule& b = bundle.bimodule();
    for (int v = 0; v < b.right().num_vertices(); ++v) CHECK_MESSAGE(block_dims(b, v) == tensor_quotient_dims(b, v), which << n << " at " << v);
  }
}

TEST_CASE("tensor_with") {
  auto bundle = build_named_bimodule("N", 0);
  const DGModule m = tensor_with(bundle.bimodule(), 4 * V(AVertex::F) + V(AVertex::I));
  REQUIRE(m.size() == 1);
  CHECK(m.summand(0).vertex == V(AVertex::F));
  // A right shift {0,1} is seen as {1} on the left.
  const DGModule shifted = tensor_with(bundle.bimodule(), 4 * V(AVertex::F) + V(AVertex::I), {0, 0, 1});
  CHECK(shifted.summand(0).deg == Trigrade{0, -1, 0});
}
