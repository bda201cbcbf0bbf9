// Concrete presented algebras: A, A⊗A, B, and the tensor and box products of A
// with the rook algebras, together with the maps used for formality checks.
#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "catsl11/dga.hpp"
#include "catsl11/rook.hpp"

namespace catsl11 {

// Vertices of A in their fixed order.
enum class AVertex { F = 0, I = 1, EF = 2, E = 3 };
inline constexpr std::array<AVertex, 4> kAVertices{AVertex::F, AVertex::I, AVertex::EF, AVertex::E};
std::string avertex_name(AVertex v);
AVertex parse_avertex(const std::string& s);
int avertex_parity(AVertex v);  // F -> 1, E -> -1, I and EF -> 0

// Generator ids in build_A().
inline constexpr int kUp = 0;    // I -> EF, degree (0,0)
inline constexpr int kDown = 1;  // EF -> I, degree (1,1)

DGAlgebra build_A();
// Componentwise tensor square with the parity-twisted cohomological degree.
// Vertex id of (a, b) is 4 * a + b.
DGAlgebra build_AoA();
// Sixteen vertices, same numbering as build_AoA().
DGAlgebra build_B();

// Switches for the box product. The defaults give a finite algebra; see README.
struct BoxOptions {
  // Include the special generators, their relations and differentials.
  bool special_generators = true;
  // (up ⊠ e) followed by a special generator of the second kind vanishes.
  bool zero_up_then_special = true;
  // A special generator fails to commute with the neighbouring loop only when
  // the next special generator in its chain exists.
  bool chain_aware_exceptions = true;
  // The two commutation exceptions between A-arrows and loops are only imposed
  // on states with fewer than n strands.
  bool exceptions_need_free_site = true;
};

// A tensored (or boxed) with a rook algebra. Vertex id of (Γ, x) is Γ * 2^n + mask.
struct ARAlgebra {
  int n = 0;
  bool boxed = false;
  DGAlgebra alg;
  std::vector<std::array<int, 4>> side;          // side[rook gen][Γ] -> id
  std::map<std::pair<int, std::uint32_t>, int> a_gen;    // (kUp | kDown, mask) -> id
  std::map<std::pair<std::uint32_t, int>, int> lower;    // (mask, i): I x -> EF x
  std::map<std::pair<std::uint32_t, int>, int> raise;    // (mask, j): EF x -> I x

  int vertex(AVertex g, const BasisState& x) const { return static_cast<int>(g) * (1 << n) + static_cast<int>(x.mask); }
  int special_lower(const BasisState& x, int i) const;  // -1 when absent
  int special_raise(const BasisState& x, int j) const;  // -1 when absent
};

ARAlgebra build_A_tensor(const RookAlgebra& R);
ARAlgebra build_A_box(const RookAlgebra& R, const BoxOptions& opt = {});

// Formality maps.
AlgebraMap collapse_decorations(const RookAlgebra& full, const RookAlgebra& coh);
AlgebraMap forget_special(const ARAlgebra& box, const ARAlgebra& tensor);

// Lookup of an algebra by its command-line name: A, AoA, B, Rn, HRn, AxRn.
// The returned object owns all intermediate algebras.
struct ZooEntry {
  std::string which;
  int n = 0;
  std::unique_ptr<RookAlgebra> rook;
  std::unique_ptr<ARAlgebra> product;
  std::unique_ptr<DGAlgebra> plain;
  DGAlgebra& alg();
  const DGAlgebra& alg() const { return const_cast<ZooEntry*>(this)->alg(); }
};
ZooEntry build_named(const std::string& which, int n, const BoxOptions& opt = {});

}  // namespace catsl11
