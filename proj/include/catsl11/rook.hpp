// Decorated rook diagrams and the presented algebras built from them.
#pragma once

#include <map>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "catsl11/dga.hpp"
#include "catsl11/foundation.hpp"
#include "catsl11/vn_rep.hpp"

namespace catsl11 {

// One strand moving left from position b = x_m to an empty position p < b.
// Strand indices are 1-based as positions are.
struct ElementaryDiagram {
  BasisState x;
  int m = 0;  // index of the moving strand in x
  int p = 0;  // its new position
  // derived
  int b = 0;   // old position x_m
  int i = 0;   // index of the moved strand in the target
  int s1 = 0;  // number of vertical strands crossed
  int s0 = 0;  // number of markings (empty positions strictly between p and b)
  std::vector<int> v;
  BasisState y;

  static ElementaryDiagram make(const BasisState& x, int m, int p);
  Bigrade grade() const { return {1 - s1, 1 + s0}; }
  std::vector<int> markings() const;        // the empty positions that carry a marking
  std::vector<int> crossed_strands() const; // strand indices i .. i+s1-1 of x
  bool is_unit() const { return s1 == 0 && s0 == 0; }
  std::string label() const;
  bool operator==(const ElementaryDiagram& o) const { return x == o.x && m == o.m && p == o.p; }
};

struct LoopGen {
  BasisState x;
  int i = 0;
  Bigrade grade() const { return {-1, -1}; }
  std::string label() const;
  bool operator==(const LoopGen& o) const { return x == o.x && i == o.i; }
};

using RookGen = std::variant<LoopGen, ElementaryDiagram>;

std::string rook_label(const RookGen& g);
Bigrade rook_grade(const RookGen& g);
BasisState rook_source(const RookGen& g);
BasisState rook_target(const RookGen& g);

struct DiagramWord {
  BasisState src;
  std::vector<RookGen> gens;

  BasisState target() const;
  Bigrade grade() const;
  std::string to_string() const;
  void check_chain() const;  // throws on mismatched endpoints
};

std::vector<ElementaryDiagram> all_elementary(int n);

// Splitting the strand at one marking.
DiagramWord resolve_marking(const ElementaryDiagram& d, int q);
// Smoothing the crossing with the vertical strand of index c: two words.
std::vector<DiagramWord> resolve_crossing(const ElementaryDiagram& d, int c);
// Sum of all single resolutions (markings then crossings).
std::vector<DiagramWord> diagram_differential(const ElementaryDiagram& d);

// Multi-line picture: target row on top, source row at the bottom.
std::string render_ascii(const ElementaryDiagram& d);

// ---------------------------------------------------------------------------
// The presented algebras. Vertex ids equal state masks.

struct RookAlgebra {
  int n = 0;
  bool cohomology_presentation = false;
  DGAlgebra alg;
  std::vector<RookGen> gens;  // metadata per generator id
  std::map<std::pair<std::uint32_t, int>, int> loop_ids;
  std::map<std::tuple<std::uint32_t, int, int>, int> arrow_ids;

  int loop(const BasisState& x, int i) const;
  int arrow(const BasisState& x, int m, int p) const;  // -1 when absent
  Word word(const DiagramWord& w) const;
};

// Generators and relations only; call alg.enumerate() to obtain a basis.
RookAlgebra build_rook_algebra(int n, bool cohomology_presentation);

// ---------------------------------------------------------------------------
// Checks on the combinatorics.

// Decoration counts and degrees of every resolution of every diagram with
// s1 + s0 <= max_decorations.
CheckResult check_decoration_conservation(int n, int max_decorations);
// d(d(r)) = 0 in R_n for the same diagrams, using single-class normal forms.
CheckResult check_rook_d_squared(const RookAlgebra& R, int max_decorations);
// Random relation rewrites never change the normal form.
CheckResult check_normal_form_confluence(const RookAlgebra& R, int trials, unsigned seed);

}  // namespace catsl11
