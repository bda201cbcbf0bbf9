// The (H(R_n), A⊠R_n)-bimodule C_n.
//
// Conventions: a state x has strands at x_1 < ... < x_k and empty positions
// xbar_1 < ... < xbar_{n-k}. The F-part of C(F, x) has one generator per empty
// position j, sitting at (Fx)_j = x with xbar_j filled. The E-part of C(E, y)
// has two generators (unprimed and primed) per strand i of y, sitting at
// (Ey)^i = y with y_i removed. C(EF, x) is the E-part of every column (Fx)_j.
#include <stdexcept>

#include "catsl11/bimodule.hpp"

namespace catsl11 {

namespace {

struct LTerm {
  Elt h;      // coefficient in H(R_n)
  int index;  // local generator index (1-based)
  int prime;  // 0 or 1 for E-parts; always 0 for F-parts
};
using LElt = std::vector<LTerm>;

// Where a rook generator sends an F-part generator: either to the generator of
// the same vertex (no via) or through a rook generator.
struct FImage {
  int from;
  int to;
  std::optional<RookGen> via;
};

class CnBuilder {
 public:
  CnBuilder(const RookAlgebra& hrn, const RookAlgebra& rn, const ARAlgebra& box)
      : H(hrn), R(rn), X(box), n(hrn.n), out{hrn.n, DGBimodule("C_" + std::to_string(hrn.n), &hrn.alg, &box.alg,
                                                                   [](const Trigrade& d) { return d; }),
                                             {}, {}, {}, {}} {}

  CnBimodule build() {
    add_summands();
    add_differentials();
    add_actions();
    return std::move(out);
  }

 private:
  const RookAlgebra& H;
  const RookAlgebra& R;
  const ARAlgebra& X;
  int n;
  CnBimodule out;

  // ---- states and H elements ----

  BasisState state(std::uint32_t mask) const { return {n, mask}; }
  static int pos(const BasisState& x, int i) { return x.positions()[static_cast<std::size_t>(i - 1)]; }
  static int hole(const BasisState& x, int j) { return x.complement()[static_cast<std::size_t>(j - 1)]; }
  static BasisState fill(const BasisState& x, int j) { return x.with(hole(x, j)); }
  static BasisState drop(const BasisState& y, int i) { return y.without(pos(y, i)); }
  // Number of strands left of the j-th hole.
  static int strands_before_hole(const BasisState& x, int j) {
    const int p = hole(x, j);
    int q = 0;
    for (int s : x.positions()) q += s < p;
    return q;
  }
  // The number of holes left of strand i.
  static int holes_before(const BasisState& x, int i) {
    const int p = pos(x, i);
    int j = 0;
    for (int c : x.complement()) j += c < p;
    return j;
  }
  static ElementaryDiagram unit(const BasisState& z, int i) { return ElementaryDiagram::make(z, i, pos(z, i) - 1); }

  Elt idem(const BasisState& x) const { return {H.alg.idempotent(static_cast<int>(x.mask))}; }
  int hgen(const RookGen& g) const {
    if (const auto* l = std::get_if<LoopGen>(&g)) return H.loop(l->x, l->i);
    const auto& d = std::get<ElementaryDiagram>(g);
    if (!d.is_unit()) throw std::logic_error("decorated generator has no image in H(R_n)");
    const int id = H.arrow(d.x, d.m, d.p);
    if (id < 0) throw std::logic_error("missing arrow " + d.label());
    return id;
  }
  Elt helt(const RookGen& g) const { return H.alg.gen_elt(hgen(g)); }
  Elt loop(const BasisState& x, int i) const { return H.alg.gen_elt(H.loop(x, i)); }
  Elt mul(const Elt& a, const Elt& b) const { return H.alg.mul(a, b); }

  // Unit moves of the listed strand indices, in order, starting at z.
  std::vector<RookGen> unit_path(BasisState z, const std::vector<int>& indices) const {
    std::vector<RookGen> path;
    for (int i : indices) {
      const ElementaryDiagram d = unit(z, i);
      if (!d.is_unit()) throw std::logic_error("non-unit move in a unit path at " + z.to_string());
      path.emplace_back(d);
      z = d.y;
    }
    return path;
  }
  Elt path_elt(const BasisState& start, const std::vector<RookGen>& path) const {
    Word w;
    for (const auto& g : path) w.push_back(static_cast<char16_t>(hgen(g)));
    return H.alg.word_elt(static_cast<int>(start.mask), w);
  }
  static std::vector<int> range(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
  }

  // The path (Fx)_j -> (Fx)_{j-1} used by the F-part differential.
  std::vector<RookGen> f_path(const BasisState& x, int j) const {
    const int lo = strands_before_hole(x, j - 1), hi = strands_before_hole(x, j);
    return unit_path(fill(x, j), range(lo + 1, hi + 1));
  }

  // r_E(y; i) from (Ey)^i to (Ey)^{i+1}: strand i walks from y_{i+1} to y_i with
  // a loop at every intermediate vertex.
  Elt e_connector(const BasisState& y, int i) const {
    BasisState z = drop(y, i);
    const int steps = pos(y, i + 1) - pos(y, i);
    Word w;
    for (int s = 0; s < steps; ++s) {
      if (s > 0) w.push_back(static_cast<char16_t>(H.loop(z, i)));
      const ElementaryDiagram d = unit(z, i);
      w.push_back(static_cast<char16_t>(hgen(d)));
      z = d.y;
    }
    if (z != drop(y, i + 1)) throw std::logic_error("r_E path ends at the wrong state");
    return H.alg.word_elt(static_cast<int>(drop(y, i).mask), w);
  }

  // ---- the E-part ----

  // Differential of C(E, y) on the generator (i, prime).
  LElt e_differential(const BasisState& y, int i, int prime) const {
    if (i >= y.k()) return {};
    const Elt r = e_connector(y, i);
    const Elt theta = loop(drop(y, i), i);
    const Elt sigma = loop(drop(y, i + 1), i);
    const Elt rs = prime ? mul(r, sigma) : r;
    return {{mul(theta, rs), i + 1, 0}, {rs, i + 1, 1}};
  }

  // Right action of e(E)⊠g on C(E, src g), generator (i, prime).
  LElt e_action(const RookGen& g, int i, int prime) const {
    if (const auto* l = std::get_if<LoopGen>(&g)) {
      const int i0 = l->i;
      const BasisState z = drop(l->x, i);
      if (i < i0) return {{loop(z, i0 - 1), i, prime}};
      if (i > i0) return {{loop(z, i0), i, prime}};
      if (prime) return {};
      return {{idem(z), i, 1}};
    }
    const auto& d = std::get<ElementaryDiagram>(g);
    if (d.s0 > 0) return {};
    if (d.s1 == 0) {
      const int i0 = d.m;
      const BasisState z = drop(d.x, i);
      if (i < i0) return {{helt(unit(z, i0 - 1)), i, prime}};
      if (i > i0) return {{helt(unit(z, i0)), i, prime}};
      if (!prime) return {};
      return {{idem(z), i, 0}};
    }
    // Strand d.m crosses s1 strands and lands as strand d.i.
    if (prime && i == d.m) return {{idem(drop(d.x, i)), d.i, 0}};
    return {};
  }

  // ---- the F-part ----

  std::vector<FImage> f_action(const RookGen& g) const {
    std::vector<FImage> images;
    if (const auto* l = std::get_if<LoopGen>(&g)) {
      const BasisState& x = l->x;
      const int j0 = holes_before(x, l->i);
      for (int j = 1; j <= n - x.k(); ++j) images.push_back({j, j, LoopGen{fill(x, j), j > j0 ? l->i : l->i + 1}});
      return images;
    }
    const auto& d = std::get<ElementaryDiagram>(g);
    if (d.s1 > 0) return images;
    const BasisState& x = d.x;
    const int i = d.m;
    const int j0 = holes_before(x, i);
    if (d.s0 == 0) {
      for (int j = 1; j <= n - x.k(); ++j) {
        if (j == j0) {
          images.push_back({j, j, std::nullopt});
        } else {
          images.push_back({j, j, unit(fill(x, j), j > j0 ? i : i + 1)});
        }
      }
    } else {
      images.push_back({j0 - d.s0, j0, std::nullopt});
    }
    return images;
  }

  // ---- summands ----

  void add_summands() {
    const int count = 1 << n;
    out.gen_I.assign(static_cast<std::size_t>(count), -1);
    out.gen_F.assign(static_cast<std::size_t>(count), {});
    out.gen_E.assign(static_cast<std::size_t>(count), {});
    out.gen_EF.assign(static_cast<std::size_t>(count), {});
    DGBimodule& B = out.bim;
    for (std::uint32_t mask = 0; mask < static_cast<std::uint32_t>(count); ++mask) {
      const BasisState x = state(mask);
      const int k = x.k();
      const std::string xs = x.to_string();
      out.gen_I[mask] = B.add_summand(X.vertex(AVertex::I, x), static_cast<int>(mask), {}, "m(I" + xs + ")");
      for (int j = 1; j <= n - k; ++j) {
        const BasisState y = fill(x, j);
        const int b = beta(x, hole(x, j));
        out.gen_F[mask].push_back(B.add_summand(X.vertex(AVertex::F, x), static_cast<int>(y.mask),
                                                {b, n - hole(x, j), 0},
                                                "m(F" + xs + ";" + std::to_string(j) + ")"));
      }
      for (int i = 1; i <= k; ++i) {
        const BasisState z = drop(x, i);
        const std::string tag = xs + ";" + std::to_string(i) + ")";
        std::array<int, 2> ids{};
        ids[0] = B.add_summand(X.vertex(AVertex::E, x), static_cast<int>(z.mask), {1 - i, 0, 0}, "m(E" + tag);
        ids[1] = B.add_summand(X.vertex(AVertex::E, x), static_cast<int>(z.mask), {2 - i, 1, 0}, "m'(E" + tag);
        out.gen_E[mask].push_back(ids);
      }
      for (int j = 1; j <= n - k; ++j) {
        const BasisState y = fill(x, j);
        const int b = beta(x, hole(x, j));
        const int t = n - hole(x, j);
        std::vector<std::array<int, 2>> column;
        for (int i = 1; i <= k + 1; ++i) {
          const BasisState z = drop(y, i);
          const std::string tag = xs + ";" + std::to_string(j) + "," + std::to_string(i) + ")";
          std::array<int, 2> ids{};
          ids[0] = B.add_summand(X.vertex(AVertex::EF, x), static_cast<int>(z.mask), {b + 1 - i, t, 0}, "m(EF" + tag);
          ids[1] = B.add_summand(X.vertex(AVertex::EF, x), static_cast<int>(z.mask), {b + 2 - i, t + 1, 0},
                                 "m'(EF" + tag);
          column.push_back(ids);
        }
        out.gen_EF[mask].push_back(column);
      }
    }
  }

  int sI(const BasisState& x) const { return out.gen_I[x.mask]; }
  int sF(const BasisState& x, int j) const { return out.gen_F[x.mask].at(static_cast<std::size_t>(j - 1)); }
  int sE(const BasisState& x, int i, int p) const {
    return out.gen_E[x.mask].at(static_cast<std::size_t>(i - 1))[static_cast<std::size_t>(p)];
  }
  int sEF(const BasisState& x, int j, int i, int p) const {
    return out.gen_EF[x.mask].at(static_cast<std::size_t>(j - 1)).at(static_cast<std::size_t>(i - 1))[static_cast<std::size_t>(p)];
  }

  // Converts local terms to a module element; target(index, prime) names the summand.
  template <class Target>
  ModElt realize(const LElt& terms, Target target) const {
    ModElt m;
    for (const auto& t : terms) {
      const int s = target(t.index, t.prime);
      for (int b : t.h) m.emplace_back(s, b);
    }
    return mod_normalize(std::move(m));
  }

  // E-action of a path of rook generators on local generator (i, prime).
  LElt e_path_action(const std::vector<RookGen>& path, int i, int prime, const BasisState& start) const {
    LElt cur{{idem(drop(start, i)), i, prime}};
    for (const auto& g : path) {
      LElt next;
      for (const auto& t : cur)
        for (auto& u : e_action(g, t.index, t.prime)) {
          Elt h = mul(t.h, u.h);
          if (!h.empty()) next.push_back({std::move(h), u.index, u.prime});
        }
      cur = std::move(next);
    }
    return cur;
  }

  // ---- differentials ----

  void add_differentials() {
    DGModule& M = out.bim.module();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const BasisState x = state(mask);
      const int k = x.k();
      for (int j = 2; j <= n - k; ++j) {
        const auto path = f_path(x, j);
        if (path.empty() || rook_target(path.back()) != fill(x, j - 1))
          throw std::logic_error("r_F path ends at the wrong state");
        ModElt img;
        for (int b : path_elt(fill(x, j), path)) img.emplace_back(sF(x, j - 1), b);
        M.set_differential(sF(x, j), std::move(img));
      }
      for (int i = 1; i <= k; ++i)
        for (int p = 0; p < 2; ++p)
          M.set_differential(sE(x, i, p), realize(e_differential(x, i, p), [&](int a, int q) { return sE(x, a, q); }));
      for (int j = 1; j <= n - k; ++j) {
        const BasisState y = fill(x, j);
        const std::vector<RookGen> path = j > 1 ? f_path(x, j) : std::vector<RookGen>{};
        for (int i = 1; i <= k + 1; ++i)
          for (int p = 0; p < 2; ++p) {
            ModElt img = realize(e_differential(y, i, p), [&](int a, int q) { return sEF(x, j, a, q); });
            if (j > 1)
              img = mod_add(img, realize(e_path_action(path, i, p, y), [&](int a, int q) { return sEF(x, j - 1, a, q); }));
            M.set_differential(sEF(x, j, i, p), std::move(img));
          }
      }
    }
  }

  // ---- right actions ----

  void act(int s, int gen, const ModElt& img) {
    if (!img.empty()) out.bim.set_action(s, gen, img);
  }
  ModElt times(const Elt& h, int s) const {
    ModElt m;
    for (int b : h) m.emplace_back(s, b);
    return mod_normalize(std::move(m));
  }

  void add_actions() {
    for (int r = 0; r < static_cast<int>(R.gens.size()); ++r) {
      const RookGen& g = R.gens[static_cast<std::size_t>(r)];
      const BasisState x = rook_source(g), y = rook_target(g);
      const auto& sides = X.side[static_cast<std::size_t>(r)];
      const int gI = sides[static_cast<std::size_t>(AVertex::I)];
      const int gF = sides[static_cast<std::size_t>(AVertex::F)];
      const int gE = sides[static_cast<std::size_t>(AVertex::E)];
      const int gEF = sides[static_cast<std::size_t>(AVertex::EF)];

      // e(I): through the projection onto cohomology.
      const auto* d = std::get_if<ElementaryDiagram>(&g);
      if (!d || d->is_unit()) act(sI(x), gI, times(helt(g), sI(y)));

      // e(F), e(EF).
      for (const FImage& f : f_action(g)) {
        const Elt h = f.via ? helt(*f.via) : idem(fill(x, f.from));
        act(sF(x, f.from), gF, times(h, sF(y, f.to)));
        for (int i = 1; i <= x.k() + 1; ++i)
          for (int p = 0; p < 2; ++p) {
            LElt terms = f.via ? e_action(*f.via, i, p) : LElt{{idem(drop(fill(x, f.from), i)), i, p}};
            act(sEF(x, f.from, i, p), gEF, realize(terms, [&](int a, int q) { return sEF(y, f.to, a, q); }));
          }
      }

      // e(E).
      for (int i = 1; i <= x.k(); ++i)
        for (int p = 0; p < 2; ++p)
          act(sE(x, i, p), gE, realize(e_action(g, i, p), [&](int a, int q) { return sE(y, a, q); }));
    }

    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const BasisState x = state(mask);
      const int k = x.k();
      if (k == n) continue;
      const int q_last = strands_before_hole(x, n - k);
      const int q_first = strands_before_hole(x, 1);
      // ρ(I,EF)⊠e(x): into the top corner of the last column.
      {
        const auto path = unit_path(x, range(q_last + 1, k));
        const BasisState end = path.empty() ? x : rook_target(path.back());
        const int target = sEF(x, n - k, k + 1, 0);
        if (static_cast<int>(end.mask) != out.bim.module().summand(target).vertex)
          throw std::logic_error("ρ(I,EF) path ends at the wrong state");
        act(sI(x), X.a_gen.at({kUp, mask}), times(path_elt(x, path), target));
      }
      // ρ(EF,I)⊠e(x): from the primed bottom corner of the first column.
      {
        const int source = sEF(x, 1, 1, 1);
        const BasisState start = state(static_cast<std::uint32_t>(out.bim.module().summand(source).vertex));
        const auto path = unit_path(start, range(1, q_first));
        const BasisState end = path.empty() ? start : rook_target(path.back());
        if (end != x) throw std::logic_error("ρ(EF,I) path ends at the wrong state");
        act(source, X.a_gen.at({kDown, mask}), times(path_elt(start, path), sI(x)));
      }
    }

    for (const auto& [key, gen] : X.lower) {
      const BasisState x = state(key.first);
      const int i = key.second;
      const int k = x.k();
      const int q = strands_before_hole(x, n - k);
      const auto path = unit_path(x, range(q + 1, i - 1));
      const int target = sEF(x, n - k, i, 0);
      const BasisState end = path.empty() ? x : rook_target(path.back());
      if (static_cast<int>(end.mask) != out.bim.module().summand(target).vertex)
        throw std::logic_error("lowering path ends at the wrong state");
      act(sI(x), gen, times(path_elt(x, path), target));
    }
    for (const auto& [key, gen] : X.raise) {
      const BasisState x = state(key.first);
      const int j = key.second;
      const int q = strands_before_hole(x, 1);
      const int source = sEF(x, 1, j + 1, 1);
      const BasisState start = state(static_cast<std::uint32_t>(out.bim.module().summand(source).vertex));
      const auto path = unit_path(start, range(j + 1, q));
      const BasisState end = path.empty() ? start : rook_target(path.back());
      if (end != x) throw std::logic_error("raising path ends at the wrong state");
      act(source, gen, times(path_elt(start, path), sI(x)));
    }
  }
};

}  // namespace

CnBimodule build_Cn(const RookAlgebra& hrn, const RookAlgebra& rn, const ARAlgebra& box) {
  if (!hrn.cohomology_presentation || rn.cohomology_presentation) throw std::invalid_argument("build_Cn: wrong rook algebras");
  if (!hrn.alg.enumerated()) throw std::logic_error("build_Cn: H(R_n) must be enumerated");
  if (hrn.n != rn.n || box.n != rn.n || !box.boxed) throw std::invalid_argument("build_Cn: mismatched inputs");
  return CnBuilder(hrn, rn, box).build();
}

}  // namespace catsl11
