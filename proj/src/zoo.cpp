#include "catsl11/zoo.hpp"

#include <stdexcept>

namespace catsl11 {

std::string avertex_name(AVertex v) {
  switch (v) {
    case AVertex::F: return "F";
    case AVertex::I: return "I";
    case AVertex::EF: return "EF";
    case AVertex::E: return "E";
  }
  return "?";
}

AVertex parse_avertex(const std::string& s) {
  for (AVertex v : kAVertices)
    if (avertex_name(v) == s) return v;
  throw std::invalid_argument("unknown vertex of A: " + s);
}

int avertex_parity(AVertex v) {
  if (v == AVertex::F) return 1;
  if (v == AVertex::E) return -1;
  return 0;
}

namespace {

Word W(std::initializer_list<int> ids) {
  Word w;
  for (int g : ids) w.push_back(static_cast<char16_t>(g));
  return w;
}

int vid(AVertex v) { return static_cast<int>(v); }

struct AGen {
  int id;
  AVertex src, tgt;
  Trigrade deg;
  const char* name;
};
constexpr AGen kAGens[2] = {{kUp, AVertex::I, AVertex::EF, {0, 0, 0}, "ρ(I,EF)"},
                            {kDown, AVertex::EF, AVertex::I, {1, 1, 0}, "ρ(EF,I)"}};

}  // namespace

DGAlgebra build_A() {
  DGAlgebra a("A");
  for (AVertex v : kAVertices) a.add_vertex(avertex_name(v));
  for (const auto& g : kAGens) a.add_generator(g.name, vid(g.src), vid(g.tgt), g.deg);
  a.add_zero_relation(W({kUp, kDown}));
  return a;
}

DGAlgebra build_AoA() {
  DGAlgebra a("A⊗A");
  for (AVertex l : kAVertices)
    for (AVertex r : kAVertices) a.add_vertex(avertex_name(l) + "⊗" + avertex_name(r));
  auto at = [](AVertex l, AVertex r) { return 4 * vid(l) + vid(r); };
  int left[2][4], right[2][4];
  for (const auto& g : kAGens)
    for (AVertex v : kAVertices) {
      left[g.id][vid(v)] = a.add_generator(std::string(g.name) + "⊗e(" + avertex_name(v) + ")", at(g.src, v),
                                           at(g.tgt, v),
                                           {g.deg.h + 2 * g.deg.t1 * avertex_parity(v), g.deg.t1, 0});
      right[g.id][vid(v)] = a.add_generator("e(" + avertex_name(v) + ")⊗" + g.name, at(v, g.src), at(v, g.tgt),
                                            {g.deg.h, 0, g.deg.t1});
    }
  for (AVertex v : kAVertices) {
    a.add_zero_relation(W({left[kUp][vid(v)], left[kDown][vid(v)]}));
    a.add_zero_relation(W({right[kUp][vid(v)], right[kDown][vid(v)]}));
  }
  for (const auto& f : kAGens)
    for (const auto& g : kAGens)
      a.add_relation(W({left[f.id][vid(g.src)], right[g.id][vid(f.tgt)]}),
                     W({right[g.id][vid(f.src)], left[f.id][vid(g.tgt)]}));
  return a;
}

DGAlgebra build_B() {
  using V = AVertex;
  DGAlgebra b("B");
  for (AVertex l : kAVertices)
    for (AVertex r : kAVertices) b.add_vertex(avertex_name(l) + "⊗" + avertex_name(r));
  auto at = [](V l, V r) { return 4 * vid(l) + vid(r); };
  auto name = [](V a, V c, V x, V y) {
    return "ρ(" + avertex_name(a) + "⊗" + avertex_name(c) + "," + avertex_name(x) + "⊗" + avertex_name(y) + ")";
  };
  auto degree = [](V a, V c, V x, V y) -> Trigrade {
    if ((a == V::E && c == V::I && x == V::I && y == V::E) || (a == V::E && c == V::F && x == V::I && y == V::EF))
      return {1, 0, 0};
    if (a == V::EF && x == V::I && c == y) return {1, 1, 0};
    if ((a == V::I && c == V::F && x == V::F && y == V::I) || (c == V::EF && y == V::I && a == x)) return {1, 0, 1};
    return {0, 0, 0};
  };
  std::map<std::array<V, 4>, int> id;
  auto arrow = [&](V a, V c, V x, V y) { id[{a, c, x, y}] = b.add_generator(name(a, c, x, y), at(a, c), at(x, y), degree(a, c, x, y)); };
  auto g = [&](V a, V c, V x, V y) {
    auto it = id.find({a, c, x, y});
    if (it == id.end()) throw std::logic_error("missing arrow " + name(a, c, x, y));
    return it->second;
  };
  // Parity -1 component.
  arrow(V::E, V::I, V::E, V::EF);
  arrow(V::E, V::EF, V::E, V::I);
  arrow(V::I, V::E, V::EF, V::E);
  arrow(V::EF, V::E, V::I, V::E);
  arrow(V::E, V::I, V::I, V::E);
  // Parity 1 component.
  arrow(V::I, V::F, V::EF, V::F);
  arrow(V::EF, V::F, V::I, V::F);
  arrow(V::F, V::I, V::F, V::EF);
  arrow(V::F, V::EF, V::F, V::I);
  arrow(V::I, V::F, V::F, V::I);
  // Parity 0 component: a square of A-arrows plus two extra arrows.
  arrow(V::I, V::I, V::I, V::EF);
  arrow(V::I, V::EF, V::I, V::I);
  arrow(V::I, V::I, V::EF, V::I);
  arrow(V::EF, V::I, V::I, V::I);
  arrow(V::I, V::EF, V::EF, V::EF);
  arrow(V::EF, V::EF, V::I, V::EF);
  arrow(V::EF, V::I, V::EF, V::EF);
  arrow(V::EF, V::EF, V::EF, V::I);
  arrow(V::E, V::F, V::I, V::EF);
  arrow(V::EF, V::I, V::F, V::E);

  auto zero = [&](std::array<V, 4> p, std::array<V, 4> q) {
    b.add_zero_relation(W({g(p[0], p[1], p[2], p[3]), g(q[0], q[1], q[2], q[3])}));
  };
  auto same = [&](std::array<V, 4> p, std::array<V, 4> q, std::array<V, 4> r, std::array<V, 4> s) {
    b.add_relation(W({g(p[0], p[1], p[2], p[3]), g(q[0], q[1], q[2], q[3])}),
                   W({g(r[0], r[1], r[2], r[3]), g(s[0], s[1], s[2], s[3])}));
  };
  // Parity -1.
  zero({V::E, V::I, V::E, V::EF}, {V::E, V::EF, V::E, V::I});
  zero({V::I, V::E, V::EF, V::E}, {V::EF, V::E, V::I, V::E});
  zero({V::E, V::EF, V::E, V::I}, {V::E, V::I, V::I, V::E});
  zero({V::E, V::I, V::I, V::E}, {V::I, V::E, V::EF, V::E});
  // Parity 0.
  zero({V::I, V::I, V::I, V::EF}, {V::I, V::EF, V::I, V::I});
  zero({V::I, V::I, V::EF, V::I}, {V::EF, V::I, V::I, V::I});
  zero({V::I, V::EF, V::EF, V::EF}, {V::EF, V::EF, V::I, V::EF});
  zero({V::EF, V::I, V::EF, V::EF}, {V::EF, V::EF, V::EF, V::I});
  same({V::I, V::I, V::I, V::EF}, {V::I, V::EF, V::EF, V::EF}, {V::I, V::I, V::EF, V::I}, {V::EF, V::I, V::EF, V::EF});
  same({V::I, V::EF, V::I, V::I}, {V::I, V::I, V::EF, V::I}, {V::I, V::EF, V::EF, V::EF}, {V::EF, V::EF, V::EF, V::I});
  same({V::EF, V::I, V::I, V::I}, {V::I, V::I, V::I, V::EF}, {V::EF, V::I, V::EF, V::EF}, {V::EF, V::EF, V::I, V::EF});
  same({V::EF, V::EF, V::I, V::EF}, {V::I, V::EF, V::I, V::I}, {V::EF, V::EF, V::EF, V::I}, {V::EF, V::I, V::I, V::I});
  zero({V::E, V::F, V::I, V::EF}, {V::I, V::EF, V::EF, V::EF});
  zero({V::EF, V::EF, V::EF, V::I}, {V::EF, V::I, V::F, V::E});
  // Parity 1.
  zero({V::I, V::F, V::EF, V::F}, {V::EF, V::F, V::I, V::F});
  zero({V::F, V::I, V::F, V::EF}, {V::F, V::EF, V::F, V::I});
  zero({V::EF, V::F, V::I, V::F}, {V::I, V::F, V::F, V::I});
  zero({V::I, V::F, V::F, V::I}, {V::F, V::I, V::F, V::EF});
  return b;
}

// ---------------------------------------------------------------------------

int ARAlgebra::special_lower(const BasisState& x, int i) const {
  auto it = lower.find({x.mask, i});
  return it == lower.end() ? -1 : it->second;
}

int ARAlgebra::special_raise(const BasisState& x, int j) const {
  auto it = raise.find({x.mask, j});
  return it == raise.end() ? -1 : it->second;
}

namespace {

ARAlgebra build_product(const RookAlgebra& R, bool boxed, const BoxOptions& opt) {
  const DGAlgebra& S = R.alg;
  ARAlgebra P;
  P.n = R.n;
  P.boxed = boxed;
  const int n = R.n;
  const std::string op = boxed ? "⊠" : "⊗";
  P.alg = DGAlgebra("A" + op + S.name());
  DGAlgebra& D = P.alg;
  const auto states = all_states(n);
  for (AVertex g : kAVertices)
    for (const auto& x : states) D.add_vertex(avertex_name(g) + op + x.to_string());
  auto vtx = [&](AVertex g, int mask) { return vid(g) * (1 << n) + mask; };

  P.side.resize(static_cast<std::size_t>(S.num_generators()));
  for (int r = 0; r < S.num_generators(); ++r) {
    const auto& G = S.generator(r);
    for (AVertex g : kAVertices)
      P.side[static_cast<std::size_t>(r)][static_cast<std::size_t>(vid(g))] =
          D.add_generator("e(" + avertex_name(g) + ")" + op + G.name, vtx(g, G.src), vtx(g, G.tgt), G.deg);
  }
  auto side = [&](int r, AVertex g) { return P.side[static_cast<std::size_t>(r)][static_cast<std::size_t>(vid(g))]; };
  for (const auto& a : kAGens)
    for (const auto& x : states) {
      const int k = x.k();
      P.a_gen[{a.id, x.mask}] =
          D.add_generator(std::string(a.name) + op + "e(" + x.to_string() + ")", vtx(a.src, static_cast<int>(x.mask)),
                          vtx(a.tgt, static_cast<int>(x.mask)), {a.deg.h + 2 * k * a.deg.t1, n * a.deg.t1, 0});
    }
  auto agen = [&](int a, const BasisState& x) { return P.a_gen.at({a, x.mask}); };

  if (boxed && opt.special_generators)
    for (const auto& x : states) {
      const int k = x.k();
      if (k >= n) continue;
      const auto pos = x.positions();
      const int xm = static_cast<int>(x.mask);
      for (int i = 1; i <= k; ++i)
        if (pos[static_cast<std::size_t>(i - 1)] == n - k + i)
          P.lower[{x.mask, i}] = D.add_generator("ρ(I" + x.to_string() + "→" + std::to_string(i) + " EF" + x.to_string() + ")",
                                                 vtx(AVertex::I, xm), vtx(AVertex::EF, xm),
                                                 {-2 * (k - i + 1), -(k - i + 1), 0});
      for (int j = 1; j <= k; ++j)
        if (pos[static_cast<std::size_t>(j - 1)] == j)
          P.raise[{x.mask, j}] = D.add_generator("ρ(EF" + x.to_string() + "→" + std::to_string(j) + " I" + x.to_string() + ")",
                                                 vtx(AVertex::EF, xm), vtx(AVertex::I, xm),
                                                 {2 * k + 1 - 2 * j, n - j, 0});
    }

  // Relations inherited from each factor.
  auto lift = [&](const Word& w, AVertex g) {
    Word out;
    for (char16_t c : w) out.push_back(static_cast<char16_t>(side(c, g)));
    return out;
  };
  for (AVertex g : kAVertices) {
    for (const auto& [u, v] : S.relations()) D.add_relation(lift(u, g), lift(v, g));
    for (const auto& m : S.zero_relations()) D.add_zero_relation(lift(m, g));
  }
  for (const auto& x : states) D.add_zero_relation(W({agen(kUp, x), agen(kDown, x)}));

  // A-arrows commute with rook generators, with two exceptions in the box product.
  auto exceptional = [&](int a, const RookGen& rg) {
    if (!boxed) return false;
    const auto* l = std::get_if<LoopGen>(&rg);
    if (!l) return false;
    const int k = l->x.k();
    if (opt.exceptions_need_free_site && k >= n) return false;
    const auto pos = l->x.positions();
    if (a == kUp) return l->i == k && pos.back() == n;
    return l->i == 1 && pos.front() == 1;
  };
  for (const auto& a : kAGens)
    for (int r = 0; r < S.num_generators(); ++r) {
      const RookGen& rg = R.gens[static_cast<std::size_t>(r)];
      if (exceptional(a.id, rg)) continue;
      const BasisState x = rook_source(rg), y = rook_target(rg);
      D.add_relation(W({agen(a.id, x), side(r, a.tgt)}), W({side(r, a.src), agen(a.id, y)}));
    }

  if (boxed && opt.special_generators) {
    for (const auto& [key, id] : P.lower) {
      const BasisState x{n, key.first};
      const int i = key.second;
      for (int l = 1; l <= x.k(); ++l) {
        const bool blocked = (i == l + 1) && (!opt.chain_aware_exceptions || P.special_lower(x, i - 1) >= 0);
        if (blocked) continue;
        const int loop = R.loop(x, l);
        D.add_relation(W({id, side(loop, AVertex::EF)}), W({side(loop, AVertex::I), id}));
      }
      for (int r = 0; r < S.num_generators(); ++r) {
        const auto* e = std::get_if<ElementaryDiagram>(&R.gens[static_cast<std::size_t>(r)]);
        if (!e || !(e->x == x) || !(e->m < i)) continue;
        D.add_relation(W({id, side(r, AVertex::EF)}), W({side(r, AVertex::I), P.lower.at({e->y.mask, i})}));
      }
      D.add_zero_relation(W({id, agen(kDown, x)}));
      for (const auto& [key2, id2] : P.raise)
        if (key2.first == key.first) D.add_zero_relation(W({id, id2}));
    }
    for (const auto& [key, id] : P.raise) {
      const BasisState x{n, key.first};
      const int j = key.second;
      for (int l = 1; l <= x.k(); ++l) {
        const bool blocked = (j == l - 1) && (!opt.chain_aware_exceptions || P.special_raise(x, j + 1) >= 0);
        if (blocked) continue;
        const int loop = R.loop(x, l);
        D.add_relation(W({id, side(loop, AVertex::I)}), W({side(loop, AVertex::EF), id}));
      }
      for (int r = 0; r < S.num_generators(); ++r) {
        const auto* e = std::get_if<ElementaryDiagram>(&R.gens[static_cast<std::size_t>(r)]);
        if (!e || !(e->x == x) || !(j < e->i)) continue;
        D.add_relation(W({id, side(r, AVertex::I)}), W({side(r, AVertex::EF), P.raise.at({e->y.mask, j})}));
      }
      if (opt.zero_up_then_special) D.add_zero_relation(W({agen(kUp, x), id}));
    }
  }

  // Differentials.
  for (int r = 0; r < S.num_generators(); ++r)
    for (AVertex g : kAVertices) {
      std::vector<Word> terms;
      for (const Word& t : S.generator(r).d) terms.push_back(lift(t, g));
      if (!terms.empty()) D.set_differential(side(r, g), std::move(terms));
    }
  if (boxed && opt.special_generators) {
    for (const auto& [key, id] : P.lower) {
      const BasisState x{n, key.first};
      const int i = key.second;
      const int loop = R.loop(x, i);
      const int next = i == x.k() ? agen(kUp, x) : P.lower.at({key.first, i + 1});
      D.set_differential(id, {W({next, side(loop, AVertex::EF)}), W({side(loop, AVertex::I), next})});
    }
    for (const auto& [key, id] : P.raise) {
      const BasisState x{n, key.first};
      const int j = key.second;
      const int loop = R.loop(x, j);
      const int prev = j == 1 ? agen(kDown, x) : P.raise.at({key.first, j - 1});
      D.set_differential(id, {W({prev, side(loop, AVertex::I)}), W({side(loop, AVertex::EF), prev})});
    }
  }
  return P;
}

}  // namespace

ARAlgebra build_A_tensor(const RookAlgebra& R) { return build_product(R, false, {}); }

ARAlgebra build_A_box(const RookAlgebra& R, const BoxOptions& opt) { return build_product(R, true, opt); }

AlgebraMap collapse_decorations(const RookAlgebra& full, const RookAlgebra& coh) {
  if (!coh.alg.enumerated()) throw std::logic_error("target algebra must be enumerated");
  AlgebraMap f;
  f.src = &full.alg;
  f.dst = &coh.alg;
  for (int v = 0; v < full.alg.num_vertices(); ++v) f.vertex_map.push_back(v);
  for (const auto& g : full.gens) {
    int target = -1;
    if (const auto* l = std::get_if<LoopGen>(&g)) {
      target = coh.loop(l->x, l->i);
    } else {
      const auto& e = std::get<ElementaryDiagram>(g);
      if (e.is_unit()) target = coh.arrow(e.x, e.m, e.p);
    }
    f.gen_image.push_back(target < 0 ? Elt{} : coh.alg.gen_elt(target));
  }
  return f;
}

AlgebraMap forget_special(const ARAlgebra& box, const ARAlgebra& tensor) {
  if (!tensor.alg.enumerated()) throw std::logic_error("target algebra must be enumerated");
  if (box.n != tensor.n || box.side.size() != tensor.side.size()) throw std::invalid_argument("mismatched products");
  AlgebraMap f;
  f.src = &box.alg;
  f.dst = &tensor.alg;
  for (int v = 0; v < box.alg.num_vertices(); ++v) f.vertex_map.push_back(v);
  f.gen_image.assign(static_cast<std::size_t>(box.alg.num_generators()), Elt{});
  for (std::size_t r = 0; r < box.side.size(); ++r)
    for (std::size_t g = 0; g < 4; ++g)
      f.gen_image[static_cast<std::size_t>(box.side[r][g])] = tensor.alg.gen_elt(tensor.side[r][g]);
  for (const auto& [key, id] : box.a_gen) f.gen_image[static_cast<std::size_t>(id)] = tensor.alg.gen_elt(tensor.a_gen.at(key));
  return f;
}

DGAlgebra& ZooEntry::alg() {
  if (plain) return *plain;
  if (product) return product->alg;
  if (rook) return rook->alg;
  throw std::logic_error("empty zoo entry");
}

ZooEntry build_named(const std::string& which, int n, const BoxOptions& opt) {
  ZooEntry z;
  z.which = which;
  z.n = n;
  if (which == "A") {
    z.plain = std::make_unique<DGAlgebra>(build_A());
  } else if (which == "AoA") {
    z.plain = std::make_unique<DGAlgebra>(build_AoA());
  } else if (which == "B") {
    z.plain = std::make_unique<DGAlgebra>(build_B());
  } else if (which == "Rn" || which == "HRn") {
    z.rook = std::make_unique<RookAlgebra>(build_rook_algebra(n, which == "HRn"));
  } else if (which == "AxRn" || which == "AoRn" || which == "AoHRn") {
    const RookAlgebra R = build_rook_algebra(n, which == "AoHRn");
    z.product = std::make_unique<ARAlgebra>(which == "AxRn" ? build_A_box(R, opt) : build_A_tensor(R));
  } else {
    throw std::invalid_argument("unknown algebra '" + which + "' (expected A, AoA, B, Rn, HRn, AxRn, AoRn, AoHRn)");
  }
  z.alg().enumerate();
  return z;
}

}  // namespace catsl11
