#include "catsl11/rook.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace catsl11 {

ElementaryDiagram ElementaryDiagram::make(const BasisState& x, int m, int p) {
  const auto pos = x.positions();
  if (m < 1 || m > static_cast<int>(pos.size())) throw std::invalid_argument("strand index out of range");
  ElementaryDiagram d;
  d.x = x;
  d.m = m;
  d.p = p;
  d.b = pos[static_cast<std::size_t>(m - 1)];
  if (p < 1 || p >= d.b) throw std::invalid_argument("target position must lie left of the moving strand");
  if (x.occupied(p)) throw std::invalid_argument("target position is occupied");
  d.i = 1;
  for (int q : pos)
    if (q < p) ++d.i;
  d.s1 = m - d.i;
  d.y = x.without(d.b).with(p);
  const auto ypos = d.y.positions();
  for (int j = d.i; j <= m; ++j) d.v.push_back(pos[static_cast<std::size_t>(j - 1)] - ypos[static_cast<std::size_t>(j - 1)] - 1);
  d.s0 = 0;
  for (int c : d.v) d.s0 += c;
  return d;
}

std::vector<int> ElementaryDiagram::markings() const {
  std::vector<int> out;
  for (int q = p + 1; q < b; ++q)
    if (!x.occupied(q)) out.push_back(q);
  return out;
}

std::vector<int> ElementaryDiagram::crossed_strands() const {
  std::vector<int> out;
  for (int c = i; c < m; ++c) out.push_back(c);
  return out;
}

std::string ElementaryDiagram::label() const {
  std::string vs;
  for (std::size_t k = 0; k < v.size(); ++k) vs += (k ? "," : "") + std::to_string(v[k]);
  return "r(" + x.to_string() + "→(" + std::to_string(i) + "," + std::to_string(s1) + ",(" + vs + "))" +
         y.to_string() + ")";
}

std::string LoopGen::label() const { return "ρ(" + x.to_string() + "→" + std::to_string(i) + ")"; }

std::string rook_label(const RookGen& g) {
  return std::visit([](const auto& v) { return v.label(); }, g);
}

Bigrade rook_grade(const RookGen& g) {
  return std::visit([](const auto& v) { return v.grade(); }, g);
}

BasisState rook_source(const RookGen& g) {
  return std::visit([](const auto& v) { return v.x; }, g);
}

BasisState rook_target(const RookGen& g) {
  if (const auto* l = std::get_if<LoopGen>(&g)) return l->x;
  return std::get<ElementaryDiagram>(g).y;
}

BasisState DiagramWord::target() const { return gens.empty() ? src : rook_target(gens.back()); }

Bigrade DiagramWord::grade() const {
  Bigrade g;
  for (const auto& x : gens) g = g + rook_grade(x);
  return g;
}

std::string DiagramWord::to_string() const {
  if (gens.empty()) return "e(" + src.to_string() + ")";
  std::string s;
  for (const auto& g : gens) s += (s.empty() ? "" : "·") + rook_label(g);
  return s;
}

void DiagramWord::check_chain() const {
  BasisState cur = src;
  for (const auto& g : gens) {
    if (!(rook_source(g) == cur)) throw std::logic_error("diagram word does not chain: " + to_string());
    cur = rook_target(g);
  }
}

std::vector<ElementaryDiagram> all_elementary(int n) {
  std::vector<ElementaryDiagram> out;
  for (const auto& x : all_states(n)) {
    const auto pos = x.positions();
    for (int m = 1; m <= static_cast<int>(pos.size()); ++m)
      for (int p = 1; p < pos[static_cast<std::size_t>(m - 1)]; ++p)
        if (!x.occupied(p)) out.push_back(ElementaryDiagram::make(x, m, p));
  }
  return out;
}

DiagramWord resolve_marking(const ElementaryDiagram& d, int q) {
  const auto marks = d.markings();
  if (std::find(marks.begin(), marks.end(), q) == marks.end())
    throw std::invalid_argument("position " + std::to_string(q) + " carries no marking");
  const ElementaryDiagram first = ElementaryDiagram::make(d.x, d.m, q);
  const auto wpos = first.y.positions();
  const int idx = static_cast<int>(std::find(wpos.begin(), wpos.end(), q) - wpos.begin()) + 1;
  const ElementaryDiagram second = ElementaryDiagram::make(first.y, idx, d.p);
  DiagramWord w{d.x, {first, second}};
  w.check_chain();
  return w;
}

std::vector<DiagramWord> resolve_crossing(const ElementaryDiagram& d, int c) {
  if (c < d.i || c >= d.m) throw std::invalid_argument("strand " + std::to_string(c) + " is not crossed");
  const int pos_c = d.x.positions()[static_cast<std::size_t>(c - 1)];
  const ElementaryDiagram lower = ElementaryDiagram::make(d.x, c, d.p);
  const ElementaryDiagram upper = ElementaryDiagram::make(lower.y, d.m, pos_c);
  if (!(upper.y == d.y)) throw std::logic_error("crossing resolution changed the target");
  DiagramWord before{d.x, {LoopGen{d.x, c}, lower, upper}};
  DiagramWord after{d.x, {lower, upper, LoopGen{d.y, c + 1}}};
  before.check_chain();
  after.check_chain();
  return {before, after};
}

std::vector<DiagramWord> diagram_differential(const ElementaryDiagram& d) {
  std::vector<DiagramWord> out;
  for (int q : d.markings()) out.push_back(resolve_marking(d, q));
  for (int c : d.crossed_strands())
    for (auto& w : resolve_crossing(d, c)) out.push_back(std::move(w));
  return out;
}

std::string render_ascii(const ElementaryDiagram& d) {
  std::ostringstream os;
  auto row = [&](const BasisState& s) {
    std::string r;
    for (int q = 1; q <= s.n; ++q) r += std::string(s.occupied(q) ? "1" : "0") + " ";
    return r;
  };
  std::string mid;
  const auto crossed = d.crossed_strands();
  const auto pos = d.x.positions();
  for (int q = 1; q <= d.x.n; ++q) {
    char c = ' ';
    if (q == d.p) {
      c = '/';
    } else if (q == d.b) {
      c = '+';
    } else if (q > d.p && q < d.b) {
      c = d.x.occupied(q) ? 'x' : '*';
    } else if (d.x.occupied(q)) {
      c = '|';
    }
    mid += std::string(1, c) + " ";
  }
  os << "y: " << row(d.y) << "\n   " << mid << "\nx: " << row(d.x) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------

int RookAlgebra::loop(const BasisState& x, int i) const {
  auto it = loop_ids.find({x.mask, i});
  if (it == loop_ids.end()) throw std::invalid_argument("no loop " + std::to_string(i) + " at " + x.to_string());
  return it->second;
}

int RookAlgebra::arrow(const BasisState& x, int m, int p) const {
  auto it = arrow_ids.find({x.mask, m, p});
  return it == arrow_ids.end() ? -1 : it->second;
}

Word RookAlgebra::word(const DiagramWord& w) const {
  Word out;
  for (const auto& g : w.gens) {
    int id;
    if (const auto* l = std::get_if<LoopGen>(&g)) {
      id = loop(l->x, l->i);
    } else {
      const auto& e = std::get<ElementaryDiagram>(g);
      id = arrow(e.x, e.m, e.p);
      if (id < 0) throw std::invalid_argument("generator absent from this presentation: " + e.label());
    }
    out.push_back(static_cast<char16_t>(id));
  }
  return out;
}

namespace {

Trigrade tri(const Bigrade& b) { return Trigrade::from(b); }

Word w2(int a, int b) { return Word{static_cast<char16_t>(a), static_cast<char16_t>(b)}; }
Word w3(int a, int b, int c) {
  return Word{static_cast<char16_t>(a), static_cast<char16_t>(b), static_cast<char16_t>(c)};
}

}  // namespace

RookAlgebra build_rook_algebra(int n, bool cohomology_presentation) {
  if (n < 1 || n > 12) throw std::invalid_argument("n out of range");
  RookAlgebra R;
  R.n = n;
  R.cohomology_presentation = cohomology_presentation;
  R.alg = DGAlgebra(std::string(cohomology_presentation ? "H(R_" : "R_") + std::to_string(n) +
                    (cohomology_presentation ? ")" : ""));
  const auto states = all_states(n);
  for (const auto& x : states) R.alg.add_vertex(x.to_string());
  auto add = [&](const RookGen& g) {
    const int id = R.alg.add_generator(rook_label(g), static_cast<int>(rook_source(g).mask),
                                       static_cast<int>(rook_target(g).mask), tri(rook_grade(g)));
    R.gens.push_back(g);
    return id;
  };
  for (const auto& x : states)
    for (int i = 1; i <= x.k(); ++i) R.loop_ids[{x.mask, i}] = add(LoopGen{x, i});
  std::vector<ElementaryDiagram> arrows;
  for (const auto& d : all_elementary(n)) {
    if (cohomology_presentation && !d.is_unit()) continue;
    R.arrow_ids[{d.x.mask, d.m, d.p}] = add(d);
    arrows.push_back(d);
  }

  // Loops: nilpotent and pairwise commuting.
  for (const auto& x : states)
    for (int i = 1; i <= x.k(); ++i) {
      R.alg.add_zero_relation(w2(R.loop(x, i), R.loop(x, i)));
      for (int j = i + 1; j <= x.k(); ++j)
        R.alg.add_relation(w2(R.loop(x, i), R.loop(x, j)), w2(R.loop(x, j), R.loop(x, i)));
    }

  std::map<std::uint32_t, std::vector<const ElementaryDiagram*>> from;
  for (const auto& d : arrows) from[d.x.mask].push_back(&d);

  for (const auto& d : arrows) {
    const int r = R.arrow(d.x, d.m, d.p);
    // Loops slide past an arrow: unchanged index away from the moving strand,
    // shifted by one across a crossing.
    for (int l = 1; l <= d.x.k(); ++l) {
      if (l == d.m) continue;
      const int target_index = (l >= d.i && l < d.m) ? l + 1 : l;
      R.alg.add_relation(w2(R.loop(d.x, l), r), w2(r, R.loop(d.y, target_index)));
    }
    // Disjoint moves commute; the pair is stored with the left move first.
    for (const ElementaryDiagram* e : from[d.y.mask]) {
      if (!(d.b < e->p)) continue;
      const auto xpos = d.x.positions();
      const int idx = static_cast<int>(std::find(xpos.begin(), xpos.end(), e->b) - xpos.begin()) + 1;
      const ElementaryDiagram e2 = ElementaryDiagram::make(d.x, idx, e->p);
      const ElementaryDiagram d2 = ElementaryDiagram::make(e2.y, d.m, d.p);
      if (!(d2.y == e->y)) throw std::logic_error("disjoint moves do not commute on states");
      R.alg.add_relation(w2(r, R.arrow(d.y, e->m, e->p)), w2(R.arrow(d.x, idx, e->p), R.arrow(e2.y, d.m, d.p)));
    }
  }

  if (cohomology_presentation) {
    for (const auto& d : arrows)
      for (const ElementaryDiagram* e : from[d.y.mask]) {
        // Stacking two unit moves of the same strand index vanishes.
        if (e->i == d.i) R.alg.add_zero_relation(w2(R.arrow(d.x, d.m, d.p), R.arrow(e->x, e->m, e->p)));
        // The shadow of a crossing differential.
        if (e->i == d.i + 1 && e->y.positions()[static_cast<std::size_t>(d.i)] == d.b) {
          const int a = R.arrow(d.x, d.m, d.p), b = R.arrow(e->x, e->m, e->p);
          R.alg.add_relation(w3(R.loop(d.x, d.i), a, b), w3(a, b, R.loop(e->y, d.i + 1)));
        }
      }
  } else {
    for (const auto& d : arrows) {
      std::vector<Word> terms;
      for (const auto& w : diagram_differential(d)) terms.push_back(R.word(w));
      R.alg.set_differential(R.arrow(d.x, d.m, d.p), std::move(terms));
    }
  }
  return R;
}

// ---------------------------------------------------------------------------

CheckResult check_decoration_conservation(int n, int max_decorations) {
  CheckResult r{"resolutions conserve decorations and raise the degree by (1,0)"};
  for (const auto& d : all_elementary(n)) {
    if (d.s1 + d.s0 > max_decorations) continue;
    const Bigrade target = d.grade() + Bigrade{1, 0};
    auto totals = [](const DiagramWord& w) {
      int s1 = 0, s0 = 0;
      for (const auto& g : w.gens)
        if (const auto* e = std::get_if<ElementaryDiagram>(&g)) {
          s1 += e->s1;
          s0 += e->s0;
        }
      return std::pair{s1, s0};
    };
    for (int q : d.markings()) {
      const DiagramWord w = resolve_marking(d, q);
      const auto [s1, s0] = totals(w);
      r.record(s1 == d.s1 && s0 == d.s0 - 1 && w.grade() == target && w.target() == d.y && w.gens.size() == 2,
               d.label() + " marking " + std::to_string(q) + " -> " + w.to_string());
    }
    for (int c : d.crossed_strands())
      for (const auto& w : resolve_crossing(d, c)) {
        const auto [s1, s0] = totals(w);
        r.record(s1 == d.s1 - 1 && s0 == d.s0 && w.grade() == target && w.target() == d.y,
                 d.label() + " crossing " + std::to_string(c) + " -> " + w.to_string());
      }
  }
  return r;
}

CheckResult check_rook_d_squared(const RookAlgebra& R, int max_decorations) {
  CheckResult r{"d^2 = 0 on elementary diagrams"};
  const DGAlgebra& A = R.alg;
  std::unordered_map<Word, std::optional<Word>> cache;
  auto nf = [&](const Word& w) -> const std::optional<Word>& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, A.normal_form(w)).first;
    return it->second;
  };
  for (std::size_t g = 0; g < R.gens.size(); ++g) {
    const auto* e = std::get_if<ElementaryDiagram>(&R.gens[g]);
    if (!e || e->s1 + e->s0 > max_decorations) continue;
    std::map<Word, int> parity;
    for (const Word& t : A.generator(static_cast<int>(g)).d)
      for (std::size_t pos = 0; pos < t.size(); ++pos)
        for (const Word& s : A.generator(t[pos]).d) {
          const Word full = t.substr(0, pos) + s + t.substr(pos + 1);
          const auto& canon = nf(full);
          if (canon) parity[*canon] ^= 1;
        }
    std::string leftover;
    for (const auto& [w, c] : parity)
      if (c) leftover += (leftover.empty() ? "" : " + ") + A.word_to_string(w);
    r.record(leftover.empty(), e->label() + ": d^2 = " + leftover + "\n" + render_ascii(*e));
  }
  return r;
}

CheckResult check_normal_form_confluence(const RookAlgebra& R, int trials, unsigned seed) {
  CheckResult r{"normal form is invariant under random rewrites"};
  const DGAlgebra& A = R.alg;
  std::mt19937 rng(seed);
  std::unordered_map<Word, std::vector<Word>> sides;
  for (const auto& [u, v] : A.relations()) {
    sides[u].push_back(v);
    sides[v].push_back(u);
  }
  std::vector<std::vector<int>> out(static_cast<std::size_t>(A.num_vertices()));
  for (int g = 0; g < A.num_generators(); ++g) out[static_cast<std::size_t>(A.generator(g).src)].push_back(g);
  int done = 0;
  while (done < trials) {
    // A random path of length 2..4.
    std::uniform_int_distribution<int> vdist(0, A.num_vertices() - 1), ldist(2, 4);
    int v = vdist(rng);
    const int len = ldist(rng);
    Word w;
    for (int s = 0; s < len; ++s) {
      const auto& choices = out[static_cast<std::size_t>(v)];
      if (choices.empty()) break;
      const int g = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
      w.push_back(static_cast<char16_t>(g));
      v = A.generator(g).tgt;
    }
    if (w.size() < 2) continue;
    const auto start = A.normal_form(w);
    Word cur = w;
    for (int step = 0; step < 8; ++step) {
      std::vector<std::pair<std::size_t, const Word*>> moves;  // (position, replacement)
      std::vector<std::size_t> lens;
      for (std::size_t pos = 0; pos < cur.size(); ++pos)
        for (std::size_t l = 2; l <= 3 && pos + l <= cur.size(); ++l) {
          auto it = sides.find(cur.substr(pos, l));
          if (it == sides.end()) continue;
          for (const Word& alt : it->second) {
            moves.push_back({pos, &alt});
            lens.push_back(l);
          }
        }
      if (moves.empty()) break;
      const std::size_t k = std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng);
      cur.replace(moves[k].first, lens[k], *moves[k].second);
      ++done;
      r.record(A.normal_form(cur) == start, A.word_to_string(w) + " -> " + A.word_to_string(cur));
    }
  }
  return r;
}

}  // namespace catsl11
