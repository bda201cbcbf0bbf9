#include "catsl11/vn_rep.hpp"

#include <stdexcept>

namespace catsl11 {

BasisState BasisState::from_positions(int n, const std::vector<int>& positions) {
  if (n < 1 || n > 30) throw std::invalid_argument("state length out of range");
  BasisState s{n, 0};
  int prev = 0;
  for (int p : positions) {
    if (p <= prev || p > n) throw std::invalid_argument("positions must be strictly increasing within 1..n");
    s.mask |= 1u << (n - p);
    prev = p;
  }
  return s;
}

BasisState BasisState::parse(const std::string& text) {
  std::string body = text;
  auto strip_prefix = [&](const std::string& pre) {
    if (body.rfind(pre, 0) == 0) body = body.substr(pre.size());
  };
  auto strip_suffix = [&](const std::string& suf) {
    if (body.size() >= suf.size() && body.compare(body.size() - suf.size(), suf.size(), suf) == 0)
      body.resize(body.size() - suf.size());
  };
  strip_prefix("|");
  strip_suffix("⟩");
  strip_suffix(">");
  if (body.empty() || body.size() > 30) throw std::invalid_argument("bad state literal '" + text + "'");
  BasisState s{static_cast<int>(body.size()), 0};
  for (char c : body) {
    if (c != '0' && c != '1') throw std::invalid_argument("bad state literal '" + text + "'");
    s.mask = (s.mask << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return s;
}

std::vector<int> BasisState::positions() const {
  std::vector<int> out;
  for (int p = 1; p <= n; ++p)
    if (occupied(p)) out.push_back(p);
  return out;
}

std::vector<int> BasisState::complement() const {
  std::vector<int> out;
  for (int p = 1; p <= n; ++p)
    if (!occupied(p)) out.push_back(p);
  return out;
}

BasisState BasisState::with(int p) const { return {n, mask | (1u << (n - p))}; }
BasisState BasisState::without(int p) const { return {n, mask & ~(1u << (n - p))}; }

std::string BasisState::bits() const {
  std::string s;
  for (int p = 1; p <= n; ++p) s += occupied(p) ? '1' : '0';
  return s;
}

std::string BasisState::to_string() const { return "|" + bits() + "⟩"; }

std::vector<BasisState> all_states(int n) {
  std::vector<BasisState> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) out.push_back({n, m});
  return out;
}

std::vector<BasisState> states_with_k(int n, int k) {
  std::vector<BasisState> out;
  for (const auto& s : all_states(n))
    if (s.k() == k) out.push_back(s);
  return out;
}

// ---------------------------------------------------------------------------

VnElt VnElt::basis(const BasisState& s, const LaurentPoly& c) {
  VnElt v(s.n);
  v.add(s, c);
  return v;
}

void VnElt::add(const BasisState& s, const LaurentPoly& c) {
  if (n == 0) n = s.n;
  if (s.n != n) throw std::invalid_argument("mixing states of different length");
  if (c.is_zero()) return;
  auto it = coords.find(s.mask);
  if (it == coords.end()) {
    coords.emplace(s.mask, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coords.erase(it);
}

VnElt VnElt::operator+(const VnElt& o) const {
  VnElt r = *this;
  if (r.n == 0) r.n = o.n;
  for (const auto& [m, c] : o.coords) r.add({o.n, m}, c);
  return r;
}

VnElt VnElt::operator-(const VnElt& o) const { return *this + o.scaled(poly_t(0, -1)); }

VnElt VnElt::scaled(const LaurentPoly& c) const {
  VnElt r(n);
  for (const auto& [m, k] : coords) r.add({n, m}, k * c);
  return r;
}

bool VnElt::operator==(const VnElt& o) const {
  if (coords.empty() && o.coords.empty()) return true;
  return n == o.n && coords == o.coords;
}

LaurentPoly VnElt::coeff(const BasisState& s) const {
  auto it = coords.find(s.mask);
  return it == coords.end() ? LaurentPoly() : it->second;
}

std::string VnElt::to_string() const {
  if (coords.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : coords) {
    if (!out.empty()) out += " + ";
    LaurentPoly cc = c;
    cc.set_vars({"t"});
    out += "(" + cc.to_string() + ")·" + BasisState{n, m}.to_string();
  }
  return out;
}

nlohmann::json VnElt::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [m, c] : coords) j[BasisState{n, m}.bits()] = c.to_json();
  return j;
}

// ---------------------------------------------------------------------------

int beta(const BasisState& x, int p) {
  if (p < 1 || p > x.n) throw std::invalid_argument("position out of range");
  if (x.occupied(p)) throw std::invalid_argument("beta is defined only at an unoccupied position");
  int below = 0, above = 0;
  for (int q : x.positions()) (q < p ? below : above) += 1;
  return below + 2 * above;
}

VnElt act_F(const BasisState& x) {
  VnElt out(x.n);
  for (int p : x.complement()) out.add(x.with(p), poly_t(x.n - p, beta(x, p) % 2 ? -1 : 1));
  return out;
}

VnElt act_E(const BasisState& x) {
  VnElt out(x.n);
  const auto pos = x.positions();
  for (std::size_t i = 1; i <= pos.size(); ++i) {
    const std::int64_t sign = (i % 2 == 1) ? 1 : -1;  // (-1)^{1-i}
    out.add(x.without(pos[i - 1]), poly_t(0, sign) + poly_t(1, -sign));
  }
  return out;
}

VnElt act_T(const VnElt& v) { return v.scaled(poly_t(v.n)); }

namespace {

VnElt apply_linear(const VnElt& v, VnElt (*op)(const BasisState&)) {
  VnElt out(v.n);
  for (const auto& [m, c] : v.coords) out = out + op({v.n, m}).scaled(c);
  return out;
}

}  // namespace

VnElt act_basis(UtBasis b, const BasisState& x) {
  switch (b) {
    case UtBasis::I: return VnElt::basis(x);
    case UtBasis::F: return act_F(x);
    case UtBasis::E: return act_E(x);
    case UtBasis::EF: return apply_linear(act_F(x), act_E);
  }
  return VnElt(x.n);
}

VnElt act(const UtElt& a, const VnElt& v) {
  VnElt out(v.n);
  for (UtBasis b : kUtBasis) {
    if (a[b].is_zero()) continue;
    const LaurentPoly scalar = a[b].substitute<1>({{{v.n}}});  // T acts as t^n
    for (const auto& [m, c] : v.coords) out = out + act_basis(b, {v.n, m}).scaled(c * scalar);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// The defining table of V1; EF acts as E after F.
VnElt act_on_v1(UtBasis b, bool one) {
  const BasisState zero{1, 0}, up{1, 1};
  switch (b) {
    case UtBasis::I: return VnElt::basis(one ? up : zero);
    case UtBasis::F: return one ? VnElt(1) : VnElt::basis(up);
    case UtBasis::E: return one ? VnElt::basis(zero, poly_t(0) - poly_t(1)) : VnElt(1);
    case UtBasis::EF: return one ? VnElt(1) : VnElt::basis(zero, poly_t(0) - poly_t(1));
  }
  return VnElt(1);
}

}  // namespace

VnElt act_by_comultiplication(UtBasis b, const BasisState& x) {
  if (x.n == 1) return act_on_v1(b, x.mask & 1u);
  const BasisState head{x.n - 1, x.mask >> 1};
  const bool tail_one = x.mask & 1u;
  const int head_parity = head.k() % 2;
  const UtTensorElt d = ut_comul(UtElt::basis(b));
  VnElt out(x.n);
  for (UtBasis b1 : kUtBasis)
    for (UtBasis b2 : kUtBasis) {
      const LaurentPoly2& c = d.at(b1, b2);
      if (c.is_zero()) continue;
      // T (x) I acts on the head as t^{n-1}, I (x) T on the tail as t.
      LaurentPoly scalar = c.substitute<1>({{{x.n - 1}, {1}}});
      if (head_parity && (parity(b2) % 2 != 0)) scalar = -scalar;
      const VnElt left = act_by_comultiplication(b1, head);
      const VnElt right = act_on_v1(b2, tail_one);
      for (const auto& [ml, cl] : left.coords)
        for (const auto& [mr, cr] : right.coords)
          out.add({x.n, (ml << 1) | mr}, cl * cr * scalar);
    }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct CaseTracker {
  AxiomResult r;
  explicit CaseTracker(std::string name) { r.axiom = std::move(name); }
  void record(bool ok, const std::string& witness) {
    ++r.cases;
    if (!ok && r.pass) {
      r.pass = false;
      r.counterexample = witness;
    }
  }
};

VnElt act_elt(UtBasis b, const VnElt& v) {
  VnElt out(v.n);
  for (const auto& [m, c] : v.coords) out = out + act_basis(b, {v.n, m}).scaled(c);
  return out;
}

// The action on V1 (x) V1 written out by hand; used as a fixed reference table.
struct TableRow {
  const char* op;
  const char* state;
  std::vector<std::pair<const char*, const char*>> terms;  // (state, coefficient)
};

const std::vector<TableRow>& two_site_table() {
  static const std::vector<TableRow> rows = {
      {"E", "00", {}},
      {"F", "00", {{"01", "1"}, {"10", "t"}}},
      {"E", "01", {{"00", "1 - t"}}},
      {"F", "01", {{"11", "t"}}},
      {"E", "10", {{"00", "1 - t"}}},
      {"F", "10", {{"11", "-1"}}},
      {"E", "11", {{"01", "1 - t"}, {"10", "-1 + t"}}},
      {"F", "11", {}},
  };
  return rows;
}

}  // namespace

std::vector<AxiomResult> verify_rep(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("verify_rep: n out of range");
  const auto states = all_states(n);
  CaseTracker e2("E^2 = 0"), f2("F^2 = 0"), comm("EF + FE = (1 - t^n) id"), tact("T = t^n id"),
      central("T commutes with E and F"), weight("F raises k by one, E lowers k by one"),
      iter("closed form agrees with iterated comultiplication");
  const LaurentPoly tn = poly_t(n);
  for (const auto& x : states) {
    const VnElt v = VnElt::basis(x);
    const VnElt fx = act_F(x), ex = act_E(x);
    e2.record(act_elt(UtBasis::E, ex).is_zero(), "E E " + x.to_string());
    f2.record(act_elt(UtBasis::F, fx).is_zero(), "F F " + x.to_string());
    const VnElt lhs = act_elt(UtBasis::E, fx) + act_elt(UtBasis::F, ex);
    const VnElt rhs = v.scaled(poly_t(0) - tn);
    comm.record(lhs == rhs, x.to_string() + ": " + lhs.to_string() + " vs " + rhs.to_string());
    const VnElt tv = act(UtElt::basis(UtBasis::I, poly_T(1)), v);
    tact.record(tv == v.scaled(tn), x.to_string() + ": " + tv.to_string());
    central.record(act_T(fx) == act_elt(UtBasis::F, act_T(v)) && act_T(ex) == act_elt(UtBasis::E, act_T(v)),
                   x.to_string());
    bool ok = true;
    for (const auto& [m, c] : fx.coords) ok = ok && BasisState{n, m}.k() == x.k() + 1;
    for (const auto& [m, c] : ex.coords) ok = ok && BasisState{n, m}.k() == x.k() - 1;
    weight.record(ok, x.to_string());
    for (UtBasis b : kUtBasis) {
      const VnElt closed = act_basis(b, x), rec = act_by_comultiplication(b, x);
      iter.record(closed == rec, std::string(basis_name(b)) + x.to_string() + ": " + closed.to_string() + " vs " +
                                     rec.to_string());
    }
  }
  std::vector<AxiomResult> out = {e2.r, f2.r, comm.r, tact.r, central.r, weight.r, iter.r};
  if (n == 2) {
    CaseTracker table("two-site table reproduced by iterated comultiplication");
    for (const auto& row : two_site_table()) {
      VnElt expect(2);
      for (const auto& [s, c] : row.terms) expect.add(BasisState::parse(s), LaurentPoly::parse(c));
      const UtBasis op = parse_basis(row.op);
      const VnElt got = act_by_comultiplication(op, BasisState::parse(row.state));
      table.record(got == expect, std::string(row.op) + "|" + row.state + "⟩: " + got.to_string());
    }
    out.push_back(table.r);
  }
  return out;
}

}  // namespace catsl11
