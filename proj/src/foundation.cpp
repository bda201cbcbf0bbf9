#include "catsl11/foundation.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace catsl11 {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

std::int64_t checked_neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("integer overflow in negation");
  return -a;
}

template <std::size_t N>
std::string LaurentPolyN<N>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < N; ++i) {
      if (e[i] == 0) continue;
      mono += vars_[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    const bool neg = c < 0;
    const std::uint64_t mag = neg ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (mono.empty() || mag != 1) os << mag;
    os << mono;
    first = false;
  }
  return os.str();
}

template <std::size_t N>
nlohmann::json LaurentPolyN<N>::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : terms_) {
    if constexpr (N == 1) {
      out.push_back({e[0], c});
    } else {
      nlohmann::json ex = nlohmann::json::array();
      for (int v : e) ex.push_back(v);
      out.push_back({ex, c});
    }
  }
  return out;
}

template <std::size_t N>
LaurentPolyN<N> LaurentPolyN<N>::from_json(const nlohmann::json& j) {
  LaurentPolyN p;
  if (!j.is_array()) throw std::invalid_argument("Laurent polynomial JSON must be an array");
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw std::invalid_argument("bad Laurent term");
    Exponent e{};
    if constexpr (N == 1) {
      e[0] = term[0].get<int>();
    } else {
      if (!term[0].is_array() || term[0].size() != N) throw std::invalid_argument("bad exponent vector");
      for (std::size_t i = 0; i < N; ++i) e[i] = term[0][i].get<int>();
    }
    p.add_term(e, term[1].get<std::int64_t>());
  }
  return p;
}

template <std::size_t N>
LaurentPolyN<N> LaurentPolyN<N>::parse(const std::string& s, std::array<std::string, N> vars) {
  LaurentPolyN p(vars);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse Laurent polynomial '" + s + "': " + why);
  };
  auto read_int = [&]() -> std::int64_t {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) fail("expected integer");
    std::int64_t v = 0;
    bool neg = s[start] == '-';
    for (std::size_t i = start + ((s[start] == '-' || s[start] == '+') ? 1 : 0); i < pos; ++i)
      v = checked_add(checked_mul(v, 10), s[i] - '0');
    return neg ? -v : v;
  };
  skip();
  if (s.substr(pos) == "0") return p;
  bool first = true;
  while (true) {
    skip();
    if (pos >= s.size()) break;
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      fail("expected sign between terms");
    }
    std::int64_t c = 1;
    bool had_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      c = read_int();
      had_coeff = true;
    }
    Exponent e{};
    bool any_var = false;
    while (pos < s.size()) {
      std::size_t best = N;
      std::size_t best_len = 0;
      for (std::size_t i = 0; i < N; ++i)
        if (!vars[i].empty() && s.compare(pos, vars[i].size(), vars[i]) == 0 && vars[i].size() > best_len) {
          best = i;
          best_len = vars[i].size();
        }
      if (best == N) break;
      pos += best_len;
      int ex = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        ex = static_cast<int>(read_int());
      }
      e[best] += ex;
      any_var = true;
    }
    if (!any_var && !had_coeff) fail("empty term");
    p.add_term(e, checked_mul(sign, c));
    first = false;
  }
  return p;
}

template class LaurentPolyN<1>;
template class LaurentPolyN<2>;
template class LaurentPolyN<3>;

LaurentPoly poly_T(int e, std::int64_t c) {
  LaurentPoly p({"T"});
  p.add_term({e}, c);
  return p;
}

LaurentPoly poly_t(int e, std::int64_t c) {
  LaurentPoly p({"t"});
  p.add_term({e}, c);
  return p;
}

LaurentPoly laurent_substitute(const LaurentPoly2& p, int a, int b, const std::string& var) {
  LaurentPoly r = p.substitute<1>({{{a}, {b}}});
  r.set_vars({var});
  return r;
}

std::string Bigrade::to_string() const { return "(" + std::to_string(h) + "," + std::to_string(t) + ")"; }

std::string Trigrade::to_string() const {
  return "(" + std::to_string(h) + ";" + std::to_string(t1) + "," + std::to_string(t2) + ")";
}

}  // namespace catsl11
