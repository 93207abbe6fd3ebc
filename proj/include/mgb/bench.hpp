#pragma once

// Benchmark families, the plain-text system format, and the brute-force
// solution oracle.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mgb/errors.hpp"
#include "mgb/polynomial.hpp"

namespace mgb {

struct System {
  PolyRing ring;
  std::vector<Polynomial> polys;
};

enum class Family { cyclic, katsura, eco };

struct BenchSpec {
  Family family = Family::cyclic;
  std::size_t n = 0;
  std::uint64_t q = 2;
  MonomialOrder order{};
};

inline Family parse_family(std::string_view s) {
  if (s == "cyclic") return Family::cyclic;
  if (s == "katsura") return Family::katsura;
  if (s == "eco") return Family::eco;
  throw InvalidSize("unknown benchmark family '" + std::string(s) + "'");
}

namespace detail {

inline Term signed_term(std::int64_t c, Monomial m, const FieldSpec& F) { return Term{F.reduce(c), std::move(m)}; }

}  // namespace detail

inline System gen_system(const BenchSpec& spec) {
  const FieldSpec F(spec.q);
  const std::size_t n = spec.n;
  switch (spec.family) {
    case Family::cyclic: {
      if (n < 2) throw InvalidSize("cyclic needs n >= 2");
      PolyRing ring(F, n, spec.order);
      std::vector<Polynomial> out;
      for (std::size_t k = 1; k < n; ++k) {
        std::vector<Term> raw;
        for (std::size_t i = 0; i < n; ++i) {
          Monomial m(n);
          for (std::size_t j = 0; j < k; ++j) m.set((i + j) % n, m[(i + j) % n] + 1);
          raw.push_back({1, std::move(m)});
        }
        out.push_back(poly_normalize(std::move(raw), ring));
      }
      Monomial all(std::vector<Exponent>(n, 1));
      out.push_back(poly_normalize({Term{1, all}, detail::signed_term(-1, ring.one(), F)}, ring));
      return {ring, out};
    }
    case Family::katsura: {
      if (n < 1) throw InvalidSize("katsura needs n >= 1");
      std::vector<std::string> names;
      for (std::size_t i = 0; i <= n; ++i) names.push_back("u" + std::to_string(i));
      PolyRing ring(F, names, spec.order);
      const std::size_t nv = n + 1;
      std::vector<Polynomial> out;
      {
        std::vector<Term> raw{Term{1, ring.var(0)}};
        for (std::size_t i = 1; i <= n; ++i) raw.push_back(detail::signed_term(2, ring.var(i), F));
        raw.push_back(detail::signed_term(-1, ring.one(), F));
        out.push_back(poly_normalize(std::move(raw), ring));
      }
      const auto N = static_cast<std::int64_t>(n);
      for (std::int64_t k = 0; k < N; ++k) {
        std::vector<Term> raw;
        for (std::int64_t i = -N; i <= N; ++i) {
          std::int64_t j = k - i;
          if (j < -N || j > N) continue;
          Monomial m(nv);
          auto a = static_cast<std::size_t>(std::llabs(i));
          auto b = static_cast<std::size_t>(std::llabs(j));
          m.set(a, m[a] + 1);
          m.set(b, m[b] + 1);
          raw.push_back({1, std::move(m)});
        }
        raw.push_back(detail::signed_term(-1, ring.var(static_cast<std::size_t>(k)), F));
        out.push_back(poly_normalize(std::move(raw), ring));
      }
      return {ring, out};
    }
    case Family::eco: {
      if (n < 3) throw InvalidSize("eco needs n >= 3");
      PolyRing ring(F, n, spec.order);
      std::vector<Polynomial> out;
      const std::size_t last = n - 1;
      for (std::size_t k = 1; k <= n - 1; ++k) {
        // x_n * (x_k + sum_{i=1}^{n-k-1} x_i x_{i+k}) - k, 1-based indices.
        std::vector<Term> raw;
        Monomial m = ring.var(k - 1) * ring.var(last);
        raw.push_back({1, m});
        for (std::size_t i = 1; i + k <= n - 1; ++i)
          raw.push_back({1, ring.var(i - 1) * ring.var(i + k - 1) * ring.var(last)});
        raw.push_back(detail::signed_term(-static_cast<std::int64_t>(k), ring.one(), F));
        out.push_back(poly_normalize(std::move(raw), ring));
      }
      std::vector<Term> raw;
      for (std::size_t i = 0; i + 1 < n; ++i) raw.push_back({1, ring.var(i)});
      raw.push_back({1, ring.one()});
      out.push_back(poly_normalize(std::move(raw), ring));
      return {ring, out};
    }
  }
  throw InvalidSize("unknown family");
}

/// Standard homogenization with a fresh least variable.
inline System homogenize(const System& sys) {
  auto names = sys.ring.names();
  std::string h = "h";
  while (std::find(names.begin(), names.end(), h) != names.end()) h += "_";
  names.push_back(h);
  PolyRing ring(sys.ring.field(), names, sys.ring.order());
  std::vector<Polynomial> out;
  for (const auto& p : sys.polys) {
    const auto d = p.degree();
    std::vector<Term> raw;
    for (const auto& t : p.terms()) {
      std::vector<Exponent> e(t.mono.exponents().begin(), t.mono.exponents().end());
      e.push_back(static_cast<Exponent>(d - t.mono.degree()));
      raw.push_back({t.coeff, Monomial(std::move(e))});
    }
    out.push_back(poly_normalize(std::move(raw), ring));
  }
  return {ring, out};
}

// ---------------------------------------------------------------------------
// Text format

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t line, const PolyRing& ring,
             const std::unordered_map<std::string, std::size_t>& vars)
      : s_(text), line_(line), ring_(ring), vars_(vars) {}

  Polynomial parse() {
    std::vector<Term> raw;
    skip_ws();
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = get() == '-';
    }
    parse_term(raw, negate);
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      get();
      parse_term(raw, c == '-');
    }
    return poly_normalize(std::move(raw), ring_);
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, pos_ + 1, msg); }

  std::uint64_t parse_int() {
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(get() - '0');
      if (v > (1ull << 40)) {
        pos_ = start;
        fail("integer literal too large");
      }
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  void parse_term(std::vector<Term>& raw, bool negate) {
    const auto& F = ring_.field();
    Coeff c = 1;
    Monomial m = ring_.one();
    bool first = true;
    while (true) {
      skip_ws();
      if (!first) {
        if (peek() != '*') break;
        get();
        skip_ws();
      }
      first = false;
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c = F.mul(c, F.reduce(static_cast<std::int64_t>(parse_int() % F.q())));
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        std::string name(s_.substr(start, pos_ - start));
        auto it = vars_.find(name);
        if (it == vars_.end()) {
          pos_ = start;
          fail("unknown variable '" + name + "'");
        }
        Exponent e = 1;
        skip_ws();
        if (peek() == '^') {
          get();
          skip_ws();
          std::size_t at = pos_;
          auto v = parse_int();
          if (v == 0 || v > 1000000) {
            pos_ = at;
            fail("exponent must be a positive integer");
          }
          e = static_cast<Exponent>(v);
        }
        m = m * ring_.var(it->second, e);
      } else {
        fail(at_end() ? "unexpected end of line" : std::string("unexpected character '") + ch + "'");
      }
    }
    if (negate) c = F.neg(c);
    raw.push_back({c, std::move(m)});
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
  const PolyRing& ring_;
  const std::unordered_map<std::string, std::size_t>& vars_;
};

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses "field <prime>", "vars <names...>", then one polynomial per line.
/// Blank lines and lines starting with '#' are ignored.
inline System parse_system(std::string_view text, MonomialOrder order = {}) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    lines.emplace_back(lineno, line);
  }
  if (lines.size() < 2) throw ParseError(lineno + 1, 1, "expected 'field' and 'vars' header lines");

  auto header = [](std::pair<std::size_t, std::string_view> l, std::string_view kw) {
    auto s = l.second;
    std::size_t off = s.find_first_not_of(" \t");
    if (s.substr(off, kw.size()) != kw || off + kw.size() >= s.size() ||
        !std::isspace(static_cast<unsigned char>(s[off + kw.size()])))
      throw ParseError(l.first, off + 1, "expected '" + std::string(kw) + "'");
    return std::pair{off + kw.size(), s};
  };

  auto [foff, fline] = header(lines[0], "field");
  std::uint64_t q = 0;
  {
    std::size_t i = fline.find_first_not_of(" \t", foff);
    std::size_t start = i;
    while (i < fline.size() && std::isdigit(static_cast<unsigned char>(fline[i]))) q = q * 10 + (fline[i++] - '0');
    if (i == start || q > (1ull << 40)) throw ParseError(lines[0].first, start + 1, "expected a field size");
    if (!detail::trim(fline.substr(i)).empty()) throw ParseError(lines[0].first, i + 1, "trailing characters");
  }
  FieldSpec F(q);  // throws NonPrimeField

  auto [voff, vline] = header(lines[1], "vars");
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> index;
  {
    std::size_t i = voff;
    while (i < vline.size()) {
      while (i < vline.size() && std::isspace(static_cast<unsigned char>(vline[i]))) ++i;
      if (i >= vline.size()) break;
      std::size_t start = i;
      if (!(std::isalpha(static_cast<unsigned char>(vline[i])) || vline[i] == '_'))
        throw ParseError(lines[1].first, i + 1, "invalid variable name");
      while (i < vline.size() && (std::isalnum(static_cast<unsigned char>(vline[i])) || vline[i] == '_')) ++i;
      if (i < vline.size() && !std::isspace(static_cast<unsigned char>(vline[i])))
        throw ParseError(lines[1].first, i + 1, "invalid variable name");
      std::string name(vline.substr(start, i - start));
      if (!index.emplace(name, names.size()).second)
        throw ParseError(lines[1].first, start + 1, "duplicate variable '" + name + "'");
      names.push_back(name);
    }
    if (names.empty()) throw ParseError(lines[1].first, voff + 1, "no variables declared");
  }
  PolyRing ring(F, names, order);
  std::vector<Polynomial> polys;
  for (std::size_t k = 2; k < lines.size(); ++k)
    polys.push_back(detail::PolyParser(lines[k].second, lines[k].first, ring, index).parse());
  return {ring, polys};
}

inline std::string print_system(const System& sys) {
  std::ostringstream os;
  os << "field " << sys.ring.q() << "\nvars";
  for (const auto& n : sys.ring.names()) os << ' ' << n;
  os << '\n';
  for (const auto& p : sys.polys) os << to_string(p, sys.ring) << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Brute-force oracle

/// Every point of GF(q)^n where all of F vanish, in lexicographic order.
/// Evaluates from per-variable power tables; shares no code with the
/// reduction machinery.
inline std::vector<std::vector<Coeff>> brute_force_solutions(const std::vector<Polynomial>& F, const PolyRing& ring,
                                                             std::uint64_t limit = 1ull << 24) {
  const std::uint64_t q = ring.q();
  const std::size_t n = ring.nvars();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= q;
    if (total > limit) throw TooLarge("q^n exceeds the brute-force limit");
  }
  struct FlatTerm {
    std::uint64_t coeff;
    std::vector<std::pair<std::size_t, Exponent>> factors;
  };
  std::vector<std::vector<FlatTerm>> flat;
  Exponent max_e = 1;
  for (const auto& f : F) {
    std::vector<FlatTerm> terms;
    for (const auto& t : f.terms()) {
      FlatTerm ft{t.coeff, {}};
      for (std::size_t i = 0; i < n; ++i)
        if (t.mono[i]) {
          ft.factors.emplace_back(i, t.mono[i]);
          max_e = std::max(max_e, t.mono[i]);
        }
      terms.push_back(std::move(ft));
    }
    flat.push_back(std::move(terms));
  }
  // pow_table[a][e] = a^e mod q
  std::vector<std::vector<std::uint64_t>> pow_table(q, std::vector<std::uint64_t>(max_e + 1, 1));
  for (std::uint64_t a = 0; a < q; ++a)
    for (Exponent e = 1; e <= max_e; ++e) pow_table[a][e] = pow_table[a][e - 1] * a % q;

  std::vector<std::vector<Coeff>> out;
  std::vector<Coeff> point(n, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    bool all_zero = true;
    for (const auto& poly : flat) {
      std::uint64_t acc = 0;
      for (const auto& t : poly) {
        std::uint64_t v = t.coeff;
        for (auto [var, e] : t.factors) v = v * pow_table[point[var]][e] % q;
        acc = (acc + v) % q;
      }
      if (acc != 0) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) out.push_back(point);
    for (std::size_t i = n; i-- > 0;) {
      if (++point[i] < q) break;
      point[i] = 0;
    }
  }
  return out;
}

}  // namespace mgb
