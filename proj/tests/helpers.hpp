#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "mgb/bench.hpp"
#include "mgb/engine.hpp"
#include "mgb/polynomial.hpp"

namespace mgbtest {

using namespace mgb;

inline PolyRing make_ring(std::uint64_t q, std::vector<std::string> names, OrderKind kind = OrderKind::lex) {
  return PolyRing(FieldSpec(q), std::move(names), MonomialOrder{kind});
}

/// Parses one polynomial in the ring's variable names.
inline Polynomial P(const PolyRing& ring, const std::string& text) {
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < ring.nvars(); ++i) idx[ring.name(i)] = i;
  return detail::PolyParser(text, 1, ring, idx).parse();
}

inline std::vector<Polynomial> Ps(const PolyRing& ring, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(P(ring, t));
  return out;
}

inline std::vector<std::string> strs(const std::vector<Polynomial>& G, const PolyRing& ring) {
  std::vector<std::string> out;
  for (const auto& g : G) out.push_back(to_string(g, ring));
  return out;
}

/// Dense map-based polynomial arithmetic, written without any of the library's
/// term machinery. Used to cross-check products and S-polynomials.
struct Naive {
  std::uint64_t q;
  std::map<std::vector<std::uint32_t>, std::uint64_t> terms;

  static std::vector<std::uint32_t> exps(const Monomial& m) {
    auto e = m.exponents();
    return {e.begin(), e.end()};
  }

  static Naive of(const Polynomial& p, const PolyRing& ring) {
    Naive n{ring.q(), {}};
    for (const auto& t : p.terms()) n.terms[exps(t.mono)] = t.coeff;
    return n;
  }

  Naive times(const Naive& o) const {
    Naive r{q, {}};
    for (const auto& [a, ca] : terms)
      for (const auto& [b, cb] : o.terms) {
        auto e = a;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += b[i];
        r.terms[e] = (r.terms[e] + ca * cb) % q;
      }
    r.prune();
    return r;
  }

  Naive minus(const Naive& o) const {
    Naive r = *this;
    for (const auto& [b, cb] : o.terms) r.terms[b] = (r.terms[b] + q - cb % q) % q;
    r.prune();
    return r;
  }

  void prune() {
    for (auto it = terms.begin(); it != terms.end();)
      it = it->second == 0 ? terms.erase(it) : std::next(it);
  }

  bool operator==(const Naive&) const = default;
};

inline Naive naive_monomial(const Monomial& m, std::uint64_t c, std::uint64_t q) {
  Naive n{q, {}};
  n.terms[Naive::exps(m)] = c % q;
  return n;
}

/// Every pairwise S-polynomial reduces to zero, with exact (non field-reducing)
/// arithmetic.
inline bool passes_spoly_test(const std::vector<Polynomial>& G, const PolyRing& ring) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (!normal_form(spoly(G[i], G[j], ring), G, ring).is_zero()) return false;
  return true;
}

inline bool all_reduce_to_zero(const std::vector<Polynomial>& F, const std::vector<Polynomial>& G,
                               const PolyRing& ring) {
  for (const auto& f : F)
    if (!normal_form(f, G, ring).is_zero()) return false;
  return true;
}

inline EngineConfig config(const PolyRing& ring, EngineKind engine, bool ms = true, bool adjoin = true) {
  EngineConfig c(ring);
  c.engine = engine;
  c.middle_solving = ms;
  c.adjoin_field_eqs = adjoin;
  return c;
}

/// Brute-force zero set of F together with the field equations (these hold
/// on GF(q)^n anyway, so the set is the same).
inline std::vector<std::vector<Coeff>> zeros(const std::vector<Polynomial>& F, const PolyRing& ring) {
  return brute_force_solutions(F, ring);
}

}  // namespace mgbtest
