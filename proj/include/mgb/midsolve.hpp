#pragma once

// Middle-Solving: detect univariate polynomials with exactly one root in
// GF(q), back-substitute the solved values, and recognise inconsistency as
// soon as a nonzero constant shows up.

#include <algorithm>
#include <optional>
#include <vector>

#include "mgb/engine_core.hpp"
#include "mgb/polynomial.hpp"

namespace mgb {

struct Assignment {
  std::size_t variable = 0;
  Coeff value = 0;
  std::size_t round = 0;

  bool operator==(const Assignment&) const = default;
};

/// Result of screening a batch. A set conflict means two members force
/// different values on one variable, so the ideal is the unit ideal.
struct ScreenResult {
  std::vector<Assignment> assignments;
  std::optional<std::size_t> conflict;
};

inline ScreenResult find_unique_root_polys(const std::vector<Polynomial>& batch, const PolyRing& ring,
                                           std::size_t round = 0) {
  ScreenResult out;
  for (const auto& f : batch) {
    auto var = is_univariate(f);
    if (!var) continue;
    auto roots = univariate_roots(f, *var, ring.field());
    if (roots.size() != 1) continue;
    auto it = std::find_if(out.assignments.begin(), out.assignments.end(),
                           [&](const Assignment& a) { return a.variable == *var; });
    if (it == out.assignments.end()) {
      out.assignments.push_back({*var, roots.front(), round});
    } else if (it->value != roots.front()) {
      out.conflict = *var;
      return out;
    }
  }
  return out;
}

inline bool inconsistency_check(const std::vector<Polynomial>& polys, const FieldSpec&) {
  return std::any_of(polys.begin(), polys.end(), [](const Polynomial& p) { return p.is_constant(); });
}

struct RenewOptions {
  bool eager_field = false;
  bool use_criteria = true;
};

struct Renewed {
  TemporaryBasis basis;
  std::vector<Polynomial> batch;
  PairQueue pairs;
  bool inconsistent = false;
};

/// Back-substitutes one solved variable into the basis and the pending
/// batch. The basis is interreduced and its pair queue rebuilt from scratch,
/// since every cached lcm may have changed.
inline Renewed renew(const TemporaryBasis& G, const std::vector<Polynomial>& pending_batch, const Assignment& a,
                     const PolyRing& ring, RenewOptions opts = {}) {
  Renewed out;
  const auto field_poly = field_polynomial(a.variable, ring);
  std::vector<Polynomial> subst;
  for (const auto& g : G.polys) {
    if (g == field_poly) continue;
    auto s = substitute(g, a.variable, a.value, ring);
    if (!s.is_zero()) subst.push_back(std::move(s));
  }
  auto basis = interreduce(std::move(subst), ring, opts.eager_field);
  if (inconsistency_check(basis, ring.field())) {
    out.inconsistent = true;
    out.basis.polys = basis;
    out.basis.active.assign(basis.size(), true);
    return out;
  }
  for (const auto& g : basis) update(out.basis, out.pairs, g, opts.use_criteria);

  for (const auto& h : pending_batch) {
    auto s = normal_form(substitute(h, a.variable, a.value, ring), out.basis.polys, ring, opts.eager_field);
    if (s.is_zero()) continue;
    if (s.is_constant()) out.inconsistent = true;
    out.batch.push_back(make_monic(s, ring));
  }
  return out;
}

/// Checks the lex triangular shape: for every variable some member has a
/// pure power of it as leading monomial, so the members sorted by their
/// greatest variable introduce one new variable at a time, starting with a
/// univariate member in the least variable. {1} passes.
inline bool triangular_shape_check(const std::vector<Polynomial>& G, const PolyRing& ring) {
  if (ring.order().kind != OrderKind::lex) throw OrderNotLex();
  if (G.size() == 1 && G.front().is_constant()) return true;
  const std::size_t n = ring.nvars();
  std::vector<bool> has_pure_power(n, false);
  for (const auto& g : G) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return false;
    if (g.lm().support_size() == 1)
      for (std::size_t v = 0; v < n; ++v)
        if (g.lm()[v] > 0) has_pure_power[v] = true;
  }
  if (!std::all_of(has_pure_power.begin(), has_pure_power.end(), [](bool b) { return b; })) return false;
  // Under lex a pure power of x_v as leading monomial forces the member to
  // live in x_v and smaller variables; check it explicitly.
  for (const auto& g : G) {
    if (g.lm().support_size() != 1) continue;
    std::size_t v = 0;
    while (g.lm()[v] == 0) ++v;
    for (const auto& t : g.terms())
      for (std::size_t u = 0; u < v; ++u)
        if (t.mono[u] > 0) return false;
  }
  return true;
}

namespace detail {

inline void back_substitute(const std::vector<std::vector<const Polynomial*>>& by_main, const PolyRing& ring,
                            std::vector<Coeff>& point, std::size_t k, std::vector<std::vector<Coeff>>& out) {
  const auto& F = ring.field();
  if (k == 0) {
    out.push_back(point);
    return;
  }
  const std::size_t v = k - 1;
  for (Coeff a = 0; a < F.q(); ++a) {
    point[v] = a;
    bool ok = std::all_of(by_main[v].begin(), by_main[v].end(),
                          [&](const Polynomial* g) { return evaluate(*g, point, F) == 0; });
    if (ok) back_substitute(by_main, ring, point, v, out);
  }
  point[v] = 0;
}

}  // namespace detail

/// Zero set in GF(q)^n of a lex basis, read off by solving for the least
/// variable first and back-substituting upward. Sorted lexicographically.
inline std::vector<std::vector<Coeff>> solutions_from_lex_basis(const std::vector<Polynomial>& G, const PolyRing& ring) {
  if (ring.order().kind != OrderKind::lex) throw OrderNotLex();
  const std::size_t n = ring.nvars();
  std::vector<std::vector<const Polynomial*>> by_main(n);
  for (const auto& g : G) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return {};
    std::size_t v = 0;
    while (!g.mentions(v)) ++v;
    by_main[v].push_back(&g);
  }
  std::vector<std::vector<Coeff>> out;
  std::vector<Coeff> point(n, 0);
  detail::back_substitute(by_main, ring, point, n, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mgb
