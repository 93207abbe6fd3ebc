#pragma once

// Sparse distributed polynomials over GF(q): canonical form, arithmetic,
// S-polynomials, normal forms, interreduction, field reduction, and the
// univariate helpers used by the solving strategy.

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "mgb/errors.hpp"
#include "mgb/gf.hpp"
#include "mgb/monomial.hpp"

namespace mgb {

/// GF(q)[x1, ..., xn] with a fixed order; x1 > x2 > ... > xn.
class PolyRing {
 public:
  PolyRing(FieldSpec field, std::vector<std::string> names, MonomialOrder order)
      : field_(field), names_(std::move(names)), order_(order) {
    if (names_.empty()) throw InvalidConfig("a ring needs at least one variable");
    std::unordered_set<std::string> seen;
    for (const auto& s : names_)
      if (!seen.insert(s).second) throw InvalidConfig("duplicate variable name '" + s + "'");
  }

  PolyRing(FieldSpec field, std::size_t n, MonomialOrder order)
      : PolyRing(field, default_names(n), order) {}

  static std::vector<std::string> default_names(std::size_t n, const std::string& stem = "x") {
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
    return v;
  }

  const FieldSpec& field() const { return field_; }
  Coeff q() const { return field_.q(); }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  MonomialOrder order() const { return order_; }

  Monomial one() const { return Monomial(nvars()); }
  Monomial var(std::size_t i, Exponent e = 1) const { return Monomial::variable(nvars(), i, e); }

  /// n(q-1): the largest total degree of a field-reduced monomial.
  std::uint64_t reduced_degree_bound() const {
    return static_cast<std::uint64_t>(nvars()) * (field_.q() - 1);
  }

  bool operator==(const PolyRing&) const = default;

 private:
  FieldSpec field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

struct Term {
  Coeff coeff = 0;
  Monomial mono;

  bool operator==(const Term&) const = default;
};

/// Terms strictly descending in the ring order, no zero coefficients.
/// The empty term list is the zero polynomial.
class Polynomial {
 public:
  Polynomial() = default;

  // Caller guarantees canonical form; use poly_normalize otherwise.
  static Polynomial from_sorted(std::vector<Term> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
  }

  static Polynomial constant(Coeff c, const PolyRing& ring) {
    c %= ring.q();
    if (c == 0) return {};
    return from_sorted({Term{c, ring.one()}});
  }

  static Polynomial monomial(Coeff c, Monomial m, const PolyRing& ring) {
    c %= ring.q();
    if (c == 0) return {};
    return from_sorted({Term{c, std::move(m)}});
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<Term>& mutable_terms() { return terms_; }

  const Term& lt() const { return terms_.front(); }
  const Monomial& lm() const { return terms_.front().mono; }
  Coeff lc() const { return terms_.front().coeff; }

  bool is_constant() const { return terms_.size() == 1 && terms_.front().mono.is_one(); }

  /// Maximal total degree over all terms; 0 for the zero polynomial.
  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool mentions(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.mono[var] > 0; });
  }

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// Canonical form and ring arithmetic

inline Polynomial poly_normalize(std::vector<Term> raw, const PolyRing& ring) {
  const auto& F = ring.field();
  const auto ord = ring.order();
  for (auto& t : raw) t.coeff %= ring.q();
  std::stable_sort(raw.begin(), raw.end(),
                   [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(raw.size());
  for (auto& t : raw) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return Polynomial::from_sorted(std::move(out));
}

/// a + sign * b by merging, sign in {+1, -1}.
inline Polynomial merge_add(const Polynomial& a, const Polynomial& b, bool subtract, const PolyRing& ring) {
  const auto& F = ring.field();
  const auto ord = ring.order();
  const auto& A = a.terms();
  const auto& B = b.terms();
  std::vector<Term> out;
  out.reserve(A.size() + B.size());
  std::size_t i = 0, j = 0;
  while (i < A.size() && j < B.size()) {
    auto c = ord.compare(A[i].mono, B[j].mono);
    if (c > 0) {
      out.push_back(A[i++]);
    } else if (c < 0) {
      out.push_back({subtract ? F.neg(B[j].coeff) : B[j].coeff, B[j].mono});
      ++j;
    } else {
      Coeff s = subtract ? F.sub(A[i].coeff, B[j].coeff) : F.add(A[i].coeff, B[j].coeff);
      if (s != 0) out.push_back({s, A[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < A.size(); ++i) out.push_back(A[i]);
  for (; j < B.size(); ++j) out.push_back({subtract ? F.neg(B[j].coeff) : B[j].coeff, B[j].mono});
  return Polynomial::from_sorted(std::move(out));
}

inline Polynomial add(const Polynomial& a, const Polynomial& b, const PolyRing& ring) {
  return merge_add(a, b, false, ring);
}
inline Polynomial sub(const Polynomial& a, const Polynomial& b, const PolyRing& ring) {
  return merge_add(a, b, true, ring);
}

/// c * m * p. Multiplying by a monomial preserves the term order.
inline Polynomial mul_term(const Polynomial& p, Coeff c, const Monomial& m, const PolyRing& ring) {
  if (c % ring.q() == 0) return {};
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({ring.field().mul(t.coeff, c), t.mono * m});
  return Polynomial::from_sorted(std::move(out));
}

inline Polynomial scale(const Polynomial& p, Coeff c, const PolyRing& ring) {
  return mul_term(p, c, ring.one(), ring);
}

inline Polynomial multiply(const Polynomial& a, const Polynomial& b, const PolyRing& ring) {
  std::vector<Term> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) raw.push_back({ring.field().mul(s.coeff, t.coeff), s.mono * t.mono});
  return poly_normalize(std::move(raw), ring);
}

inline Polynomial make_monic(const Polynomial& p, const PolyRing& ring) {
  if (p.is_zero() || p.lc() == 1) return p;
  return scale(p, ring.field().inv(p.lc()), ring);
}

// ---------------------------------------------------------------------------
// Field equations

/// x_var^q - x_var.
inline Polynomial field_polynomial(std::size_t var, const PolyRing& ring) {
  const Coeff q = ring.q();
  return Polynomial::from_sorted({Term{1, ring.var(var, q)}, Term{q - 1, ring.var(var)}});
}

inline std::optional<std::size_t> field_polynomial_var(const Polynomial& p, const PolyRing& ring) {
  if (p.size() != 2 || p.lc() != 1 || p.lm().support_size() != 1) return std::nullopt;
  for (std::size_t v = 0; v < ring.nvars(); ++v)
    if (p.lm()[v] > 0) return p == field_polynomial(v, ring) ? std::optional<std::size_t>(v) : std::nullopt;
  return std::nullopt;
}

inline Exponent field_reduce_exponent(Exponent e, Coeff q) {
  if (e < q) return e;
  return static_cast<Exponent>((e - 1) % (q - 1) + 1);
}

inline bool is_field_reduced(const Monomial& m, Coeff q) {
  for (auto e : m.exponents())
    if (e >= q) return false;
  return true;
}

inline Monomial field_reduce(const Monomial& m, Coeff q) {
  std::vector<Exponent> e(m.exponents().begin(), m.exponents().end());
  for (auto& x : e) x = field_reduce_exponent(x, q);
  return Monomial(std::move(e));
}

/// Rewrites every x^e with e >= q using x^q = x. Evaluation-equivalent on
/// GF(q)^n.
inline Polynomial field_reduce(const Polynomial& p, const PolyRing& ring) {
  const Coeff q = ring.q();
  bool clean = std::all_of(p.terms().begin(), p.terms().end(),
                           [q](const Term& t) { return is_field_reduced(t.mono, q); });
  if (clean) return p;
  std::vector<Term> raw;
  raw.reserve(p.size());
  for (const auto& t : p.terms()) raw.push_back({t.coeff, field_reduce(t.mono, q)});
  return poly_normalize(std::move(raw), ring);
}

// ---------------------------------------------------------------------------
// S-polynomials and reduction

inline Polynomial spoly(const Polynomial& f, const Polynomial& g, const PolyRing& ring) {
  if (f.is_zero() || g.is_zero()) throw ZeroInput("spoly");
  const auto& F = ring.field();
  Monomial l = mono_lcm(f.lm(), g.lm());
  auto left = mul_term(f, F.inv(f.lc()), *mono_divide(l, f.lm()), ring);
  auto right = mul_term(g, F.inv(g.lc()), *mono_divide(l, g.lm()), ring);
  return sub(left, right, ring);
}

/// Full reduction of p by G. Reducer choice: the largest reducible monomial
/// of the remainder is eliminated first, using the first element of G (in
/// the given order) whose leading monomial divides it. With eager_field the
/// remainder and every reducer multiple are kept field-reduced, which is
/// reduction modulo G plus the field polynomials.
template <class OnMultiple>
Polynomial normal_form_with(const Polynomial& p, std::span<const Polynomial> G, const PolyRing& ring,
                            bool eager_field, OnMultiple&& on_multiple) {
  const auto& F = ring.field();
  Polynomial r = eager_field ? field_reduce(p, ring) : p;
  std::size_t pos = 0;
  while (pos < r.size()) {
    const Term& t = r.terms()[pos];
    const Polynomial* red = nullptr;
    for (const auto& g : G)
      if (!g.is_zero() && g.lm().divides(t.mono)) {
        red = &g;
        break;
      }
    if (!red) {
      ++pos;
      continue;
    }
    Coeff c = F.mul(t.coeff, F.inv(red->lc()));
    auto multiple = mul_term(*red, c, *mono_divide(t.mono, red->lm()), ring);
    if (eager_field) multiple = field_reduce(multiple, ring);
    on_multiple(multiple);
    // Terms before pos are larger than every term of the multiple.
    r = sub(r, multiple, ring);
  }
  return r;
}

inline Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> G, const PolyRing& ring,
                              bool eager_field = false) {
  return normal_form_with(p, G, ring, eager_field, [](const Polynomial&) {});
}

inline Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G, const PolyRing& ring,
                              bool eager_field = false) {
  return normal_form(p, std::span<const Polynomial>(G), ring, eager_field);
}

/// Sorts a basis ascending by leading monomial.
inline void sort_by_lm(std::vector<Polynomial>& G, const PolyRing& ring) {
  const auto ord = ring.order();
  std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
    auto c = ord.compare(a.lm(), b.lm());
    if (c != 0) return c < 0;
    return a.size() < b.size();
  });
}

/// Monic, mutually fully reduced generators of the same ideal, sorted
/// ascending by leading monomial. A nonzero constant collapses to {1}.
inline std::vector<Polynomial> interreduce(std::vector<Polynomial> G, const PolyRing& ring, bool eager_field = false) {
  // Field polynomials are exempt from eager field reduction, which would
  // annihilate them.
  auto eager_for = [&](const Polynomial& p) { return eager_field && !field_polynomial_var(p, ring); };
  std::vector<Polynomial> cur;
  for (auto& g : G) {
    if (eager_for(g)) g = field_reduce(g, ring);
    if (g.is_zero()) continue;
    if (g.is_constant()) return {Polynomial::constant(1, ring)};
    cur.push_back(make_monic(g, ring));
  }
  sort_by_lm(cur, ring);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cur.size();) {
      std::vector<Polynomial> others;
      others.reserve(cur.size() - 1);
      for (std::size_t j = 0; j < cur.size(); ++j)
        if (j != i) others.push_back(cur[j]);
      auto r = normal_form(cur[i], others, ring, eager_for(cur[i]));
      if (r == cur[i]) {
        ++i;
        continue;
      }
      changed = true;
      if (r.is_zero()) {
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      if (r.is_constant()) return {Polynomial::constant(1, ring)};
      cur[i] = make_monic(r, ring);
      ++i;
    }
  }
  sort_by_lm(cur, ring);
  return cur;
}

/// Reduced basis of a set already known to be a Groebner basis: drop
/// elements with a redundant leading monomial, then reduce the tails.
inline std::vector<Polynomial> reduce_groebner_basis(std::vector<Polynomial> G, const PolyRing& ring,
                                                     bool eager_field = false) {
  std::vector<Polynomial> cur;
  for (auto& g : G) {
    if (g.is_zero()) continue;
    if (g.is_constant()) return {Polynomial::constant(1, ring)};
    cur.push_back(make_monic(g, ring));
  }
  sort_by_lm(cur, ring);
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < cur.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < cur.size() && !redundant; ++j) {
      if (i == j) continue;
      if (cur[j].lm().divides(cur[i].lm())) redundant = !(cur[j].lm() == cur[i].lm()) || j < i;
    }
    if (!redundant) minimal.push_back(cur[i]);
  }
  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const auto& g = minimal[i];
    auto tail = Polynomial::from_sorted(std::vector<Term>(g.terms().begin() + 1, g.terms().end()));
    auto r = normal_form(tail, others, ring, eager_field);
    std::vector<Term> terms{g.lt()};
    terms.insert(terms.end(), r.terms().begin(), r.terms().end());
    out.push_back(Polynomial::from_sorted(std::move(terms)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Univariate analysis and substitution

/// The single variable p lives in; absent for zero, constants, or when two
/// or more variables occur.
inline std::optional<std::size_t> is_univariate(const Polynomial& p) {
  std::optional<std::size_t> var;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (var && *var != i) return std::nullopt;
      var = i;
    }
  }
  return var;
}

/// Value of p at a full point of GF(q)^n.
inline Coeff evaluate(const Polynomial& p, std::span<const Coeff> point, const FieldSpec& F) {
  Coeff acc = 0;
  for (const auto& t : p.terms()) {
    Coeff v = t.coeff;
    for (std::size_t i = 0; i < t.mono.size() && v != 0; ++i)
      if (t.mono[i]) v = F.mul(v, F.pow(point[i], t.mono[i]));
    acc = F.add(acc, v);
  }
  return acc;
}

/// All roots in GF(q) of a polynomial univariate in var, by exhaustive search.
inline std::vector<Coeff> univariate_roots(const Polynomial& p, std::size_t var, const FieldSpec& F) {
  if (p.is_zero()) throw ZeroPolynomial();
  std::vector<Coeff> roots;
  for (Coeff a = 0; a < F.q(); ++a) {
    Coeff acc = 0;
    for (const auto& t : p.terms()) acc = F.add(acc, F.mul(t.coeff, F.pow(a, t.mono[var])));
    if (acc == 0) roots.push_back(a);
  }
  return roots;
}

/// p with x_var replaced by value.
inline Polynomial substitute(const Polynomial& p, std::size_t var, Coeff value, const PolyRing& ring) {
  if (!p.mentions(var)) return p;
  const auto& F = ring.field();
  std::vector<Term> raw;
  raw.reserve(p.size());
  for (const auto& t : p.terms()) {
    Coeff c = F.mul(t.coeff, F.pow(value, t.mono[var]));
    if (c == 0) continue;
    Monomial m = t.mono;
    m.set(var, 0);
    raw.push_back({c, std::move(m)});
  }
  return poly_normalize(std::move(raw), ring);
}

// ---------------------------------------------------------------------------
// Printing

inline std::string to_string(const Monomial& m, const PolyRing& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.name(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string to_string(const Polynomial& p, const PolyRing& ring) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& t : p.terms()) {
    if (!s.empty()) s += " + ";
    if (t.mono.is_one()) {
      s += std::to_string(t.coeff);
    } else {
      if (t.coeff != 1) s += std::to_string(t.coeff) + '*';
      s += to_string(t.mono, ring);
    }
  }
  return s;
}

}  // namespace mgb
