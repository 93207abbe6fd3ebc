#pragma once

// Dense-exponent monomials and the two admissible orders.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mgb/errors.hpp"

namespace mgb {

using Exponent = std::uint32_t;

/// x1^e1 * ... * xn^en. Variable 0 has the highest precedence.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
    for (auto e : exps_) degree_ += e;
  }

  static Monomial variable(std::size_t n, std::size_t var, Exponent e = 1) {
    Monomial m(n);
    m.exps_[var] = e;
    m.degree_ = e;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, Exponent e) {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
  }

  /// Number of distinct variables with a positive exponent.
  std::size_t support_size() const {
    return static_cast<std::size_t>(std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e > 0; }));
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw LengthMismatch();
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  /// True when *this divides m.
  bool divides(const Monomial& m) const {
    if (degree_ > m.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > m.exps_[i]) return false;
    return true;
  }

  // Lexicographic comparison of the raw exponent vectors; used only as a
  // container key, not as a monomial order.
  bool raw_less(const Monomial& o) const { return exps_ < o.exps_; }

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

struct MonomialRawLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.raw_less(b); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exponents()) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw LengthMismatch();
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

/// a / b when b divides a.
inline std::optional<Monomial> mono_divide(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw LengthMismatch();
  if (!b.divides(a)) return std::nullopt;
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] - b[i];
  return Monomial(std::move(e));
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

enum class OrderKind { lex, grevlex };

/// An admissible monomial order. compare() returns the ordering of a
/// relative to b.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) throw LengthMismatch();
    const std::size_t n = a.size();
    if (kind == OrderKind::lex) {
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    }
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    // Tie: the monomial with the smaller exponent in the last differing
    // variable is greater.
    for (std::size_t i = n; i-- > 0;)
      if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder&) const = default;
};

inline std::strong_ordering order_cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
  return order.compare(a, b);
}

}  // namespace mgb
