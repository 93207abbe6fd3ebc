#pragma once

// Prime field arithmetic GF(q) on machine words.

#include <cstdint>

#include "mgb/errors.hpp"

namespace mgb {

/// Canonical residue in [0, q).
using Coeff = std::uint32_t;

enum class FieldOp { add, sub, mul };

inline bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  if (q % 2 == 0) return q == 2;
  for (std::uint64_t d = 3; d * d <= q; d += 2)
    if (q % d == 0) return false;
  return true;
}

/// The field GF(q) for a prime q < 2^31.
class FieldSpec {
 public:
  explicit FieldSpec(std::uint64_t q) : q_(static_cast<Coeff>(q)) {
    if (q >= (1ull << 31) || !is_prime(q)) throw NonPrimeField(q);
  }

  Coeff q() const { return q_; }

  Coeff reduce(std::int64_t v) const {
    auto r = v % static_cast<std::int64_t>(q_);
    return static_cast<Coeff>(r < 0 ? r + q_ : r);
  }

  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + q_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : q_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % q_);
  }

  // Extended Euclid.
  Coeff inv(Coeff a) const {
    if (a == 0) throw ZeroInverse();
    std::int64_t r0 = q_, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t t = r0 / r1;
      std::int64_t r2 = r0 - t * r1;
      r0 = r1;
      r1 = r2;
      std::int64_t s2 = s0 - t * s1;
      s0 = s1;
      s1 = s2;
    }
    return reduce(s0);
  }

  Coeff pow(Coeff a, std::uint64_t e) const {
    Coeff r = 1 % q_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  bool operator==(const FieldSpec&) const = default;

 private:
  Coeff q_;
};

inline Coeff ff_arith(FieldOp op, Coeff a, Coeff b, const FieldSpec& spec) {
  switch (op) {
    case FieldOp::add:
      return spec.add(a, b);
    case FieldOp::sub:
      return spec.sub(a, b);
    case FieldOp::mul:
      return spec.mul(a, b);
  }
  return 0;
}

inline Coeff ff_inv(Coeff a, const FieldSpec& spec) { return spec.inv(a); }

}  // namespace mgb
