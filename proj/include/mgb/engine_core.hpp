#pragma once

// Shared pieces of the generalized Groebner engine: critical pairs with
// Buchberger's criteria (Gebauer-Moeller update), pair selection, field
// equation adjoining, the degree-bound monitor, and the report types.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mgb/errors.hpp"
#include "mgb/polynomial.hpp"

namespace mgb {

struct CriticalPair {
  std::size_t left = 0;
  std::size_t right = 0;
  Monomial lcm;
  std::uint64_t degree = 0;
};

using PairQueue = std::vector<CriticalPair>;

/// The evolving basis G. Inactive members have a leading monomial divisible
/// by a later member's; they stay available as reducers.
struct TemporaryBasis {
  std::vector<Polynomial> polys;
  std::vector<bool> active;
  std::map<Monomial, std::size_t, MonomialRawLess> lm_index;

  std::size_t size() const { return polys.size(); }
  const Polynomial& operator[](std::size_t i) const { return polys[i]; }

  std::vector<Polynomial> active_polys() const {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < polys.size(); ++i)
      if (active[i]) out.push_back(polys[i]);
    return out;
  }

  /// First member (insertion order) whose leading monomial divides m.
  const Polynomial* find_reducer(const Monomial& m) const {
    for (const auto& g : polys)
      if (g.lm().divides(m)) return &g;
    return nullptr;
  }
};

enum class EngineKind { buchberger, f4, incremental };

enum class Status { GroebnerBasis, AllVariablesSolved, Inconsistent, RoundLimit };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::GroebnerBasis:
      return "GroebnerBasis";
    case Status::AllVariablesSolved:
      return "AllVariablesSolved";
    case Status::Inconsistent:
      return "Inconsistent";
    case Status::RoundLimit:
      return "RoundLimit";
  }
  return "?";
}

inline const char* to_string(EngineKind e) {
  switch (e) {
    case EngineKind::buchberger:
      return "buchberger";
    case EngineKind::f4:
      return "f4";
    case EngineKind::incremental:
      return "incremental";
  }
  return "?";
}

struct SolveEvent {
  std::size_t round = 0;
  std::size_t variable = 0;
  Coeff value = 0;

  bool operator==(const SolveEvent&) const = default;
};

struct RoundTrace {
  std::size_t round = 0;
  std::size_t pairs_selected = 0;
  std::size_t new_polys = 0;
  std::size_t zero_reductions = 0;
  std::optional<std::size_t> matrix_rows;
  std::optional<std::size_t> matrix_cols;
  std::uint64_t max_degree = 0;
  std::vector<SolveEvent> events;
  bool inconsistent = false;
  std::size_t solved_total = 0;
  std::size_t basis_size = 0;
};

struct EngineReport {
  Status status = Status::GroebnerBasis;
  std::vector<Polynomial> basis;
  std::map<std::size_t, Coeff> assignments;
  std::vector<SolveEvent> events;
  std::vector<RoundTrace> rounds;
  std::string round_unit;
  /// Largest total degree of any polynomial formed during the run.
  std::uint64_t max_created_degree = 0;
  std::uint64_t max_stored_degree = 0;
  std::size_t bound_checks = 0;

  std::size_t total_rounds() const { return rounds.size(); }
};

/// Receives engine progress as it happens. Events are reported before the
/// round that produced them completes.
class TraceSink {
 public:
  virtual ~TraceSink() = default;
  virtual void on_start(const PolyRing&, EngineKind, const std::string& /*round_unit*/) {}
  virtual void on_event(const SolveEvent&, const PolyRing&) {}
  virtual void on_inconsistent(std::size_t /*round*/) {}
  virtual void on_round(const RoundTrace&, const PolyRing&) {}
  virtual void on_finish(const EngineReport&, const PolyRing&) {}
};

struct EngineConfig {
  explicit EngineConfig(PolyRing r) : ring(std::move(r)) {}

  PolyRing ring;
  EngineKind engine = EngineKind::f4;
  bool middle_solving = true;
  bool adjoin_field_eqs = true;
  std::optional<std::size_t> max_rounds;
  std::optional<std::string> trace_path;
  /// Buchberger's criteria in update(); off only for cross-checking.
  bool use_criteria = true;
  /// Engine computing each intermediate basis in the incremental frame.
  EngineKind inner_engine = EngineKind::f4;
  bool reverse_input_order = false;
  /// Keep every polynomial field-reduced. Defaults to adjoin_field_eqs; set
  /// explicitly when the field polynomials are already part of the input.
  std::optional<bool> eager_field_reduction;

  bool eager_field() const { return eager_field_reduction.value_or(adjoin_field_eqs); }

  void validate() const {
    if (max_rounds && *max_rounds < 1) throw InvalidConfig("max_rounds must be at least 1");
    if (inner_engine == EngineKind::incremental) throw InvalidConfig("inner engine cannot be incremental");
  }
};

// ---------------------------------------------------------------------------

/// F together with x_i^q - x_i for every variable, without duplicates.
inline std::vector<Polynomial> adjoin_field_equations(std::vector<Polynomial> F, const PolyRing& ring) {
  for (std::size_t v = 0; v < ring.nvars(); ++v) {
    auto fp = field_polynomial(v, ring);
    bool present = std::any_of(F.begin(), F.end(), [&](const Polynomial& f) {
      return !f.is_zero() && make_monic(f, ring) == fp;
    });
    if (!present) F.push_back(std::move(fp));
  }
  return F;
}

enum class DegreeStage { created, stored };

/// Bound check valid once field equations are adjoined: created polynomials
/// have degree <= n(q-1)+1; stored ones degree <= n(q-1) with every
/// leading exponent <= q. Field polynomials themselves are exempt from the
/// stored total-degree bound (x^q exceeds n(q-1) when n = 1).
inline bool degree_within_bound(const Polynomial& p, const PolyRing& ring, DegreeStage stage) {
  if (p.is_zero()) return true;
  const auto bound = ring.reduced_degree_bound();
  if (stage == DegreeStage::created) return p.degree() <= bound + 1;
  for (auto e : p.lm().exponents())
    if (e > ring.q()) return false;
  if (field_polynomial_var(p, ring)) return true;
  return p.degree() <= bound;
}

inline void degree_monitor(const Polynomial& p, const PolyRing& ring, DegreeStage stage) {
  if (degree_within_bound(p, ring, stage)) return;
  const auto bound = ring.reduced_degree_bound() + (stage == DegreeStage::created ? 1 : 0);
  throw BoundViolation(stage == DegreeStage::created ? BoundViolation::Stage::created : BoundViolation::Stage::stored,
                       to_string(p, ring), static_cast<unsigned>(p.degree()), static_cast<unsigned>(bound));
}

inline CriticalPair make_pair(const TemporaryBasis& G, std::size_t i, std::size_t j) {
  Monomial l = mono_lcm(G[i].lm(), G[j].lm());
  auto d = l.degree();
  return CriticalPair{i, j, std::move(l), d};
}

/// Appends h to G and updates the pair queue. With criteria on this is the
/// Gebauer-Moeller installation of Buchberger's two criteria.
inline void update(TemporaryBasis& G, PairQueue& P, const Polynomial& h, bool use_criteria = true) {
  if (h.is_zero()) throw ZeroInput("update");
  const std::size_t k = G.size();
  G.polys.push_back(h);
  G.active.push_back(true);
  G.lm_index.emplace(h.lm(), k);

  if (!use_criteria) {
    for (std::size_t i = 0; i < k; ++i) P.push_back(make_pair(G, i, k));
    return;
  }

  std::vector<CriticalPair> C;
  for (std::size_t i = 0; i < k; ++i)
    if (G.active[i]) C.push_back(make_pair(G, i, k));

  // Drop new pairs whose lcm is a multiple of another new pair's lcm.
  std::vector<CriticalPair> D;
  for (std::size_t c = 0; c < C.size(); ++c) {
    const auto& p = C[c];
    bool keep = coprime(h.lm(), G[p.left].lm());
    if (!keep) {
      keep = true;
      for (std::size_t c2 = c + 1; c2 < C.size() && keep; ++c2)
        if (C[c2].lcm.divides(p.lcm)) keep = false;
      for (std::size_t d = 0; d < D.size() && keep; ++d)
        if (D[d].lcm.divides(p.lcm)) keep = false;
    }
    if (keep) D.push_back(p);
  }

  // Old pairs made redundant by h.
  PairQueue kept;
  kept.reserve(P.size() + D.size());
  for (auto& p : P) {
    bool drop = h.lm().divides(p.lcm) && !(mono_lcm(G[p.left].lm(), h.lm()) == p.lcm) &&
                !(mono_lcm(G[p.right].lm(), h.lm()) == p.lcm);
    if (!drop) kept.push_back(std::move(p));
  }
  // Criterion 1: coprime leading monomials.
  for (auto& p : D)
    if (!coprime(h.lm(), G[p.left].lm())) kept.push_back(std::move(p));
  P = std::move(kept);

  for (std::size_t i = 0; i < k; ++i)
    if (G.active[i] && h.lm().divides(G[i].lm())) G.active[i] = false;
}

inline bool pair_before(const CriticalPair& a, const CriticalPair& b, const MonomialOrder& ord) {
  if (a.degree != b.degree) return a.degree < b.degree;
  auto c = ord.compare(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  if (a.left != b.left) return a.left < b.left;
  return a.right < b.right;
}

/// Removes and returns every pair of minimal degree, sorted by
/// (lcm, left, right).
inline std::vector<CriticalPair> select_pairs(PairQueue& P, const MonomialOrder& ord) {
  if (P.empty()) throw EmptyQueue();
  std::uint64_t dmin = P.front().degree;
  for (const auto& p : P) dmin = std::min(dmin, p.degree);
  std::vector<CriticalPair> batch;
  PairQueue rest;
  for (auto& p : P) (p.degree == dmin ? batch : rest).push_back(std::move(p));
  P = std::move(rest);
  std::sort(batch.begin(), batch.end(), [&](const auto& a, const auto& b) { return pair_before(a, b, ord); });
  return batch;
}

/// Removes and returns the single smallest pair.
inline CriticalPair select_one(PairQueue& P, const MonomialOrder& ord) {
  if (P.empty()) throw EmptyQueue();
  auto it = std::min_element(P.begin(), P.end(), [&](const auto& a, const auto& b) { return pair_before(a, b, ord); });
  CriticalPair p = std::move(*it);
  P.erase(it);
  return p;
}

}  // namespace mgb
