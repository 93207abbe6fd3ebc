#pragma once

// F4: select every pair of minimal degree, build the Macaulay matrix by
// symbolic preprocessing, reduce it to reduced row echelon form over GF(q),
// and keep the rows whose leading monomials are new. Middle-Solving runs on
// each round's new rows.

#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "mgb/engine_core.hpp"
#include "mgb/session.hpp"

namespace mgb {

/// Columns sorted strictly descending; rows are sparse (column, coefficient)
/// lists sorted by column index, never empty.
struct MacaulayMatrix {
  using Row = std::vector<std::pair<std::size_t, Coeff>>;

  std::vector<Monomial> columns;
  std::vector<Row> rows;
  /// Leading monomial each row had before any field reduction: the pair lcm
  /// for S-polynomial halves, the covered monomial for reducers.
  std::vector<Monomial> nominal_lms;
  /// Number of leading rows that are S-polynomial halves.
  std::size_t pair_rows = 0;

  std::size_t nrows() const { return rows.size(); }
  std::size_t ncols() const { return columns.size(); }

  Polynomial row_poly(std::size_t r) const {
    std::vector<Term> t;
    t.reserve(rows[r].size());
    for (auto [c, v] : rows[r]) t.push_back({v, columns[c]});
    return Polynomial::from_sorted(std::move(t));
  }

  std::vector<Polynomial> row_polys() const {
    std::vector<Polynomial> out;
    for (std::size_t r = 0; r < rows.size(); ++r) out.push_back(row_poly(r));
    return out;
  }
};

namespace detail {

struct OrderGreater {
  MonomialOrder ord;
  bool operator()(const Monomial& a, const Monomial& b) const { return ord.greater(a, b); }
};

inline MacaulayMatrix to_matrix(const std::vector<Polynomial>& polys, std::vector<Monomial> nominal,
                                const std::set<Monomial, OrderGreater>& monos, std::size_t pair_rows) {
  MacaulayMatrix M;
  M.columns.assign(monos.begin(), monos.end());
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  index.reserve(M.columns.size() * 2);
  for (std::size_t c = 0; c < M.columns.size(); ++c) index.emplace(M.columns[c], c);
  for (std::size_t r = 0; r < polys.size(); ++r) {
    if (polys[r].is_zero()) continue;
    MacaulayMatrix::Row row;
    row.reserve(polys[r].size());
    for (const auto& t : polys[r].terms()) row.emplace_back(index.at(t.mono), t.coeff);
    M.rows.push_back(std::move(row));
    M.nominal_lms.push_back(std::move(nominal[r]));
    if (r < pair_rows) ++M.pair_rows;
  }
  return M;
}

}  // namespace detail

/// Builds the matrix for a batch of pairs: both S-polynomial halves of each
/// pair, then one reducer multiple for every reducible monomial (first basis
/// element in insertion order whose leading monomial divides it), closed
/// under the monomials the reducers introduce. With eager_field every row is
/// field-reduced as it is formed.
template <class OnRow>
MacaulayMatrix symbolic_preprocess(const std::vector<CriticalPair>& batch, const TemporaryBasis& G,
                                   const PolyRing& ring, bool eager_field, OnRow&& on_row) {
  if (batch.empty()) throw EmptyBatch();
  const auto& F = ring.field();
  std::set<std::pair<std::size_t, Monomial>, bool (*)(const std::pair<std::size_t, Monomial>&,
                                                       const std::pair<std::size_t, Monomial>&)>
      seen([](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second.raw_less(b.second);
      });
  std::vector<Polynomial> polys;
  std::vector<Monomial> nominal;
  std::set<Monomial, detail::OrderGreater> monos(detail::OrderGreater{ring.order()});

  auto add_row = [&](std::size_t idx, const Monomial& mult, const Monomial& lm) {
    if (!seen.emplace(idx, mult).second) return;
    const auto& g = G[idx];
    auto row = mul_term(g, F.inv(g.lc()), mult, ring);
    if (eager_field) row = field_reduce(row, ring);
    on_row(row);
    for (const auto& t : row.terms()) monos.insert(t.mono);
    polys.push_back(std::move(row));
    nominal.push_back(lm);
  };

  for (const auto& p : batch) {
    add_row(p.left, *mono_divide(p.lcm, G[p.left].lm()), p.lcm);
    add_row(p.right, *mono_divide(p.lcm, G[p.right].lm()), p.lcm);
  }
  const std::size_t pair_rows = polys.size();

  // Set iteration stays valid under insertion; reducer rows only add
  // monomials smaller than the one they cover.
  for (auto it = monos.begin(); it != monos.end(); ++it) {
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (!G[i].lm().divides(*it)) continue;
      add_row(i, *mono_divide(*it, G[i].lm()), *it);
      break;
    }
  }
  return detail::to_matrix(polys, std::move(nominal), monos, pair_rows);
}

inline MacaulayMatrix symbolic_preprocess(const std::vector<CriticalPair>& batch, const TemporaryBasis& G,
                                          const PolyRing& ring, bool eager_field = false) {
  return symbolic_preprocess(batch, G, ring, eager_field, [](const Polynomial&) {});
}

namespace detail {

// Reduced row echelon form on packed GF(2) rows.
inline std::vector<MacaulayMatrix::Row> echelon_gf2(const MacaulayMatrix& M) {
  const std::size_t ncols = M.ncols();
  const std::size_t words = (ncols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(M.nrows(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t r = 0; r < M.nrows(); ++r)
    for (auto [c, v] : M.rows[r])
      if (v & 1u) rows[r][c / 64] |= std::uint64_t{1} << (c % 64);

  std::vector<bool> pivoted(rows.size(), false);
  std::vector<std::size_t> pivot_of_col;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < ncols; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t piv = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!pivoted[r] && (rows[r][w] & bit)) {
        piv = r;
        break;
      }
    if (piv == rows.size()) continue;
    pivoted[piv] = true;
    const auto& prow = rows[piv];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == piv || !(rows[r][w] & bit)) continue;
      auto& row = rows[r];
      for (std::size_t k = w; k < words; ++k) row[k] ^= prow[k];
    }
    pivot_of_col.push_back(piv);
    pivot_cols.push_back(c);
  }
  std::vector<MacaulayMatrix::Row> out;
  for (std::size_t i = 0; i < pivot_of_col.size(); ++i) {
    const auto& row = rows[pivot_of_col[i]];
    MacaulayMatrix::Row sparse;
    for (std::size_t k = 0; k < words; ++k) {
      std::uint64_t word = row[k];
      while (word) {
        int b = __builtin_ctzll(word);
        sparse.emplace_back(k * 64 + static_cast<std::size_t>(b), 1);
        word &= word - 1;
      }
    }
    out.push_back(std::move(sparse));
  }
  return out;
}

// Reduced row echelon form on dense rows over GF(p).
inline std::vector<MacaulayMatrix::Row> echelon_gfp(const MacaulayMatrix& M, const FieldSpec& F) {
  const std::size_t ncols = M.ncols();
  std::vector<std::vector<Coeff>> rows(M.nrows(), std::vector<Coeff>(ncols, 0));
  for (std::size_t r = 0; r < M.nrows(); ++r)
    for (auto [c, v] : M.rows[r]) rows[r][c] = v;

  std::vector<bool> pivoted(rows.size(), false);
  std::vector<std::size_t> pivot_of_col;
  for (std::size_t c = 0; c < ncols; ++c) {
    std::size_t piv = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!pivoted[r] && rows[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == rows.size()) continue;
    pivoted[piv] = true;
    auto& prow = rows[piv];
    Coeff inv = F.inv(prow[c]);
    for (std::size_t k = c; k < ncols; ++k) prow[k] = F.mul(prow[k], inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == piv || rows[r][c] == 0) continue;
      auto& row = rows[r];
      Coeff f = row[c];
      for (std::size_t k = c; k < ncols; ++k)
        if (prow[k]) row[k] = F.sub(row[k], F.mul(f, prow[k]));
    }
    pivot_of_col.push_back(piv);
  }
  std::vector<MacaulayMatrix::Row> out;
  for (auto r : pivot_of_col) {
    MacaulayMatrix::Row sparse;
    for (std::size_t c = 0; c < ncols; ++c)
      if (rows[r][c]) sparse.emplace_back(c, rows[r][c]);
    out.push_back(std::move(sparse));
  }
  return out;
}

}  // namespace detail

/// Reduced row echelon form. Columns are processed left to right; the pivot
/// is the first not-yet-pivoted row with a nonzero entry, scaled to 1 and
/// eliminated from every other row. Zero rows are dropped; the result is
/// ordered by pivot column.
inline MacaulayMatrix matrix_reduce(const MacaulayMatrix& M, const FieldSpec& F) {
  MacaulayMatrix out;
  out.columns = M.columns;
  out.rows = F.q() == 2 ? detail::echelon_gf2(M) : detail::echelon_gfp(M, F);
  for (const auto& row : out.rows) out.nominal_lms.push_back(out.columns[row.front().first]);
  return out;
}

struct ReducedBatch {
  std::vector<Polynomial> new_polys;
  std::vector<Polynomial> all_rows;
  std::size_t matrix_rows = 0;
  std::size_t matrix_cols = 0;
  std::size_t zero_rows = 0;
};

/// One F4 reduction step. New polynomials are the echelon rows whose
/// leading monomial is not divisible by any basis leading monomial; they come
/// out monic and sorted ascending.
template <class OnRow>
ReducedBatch f4_reduction(const std::vector<CriticalPair>& batch, const TemporaryBasis& G, const PolyRing& ring,
                          bool eager_field, OnRow&& on_row) {
  auto M = symbolic_preprocess(batch, G, ring, eager_field, on_row);
  auto R = matrix_reduce(M, ring.field());
  ReducedBatch out;
  out.matrix_rows = M.nrows();
  out.matrix_cols = M.ncols();
  out.zero_rows = M.nrows() - R.nrows();
  out.all_rows = R.row_polys();
  for (const auto& p : out.all_rows) {
    bool known = false;
    for (const auto& g : G.polys)
      if (g.lm().divides(p.lm())) {
        known = true;
        break;
      }
    if (!known) out.new_polys.push_back(p);
  }
  sort_by_lm(out.new_polys, ring);
  return out;
}

inline ReducedBatch f4_reduction(const std::vector<CriticalPair>& batch, const TemporaryBasis& G, const PolyRing& ring,
                                 bool eager_field = false) {
  return f4_reduction(batch, G, ring, eager_field, [](const Polynomial&) {});
}

inline EngineReport f4_gb(const std::vector<Polynomial>& F, const EngineConfig& config, TraceSink* sink = nullptr) {
  detail::Session s(config, sink, "degree_batch");
  const auto& ring = s.ring();
  s.ingest(F);
  while (!s.done()) {
    if (s.pairs().empty()) {
      if (s.final_screen()) continue;
      break;
    }
    if (s.round_limit_hit()) {
      s.finish(Status::RoundLimit);
      return s.take_report();
    }
    s.begin_round();
    auto batch = select_pairs(s.pairs(), ring.order());
    auto& cur = s.current();
    cur.pairs_selected = batch.size();
    auto red = f4_reduction(batch, s.basis(), ring, s.eager_field(), [&](const Polynomial& row) { s.note_created(row); });
    cur.matrix_rows = red.matrix_rows;
    cur.matrix_cols = red.matrix_cols;
    cur.zero_reductions = red.zero_rows;
    s.absorb(std::move(red.new_polys));
    s.end_round();
  }
  s.finish(Status::GroebnerBasis);
  return s.take_report();
}

}  // namespace mgb
