#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "corpus.hpp"
#include "helpers.hpp"
#include "mgb/buchberger.hpp"
#include "mgb/f4.hpp"
#include "mgb/incremental.hpp"
#include "mgb/trace.hpp"

using namespace mgb;
using namespace mgbtest;

namespace {

std::vector<std::size_t> solved_vars(const EngineReport& rep) {
  std::vector<std::size_t> out;
  for (const auto& e : rep.events) out.push_back(e.variable);
  return out;
}

// Rank over GF(p) by plain dense elimination, independent of the library's
// echelon code.
std::size_t dense_rank(std::vector<std::vector<std::uint64_t>> A, std::uint64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = A.empty() ? 0 : A[0].size();
  for (std::size_t c = 0; c < cols && rank < A.size(); ++c) {
    std::size_t piv = rank;
    while (piv < A.size() && A[piv][c] == 0) ++piv;
    if (piv == A.size()) continue;
    std::swap(A[piv], A[rank]);
    std::uint64_t inv = 1;
    for (std::uint64_t e = p - 2, b = A[rank][c]; e; e >>= 1, b = b * b % p)
      if (e & 1) inv = inv * b % p;
    for (auto& x : A[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < A.size(); ++r) {
      if (r == rank || A[r][c] == 0) continue;
      auto f = A[r][c];
      for (std::size_t k = 0; k < cols; ++k) A[r][k] = (A[r][k] + p * p - f * A[rank][k]) % p;
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<std::uint64_t>> dense(const MacaulayMatrix& M) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& row : M.rows) {
    std::vector<std::uint64_t> d(M.ncols(), 0);
    for (auto [c, v] : row) d[c] = v;
    out.push_back(d);
  }
  return out;
}

MacaulayMatrix matrix_of(const std::vector<Polynomial>& polys, const PolyRing& ring) {
  std::set<Monomial, detail::OrderGreater> monos(detail::OrderGreater{ring.order()});
  for (const auto& p : polys)
    for (const auto& t : p.terms()) monos.insert(t.mono);
  std::vector<Monomial> nominal;
  for (const auto& p : polys) nominal.push_back(p.lm());
  return detail::to_matrix(polys, nominal, monos, 0);
}

}  // namespace

// ---------------------------------------------------------------------------

TEST(Buchberger, Examples) {
  auto r = make_ring(2, {"x", "y"});
  {
    auto rep = buchberger_gb(Ps(r, {"x + y", "y^2 + y"}), config(r, EngineKind::buchberger, false));
    EXPECT_EQ(rep.status, Status::GroebnerBasis);
    EXPECT_EQ(strs(rep.basis, r), (std::vector<std::string>{"y^2 + y", "x + y"}));
    EXPECT_EQ(zeros(rep.basis, r), (std::vector<std::vector<Coeff>>{{0, 0}, {1, 1}}));
  }
  {
    auto rep = buchberger_gb(Ps(r, {"x", "x + 1"}), config(r, EngineKind::buchberger));
    EXPECT_EQ(rep.status, Status::Inconsistent);
    EXPECT_EQ(strs(rep.basis, r), (std::vector<std::string>{"1"}));
    EXPECT_TRUE(zeros(Ps(r, {"x", "x + 1"}), r).empty());
  }
  {
    auto r1 = make_ring(2, {"x"});
    auto rep = buchberger_gb({}, config(r1, EngineKind::buchberger));
    EXPECT_EQ(rep.status, Status::GroebnerBasis);
    EXPECT_EQ(strs(rep.basis, r1), (std::vector<std::string>{"x^2 + x"}));
  }
}

TEST(Buchberger, DegenerateInputs) {
  auto r = make_ring(2, {"x", "y"});
  auto rep = buchberger_gb({Polynomial{}, P(r, "x + 1")}, config(r, EngineKind::buchberger, false));
  EXPECT_EQ(strs(rep.basis, r), (std::vector<std::string>{"y^2 + y", "x + 1"}));
  auto rep2 = buchberger_gb(Ps(r, {"x*y", "1"}), config(r, EngineKind::buchberger, false));
  EXPECT_EQ(rep2.status, Status::Inconsistent);
  EXPECT_EQ(rep2.total_rounds(), 0u);
}

TEST(Buchberger, SolutionSetPreserved) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    std::size_t n = 3 + s % 10;
    auto sys = random_system(500 + s, 2, n, n, 3, s % 2 == 0);
    auto rep = buchberger_gb(sys.polys, config(sys.ring, EngineKind::buchberger, false));
    EXPECT_TRUE(passes_spoly_test(rep.basis, sys.ring));
    EXPECT_EQ(zeros(rep.basis, sys.ring), zeros(sys.polys, sys.ring)) << s;
  }
}

// ---------------------------------------------------------------------------

TEST(F4, SymbolicPreprocessExample) {
  auto r = make_ring(2, {"x", "y"});
  TemporaryBasis G;
  PairQueue Pq;
  update(G, Pq, P(r, "x*y + 1"));
  update(G, Pq, P(r, "y^2 + y"));
  auto M = symbolic_preprocess(Pq, G, r, false);
  std::vector<std::string> cols;
  for (const auto& c : M.columns) cols.push_back(to_string(c, r));
  // y*(x*y + 1) = x*y^2 + y and x*(y^2 + y) = x*y^2 + x*y; only x*y is
  // reducible, and its reducer brings in the constant.
  EXPECT_EQ(cols, (std::vector<std::string>{"x*y^2", "x*y", "y", "1"}));
  ASSERT_EQ(M.nrows(), 3u);
  EXPECT_EQ(M.pair_rows, 2u);
  EXPECT_EQ(to_string(M.row_poly(0), r), "x*y^2 + y");
  EXPECT_EQ(to_string(M.row_poly(1), r), "x*y^2 + x*y");
  EXPECT_EQ(to_string(M.row_poly(2), r), "x*y + 1");
  // Columns descend in the order.
  for (std::size_t i = 1; i < M.columns.size(); ++i) EXPECT_TRUE(r.order().greater(M.columns[i - 1], M.columns[i]));
}

TEST(F4, SymbolicPreprocessIdenticalLeadingMonomials) {
  auto r = make_ring(2, {"x", "y"});
  TemporaryBasis G;
  G.polys = Ps(r, {"x + y", "x + 1"});
  G.active = {true, true};
  std::vector<CriticalPair> batch{make_pair(G, 0, 1)};
  auto M = symbolic_preprocess(batch, G, r, false);
  // Rows are f and g; y and 1 are not reducible, so nothing else.
  ASSERT_EQ(M.nrows(), 2u);
  EXPECT_EQ(M.row_poly(0), G[0]);
  EXPECT_EQ(M.row_poly(1), G[1]);
  EXPECT_THROW(symbolic_preprocess({}, G, r, false), EmptyBatch);
}

TEST(F4, MatrixReduceExamples) {
  auto r = make_ring(2, {"x"});
  {
    auto M = matrix_of(Ps(r, {"x + 1", "x"}), r);
    auto R = matrix_reduce(M, r.field());
    EXPECT_EQ(strs(R.row_polys(), r), (std::vector<std::string>{"x", "1"}));
    EXPECT_EQ(dense_rank(dense(M), 2), 2u);
  }
  {
    auto r5 = make_ring(5, {"x", "y"});
    auto M = matrix_of(Ps(r5, {"3*x + 2*y"}), r5);
    EXPECT_EQ(strs(matrix_reduce(M, r5.field()).row_polys(), r5), (std::vector<std::string>{"x + 4*y"}));
  }
  {
    auto M = matrix_of(Ps(r, {"x + 1", "x + 1"}), r);
    auto R = matrix_reduce(M, r.field());
    EXPECT_EQ(R.nrows(), 1u);
  }
}

TEST(F4, MatrixReducePreservesRowSpace) {
  std::mt19937_64 rng(31);
  for (std::uint64_t q : {2, 3, 7}) {
    PolyRing r(FieldSpec(q), 3, MonomialOrder{});
    for (int k = 0; k < 150; ++k) {
      std::vector<Polynomial> rows;
      for (std::size_t i = 0, m = 1 + pick(rng, 9); i < m; ++i) rows.push_back(random_poly(rng, r, 2, 5));
      auto M = matrix_of(rows, r);
      auto R = matrix_reduce(M, r.field());
      auto A = dense(M), B = dense(R);
      auto AB = A;
      AB.insert(AB.end(), B.begin(), B.end());
      auto ra = dense_rank(A, q);
      EXPECT_EQ(dense_rank(B, q), ra);
      EXPECT_EQ(dense_rank(AB, q), ra);
      EXPECT_EQ(R.nrows(), ra);
      // Reduced echelon: distinct monic pivots, each pivot column clear elsewhere.
      std::set<std::size_t> pivots;
      for (const auto& row : R.rows) {
        EXPECT_EQ(row.front().second, 1u);
        EXPECT_TRUE(pivots.insert(row.front().first).second);
      }
      for (const auto& row : R.rows)
        for (auto [c, v] : row)
          if (c != row.front().first) {
            EXPECT_FALSE(pivots.count(c));
          }
    }
  }
}

TEST(F4, NewLeadingMonomialsAreNew) {
  // Every new polynomial's leading monomial avoids the basis leading
  // monomials and the nominal leading monomials of the pre-elimination rows.
  for (const auto& e : small_gf2_corpus()) {
    const auto& ring = e.sys.ring;
    TemporaryBasis G;
    PairQueue Pq;
    for (const auto& f : adjoin_field_equations(e.sys.polys, ring)) {
      auto h = normal_form(field_reduce(f, ring), G.polys, ring, true);
      if (!h.is_zero()) update(G, Pq, make_monic(h, ring));
    }
    for (int round = 0; round < 3 && !Pq.empty(); ++round) {
      auto batch = select_pairs(Pq, ring.order());
      auto M = symbolic_preprocess(batch, G, ring, true);
      auto red = f4_reduction(batch, G, ring, true);
      for (const auto& h : red.new_polys) {
        for (const auto& g : G.polys) EXPECT_FALSE(g.lm().divides(h.lm())) << e.name;
        for (const auto& lm : M.nominal_lms) EXPECT_NE(lm, h.lm()) << e.name;
      }
      for (const auto& h : red.new_polys) update(G, Pq, h);
    }
  }
}

TEST(F4, Examples) {
  auto r = make_ring(2, {"x", "y"});
  {
    auto rep = f4_gb(Ps(r, {"x + 1", "x + y"}), config(r, EngineKind::f4));
    EXPECT_EQ(rep.status, Status::AllVariablesSolved);
    EXPECT_EQ(rep.assignments, (std::map<std::size_t, Coeff>{{0, 1}, {1, 1}}));
    EXPECT_EQ(zeros(Ps(r, {"x + 1", "x + y"}), r), (std::vector<std::vector<Coeff>>{{1, 1}}));
  }
  {
    auto rep = f4_gb(Ps(r, {"x", "x + 1"}), config(r, EngineKind::f4));
    EXPECT_EQ(rep.status, Status::Inconsistent);
    EXPECT_EQ(strs(rep.basis, r), (std::vector<std::string>{"1"}));
  }
  {
    auto rep = f4_gb(Ps(r, {"x", "x + 1"}), config(r, EngineKind::f4, false));
    EXPECT_EQ(rep.status, Status::GroebnerBasis);
    EXPECT_EQ(strs(rep.basis, r), (std::vector<std::string>{"1"}));
  }
}

TEST(F4, AgreesWithBuchberger) {
  for (const auto& e : small_gf3_corpus()) {
    for (auto kind : {OrderKind::lex, OrderKind::grevlex}) {
      auto sys = with_order(e.sys, MonomialOrder{kind});
      for (bool adjoin : {true, false}) {
        if (!adjoin && e.name.rfind("random", 0) != 0) continue;  // keep the non-field-equation runs small
        auto a = f4_gb(sys.polys, config(sys.ring, EngineKind::f4, false, adjoin));
        auto b = buchberger_gb(sys.polys, config(sys.ring, EngineKind::buchberger, false, adjoin));
        EXPECT_EQ(a.basis, b.basis) << e.name;
        EXPECT_TRUE(passes_spoly_test(a.basis, sys.ring)) << e.name;
        EXPECT_TRUE(all_reduce_to_zero(sys.polys, a.basis, sys.ring)) << e.name;
      }
    }
  }
}

TEST(F4, RoundLimit) {
  auto sys = gen_system({Family::eco, 8, 2, {}});
  auto cfg = config(sys.ring, EngineKind::f4, false);
  cfg.max_rounds = 2;
  auto rep = f4_gb(sys.polys, cfg);
  EXPECT_EQ(rep.status, Status::RoundLimit);
  EXPECT_EQ(rep.total_rounds(), 2u);
  EXPECT_TRUE(rep.assignments.empty());
}

TEST(Engines, SolveEventsAreUniqueAndSound) {
  for (const auto& e : small_gf2_corpus()) {
    auto sols = zeros(e.sys.polys, e.sys.ring);
    for (auto engine : {EngineKind::buchberger, EngineKind::f4, EngineKind::incremental}) {
      auto rep = run_engine(e.sys.polys, config(e.sys.ring, engine));
      auto vars = solved_vars(rep);
      std::sort(vars.begin(), vars.end());
      EXPECT_EQ(std::adjacent_find(vars.begin(), vars.end()), vars.end()) << e.name;
      for (const auto& ev : rep.events)
        for (const auto& s : sols) EXPECT_EQ(s[ev.variable], ev.value) << e.name;
      if (sols.empty()) {
        EXPECT_EQ(rep.status, Status::Inconsistent) << e.name;
      }
      for (std::size_t i = 1; i < rep.events.size(); ++i) EXPECT_LE(rep.events[i - 1].round, rep.events[i].round);
    }
  }
}

TEST(Engines, TraceIsDeterministic) {
  auto sys = gen_system({Family::eco, 7, 2, {}});
  for (auto engine : {EngineKind::buchberger, EngineKind::f4, EngineKind::incremental}) {
    std::ostringstream a, b;
    JsonTraceWriter wa(a), wb(b);
    run_engine(sys.polys, config(sys.ring, engine), &wa);
    run_engine(sys.polys, config(sys.ring, engine), &wb);
    EXPECT_EQ(a.str(), b.str());
    EXPECT_FALSE(a.str().empty());
  }
}

// ---------------------------------------------------------------------------

TEST(Incremental, Examples) {
  auto r = make_ring(2, {"x", "y"});
  {
    auto rep = incremental_gb(Ps(r, {"x + 1", "x + y"}), config(r, EngineKind::incremental));
    EXPECT_EQ(rep.status, Status::AllVariablesSolved);
    ASSERT_EQ(rep.events.size(), 2u);
    EXPECT_EQ(rep.events[0].variable, 0u);
    EXPECT_EQ(rep.events[0].value, 1u);
    EXPECT_EQ(rep.events[0].round, 1u);
    EXPECT_EQ(rep.events[1].variable, 1u);
    EXPECT_EQ(rep.events[1].value, 1u);
    EXPECT_EQ(rep.events[1].round, 2u);
  }
  {
    auto rep = incremental_gb(Ps(r, {"x", "x + 1"}), config(r, EngineKind::incremental, false));
    EXPECT_EQ(strs(rep.basis, r), (std::vector<std::string>{"1"}));
    auto rep2 = incremental_gb(Ps(r, {"x", "x + 1"}), config(r, EngineKind::incremental));
    EXPECT_EQ(rep2.status, Status::Inconsistent);
  }
  {
    auto f = P(r, "x*y + y + 1");
    auto rep = incremental_gb({f, f}, config(r, EngineKind::incremental, false));
    ASSERT_EQ(rep.total_rounds(), 2u);
    EXPECT_EQ(rep.rounds[1].zero_reductions, 1u);
    auto once = incremental_gb({f}, config(r, EngineKind::incremental, false));
    EXPECT_EQ(rep.basis, once.basis);
  }
}

TEST(Incremental, PrefixBasesMatchFromScratch) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto sys = random_system(800 + s, 2, 4, 5, 3, s % 2 == 0);
    for (std::size_t k = 1; k <= sys.polys.size(); ++k) {
      std::vector<Polynomial> prefix(sys.polys.begin(), sys.polys.begin() + k);
      auto inc = incremental_gb(prefix, config(sys.ring, EngineKind::incremental, false));
      auto ref = f4_gb(prefix, config(sys.ring, EngineKind::f4, false));
      EXPECT_EQ(strs(inc.basis, sys.ring), strs(ref.basis, sys.ring)) << "seed " << s << " prefix " << k;
      EXPECT_TRUE(passes_spoly_test(inc.basis, sys.ring));
    }
  }
}

TEST(Incremental, SolvedSetIsMonotone) {
  for (const auto& e : small_gf2_corpus()) {
    auto rep = incremental_gb(e.sys.polys, config(e.sys.ring, EngineKind::incremental));
    std::size_t prev = 0;
    for (const auto& rt : rep.rounds) {
      EXPECT_GE(rt.solved_total, prev);
      prev = rt.solved_total;
    }
  }
}

TEST(Incremental, ReverseOrderSameEndState) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto sys = random_system(900 + s, 2, 5, 6, 3, true);
    auto fwd = config(sys.ring, EngineKind::incremental);
    auto rev = fwd;
    rev.reverse_input_order = true;
    auto a = incremental_gb(sys.polys, fwd), b = incremental_gb(sys.polys, rev);
    EXPECT_EQ(a.basis, b.basis);
    EXPECT_EQ(a.assignments, b.assignments);
  }
}
