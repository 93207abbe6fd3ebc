#pragma once

// Compares what an engine run claims about the solutions with the
// brute-force zero set of the input.

#include <string>
#include <vector>

#include "mgb/bench.hpp"
#include "mgb/engine_core.hpp"
#include "mgb/midsolve.hpp"

namespace mgb {

struct OracleVerdict {
  bool ok = true;
  std::string detail;
};

/// `solutions` is brute_force_solutions(input). Checks emptiness for
/// Inconsistent, every assignment against every solution, and for a
/// completed run that the basis vanishes on exactly the solution set (read
/// off by back-substitution under lex).
inline OracleVerdict check_against_oracle(const EngineReport& rep, const PolyRing& ring,
                                          const std::vector<std::vector<Coeff>>& solutions) {
  auto fail = [](std::string why) { return OracleVerdict{false, std::move(why)}; };
  if (rep.status == Status::Inconsistent) {
    if (!solutions.empty()) return fail("reported inconsistent but " + std::to_string(solutions.size()) + " solutions exist");
    return {true, "no solutions"};
  }
  for (const auto& [v, val] : rep.assignments)
    for (const auto& s : solutions)
      if (s[v] != val) return fail("assignment " + ring.name(v) + "=" + std::to_string(val) + " contradicts a solution");
  if (rep.status == Status::RoundLimit) return {true, "assignments agree with " + std::to_string(solutions.size()) + " solutions"};
  if (rep.status == Status::AllVariablesSolved) {
    std::vector<Coeff> point(ring.nvars());
    for (const auto& [v, val] : rep.assignments) point[v] = val;
    if (solutions.size() != 1 || solutions.front() != point) return fail("solved point is not the unique solution");
    return {true, "unique solution recovered"};
  }
  auto from_basis = ring.order().kind == OrderKind::lex ? solutions_from_lex_basis(rep.basis, ring)
                                                        : brute_force_solutions(rep.basis, ring);
  if (from_basis != solutions) return fail("zero set of the basis differs from the input's");
  return {true, std::to_string(solutions.size()) + " solutions match"};
}

}  // namespace mgb
