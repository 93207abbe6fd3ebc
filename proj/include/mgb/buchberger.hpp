#pragma once

// Pair-at-a-time Buchberger engine. One round reduces one critical pair.
// Slow, but simple enough to serve as the reference the F4 engine is
// checked against.

#include <vector>

#include "mgb/engine_core.hpp"
#include "mgb/session.hpp"

namespace mgb {

inline EngineReport buchberger_gb(const std::vector<Polynomial>& F, const EngineConfig& config,
                                  TraceSink* sink = nullptr) {
  detail::Session s(config, sink, "pair");
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
    auto pair = select_one(s.pairs(), ring.order());
    s.current().pairs_selected = 1;
    const auto& G = s.basis();
    auto sp = spoly(G[pair.left], G[pair.right], ring);
    if (s.eager_field()) sp = field_reduce(sp, ring);
    s.note_created(sp);
    auto h = normal_form_with(sp, G.polys, ring, s.eager_field(), [&](const Polynomial& m) { s.note_created(m); });
    std::vector<Polynomial> batch;
    if (h.is_zero())
      s.current().zero_reductions = 1;
    else
      batch.push_back(make_monic(h, ring));
    s.absorb(std::move(batch));
    s.end_round();
  }
  s.finish(Status::GroebnerBasis);
  return s.take_report();
}

}  // namespace mgb
