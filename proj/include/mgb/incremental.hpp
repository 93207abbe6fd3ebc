#pragma once

// Incremental frame: the basis of <f1..fi> is grown from the basis of
// <f1..f(i-1)> one input at a time, and each completed intermediate basis
// is screened for unique-root univariates. One round per consumed input.

#include <algorithm>
#include <vector>

#include "mgb/buchberger.hpp"
#include "mgb/engine_core.hpp"
#include "mgb/f4.hpp"
#include "mgb/midsolve.hpp"

namespace mgb {

namespace detail {

class IncrementalRun {
 public:
  IncrementalRun(const EngineConfig& cfg, TraceSink* sink)
      : cfg_(cfg), ring_(cfg.ring), sink_(sink), eager_(cfg.eager_field()) {
    cfg_.validate();
    report_.round_unit = "input";
    if (sink_) sink_->on_start(ring_, EngineKind::incremental, report_.round_unit);
  }

  EngineReport run(const std::vector<Polynomial>& F) {
    std::vector<Polynomial> inputs;
    for (const auto& f : F) {
      auto g = eager_ && !field_polynomial_var(f, ring_) ? field_reduce(f, ring_) : f;
      if (g.is_zero()) continue;
      if (g.is_constant()) return finish(Status::Inconsistent, true);
      inputs.push_back(make_monic(g, ring_));
    }
    if (cfg_.reverse_input_order) std::reverse(inputs.begin(), inputs.end());

    std::vector<Polynomial> fields;
    if (cfg_.adjoin_field_eqs)
      for (std::size_t v = 0; v < ring_.nvars(); ++v) fields.push_back(field_polynomial(v, ring_));
    if (inputs.empty()) {
      G_ = inner_gb(fields);
      return finish(Status::GroebnerBasis);
    }

    for (std::size_t i = 0; i < inputs.size(); ++i) {
      cur_ = RoundTrace{};
      cur_.round = i + 1;
      if (i == 0) {
        auto start = fields;
        start.push_back(inputs[0]);
        G_ = inner_gb(start);
        cur_.new_polys = 1;
      } else {
        auto f = normal_form(inputs[i], G_, ring_, eager_);
        if (!f.is_zero()) {
          auto gens = G_;
          gens.push_back(f);
          G_ = inner_gb(gens);
          cur_.new_polys = 1;
        } else {
          cur_.zero_reductions = 1;
        }
      }
      if (cfg_.middle_solving) screen(inputs, i + 1);
      cur_.solved_total = assignments_.size();
      cur_.basis_size = G_.size();
      if (sink_) sink_->on_round(cur_, ring_);
      report_.rounds.push_back(cur_);
      if (status_) return finish(*status_);
      if (cfg_.max_rounds && cur_.round >= *cfg_.max_rounds && i + 1 < inputs.size())
        return finish(Status::RoundLimit);
    }
    return finish(Status::GroebnerBasis);
  }

 private:
  std::vector<Polynomial> inner_gb(const std::vector<Polynomial>& gens) {
    EngineConfig ic(ring_);
    ic.engine = cfg_.inner_engine;
    ic.middle_solving = false;
    ic.adjoin_field_eqs = false;
    ic.eager_field_reduction = eager_;
    ic.use_criteria = cfg_.use_criteria;
    auto rep = cfg_.inner_engine == EngineKind::buchberger ? buchberger_gb(gens, ic) : f4_gb(gens, ic);
    report_.max_created_degree = std::max(report_.max_created_degree, rep.max_created_degree);
    report_.max_stored_degree = std::max(report_.max_stored_degree, rep.max_stored_degree);
    report_.bound_checks += rep.bound_checks;
    cur_.pairs_selected += rep.total_rounds();
    cur_.max_degree = std::max(cur_.max_degree, rep.max_created_degree);
    return rep.basis;
  }

  void mark_inconsistent() {
    cur_.inconsistent = true;
    status_ = Status::Inconsistent;
    if (sink_) sink_->on_inconsistent(cur_.round);
  }

  // Screens G_i until no unique-root univariate is left, substituting into
  // the basis and into the inputs not consumed yet.
  void screen(std::vector<Polynomial>& inputs, std::size_t round) {
    while (true) {
      if (inconsistency_check(G_, ring_.field())) {
        mark_inconsistent();
        return;
      }
      auto found = find_unique_root_polys(G_, ring_, round);
      if (found.conflict) {
        mark_inconsistent();
        return;
      }
      if (found.assignments.empty()) return;
      std::vector<Polynomial> next = G_;
      for (const auto& a : found.assignments) {
        SolveEvent ev{round, a.variable, a.value};
        assignments_[a.variable] = a.value;
        cur_.events.push_back(ev);
        report_.events.push_back(ev);
        if (sink_) sink_->on_event(ev, ring_);
        const auto fp = field_polynomial(a.variable, ring_);
        std::vector<Polynomial> subst;
        for (const auto& g : next)
          if (!(g == fp)) subst.push_back(substitute(g, a.variable, a.value, ring_));
        next = std::move(subst);
        for (std::size_t j = round; j < inputs.size(); ++j)
          inputs[j] = substitute(inputs[j], a.variable, a.value, ring_);
      }
      for (std::size_t j = round; j < inputs.size(); ++j) {
        if (inputs[j].is_constant()) {
          mark_inconsistent();
          return;
        }
        inputs[j] = make_monic(inputs[j], ring_);
      }
      G_ = inner_gb(next);
      if (assignments_.size() == ring_.nvars()) {
        if (inconsistency_check(G_, ring_.field()))
          mark_inconsistent();
        else
          status_ = Status::AllVariablesSolved;
        return;
      }
    }
  }

  EngineReport finish(Status s, bool before_any_round = false) {
    report_.status = s;
    // An inconsistent system has no solution; values solved on the way stay
    // in the event list only.
    if (s != Status::Inconsistent) report_.assignments = assignments_;
    if (s == Status::Inconsistent) {
      if (before_any_round && sink_) sink_->on_inconsistent(0);
      report_.basis = {Polynomial::constant(1, ring_)};
    } else {
      auto polys = G_;
      for (const auto& [v, val] : assignments_)
        polys.push_back(poly_normalize({Term{1, ring_.var(v)}, Term{ring_.field().neg(val), ring_.one()}}, ring_));
      report_.basis = reduce_groebner_basis(std::move(polys), ring_, eager_);
    }
    if (sink_) sink_->on_finish(report_, ring_);
    return std::move(report_);
  }

  EngineConfig cfg_;
  PolyRing ring_;
  TraceSink* sink_;
  bool eager_;
  std::vector<Polynomial> G_;
  std::map<std::size_t, Coeff> assignments_;
  EngineReport report_;
  RoundTrace cur_;
  std::optional<Status> status_;
};

}  // namespace detail

inline EngineReport incremental_gb(const std::vector<Polynomial>& F, const EngineConfig& config,
                                   TraceSink* sink = nullptr) {
  return detail::IncrementalRun(config, sink).run(F);
}

}  // namespace mgb
