#pragma once

// Run state shared by the pair-driven engines (Buchberger and F4): input
// ingestion, insertion of reduced polynomials, Middle-Solving screening and
// renewal, round bookkeeping, and report assembly.

#include <algorithm>
#include <string>
#include <vector>

#include "mgb/engine_core.hpp"
#include "mgb/midsolve.hpp"

namespace mgb::detail {

class Session {
 public:
  Session(const EngineConfig& cfg, TraceSink* sink, std::string round_unit)
      : cfg_(cfg), ring_(cfg.ring), sink_(sink), eager_(cfg.eager_field()) {
    cfg_.validate();
    report_.round_unit = std::move(round_unit);
    if (sink_) sink_->on_start(ring_, cfg_.engine, report_.round_unit);
  }

  const PolyRing& ring() const { return ring_; }
  const EngineConfig& config() const { return cfg_; }
  bool eager_field() const { return eager_; }
  TemporaryBasis& basis() { return G_; }
  PairQueue& pairs() { return P_; }
  std::size_t round() const { return round_; }
  bool done() const { return status_.has_value(); }
  const EngineReport& report() const { return report_; }

  /// Loads the input system. Field polynomials go first so they are always
  /// basis members; inputs are inserted as given (monic, field-reduced).
  void ingest(const std::vector<Polynomial>& F) {
    std::vector<Polynomial> inputs;
    for (const auto& f : F) {
      // Field polynomials would field-reduce to zero; keep them as given.
      auto g = eager_ && !field_polynomial_var(f, ring_) ? field_reduce(f, ring_) : f;
      if (g.is_zero()) continue;
      if (g.is_constant()) {
        mark_inconsistent();
        return;
      }
      inputs.push_back(make_monic(g, ring_));
    }
    if (cfg_.adjoin_field_eqs) {
      auto all = adjoin_field_equations(inputs, ring_);
      std::vector<Polynomial> fields(all.begin() + static_cast<std::ptrdiff_t>(inputs.size()), all.end());
      for (const auto& f : inputs)
        if (field_polynomial_var(f, ring_)) fields.push_back(f);
      std::sort(fields.begin(), fields.end(), [&](const Polynomial& a, const Polynomial& b) {
        return *field_polynomial_var(a, ring_) < *field_polynomial_var(b, ring_);
      });
      std::erase_if(inputs, [&](const Polynomial& f) { return field_polynomial_var(f, ring_).has_value(); });
      inputs.insert(inputs.begin(), fields.begin(), fields.end());
    }
    for (const auto& f : inputs) {
      insert(f, false);
      if (done()) return;
    }
  }

  void begin_round() {
    cur_ = RoundTrace{};
    cur_.round = ++round_;
  }

  /// Degree accounting for a polynomial formed during reduction.
  void note_created(const Polynomial& p) {
    report_.max_created_degree = std::max(report_.max_created_degree, p.degree());
    cur_.max_degree = std::max(cur_.max_degree, p.degree());
    if (eager_) {
      ++report_.bound_checks;
      degree_monitor(p, ring_, DegreeStage::created);
    }
  }

  RoundTrace& current() { return cur_; }

  /// Handles the reduced batch of a round: Middle-Solving screening and
  /// renewal when enabled, then insertion into the basis.
  void absorb(std::vector<Polynomial> batch) {
    cur_.new_polys += batch.size();
    if (cfg_.middle_solving) {
      if (inconsistency_check(batch, ring_.field())) {
        mark_inconsistent();
        return;
      }
      if (!screen(batch)) return;
    }
    for (const auto& h : batch) {
      insert(h);
      if (done()) return;
    }
    if (cfg_.middle_solving && inconsistency_check(G_.active_polys(), ring_.field())) mark_inconsistent();
  }

  void end_round() {
    cur_.solved_total = assignments_.size();
    cur_.basis_size = G_.size();
    if (sink_) sink_->on_round(cur_, ring_);
    report_.rounds.push_back(cur_);
  }

  bool round_limit_hit() const { return cfg_.max_rounds && round_ >= *cfg_.max_rounds; }

  /// Screens the reduced form of a finished basis. Returns true if new
  /// pairs were created and the main loop has to continue.
  bool final_screen() {
    if (!cfg_.middle_solving || done()) return false;
    auto reduced = reduce_groebner_basis(G_.active_polys(), ring_, eager_);
    if (inconsistency_check(reduced, ring_.field())) {
      mark_inconsistent();
      return false;
    }
    std::vector<Polynomial> none;
    auto before = assignments_.size();
    screen_into(reduced, none);
    if (done()) return false;
    return assignments_.size() != before && !P_.empty();
  }

  void finish(Status s) {
    if (!status_) status_ = s;
    report_.status = *status_;
    // An inconsistent system has no solution; values solved on the way stay
    // in the event list only.
    if (report_.status != Status::Inconsistent) report_.assignments = assignments_;
    if (report_.status == Status::Inconsistent) {
      report_.basis = {Polynomial::constant(1, ring_)};
    } else {
      auto polys = G_.active_polys();
      for (const auto& [v, val] : assignments_) polys.push_back(linear_poly(v, val));
      if (report_.status == Status::RoundLimit) {
        sort_by_lm(polys, ring_);
        report_.basis = std::move(polys);
      } else {
        report_.basis = reduce_groebner_basis(std::move(polys), ring_, eager_);
      }
    }
    if (sink_) sink_->on_finish(report_, ring_);
  }

  EngineReport take_report() { return std::move(report_); }

 private:
  Polynomial linear_poly(std::size_t v, Coeff val) const {
    return poly_normalize({Term{1, ring_.var(v)}, Term{ring_.field().neg(val), ring_.one()}}, ring_);
  }

  void insert(const Polynomial& p, bool reduce = true) {
    auto h = reduce ? normal_form(p, G_.polys, ring_, eager_) : p;
    if (h.is_zero()) return;
    h = make_monic(h, ring_);
    if (eager_) {
      ++report_.bound_checks;
      degree_monitor(h, ring_, DegreeStage::stored);
    }
    report_.max_stored_degree = std::max(report_.max_stored_degree, h.degree());
    update(G_, P_, h, cfg_.use_criteria);
    if (h.is_constant() && cfg_.middle_solving) mark_inconsistent();
  }

  void mark_inconsistent() {
    cur_.inconsistent = true;
    status_ = Status::Inconsistent;
    if (sink_) sink_->on_inconsistent(round_);
  }

  // Returns false when the run ended during screening.
  bool screen(std::vector<Polynomial>& batch) {
    auto work = batch;
    screen_into(work, batch);
    return !done();
  }

  void screen_into(const std::vector<Polynomial>& candidates, std::vector<Polynomial>& batch) {
    auto found = find_unique_root_polys(candidates, ring_, round_);
    if (found.conflict) {
      mark_inconsistent();
      return;
    }
    for (const auto& a : found.assignments) {
      if (assignments_.count(a.variable)) continue;
      SolveEvent ev{round_, a.variable, a.value};
      assignments_[a.variable] = a.value;
      cur_.events.push_back(ev);
      report_.events.push_back(ev);
      if (sink_) sink_->on_event(ev, ring_);
      auto r = renew(G_, batch, a, ring_, RenewOptions{eager_, cfg_.use_criteria});
      G_ = std::move(r.basis);
      P_ = std::move(r.pairs);
      batch = std::move(r.batch);
      if (r.inconsistent) {
        mark_inconsistent();
        return;
      }
    }
    if (assignments_.size() == ring_.nvars()) {
      // Everything substituted: the basis is empty or holds a constant.
      if (inconsistency_check(G_.polys, ring_.field()) || inconsistency_check(batch, ring_.field()))
        mark_inconsistent();
      else
        status_ = Status::AllVariablesSolved;
    }
  }

  EngineConfig cfg_;
  PolyRing ring_;
  TraceSink* sink_;
  bool eager_;
  TemporaryBasis G_;
  PairQueue P_;
  std::map<std::size_t, Coeff> assignments_;
  EngineReport report_;
  RoundTrace cur_;
  std::size_t round_ = 0;
  std::optional<Status> status_;
};

}  // namespace mgb::detail
