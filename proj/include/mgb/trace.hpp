#pragma once

// Line-delimited JSON trace. Every line is a complete object and is flushed
// as soon as it is written, so a run that is killed part way still leaves a
// parseable record of everything solved so far.

#include <fstream>
#include <memory>
#include <ostream>
#include <string>

#include <json.hpp>

#include "mgb/engine_core.hpp"

namespace mgb {

class JsonTraceWriter : public TraceSink {
 public:
  using json = nlohmann::ordered_json;

  explicit JsonTraceWriter(std::ostream& out) : out_(&out) {}

  explicit JsonTraceWriter(const std::string& path)
      : file_(std::make_unique<std::ofstream>(path, std::ios::out | std::ios::trunc)), out_(file_.get()) {
    if (!*file_) throw Error("cannot open trace file '" + path + "'");
  }

  void on_start(const PolyRing& ring, EngineKind engine, const std::string& round_unit) override {
    json j;
    j["type"] = "header";
    j["engine"] = to_string(engine);
    j["round_unit"] = round_unit;
    j["field"] = ring.q();
    j["order"] = ring.order().kind == OrderKind::lex ? "lex" : "grevlex";
    j["vars"] = ring.names();
    write(j);
  }

  void on_event(const SolveEvent& ev, const PolyRing& ring) override {
    json j;
    j["type"] = "event";
    j["kind"] = "solved";
    j["round"] = ev.round;
    j["var"] = ring.name(ev.variable);
    j["value"] = ev.value;
    write(j);
  }

  void on_inconsistent(std::size_t round) override {
    json j;
    j["type"] = "event";
    j["kind"] = "inconsistent";
    j["round"] = round;
    write(j);
  }

  void on_round(const RoundTrace& r, const PolyRing& ring) override {
    json j;
    j["type"] = "round";
    j["round"] = r.round;
    j["pairs_selected"] = r.pairs_selected;
    j["new_polys"] = r.new_polys;
    if (r.matrix_rows) j["matrix_rows"] = *r.matrix_rows;
    if (r.matrix_cols) j["matrix_cols"] = *r.matrix_cols;
    j["max_degree"] = r.max_degree;
    j["zero_reductions"] = r.zero_reductions;
    j["solved_total"] = r.solved_total;
    json events = json::array();
    for (const auto& ev : r.events) events.push_back({{"kind", "solved"}, {"var", ring.name(ev.variable)}, {"value", ev.value}});
    if (r.inconsistent) events.push_back({{"kind", "inconsistent"}});
    j["events"] = std::move(events);
    write(j);
  }

  void on_finish(const EngineReport& rep, const PolyRing& ring) override {
    json j;
    j["type"] = "final";
    j["status"] = to_string(rep.status);
    json assignments = json::object();
    for (const auto& [v, val] : rep.assignments) assignments[ring.name(v)] = val;
    j["assignments"] = std::move(assignments);
    json basis = json::array();
    for (const auto& p : rep.basis) basis.push_back(to_string(p, ring));
    j["basis"] = std::move(basis);
    j["total_rounds"] = rep.total_rounds();
    write(j);
  }

 private:
  void write(const json& j) {
    *out_ << j.dump() << '\n';
    out_->flush();
  }

  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
};

}  // namespace mgb
