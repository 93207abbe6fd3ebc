#pragma once

// Single entry point dispatching to the configured engine.

#include <memory>
#include <vector>

#include "mgb/buchberger.hpp"
#include "mgb/f4.hpp"
#include "mgb/incremental.hpp"
#include "mgb/trace.hpp"

namespace mgb {

/// Runs config.engine on F. When no sink is given and config.trace_path is
/// set, the trace is written there.
inline EngineReport run_engine(const std::vector<Polynomial>& F, const EngineConfig& config, TraceSink* sink = nullptr) {
  std::unique_ptr<JsonTraceWriter> file_sink;
  if (!sink && config.trace_path) {
    file_sink = std::make_unique<JsonTraceWriter>(*config.trace_path);
    sink = file_sink.get();
  }
  switch (config.engine) {
    case EngineKind::buchberger:
      return buchberger_gb(F, config, sink);
    case EngineKind::f4:
      return f4_gb(F, config, sink);
    case EngineKind::incremental:
      return incremental_gb(F, config, sink);
  }
  throw InvalidConfig("unknown engine");
}

}  // namespace mgb
