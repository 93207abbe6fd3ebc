// Command-line driver: load or generate a system, run an engine, write the
// JSON trace and print a summary.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mgb/bench.hpp"
#include "mgb/engine.hpp"
#include "mgb/oracle.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kInconsistent = 2,
  kRoundLimit = 3,
  kInternalError = 4,
  kOracleMismatch = 5,
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mgb::Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases over GF(q) with Middle-Solving"};

  std::string input, gen, engine = "f4", order = "grevlex", inner = "f4";
  std::size_t n = 0;
  std::uint64_t field = 2;
  bool middle_solving = true, adjoin = true, homog = false, reverse = false, oracle = false;
  bool print_basis = false;
  std::size_t max_rounds = 0;
  std::string trace;

  auto* in_opt = app.add_option("--input", input, "System file");
  auto* gen_opt = app.add_option("--gen", gen, "Benchmark family")->check(CLI::IsMember({"cyclic", "katsura", "eco"}));
  in_opt->excludes(gen_opt);
  app.add_option("--n", n, "Benchmark size")->needs(gen_opt);
  app.add_option("--field", field, "Field size for generated systems (prime)");
  app.add_option("--engine", engine)->check(CLI::IsMember({"buchberger", "f4", "incremental"}));
  app.add_option("--inner-engine", inner, "Engine for each incremental step")
      ->check(CLI::IsMember({"buchberger", "f4"}));
  app.add_option("--order", order)->check(CLI::IsMember({"lex", "grevlex"}));
  app.add_flag("--middle-solving,!--no-middle-solving", middle_solving, "Solve unique-root univariates on the fly");
  app.add_flag("--adjoin-field-eqs,!--no-adjoin-field-eqs", adjoin, "Adjoin x^q - x for every variable");
  app.add_option("--max-rounds", max_rounds, "Stop after this many rounds")->check(CLI::PositiveNumber);
  app.add_flag("--homogenize", homog, "Homogenize with a fresh least variable");
  app.add_flag("--reverse-input-order", reverse, "Consume inputs last to first (incremental engine)");
  app.add_option("--trace", trace, "Line-delimited JSON trace output");
  app.add_flag("--oracle-check", oracle, "Compare against exhaustive search when q^n is small");
  app.add_flag("--print-basis", print_basis, "Print the final basis");

  CLI11_PARSE(app, argc, argv);

  if (input.empty() && gen.empty()) {
    std::cerr << "error: one of --input or --gen is required\n";
    return kError;
  }

  try {
    mgb::MonomialOrder ord{order == "lex" ? mgb::OrderKind::lex : mgb::OrderKind::grevlex};
    std::string label;
    auto sys = [&]() -> mgb::System {
      if (!input.empty()) {
        label = input;
        return mgb::parse_system(read_file(input), ord);
      }
      label = gen + "-" + std::to_string(n);
      return mgb::gen_system({mgb::parse_family(gen), n, field, ord});
    }();
    if (homog) {
      sys = mgb::homogenize(sys);
      label += "-h";
    }

    mgb::EngineConfig cfg(sys.ring);
    cfg.engine = engine == "buchberger" ? mgb::EngineKind::buchberger
                 : engine == "incremental" ? mgb::EngineKind::incremental
                                           : mgb::EngineKind::f4;
    cfg.inner_engine = inner == "buchberger" ? mgb::EngineKind::buchberger : mgb::EngineKind::f4;
    cfg.middle_solving = middle_solving;
    cfg.adjoin_field_eqs = adjoin;
    cfg.reverse_input_order = reverse;
    if (max_rounds) cfg.max_rounds = max_rounds;
    if (!trace.empty()) cfg.trace_path = trace;

    const auto& ring = sys.ring;
    std::cout << "system: " << label << " over GF(" << ring.q() << "), " << ring.nvars() << " variables, "
              << sys.polys.size() << " polynomials\n";
    auto rep = mgb::run_engine(sys.polys, cfg);

    std::cout << "engine: " << engine << " (round = " << rep.round_unit << "), order " << order
              << ", middle-solving " << (middle_solving ? "on" : "off") << ", field equations "
              << (adjoin ? "on" : "off") << "\n";
    std::cout << "status: " << mgb::to_string(rep.status) << "\n";
    std::cout << "total rounds: " << rep.total_rounds() << "\n";
    std::cout << "(Round,#Solved):";
    // Cumulative count, grouped by the round each event belongs to.
    const auto& ev = rep.events;
    for (std::size_t i = 0; i < ev.size(); ++i)
      if (i + 1 == ev.size() || ev[i + 1].round != ev[i].round)
        std::cout << ' ' << "(" << ev[i].round << "," << i + 1 << ")";
    std::cout << (ev.empty() ? " none\n" : "\n");
    if (!rep.assignments.empty()) {
      std::cout << "assignments:";
      for (const auto& [v, val] : rep.assignments) std::cout << ' ' << ring.name(v) << '=' << val;
      std::cout << '\n';
    }
    std::cout << "basis: " << rep.basis.size() << " polynomials\n";
    if (print_basis)
      for (const auto& p : rep.basis) std::cout << "  " << mgb::to_string(p, ring) << '\n';

    if (oracle) {
      try {
        auto sols = mgb::brute_force_solutions(sys.polys, ring, 1ull << 20);
        auto verdict = mgb::check_against_oracle(rep, ring, sols);
        std::cout << "oracle: " << (verdict.ok ? "consistent" : "MISMATCH") << " (" << verdict.detail << ")\n";
        if (!verdict.ok) return kOracleMismatch;
      } catch (const mgb::TooLarge&) {
        std::cout << "oracle: skipped (q^n too large)\n";
      }
    }

    switch (rep.status) {
      case mgb::Status::Inconsistent:
        return kInconsistent;
      case mgb::Status::RoundLimit:
        return kRoundLimit;
      default:
        return kOk;
    }
  } catch (const mgb::BoundViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
}
