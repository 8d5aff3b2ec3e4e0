#include "wordeq/cli.hpp"

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "wordeq/blind.hpp"
#include "wordeq/errors.hpp"
#include "wordeq/generator.hpp"
#include "wordeq/guided.hpp"
#include "wordeq/oracle.hpp"
#include "wordeq/recompression.hpp"

namespace wordeq {

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fmt6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

struct SolveArgs {
  std::string file;
  std::size_t max_phases = 64;
  std::size_t max_exponent = 8;
  std::size_t space_cap = 1'000'000;
  std::uint64_t seed = 0;
  std::size_t node_budget = 20'000'000;
  double time_budget = 0;
  std::string witness_out;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  Equation eq = read_equation_file(a.file);
  SolverConfig cfg;
  cfg.max_phases = a.max_phases;
  cfg.max_block_exponent = a.max_exponent;
  cfg.space_cap_bits = a.space_cap;
  cfg.rng_seed = a.seed;
  cfg.node_budget = a.node_budget;
  cfg.time_budget_seconds = a.time_budget;
  const auto v = solve_blind(eq, cfg);
  switch (v.kind) {
    case VerdictKind::Sat:
      out << "SAT\n" << render_witness(eq.symbols(), v.witness);
      if (!a.witness_out.empty()) {
        std::ofstream w(a.witness_out);
        if (!w) throw IoError("cannot write " + a.witness_out);
        w << render_witness(eq.symbols(), v.witness);
      }
      break;
    case VerdictKind::UnsatWithinBounds:
      out << "UNSAT within bounds: max-phases " << a.max_phases << ", max-exponent " << a.max_exponent
          << ", space-cap-bits " << a.space_cap << "\n";
      break;
    case VerdictKind::Unknown:
      out << "UNKNOWN " << v.reason << "\n";
      break;
  }
  err << "nodes " << v.stats.nodes << ", deepest phase " << v.stats.max_phase << ", max bits " << v.stats.max_bits
      << ", " << fmt6(v.stats.seconds) << " s\n";
  return v.kind == VerdictKind::Sat ? kExitSat : v.kind == VerdictKind::UnsatWithinBounds ? kExitUnsat : kExitUnknown;
}

int cmd_oracle(const std::string& file, std::size_t max_len, std::size_t budget, std::ostream& out) {
  Equation eq = read_equation_file(file);
  try {
    const auto r = brute_force_solve(eq, max_len, budget);
    if (r.sat()) {
      out << "SAT\n" << render_witness(eq.symbols(), *r.witness);
      return kExitSat;
    }
    out << "UNSAT within max-len " << max_len << " (" << r.candidates << " candidates)\n";
    return kExitUnsat;
  } catch (const ResourceExceeded& e) {
    out << "UNKNOWN " << e.what() << "\n";
    return kExitUnknown;
  }
}

struct ProfileArgs {
  std::string file;
  std::string witness;
  std::string mode = "strategy";
  std::string new_letters = "outside-gamma";
  std::string metrics_csv;
  std::string metrics_json;
  std::size_t max_phases = 64;
  std::size_t space_cap = 1'000'000;
  std::uint64_t seed = 0;
  bool skip_invariants = false;
};

int cmd_profile(const ProfileArgs& a, std::ostream& out, std::ostream& err) {
  Equation eq = read_equation_file(a.file);
  const Substitution sigma = read_witness_file(a.witness, eq);
  if (!check_solution(eq, sigma)) {
    err << "witness does not solve " << eq.render() << "\n";
    return kExitParse;
  }
  SolverConfig cfg;
  cfg.max_phases = a.max_phases;
  cfg.space_cap_bits = a.space_cap;
  cfg.rng_seed = a.seed;
  cfg.partition_mode = a.mode == "canonical" ? PartitionMode::Canonical : PartitionMode::Strategy;
  cfg.new_letter_rule =
      a.new_letters == "pair-only" ? NewLetterRule::PairCompressionOnly : NewLetterRule::OutsidePhaseAlphabet;
  cfg.check_invariants = !a.skip_invariants;

  GuidedReport report;
  try {
    report = solve_guided(eq, sigma, cfg);
  } catch (const NoHalvingPartitionFound& e) {
    err << "violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const Desync& e) {
    err << "violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const PhaseCapExceeded& e) {
    out << "UNKNOWN " << e.what() << "\n";
    return kExitUnknown;
  } catch (const SpaceCapExceeded& e) {
    out << "UNKNOWN " << e.what() << "\n";
    return kExitUnknown;
  }
  if (!a.metrics_csv.empty()) write_file(a.metrics_csv, export_csv(report.metrics));
  if (!a.metrics_json.empty()) write_file(a.metrics_json, export_json(report.metrics));

  out << "SAT phases " << report.phases << " (bound " << guided_phase_bound(report.solution_length) << ")"
      << ", N " << report.solution_length << ", partitions " << report.partitions << ", abs "
      << report.metrics.input_abs << ", max_ratio " << fmt6(report.metrics.max_ratio()) << ", violations "
      << report.violations.size() << "\n";
  out << render_witness(eq.symbols(), report.witness);
  for (const auto& v : report.violations) err << "violation: " << v << "\n";
  return report.violations.empty() ? kExitSat : kExitViolation;
}

struct GenArgs {
  std::size_t vars = 2;
  std::size_t letters = 2;
  std::size_t side_len = 6;
  std::size_t sol_len = 6;
  std::uint64_t seed = 0;
  std::size_t count = 1;
  std::string out_dir = ".";
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  std::filesystem::create_directories(a.out_dir);
  for (std::size_t i = 0; i < a.count; ++i) {
    const std::uint64_t seed = a.seed * 1'000'003ULL + i;
    const auto inst = generate_instance(seed, a.vars, a.letters, a.side_len, a.sol_len);
    const auto stem = (std::filesystem::path(a.out_dir) / ("inst_" + std::to_string(a.seed) + "_" + std::to_string(i)))
                          .string();
    write_file(stem + ".eq", inst.eq.render() + "\n");
    write_file(stem + ".wit", render_witness(inst.eq.symbols(), inst.solution));
    out << stem << ".eq\n";
  }
  return 0;
}

int cmd_compress(const std::string& file, std::ostream& out) {
  std::string line;
  {
    std::istringstream in(read_text(file));
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) break;
    }
  }
  auto symbols = std::make_shared<SymbolTable>();
  Word w;
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (!std::islower(static_cast<unsigned char>(c))) throw ParseError(std::string("not a letter: '") + c + "'");
    w.push_back(symbols->intern(c));
  }
  if (w.empty()) throw ParseError("no letters in " + file);
  DerivationLog log;
  const Word compressed = compress_phase(w, symbols, log);
  const auto n = w.size();
  const auto m = compressed.size();
  const bool ok = 3 * m <= 2 * n + 1;
  out << "|w| " << n << "\n|w'| " << m << "\nratio " << fmt6(static_cast<double>(m) / static_cast<double>(n))
      << "\nbound " << fmt6((2.0 * static_cast<double>(n) + 1.0) / 3.0) << (ok ? " ok" : " VIOLATED") << "\n";
  out << "w' " << render_word(*symbols, compressed) << "\n" << log.render(*symbols);
  return ok ? 0 : kExitCompressBound;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Word equation solver based on recompression"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Blind search for a solution within caps");
  s->add_option("file", solve.file, "Equation file")->required();
  s->add_option("--max-phases", solve.max_phases, "Phase cap")->capture_default_str()->check(CLI::PositiveNumber);
  s->add_option("--max-exponent", solve.max_exponent, "Largest guessed block exponent")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  s->add_option("--space-cap-bits", solve.space_cap, "Prune equations encoded in more bits")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  s->add_option("--seed", solve.seed, "Random seed")->capture_default_str();
  s->add_option("--node-budget", solve.node_budget, "Search nodes before UNKNOWN (0 = unlimited)")
      ->capture_default_str();
  s->add_option("--time-budget", solve.time_budget, "Seconds before UNKNOWN (0 = unlimited)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  s->add_option("--witness", solve.witness_out, "Write the witness here on SAT");

  std::string oracle_file;
  std::size_t max_len = 8;
  std::size_t budget = 200'000'000;
  auto* o = app.add_subcommand("oracle", "Exhaustive search over bounded image lengths");
  o->add_option("file", oracle_file, "Equation file")->required();
  o->add_option("--max-len", max_len, "Longest image tried")->capture_default_str();
  o->add_option("--budget", budget, "Candidate budget before UNKNOWN")->capture_default_str();

  ProfileArgs profile;
  auto* p = app.add_subcommand("profile", "Guided run from a known solution with full metrics");
  p->add_option("file", profile.file, "Equation file")->required();
  p->add_option("--witness", profile.witness, "Solution file (X = ab lines)")->required();
  p->add_option("--partition-mode", profile.mode, "strategy or canonical")
      ->capture_default_str()
      ->check(CLI::IsMember({"strategy", "canonical"}));
  p->add_option("--new-letters", profile.new_letters, "outside-gamma or pair-only")
      ->capture_default_str()
      ->check(CLI::IsMember({"outside-gamma", "pair-only"}));
  p->add_option("--metrics", profile.metrics_csv, "Write per-step metrics as CSV");
  p->add_option("--metrics-json", profile.metrics_json, "Write all metrics as JSON");
  p->add_option("--max-phases", profile.max_phases, "Phase cap")->capture_default_str()->check(CLI::PositiveNumber);
  p->add_option("--space-cap-bits", profile.space_cap, "Space cap")->capture_default_str()->check(CLI::PositiveNumber);
  p->add_option("--seed", profile.seed, "Random seed for partition sampling")->capture_default_str();
  p->add_flag("--skip-invariants", profile.skip_invariants, "Do not verify depfactor invariants per step");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Write planted instances as .eq/.wit pairs");
  g->add_option("--vars", gen.vars, "Number of variables")->capture_default_str();
  g->add_option("--letters", gen.letters, "Number of letters")->capture_default_str();
  g->add_option("--side-len", gen.side_len, "Symbols on the left side")->capture_default_str();
  g->add_option("--sol-len", gen.sol_len, "Longest variable image")->capture_default_str();
  g->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  g->add_option("--count", gen.count, "Number of instances")->capture_default_str();
  g->add_option("--out", gen.out_dir, "Output directory")->capture_default_str();

  std::string compress_file;
  auto* c = app.add_subcommand("compress", "One full phase on a letter string");
  c->add_option("file", compress_file, "File holding one line of letters")->required();

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : kExitParse;
  }

  try {
    if (*s) return cmd_solve(solve, out, err);
    if (*o) return cmd_oracle(oracle_file, max_len, budget, out);
    if (*p) return cmd_profile(profile, out, err);
    if (*c) return cmd_compress(compress_file, out);
    if (*g) {
      try {
        return cmd_gen(gen, out);
      } catch (const GenerationFailed& e) {
        err << e.what() << "\n";
        return kExitGenFailed;
      } catch (const IoError& e) {
        err << e.what() << "\n";
        return kExitGenFailed;
      }
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kExitParse;
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return kExitParse;
  } catch (const MissingVariable& e) {
    err << e.what() << "\n";
    return kExitParse;
  } catch (const NotASolution& e) {
    err << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}

}  // namespace wordeq
