// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Runs sequentially; expect a few minutes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wordeq/blind.hpp"
#include "wordeq/depstate.hpp"
#include "wordeq/errors.hpp"
#include "wordeq/generator.hpp"
#include "wordeq/guided.hpp"
#include "wordeq/oracle.hpp"
#include "wordeq/recompression.hpp"
#include "wordeq/strategy.hpp"

using namespace wordeq;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

std::string elapsed(Clock::time_point t0) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.0fs", std::chrono::duration<double>(Clock::now() - t0).count());
  return buf;
}

std::string num(double x, int decimals = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

template <class List>
std::string examples(const List& items, std::size_t n = 3) {
  std::string s;
  for (std::size_t i = 0; i < std::min(n, items.size()); ++i) s += (i ? "; " : "") + items[i];
  return s;
}

// Representative of an equation under side swap, a<->b and X<->Y.
std::string canonical_form(const std::string& u, const std::string& v) {
  std::string best;
  for (int swap = 0; swap < 2; ++swap) {
    for (int flip_letters = 0; flip_letters < 2; ++flip_letters) {
      for (int flip_vars = 0; flip_vars < 2; ++flip_vars) {
        auto map = [&](std::string s) {
          for (auto& c : s) {
            if (flip_letters && (c == 'a' || c == 'b')) c = c == 'a' ? 'b' : 'a';
            if (flip_vars && (c == 'X' || c == 'Y')) c = c == 'X' ? 'Y' : 'X';
          }
          return s;
        };
        auto key = swap ? map(v) + "=" + map(u) : map(u) + "=" + map(v);
        if (best.empty() || key < best) best = key;
      }
    }
  }
  return best;
}

// Every equation over {a, b, X, Y} with sides of length 1..4, up to symmetry.
std::vector<std::string> exhaustive_family() {
  std::vector<std::string> words;
  std::vector<std::string> frontier{""};
  for (int len = 1; len <= 4; ++len) {
    std::vector<std::string> next;
    for (const auto& w : frontier) {
      for (char c : std::string("abXY")) next.push_back(w + c);
    }
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::set<std::string> family;
  for (const auto& u : words) {
    for (const auto& v : words) family.insert(canonical_form(u, v));
  }
  return {family.begin(), family.end()};
}

struct GuidedRun {
  std::string label;
  bool strategy = true;
  bool planted = false;  // one of the criterion-4 instances
  std::string error;     // message of an escaped exception
  bool no_halving = false;
  GuidedReport report;
};

struct Corpus {
  std::vector<GuidedRun> runs;
  std::size_t blind_sat = 0;
  std::size_t blind_unknown = 0;
  std::size_t blind_unsat = 0;
  std::size_t witnesses_checked = 0;
  std::vector<std::string> bad_witnesses;

  GuidedRun& guided(const std::string& label, const Equation& eq, const Substitution& sigma, bool strategy) {
    GuidedRun run;
    run.label = label;
    run.strategy = strategy;
    SolverConfig cfg;
    cfg.partition_mode = strategy ? PartitionMode::Strategy : PartitionMode::Canonical;
    try {
      run.report = solve_guided(eq, sigma, cfg);
      if (run.report.sat) {
        ++witnesses_checked;
        if (!check_solution(eq, run.report.witness)) bad_witnesses.push_back(label + " (guided)");
      }
    } catch (const NoHalvingPartitionFound& e) {
      run.no_halving = true;
      run.error = std::string("no halving partition: ") + e.what();
    } catch (const std::exception& e) {
      run.error = e.what();
    }
    runs.push_back(std::move(run));
    return runs.back();
  }

  void blind(const std::string& label, const Equation& eq, const Verdict& v) {
    switch (v.kind) {
      case VerdictKind::Sat:
        ++blind_sat;
        ++witnesses_checked;
        if (!check_solution(eq, v.witness)) bad_witnesses.push_back(label + " (blind)");
        break;
      case VerdictKind::Unknown: ++blind_unknown; break;
      case VerdictKind::UnsatWithinBounds: ++blind_unsat; break;
    }
  }
};

SolverConfig blind_caps() {
  SolverConfig c;
  c.max_phases = 8;
  c.max_block_exponent = 6;
  c.node_budget = 200'000;
  return c;
}

constexpr std::size_t kOracleMaxLen = 8;

// 1: blind search against the brute-force oracle on the exhaustive family.
Outcome oracle_equivalence(Corpus& corpus) {
  const auto t0 = Clock::now();
  const auto family = exhaustive_family();
  std::size_t agree = 0;
  std::size_t sat = 0;
  std::size_t long_images = 0;
  std::size_t unknown = 0;
  std::size_t unknown_oracle_sat = 0;
  std::vector<std::string> disagree;
  for (const auto& text : family) {
    const auto eq = parse_equation(text);
    const auto v = solve_blind(eq, blind_caps());
    corpus.blind(text, eq, v);

    const auto oracle_eq = parse_equation(text);
    const auto o = brute_force_solve(oracle_eq, kOracleMaxLen);
    if (o.sat()) corpus.guided(text, oracle_eq, *o.witness, true);

    if (v.kind == VerdictKind::Unknown) {
      ++unknown;
      unknown_oracle_sat += o.sat();
    } else if (v.sat() == o.sat()) {
      ++agree;
      sat += o.sat();
    } else {
      disagree.push_back(text + (v.sat() ? " blind SAT" : " blind UNSAT"));
      if (v.sat()) {
        std::size_t longest = 0;
        for (const auto& [x, w] : v.witness) longest = std::max(longest, w.size());
        long_images += longest > kOracleMaxLen;
      }
    }
  }
  Outcome out;
  out.pass = disagree.empty() && unknown == 0;
  std::ostringstream d;
  d << family.size() << " equations; agree " << agree << " (" << sat << " SAT); disagree " << disagree.size();
  if (!disagree.empty()) {
    d << " (" << long_images << " with a blind witness image longer than " << kOracleMaxLen << "; "
      << examples(disagree) << ")";
  }
  d << "; unknown " << unknown << " (oracle SAT " << unknown_oracle_sat << ", oracle UNSAT "
    << unknown - unknown_oracle_sat << "); " << elapsed(t0);
  out.detail = d.str();
  return out;
}

// Generated instances for soundness: blind search plus the guided run.
void generated_instances(Corpus& corpus) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto inst = generate_instance(seed, 1 + seed % 2, 2 + seed % 2, 3 + seed % 4, 2 + seed % 4);
    const auto label = "gen " + std::to_string(seed) + " " + inst.eq.render();
    corpus.blind(label, inst.eq, solve_blind(inst.eq, blind_caps()));
    corpus.guided(label, inst.eq, inst.solution, true);
  }
}

// 2: every SAT witness seen so far solves its equation.
Outcome soundness(const Corpus& corpus) {
  Outcome out;
  out.pass = corpus.bad_witnesses.empty();
  out.detail = std::to_string(corpus.witnesses_checked) + " witnesses checked (blind SAT " +
               std::to_string(corpus.blind_sat) + ", UNSAT " + std::to_string(corpus.blind_unsat) + ", unknown " +
               std::to_string(corpus.blind_unknown) + "); failing " + std::to_string(corpus.bad_witnesses.size());
  if (!corpus.bad_witnesses.empty()) out.detail += ": " + examples(corpus.bad_witnesses);
  return out;
}

// 3: one phase on random strings.
Outcome shortening() {
  std::mt19937_64 rng(3);
  std::size_t worst_n = 0;
  std::size_t worst_m = 0;
  double worst = 0;
  std::vector<std::string> failures;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t alphabet = 1 + rng() % 6;
    const std::size_t n = 1 + rng() % 500;
    auto symbols = std::make_shared<SymbolTable>();
    Word w;
    for (std::size_t j = 0; j < n; ++j) w.push_back(symbols->intern(static_cast<char>('a' + rng() % alphabet)));
    DerivationLog log;
    const auto m = compress_phase(w, symbols, log).size();
    const double slack = static_cast<double>(3 * m) / static_cast<double>(2 * n + 1);
    if (slack > worst) {
      worst = slack;
      worst_n = n;
      worst_m = m;
    }
    if (3 * m > 2 * n + 1) failures.push_back(std::to_string(n) + "->" + std::to_string(m));
  }
  Outcome out;
  out.pass = failures.empty();
  out.detail = "1000 strings; tightest |w'| / ((2|w|+1)/3) = " + num(worst) + " at |w| " + std::to_string(worst_n) +
               ", |w'| " + std::to_string(worst_m) + "; violations " + std::to_string(failures.size());
  if (!failures.empty()) out.detail += ": " + examples(failures);
  return out;
}

// Planted instances with |sigma(U)| <= 2000, in both partition modes.
void planted_instances(Corpus& corpus) {
  std::size_t kept = 0;
  for (std::uint64_t seed = 0; kept < 500; ++seed) {
    const auto inst =
        generate_instance(seed, 1 + seed % 4, 2 + seed % 5, 4 + (seed * 7) % 120, 2 + (seed * 13) % 60);
    const auto n = apply_substitution(inst.eq, normalize_solution(inst.eq, inst.solution)).first.size();
    if (n > 2000) continue;
    ++kept;
    const auto label = "planted " + std::to_string(seed);
    corpus.guided(label, inst.eq, inst.solution, true).planted = true;
    corpus.guided(label + " canonical", inst.eq, inst.solution, false);
  }
}

// 4: phase count of the planted strategy runs.
Outcome guided_completeness(const Corpus& corpus) {
  std::size_t runs = 0;
  std::size_t max_n = 0;
  std::size_t max_phases = 0;
  double max_fraction = 0;
  std::vector<std::string> failures;
  for (const auto& r : corpus.runs) {
    if (!r.planted) continue;
    ++runs;
    if (!r.error.empty()) {
      failures.push_back(r.label + ": " + r.error);
      continue;
    }
    const auto bound = guided_phase_bound(r.report.solution_length);
    max_n = std::max(max_n, r.report.solution_length);
    max_phases = std::max(max_phases, r.report.phases);
    max_fraction = std::max(max_fraction, static_cast<double>(r.report.phases) / static_cast<double>(bound));
    if (!r.report.sat || r.report.phases > bound) {
      failures.push_back(r.label + ": " + std::to_string(r.report.phases) + " phases, bound " + std::to_string(bound));
    }
  }
  Outcome out;
  out.pass = failures.empty() && runs == 500;
  out.detail = std::to_string(runs) + " planted runs, N up to " + std::to_string(max_n) + ", most phases " +
               std::to_string(max_phases) + ", largest phases/bound " + num(max_fraction) + "; failing " +
               std::to_string(failures.size());
  if (!failures.empty()) out.detail += ": " + examples(failures);
  return out;
}

std::size_t count_violations(const GuidedRun& r, const std::string& category) {
  std::size_t n = 0;
  for (const auto& v : r.report.violations) n += v.rfind(category + ":", 0) == 0;
  return n;
}

// Follows a planted solution through whole phases with random partitions and
// records, before each pair extension, whether both pass orders agree.
class DualOrderDriver : public PhaseDriver {
 public:
  DualOrderDriver(Substitution sigma, std::mt19937_64& rng) : sigma_(std::move(sigma)), rng_(rng) {}

  BlockPops block_pops(const Equation& eq, const PhaseState&) override { return block_pops_from_solution(eq, sigma_); }

  Partition next_partition(const Equation&, const PhaseState& st) override {
    for (int attempt = 0; attempt < 8; ++attempt) {
      std::vector<SymbolId> left;
      std::vector<SymbolId> right;
      for (auto a : st.alphabet) (rng_() % 2 ? left : right).push_back(a);
      Partition p(left, right);
      if (st.coverage.newly_covered(p) > 0) return p;
    }
    return PartitionChooser::best_coverage(st.alphabet, st.coverage);
  }

  PairPops pair_pops(const Equation& eq, const Partition& p, const PhaseState&) override {
    return pair_pops_from_solution(eq, p, sigma_);
  }

  void on_step(const Equation& eq, const PhaseState& st, const StepEvent& ev) override {
    if (ev.kind == StepKind::PairPop) {
      auto forward = eq;
      auto backward = eq;
      extend_for_pair(forward, *ev.partition, nullptr, false);
      extend_for_pair(backward, *ev.partition, nullptr, true);
      ++states;
      if (forward.lhs() != backward.lhs() || forward.rhs() != backward.rhs()) ++mismatches;
    }
    sigma_ = advance_solution(eq, sigma_, ev, st.gamma);
  }

  std::size_t states = 0;
  std::size_t mismatches = 0;

 private:
  Substitution sigma_;
  std::mt19937_64& rng_;
};

// 5: invariants after every step of every guided run, plus pass-order
// independence of the pair extension.
Outcome depfactor_invariants(const Corpus& corpus) {
  std::size_t steps = 0;
  std::size_t bad_runs = 0;
  std::vector<std::string> failures;
  for (const auto& r : corpus.runs) {
    steps += r.report.metrics.steps.size();
    const auto n = count_violations(r, "invariant");
    if (n > 0) {
      ++bad_runs;
      failures.push_back(r.label + ": " + r.report.violations.front());
    }
  }

  std::mt19937_64 rng(11);
  std::size_t states = 0;
  std::size_t mismatches = 0;
  std::string driver_error;
  for (std::uint64_t seed = 0; states < 200 && seed < 1000; ++seed) {
    const auto inst = generate_instance(5000 + seed, 1 + seed % 3, 2 + seed % 4, 4 + seed % 9, 2 + seed % 7);
    DualOrderDriver driver(normalize_solution(inst.eq, inst.solution), rng);
    DerivationLog log;
    auto eq = inst.eq;
    try {
      for (int phase = 1; phase <= 16 && (eq.side(Side::Lhs).size() > 3 || eq.side(Side::Rhs).size() > 3); ++phase) {
        eq = run_phase(eq, phase, driver, log);
      }
    } catch (const std::exception& e) {
      driver_error = e.what();
    }
    states += driver.states;
    mismatches += driver.mismatches;
  }

  Outcome out;
  out.pass = bad_runs == 0 && mismatches == 0 && states >= 200 && driver_error.empty();
  out.detail = std::to_string(corpus.runs.size()) + " guided runs, " + std::to_string(steps) +
               " recorded steps, runs with D1-D3 violations " + std::to_string(bad_runs) + "; dual-order states " +
               std::to_string(states) + ", mismatches " + std::to_string(mismatches);
  if (!driver_error.empty()) out.detail += "; driver error: " + driver_error;
  if (!failures.empty()) out.detail += "; " + examples(failures);
  return out;
}

// 6: every committed strategy partition with a non-zero target halves it.
Outcome strategy_halving(const Corpus& corpus) {
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::size_t no_halving = 0;
  std::vector<std::string> failures;
  for (const auto& r : corpus.runs) {
    if (!r.strategy) continue;
    checks += r.report.halving_checks;
    const auto n = count_violations(r, "halving");
    violations += n;
    if (r.no_halving) {
      ++no_halving;
      failures.push_back(r.label + ": " + r.error);
    } else if (n > 0) {
      failures.push_back(r.label);
    }
  }
  Outcome out;
  out.pass = violations == 0 && no_halving == 0;
  out.detail = std::to_string(checks) + " halving checks; post > ceil(pre/2): " + std::to_string(violations) +
               "; NoHalvingPartitionFound: " + std::to_string(no_halving);
  if (!failures.empty()) out.detail += "; " + examples(failures);
  return out;
}

// 7: per-phase space recurrences on strategy runs.
Outcome space_recurrences(const Corpus& corpus) {
  std::size_t phases = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::map<std::string, double> tightest;  // lhs / rhs per bound
  for (const auto& r : corpus.runs) {
    if (!r.strategy || !r.error.empty()) continue;
    phases += r.report.metrics.phases.size();
    for (const auto& c : check_space_bounds(r.report.metrics)) {
      ++checks;
      if (c.rhs > 0) tightest[c.name] = std::max(tightest[c.name], c.lhs / c.rhs);
      if (!c.ok()) {
        failures.push_back(r.label + " phase " + std::to_string(c.phase) + " " + c.name + ": " + num(c.lhs) + " > " +
                           num(c.rhs));
      }
    }
  }
  Outcome out;
  out.pass = failures.empty();
  std::ostringstream d;
  d << phases << " phases, " << checks << " checks, failing " << failures.size() << "; tightest lhs/rhs:";
  for (const auto& [name, ratio] : tightest) d << " " << name << " " << num(ratio);
  if (!failures.empty()) d << "; " << examples(failures);
  out.detail = d.str();
  return out;
}

// 8: Huffman letter bits <= depfactor encoding <= H_d + H_n at every step.
Outcome encoding_bound(const Corpus& corpus) {
  std::size_t steps = 0;
  std::vector<std::string> failures;
  double tightest = 0;
  for (const auto& r : corpus.runs) {
    if (count_violations(r, "encoding") > 0) failures.push_back(r.label + ": " + r.report.violations.front());
    for (const auto& s : r.report.metrics.steps) {
      ++steps;
      const double h = s.h_d + s.h_n;
      if (h > 0) tightest = std::max(tightest, static_cast<double>(s.depfactor_bits) / h);
      // Exported potentials are rounded to 6 decimals.
      if (s.letter_bits > s.depfactor_bits || static_cast<double>(s.depfactor_bits) > h + 1e-6) {
        failures.push_back(r.label + " step " + std::to_string(s.step));
      }
    }
  }
  Outcome out;
  out.pass = failures.empty();
  out.detail = std::to_string(steps) + " steps; largest depfactor bits / (H_d + H_n) " + num(tightest) +
               "; failing " + std::to_string(failures.size());
  if (!failures.empty()) out.detail += ": " + examples(failures);
  return out;
}

// 9: max (H_d + H_n) / Abs(U0, V0) per strategy run against input size.
Outcome linear_space_trend(Corpus& corpus) {
  std::vector<double> xs;
  std::vector<double> ys;
  std::size_t smallest = 0;
  std::size_t largest = 0;
  double worst = 0;
  std::uint64_t seed = 90'000;
  for (std::size_t side : {12, 20, 32, 50, 80, 128, 200, 320, 500, 800, 1250, 2000}) {
    for (int rep = 0; rep < 3; ++rep, ++seed) {
      const auto inst = generate_instance(seed, 3, 4, side, 16);
      auto& run = corpus.guided("sweep " + std::to_string(seed), inst.eq, inst.solution, true);
      if (!run.error.empty()) continue;
      const auto abs = run.report.metrics.input_abs;
      if (abs < 100 || abs > 10'000) continue;
      const double ratio = run.report.metrics.max_ratio();
      xs.push_back(std::log2(static_cast<double>(abs)));
      ys.push_back(ratio);
      worst = std::max(worst, ratio);
      smallest = smallest == 0 ? abs : std::min(smallest, abs);
      largest = std::max(largest, abs);
    }
  }
  double slope = 0;
  if (xs.size() >= 2) {
    const double n = static_cast<double>(xs.size());
    double mx = 0;
    double my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i] / n;
      my += ys[i] / n;
    }
    double sxy = 0;
    double sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    slope = sxx > 0 ? sxy / sxx : 0;
  }
  Outcome out;
  out.pass = xs.size() >= 10 && slope <= 0.05;
  out.detail = std::to_string(xs.size()) + " runs, Abs " + std::to_string(smallest) + ".." + std::to_string(largest) +
               " bits; max ratio " + num(worst) + "; slope of max ratio vs log2 Abs " + num(slope, 4) +
               " (limit 0.05)";
  return out;
}

void report(int index, const char* name, const Outcome& o, bool& all) {
  std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
  std::fflush(stdout);
  all = all && o.pass;
}

}  // namespace

int main() {
  bool all = true;
  Corpus corpus;

  const auto equivalence = oracle_equivalence(corpus);
  report(1, "oracle equivalence", equivalence, all);

  generated_instances(corpus);
  planted_instances(corpus);
  const auto trend = linear_space_trend(corpus);

  report(2, "soundness", soundness(corpus), all);
  report(3, "one-phase shortening", shortening(), all);
  report(4, "guided completeness and phase count", guided_completeness(corpus), all);
  report(5, "depfactor invariants", depfactor_invariants(corpus), all);
  report(6, "strategy halving", strategy_halving(corpus), all);
  report(7, "space recurrences", space_recurrences(corpus), all);
  report(8, "encoding bound", encoding_bound(corpus), all);
  report(9, "linear-space trend", trend, all);
  return all ? 0 : 1;
}
