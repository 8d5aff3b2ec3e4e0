#include "wordeq/guided.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "wordeq/depstate.hpp"
#include "wordeq/errors.hpp"
#include "wordeq/strategy.hpp"
#include "wordeq/witness.hpp"

namespace wordeq {

Substitution normalize_solution(const Equation& eq, const Substitution& sigma) {
  const auto letters = eq.letters();
  const LetterSet present(letters);
  const auto& symbols = eq.symbols();
  std::optional<SymbolId> least;
  for (auto a : letters) {
    if (!least || symbols.display(a) < symbols.display(*least)) least = a;
  }
  Substitution out;
  for (auto x : eq.variables()) {
    auto it = sigma.find(x);
    if (it == sigma.end()) throw MissingVariable(symbols.display(x));
    Word w;
    if (least) {
      w.reserve(it->second.size());
      for (auto c : it->second) w.push_back(present.contains(c) ? c : *least);
    }
    out[x] = std::move(w);
  }
  return out;
}

BlockPops derive_guesses_from_solution(const Equation& eq, const Substitution& sigma) {
  if (!check_solution(eq, sigma)) throw NotASolution(eq.render());
  return block_pops_from_solution(eq, sigma);
}

namespace {

void strip_front(Word& w, SymbolId a, std::size_t n, const SymbolTable& symbols) {
  if (w.size() < n || !std::all_of(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n),
                                   [&](SymbolId c) { return c == a; })) {
    throw Desync("image does not start with " + std::to_string(n) + " x " + symbols.display(a));
  }
  w.erase(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n));
}

void strip_back(Word& w, SymbolId b, std::size_t n, const SymbolTable& symbols) {
  if (w.size() < n || !std::all_of(w.end() - static_cast<std::ptrdiff_t>(n), w.end(),
                                   [&](SymbolId c) { return c == b; })) {
    throw Desync("image does not end with " + std::to_string(n) + " x " + symbols.display(b));
  }
  w.erase(w.end() - static_cast<std::ptrdiff_t>(n), w.end());
}

}  // namespace

Substitution advance_solution(const Equation& after, const Substitution& sigma, const StepEvent& ev,
                              const LetterSet& gamma) {
  const auto& symbols = after.symbols();
  Substitution next = sigma;
  switch (ev.kind) {
    case StepKind::BlockPop:
      for (const auto& [x, g] : *ev.block_pops) {
        auto it = next.find(x);
        if (it == next.end()) throw Desync("no image for " + symbols.display(x));
        if (g.vanish) {
          if (!it->second.empty()) throw Desync(symbols.display(x) + " vanished with a non-empty image");
          next.erase(it);
          continue;
        }
        strip_front(it->second, g.first, g.left_exp, symbols);
        strip_back(it->second, g.last, g.right_exp, symbols);
        if (g.empty != it->second.empty()) throw Desync("emptiness guess disagrees for " + symbols.display(x));
        if (g.empty) next.erase(it);
      }
      break;
    case StepKind::PairPop:
      for (const auto& [x, g] : *ev.pair_pops) {
        auto it = next.find(x);
        if (it == next.end()) throw Desync("no image for " + symbols.display(x));
        if (g.left) strip_front(it->second, *g.left, 1, symbols);
        if (g.right) strip_back(it->second, *g.right, 1, symbols);
        if (g.empty != it->second.empty()) throw Desync("emptiness guess disagrees for " + symbols.display(x));
        if (g.empty) next.erase(it);
      }
      break;
    case StepKind::BlockCompress:
      for (auto& [x, w] : next) w = block_compress_string(w, gamma, *ev.fresh);
      break;
    case StepKind::PairCompress:
      for (auto& [x, w] : next) w = pair_compress_string(w, *ev.partition, *ev.fresh);
      break;
    case StepKind::BlockExtend:
    case StepKind::PairExtend:
      break;
  }
  if (!check_solution(after, next)) {
    throw Desync(std::string("solution lost after ") + step_kind_name(ev.kind) + ": " + after.render());
  }
  return next;
}

std::size_t guided_phase_bound(std::size_t n) {
  const double x = static_cast<double>(std::max<std::size_t>(n, 1));
  // Small epsilon keeps exact powers of 3/2 from rounding up.
  return static_cast<std::size_t>(std::ceil(std::log(x) / std::log(1.5) - 1e-9)) + 2;
}

namespace {

std::size_t image_length(const Equation& eq, const Substitution& sigma) {
  return apply_substitution(eq, sigma).first.size();
}

class GuidedDriver : public PhaseDriver {
 public:
  GuidedDriver(Substitution sigma, const InputLayout& layout, const SolverConfig& config, DepCounters& counters,
               GuidedReport& report)
      : sigma_(std::move(sigma)), layout_(&layout), config_(&config), counters_(&counters), report_(&report),
        chooser_(config.rng_seed) {}

  const Substitution& sigma() const { return sigma_; }

  void on_phase_start(const Equation& eq, const PhaseState& st) override {
    sigma_ = normalize_solution(eq, sigma_);
    counters_->start_phase(eq, *layout_);
    gamma_ = &st.gamma;
    is_new_ = NewLetterTest(eq.symbols(), st.gamma, config_->new_letter_rule, st.phase);
    state_ = BlockState{};
    pops_after_block_.clear();
    target_ = "-";
    chosen_.reset();
    if (config_->partition_mode == PartitionMode::Canonical) schedule_ = canonical_schedule(st.alphabet);

    summary_ = PhaseSummary{};
    summary_.phase = st.phase;
    const auto pot = compute_potentials(eq, *layout_);
    summary_.h_d_start = round6(pot.h_d);
    summary_.h_n_start = round6(pot.h_n);
    summary_.h_peak = round6(pot.h_d + pot.h_n);
    const auto at_start = classify(eq, sigma_, *layout_, is_new_);
    record(eq, st, "start", rebuild_after_step(eq), pot, "-", &at_start);
  }

  BlockPops block_pops(const Equation& eq, const PhaseState&) override {
    return derive_guesses_from_solution(eq, sigma_);
  }

  Partition next_partition(const Equation& eq, const PhaseState& st) override {
    if (config_->partition_mode == PartitionMode::Canonical) {
      if (st.partitions >= schedule_.size()) throw std::logic_error("canonical schedule exhausted");
      target_ = "-";
      chosen_.reset();
      return schedule_[st.partitions];
    }
    const int target = static_cast<int>(st.partitions % 4);
    const auto mat = materialize(eq, sigma_);
    auto simulate = [&](const Partition& p) { return simulate_target(eq, st, p, target); };
    auto choice = chooser_.choose(eq, mat, sigma_, state_, *layout_, is_new_, st.alphabet, st.coverage, target,
                                  simulate);
    target_ = choice.by_coverage ? "cover" : target_name(target);
    chosen_ = choice;
    return choice.partition;
  }

  PairPops pair_pops(const Equation& eq, const Partition& p, const PhaseState&) override {
    return pair_pops_from_solution(eq, p, sigma_);
  }

  void on_step(const Equation& eq, const PhaseState& st, const StepEvent& ev) override {
    if (ev.kind == StepKind::PairPop) count_blocked_pops(*ev.pair_pops);
    sigma_ = advance_solution(eq, sigma_, ev, st.gamma);

    if (ev.kind == StepKind::BlockCompress) {
      check_no_equal_adjacent(eq, st);
      reclassify(eq);
    } else if (ev.kind == StepKind::PairCompress) {
      reclassify(eq);
      if (chosen_ && !chosen_->by_coverage) {
        const auto post = compute_sums(state_, eq, *layout_).get(chosen_->target);
        ++report_->halving_checks;
        if (2 * post > chosen_->pre + 1) {
          violation("halving", "target " + std::string(target_name(chosen_->target)) + " went from " +
                                   std::to_string(chosen_->pre) + " to " + std::to_string(post));
        }
      }
    }

    const auto pot = compute_potentials(eq, *layout_);
    if (config_->check_invariants) {
      for (const auto& v : verify_invariants(eq, *layout_)) violation("invariant", v.rule + " " + v.detail);
    }
    const auto& coding = *ev.coding;
    if (coding.letter_bits > pot.depfactor_bits || static_cast<double>(pot.depfactor_bits) > pot.h_d + pot.h_n + 1e-9) {
      violation("encoding", "letters " + std::to_string(coding.letter_bits) + ", depfactors " +
                                std::to_string(pot.depfactor_bits) + ", potentials " +
                                std::to_string(pot.h_d + pot.h_n));
    }
    const bool pair_step = ev.kind == StepKind::PairPop || ev.kind == StepKind::PairExtend ||
                           ev.kind == StepKind::PairCompress;
    record(eq, st, step_kind_name(ev.kind), coding, pot, pair_step ? target_ : "-");
    if (!transient_step(step_kind_name(ev.kind))) summary_.h_peak = std::max(summary_.h_peak, round6(pot.h_d + pot.h_n));
    summary_.partitions = st.partitions;
  }

  // Closes the phase summary once run_phase returns.
  void finish_phase(const Equation& eq) {
    const auto pot = compute_potentials(eq, *layout_);
    summary_.h_d_end = round6(pot.h_d);
    summary_.h_n_end = round6(pot.h_n);
    double h_p = 0;
    double h_e = 0;
    for (std::size_t s = 0; s < 2; ++s) {
      for (auto k : counters_->k[s]) summary_.sum_k += k;
      for (auto p : counters_->popped[s]) {
        summary_.sum_p += p;
        summary_.max_p = std::max(summary_.max_p, p);
        h_p += h_of(static_cast<double>(p));
      }
      for (auto e : counters_->extended[s]) {
        summary_.sum_e += e;
        summary_.max_e = std::max(summary_.max_e, e);
        h_e += h_of(static_cast<double>(e));
      }
    }
    summary_.sum_h_p = round6(h_p);
    summary_.sum_h_e = round6(h_e);
    report_->metrics.phases.push_back(summary_);
    report_->partitions += summary_.partitions;
  }

 private:
  void violation(const std::string& category, const std::string& detail) {
    report_->violations.push_back(category + ": phase " + std::to_string(summary_.phase) + ": " + detail);
  }

  void record(const Equation& eq, const PhaseState& st, const std::string& kind, const EquationCoding& coding,
              const Potentials& pot, const std::string& target = "-", const BlockState* blocking = nullptr) {
    StepRecord r;
    r.phase = st.phase;
    r.step = report_->metrics.steps.size();
    r.kind = kind;
    r.partition = st.partitions;
    r.lhs_len = eq.length(Side::Lhs);
    r.rhs_len = eq.length(Side::Rhs);
    r.letter_bits = coding.letter_bits;
    r.variable_bits = coding.variable_bits;
    r.total_bits = coding.total_bits();
    r.padded_bits = coding.padded_bits;
    r.h_d = round6(pot.h_d);
    r.h_n = round6(pot.h_n);
    r.depfactor_bits = pot.depfactor_bits;
    const auto sums = compute_sums(blocking ? *blocking : state_, eq, *layout_);
    r.s_a = sums.a;
    r.s_b = sums.b;
    r.s_c = sums.c;
    r.s_d = sums.d;
    r.target = target;
    r.uncovered = st.coverage.uncovered();
    report_->max_bits = std::max(report_->max_bits, r.total_bits);
    report_->metrics.steps.push_back(std::move(r));
  }

  void reclassify(const Equation& eq) {
    const auto fresh = classify(eq, sigma_, *layout_, is_new_);
    for (const auto& msg : merge_blocking(state_, fresh, eq.symbols())) violation("monotone", msg);
  }

  // A blocked variable end may still pop one letter, never two.
  void count_blocked_pops(const PairPops& pops) {
    for (const auto& [x, g] : pops) {
      auto it = state_.variables.find(x);
      if (it == state_.variables.end()) continue;
      const bool popped[2] = {g.left.has_value(), g.right.has_value()};
      for (std::size_t end = 0; end < 2; ++end) {
        if (!it->second[end] || !popped[end]) continue;
        if (++pops_after_block_[x][end] > 1) {
          violation("blocked_pops", "variable " + std::to_string(x) + " popped " +
                                        std::to_string(pops_after_block_[x][end]) + " letters after blocking");
        }
      }
    }
  }

  void check_no_equal_adjacent(const Equation& eq, const PhaseState& st) {
    const auto [u, v] = apply_substitution(eq, sigma_);
    for (const auto* w : {&u, &v}) {
      for (std::size_t i = 0; i + 1 < w->size(); ++i) {
        if ((*w)[i] == (*w)[i + 1] && st.gamma.contains((*w)[i])) {
          violation("no_equal_adjacent", "letter " + eq.symbols().display((*w)[i]) + " repeats after block compression");
          return;
        }
      }
    }
  }

  // Exact post value of the target under p, on scratch copies.
  std::size_t simulate_target(const Equation& eq, const PhaseState& st, const Partition& p, int target) {
    SymbolTable& symbols = *eq.table();
    const auto mark = symbols.size();
    DerivationLog scratch;
    const auto pops = pair_pops_from_solution(eq, p, sigma_);
    Equation next = pop_letters(eq, p, pops, scratch, st.phase);
    Substitution sigma = advance_solution(next, sigma_, {StepKind::PairPop, nullptr, &pops, &p}, st.gamma);
    extend_for_pair(next, p);
    CoverageState coverage = st.coverage;
    std::size_t post = 0;
    {
      FreshLetters fresh(symbols, scratch, st.phase);
      next = pair_compress_equation(next, p, fresh, coverage);
      for (auto& [x, w] : sigma) w = pair_compress_string(w, p, fresh);
      BlockState state = state_;
      merge_blocking(state, classify(next, sigma, *layout_, is_new_), next.symbols());
      post = compute_sums(state, next, *layout_).get(target);
    }
    symbols.truncate(mark);
    return post;
  }

  Substitution sigma_;
  const InputLayout* layout_;
  const SolverConfig* config_;
  DepCounters* counters_;
  GuidedReport* report_;
  PartitionChooser chooser_;
  const LetterSet* gamma_ = nullptr;
  NewLetterTest is_new_;
  BlockState state_;
  std::map<SymbolId, std::array<std::size_t, 2>> pops_after_block_;
  std::vector<Partition> schedule_;
  std::string target_ = "-";
  std::optional<PartitionChoice> chosen_;
  PhaseSummary summary_;
};

}  // namespace

GuidedReport solve_guided(const Equation& input, const Substitution& sigma, const SolverConfig& config) {
  config.validate();
  if (!check_solution(input, sigma)) throw NotASolution(input.render());
  GuidedReport report;
  const InputLayout layout(input);
  Substitution normalized = normalize_solution(input, sigma);
  report.solution_length = image_length(input, normalized);
  report.metrics.input_abs = layout.total_abs();
  report.metrics.input_letter_bits = rebuild_after_step(input).letter_bits;

  DerivationLog log;
  DepCounters counters;
  GuidedDriver driver(std::move(normalized), layout, config, counters, report);
  PhaseOptions options;
  options.space_cap_bits = config.space_cap_bits;

  Equation eq = input;
  while (!eq.is_trivial()) {
    if (report.phases >= config.max_phases) {
      throw PhaseCapExceeded(std::to_string(config.max_phases) + " phases, equation still " + eq.render());
    }
    ++report.phases;
    eq = run_phase(std::move(eq), static_cast<int>(report.phases), driver, log, options, &counters);
    driver.finish_phase(eq);
  }

  if (report.phases > guided_phase_bound(report.solution_length)) {
    report.violations.push_back("phase_bound: " + std::to_string(report.phases) + " phases for |sigma(U)| = " +
                                std::to_string(report.solution_length));
  }
  report.witness = reconstruct_witness(log, input, driver.sigma());
  if (!check_solution(input, report.witness)) throw Desync("reconstructed witness does not solve the input");
  report.sat = true;
  for (const auto& b : check_space_bounds(report.metrics)) {
    if (!b.ok()) {
      report.violations.push_back("space_bound: phase " + std::to_string(b.phase) + ": " + b.name + " " +
                                  std::to_string(b.lhs) + " > " + std::to_string(b.rhs));
    }
  }
  return report;
}

}  // namespace wordeq
