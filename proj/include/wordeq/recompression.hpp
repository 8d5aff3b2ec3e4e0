#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "wordeq/alphabet.hpp"
#include "wordeq/equation.hpp"
#include "wordeq/huffman.hpp"

namespace wordeq {

struct DepCounters;

enum class End : std::uint8_t { Left, Right };

// Rewrite records. Every fresh letter has exactly one PairRule or BlockRule.
struct PairRule {
  SymbolId fresh;
  SymbolId left;
  SymbolId right;
  int phase;
};
struct BlockRule {
  SymbolId fresh;
  SymbolId letter;
  std::size_t length;
  int phase;
};
struct PopRecord {
  SymbolId var;
  End end;
  Word popped;
  int phase;
};
struct RemovedRecord {
  SymbolId var;
  int phase;
};
using LogEntry = std::variant<PairRule, BlockRule, PopRecord, RemovedRecord>;

class DerivationLog {
 public:
  void append(LogEntry e) { entries_.push_back(std::move(e)); }
  const std::vector<LogEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  void truncate(std::size_t n) { entries_.resize(n); }
  std::string render(const SymbolTable& symbols) const;

 private:
  std::vector<LogEntry> entries_;
};

// Fresh-letter allocation for one compression call. Equal pairs (blocks of
// equal letter and length) receive the same letter; every allocation is
// logged as a rule.
class FreshLetters {
 public:
  FreshLetters(SymbolTable& symbols, DerivationLog& log, int phase)
      : symbols_(&symbols), log_(&log), phase_(phase) {}

  SymbolId pair(SymbolId a, SymbolId b);
  SymbolId block(SymbolId a, std::size_t length);

  const std::map<std::pair<SymbolId, SymbolId>, SymbolId>& pairs() const { return pairs_; }
  const std::map<std::pair<SymbolId, std::size_t>, SymbolId>& blocks() const { return blocks_; }

 private:
  SymbolTable* symbols_;
  DerivationLog* log_;
  int phase_;
  std::map<std::pair<SymbolId, SymbolId>, SymbolId> pairs_;
  std::map<std::pair<SymbolId, std::size_t>, SymbolId> blocks_;
};

// Block-popping guess for one variable: sigma(X) = a^l w b^r where w does
// not start with a nor end with b. `empty` means w is empty, so X
// disappears after popping. `vanish` means sigma(X) is already empty: X is
// removed without popping anything.
struct BlockPop {
  SymbolId first = 0;
  std::size_t left_exp = 0;
  SymbolId last = 0;
  std::size_t right_exp = 0;
  bool empty = false;
  bool vanish = false;

  static BlockPop vanished() { return {0, 0, 0, 0, true, true}; }
  friend bool operator==(const BlockPop&, const BlockPop&) = default;
};

// Pair-popping guess: left is the popped first letter (must be in the right
// set of the partition), right the popped last letter (left set).
struct PairPop {
  std::optional<SymbolId> left;
  std::optional<SymbolId> right;
  bool empty = false;
  friend bool operator==(const PairPop&, const PairPop&) = default;
};

using BlockPops = std::map<SymbolId, BlockPop>;
using PairPops = std::map<SymbolId, PairPop>;

Word block_compress_string(const Word& w, const LetterSet& gamma, FreshLetters& fresh);
Word pair_compress_string(const Word& w, const Partition& p, FreshLetters& fresh);

// Replaces every X by a^l X b^r (dropping X when the guess says it empties).
// Popped letters inherit the depfactor of the X occurrence. Throws
// InconsistentGuess on l = 0, a missing guess or a self-contradictory one.
Equation pop_blocks(const Equation& eq, const BlockPops& guesses, DerivationLog& log, int phase,
                    DepCounters* counters = nullptr);

// Replaces maximal blocks a^l (a in gamma, l >= 2) by fresh letters.
// Variables, end markers and letters outside gamma separate blocks.
Equation block_compress_equation(const Equation& eq, const LetterSet& gamma, FreshLetters& fresh);

// Replaces X by bXa per guess. Throws IllegalPop when a popped letter
// violates the partition or InconsistentGuess for a missing guess.
Equation pop_letters(const Equation& eq, const Partition& p, const PairPops& guesses,
                     DerivationLog& log, int phase, DepCounters* counters = nullptr);

// Compresses explicit ab with a in the left set and b in the right set, then
// marks every (left, right) pair covered.
Equation pair_compress_equation(const Equation& eq, const Partition& p, FreshLetters& fresh,
                                CoverageState& coverage);

enum class StepKind : std::uint8_t { BlockPop, BlockExtend, BlockCompress, PairPop, PairExtend, PairCompress };
const char* step_kind_name(StepKind k);

struct PhaseState {
  int phase = 0;
  std::vector<SymbolId> alphabet;  // letters at phase start
  LetterSet gamma;
  CoverageState coverage;
  std::size_t partitions = 0;  // partitions applied so far this phase
};

struct StepEvent {
  StepKind kind;
  const BlockPops* block_pops = nullptr;
  const PairPops* pair_pops = nullptr;
  const Partition* partition = nullptr;
  FreshLetters* fresh = nullptr;  // only valid during the callback
  const EquationCoding* coding = nullptr;
};

// Source of nondeterministic choices for run_phase.
class PhaseDriver {
 public:
  virtual ~PhaseDriver() = default;
  // Called once the phase-start state is fixed, before any rewrite.
  virtual void on_phase_start(const Equation& /*eq*/, const PhaseState& /*st*/) {}
  virtual BlockPops block_pops(const Equation& eq, const PhaseState& st) = 0;
  virtual Partition next_partition(const Equation& eq, const PhaseState& st) = 0;
  virtual PairPops pair_pops(const Equation& eq, const Partition& p, const PhaseState& st) = 0;
  virtual void on_step(const Equation& /*eq*/, const PhaseState& /*st*/, const StepEvent& /*ev*/) {}
};

struct PhaseOptions {
  std::size_t space_cap_bits = 0;  // 0 = unlimited
  // Guard against drivers whose partitions stop covering new pairs.
  std::size_t max_idle_partitions = 512;
};

// One phase: block pops, block compression, then partitions until every
// ordered pair of distinct phase-start letters is covered. When eq tracks
// depfactors the extension rules run before each compression.
Equation run_phase(Equation eq, int phase, PhaseDriver& driver, DerivationLog& log,
                   const PhaseOptions& options = {}, DepCounters* counters = nullptr);

// Block pops and pair pops read off a known solution.
BlockPops block_pops_from_solution(const Equation& eq, const Substitution& sigma);
PairPops pair_pops_from_solution(const Equation& eq, const Partition& p, const Substitution& sigma);

// Driver for equations without variables: no pops, canonical schedule.
class GroundDriver : public PhaseDriver {
 public:
  void on_phase_start(const Equation& eq, const PhaseState& st) override;
  BlockPops block_pops(const Equation&, const PhaseState&) override { return {}; }
  Partition next_partition(const Equation& eq, const PhaseState& st) override;
  PairPops pair_pops(const Equation&, const Partition&, const PhaseState&) override { return {}; }

 private:
  std::vector<Partition> schedule_;
};

// Runs a single full phase on w treated as the ground equation w = w and
// returns the compressed left side.
Word compress_phase(const Word& w, const std::shared_ptr<SymbolTable>& symbols, DerivationLog& log,
                    int phase = 1);

}  // namespace wordeq
