#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "wordeq/alphabet.hpp"
#include "wordeq/config.hpp"
#include "wordeq/depstate.hpp"
#include "wordeq/equation.hpp"

namespace wordeq {

// Decides whether a letter counts as new in the current phase.
class NewLetterTest {
 public:
  NewLetterTest() = default;
  NewLetterTest(const SymbolTable& symbols, const LetterSet& gamma, NewLetterRule rule, int phase)
      : symbols_(&symbols), gamma_(&gamma), rule_(rule), phase_(phase) {}
  bool operator()(SymbolId letter) const;

 private:
  const SymbolTable* symbols_ = nullptr;
  const LetterSet* gamma_ = nullptr;
  NewLetterRule rule_ = NewLetterRule::OutsidePhaseAlphabet;
  int phase_ = 0;
};

// sigma(U) and sigma(V) as letter strings, with the letter range
// [first, second) produced by each occurrence.
struct Materialized {
  std::array<Word, 2> text;
  std::array<std::vector<std::pair<std::size_t, std::size_t>>, 2> ranges;
};
Materialized materialize(const Equation& eq, const Substitution& sigma);

enum : std::size_t { kLeftEnd = 0, kRightEnd = 1 };

// Blocked flags for both ends of every variable and every basic depfactor.
struct BlockState {
  std::map<SymbolId, std::array<bool, 2>> variables;
  std::array<std::vector<std::array<bool, 2>>, 2> depfactors;  // [side][position]
};

// Variable X is left blocked iff |sigma(X)| <= 1 or one of its first two
// letters is new (mirrored on the right); removed variables are blocked.
// Depfactor D is left blocked iff at most one letter of sigma(side) lies left
// of the letters produced by sup D, or one of the two letters just left of
// them is new; an empty extent blocks both ends.
BlockState classify(const Equation& eq, const Substitution& sigma, const InputLayout& layout,
                    const NewLetterTest& is_new);
BlockState classify(const Equation& eq, const Substitution& sigma, const Materialized& mat,
                    const InputLayout& layout, const NewLetterTest& is_new);

// ORs `fresh` into `state`; returns a description of every end that was
// blocked before but computed as unblocked now.
std::vector<std::string> merge_blocking(BlockState& state, const BlockState& fresh, const SymbolTable& symbols);

struct StrategySums {
  std::size_t a = 0;  // sum of n_X Abs(X) over unblocked variable ends
  std::size_t b = 0;  // sum of Abs(D) over unblocked depfactor ends
  std::size_t c = 0;  // sum of n_X over unblocked variable ends
  std::size_t d = 0;  // number of unblocked depfactor ends
  std::size_t get(int target) const;
  friend bool operator==(const StrategySums&, const StrategySums&) = default;
};
const char* target_name(int target);

StrategySums compute_sums(const BlockState& state, const Equation& eq, const InputLayout& layout);

struct PartitionChoice {
  Partition partition;
  int target = 0;
  bool by_coverage = false;  // target sum was zero
  std::size_t pre = 0;
  std::size_t predicted = 0;
  std::size_t evaluated = 0;
};

// Picks the next partition for a guided run. For a non-zero target it looks
// for a partition whose predicted target sum is at most half the current
// one (accepting ceil(pre / 2) on confirmation) (exhaustively over masks for |alphabet| <= 16, else by sampling) and
// confirms it with `simulate`, which returns the exact post value. A zero
// target falls back to the partition covering the most uncovered pairs.
// Throws NoHalvingPartitionFound when no candidate halves the target.
class PartitionChooser {
 public:
  explicit PartitionChooser(std::uint64_t seed) : rng_(seed) {}

  PartitionChoice choose(const Equation& eq, const Materialized& mat, const Substitution& sigma,
                         const BlockState& state, const InputLayout& layout, const NewLetterTest& is_new,
                         const std::vector<SymbolId>& alphabet, const CoverageState& coverage, int target,
                         const std::function<std::size_t(const Partition&)>& simulate);

  static Partition best_coverage(const std::vector<SymbolId>& alphabet, const CoverageState& coverage);

 private:
  std::mt19937_64 rng_;
};

}  // namespace wordeq
