#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "wordeq/alphabet.hpp"
#include "wordeq/equation.hpp"
#include "wordeq/huffman.hpp"

namespace wordeq {

// Frozen facts about the parsed input: the original symbol and its input
// code length at every basic position (end markers included). The input
// code is one Huffman table over every input occurrence, markers and
// variables included, so each basic position has a positive length.
class InputLayout {
 public:
  // eq must be freshly parsed (basic depfactors, markers in place).
  explicit InputLayout(const Equation& eq);

  std::size_t positions(Side s) const { return symbols_[idx(s)].size(); }
  SymbolId symbol_at(Side s, std::uint32_t pos) const { return symbols_[idx(s)][pos]; }
  std::size_t abs_at(Side s, std::uint32_t pos) const { return bits_[idx(s)][pos]; }
  // Sum of abs_at over the member positions.
  std::size_t abs_of(const Depfactor& d) const;
  // Input code length of a symbol (0 if it never occurred in the input).
  std::size_t symbol_abs(SymbolId id) const;
  // Abs(U0, V0): total input code length over all positions.
  std::size_t total_abs() const { return total_; }
  const CodeTable& code() const { return code_; }

 private:
  static std::size_t idx(Side s) { return static_cast<std::size_t>(s); }

  std::array<std::vector<SymbolId>, 2> symbols_;
  std::array<std::vector<std::size_t>, 2> bits_;
  CodeTable code_;
  std::size_t total_ = 0;
};

// |sup p| for every basic position p, indexed [side][pos].
using SupportSizes = std::array<std::vector<std::size_t>, 2>;
SupportSizes support_sizes(const Equation& eq, const InputLayout& layout);

// Per-phase counters indexed [side][basic position]:
// k = |sup D| at phase start, p = letters popped with depfactor D,
// e = letters D extended to.
struct DepCounters {
  SupportSizes k;
  SupportSizes popped;
  SupportSizes extended;

  void start_phase(const Equation& eq, const InputLayout& layout);
  // A popped run (a^l for block pops, one letter for pair pops) counts once.
  void add_pop(const Depfactor& basic);
  void add_extension(Side s, std::uint32_t pos);
};

// Each maximal block a^l of a gamma letter (l = 1 included) takes the union
// of its letters' depfactors and both neighbours'. Untracked equations are
// left alone.
void extend_for_block(Equation& eq, const LetterSet& gamma, DepCounters* counters = nullptr);

// Letters of the left set absorb the depfactor of their right neighbour,
// then letters of the right set absorb their left neighbour's (updated)
// depfactor. With right_first the passes run in the opposite order.
void extend_for_pair(Equation& eq, const Partition& p, DepCounters* counters = nullptr,
                     bool right_first = false);

struct Potentials {
  double h_d = 0;
  double h_n = 0;
  // Depfactor encoding: member positions' input codes plus the D-number
  // ceil(log2(k + 1)) for a class of k occurrences.
  std::size_t depfactor_bits = 0;
};
Potentials compute_potentials(const Equation& eq, const InputLayout& layout);

struct Violation {
  std::string rule;
  std::string detail;
};
// D1: sup-sets and depfactor classes are contiguous; D2: neighbours are
// comparable; D3: similar classes spell the same symbols.
std::vector<Violation> verify_invariants(const Equation& eq, const InputLayout& layout);

struct DNumber {
  std::size_t code;   // shared by similar classes
  std::size_t index;  // 1-based, left to right within the class
  std::size_t class_size;
};
std::array<std::vector<DNumber>, 2> assign_d_numbers(const Equation& eq, const InputLayout& layout);

// Original symbols at the member positions, with offsets from the minimum.
// Equal keys mean similar depfactors.
std::vector<std::pair<std::uint32_t, SymbolId>> similarity_key(const Depfactor& d,
                                                               const InputLayout& layout);

}  // namespace wordeq
