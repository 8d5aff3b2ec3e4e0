#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <string>

#include "wordeq/equation.hpp"

namespace wordeq {

// Prefix code: symbol -> bitstring of '0'/'1'.
class CodeTable {
 public:
  CodeTable() = default;
  explicit CodeTable(std::map<SymbolId, std::string> codes) : codes_(std::move(codes)) {}

  bool contains(SymbolId id) const { return codes_.contains(id); }
  // Throws MissingCode for unknown symbols.
  std::size_t length(SymbolId id) const;
  const std::string& code(SymbolId id) const;
  const std::map<SymbolId, std::string>& codes() const { return codes_; }
  bool empty() const { return codes_.empty(); }

  // Sum of count * code length.
  std::size_t cost(const std::map<SymbolId, std::size_t>& freqs) const;
  bool prefix_free() const;
  double kraft_sum() const;

  friend bool operator==(const CodeTable&, const CodeTable&) = default;

 private:
  std::map<SymbolId, std::string> codes_;
};

// Standard Huffman construction. Ties are broken by (count, id) ascending,
// with merged nodes ordered after every leaf of equal count; the first node
// taken gets bit '0'. A lone symbol receives the code "0".
// Throws EmptyInput when no symbol has a positive count.
CodeTable build_huffman(const std::map<SymbolId, std::size_t>& frequencies);

// Sum of code lengths over all occurrences, end markers excluded.
// Throws MissingCode if a symbol has no code.
std::size_t encoded_size(const Equation& eq, const CodeTable& table);

// Per-step size measurement. Letters and variables get separate Huffman
// tables so the letter-only size stays recoverable; `padded_bits` encodes
// letters and variables jointly with one terminator symbol per occurrence.
struct EquationCoding {
  CodeTable letters;
  CodeTable variables;
  std::size_t letter_bits = 0;
  std::size_t variable_bits = 0;
  std::size_t padded_bits = 0;
  std::size_t occurrences = 0;
  std::size_t total_bits() const { return letter_bits + variable_bits; }
};

inline constexpr SymbolId kTerminatorSymbol = std::numeric_limits<SymbolId>::max();

EquationCoding rebuild_after_step(const Equation& eq);

// Occurrence counts of letters and variables (end markers excluded).
std::map<SymbolId, std::size_t> symbol_frequencies(const Equation& eq, bool letters, bool variables);

}  // namespace wordeq
