#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wordeq/depfactor.hpp"
#include "wordeq/symbols.hpp"

namespace wordeq {

// A string of letters (ids), e.g. a variable image.
using Word = std::vector<SymbolId>;

// Maps each variable to its image. Images contain letters only.
using Substitution = std::map<SymbolId, Word>;

struct Occurrence {
  SymbolId symbol;
  Depfactor dep;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// Word equation U = V. Both sides are stored with their end markers, so
// side(s).front() and side(s).back() are always the end marker. Symbol ids
// refer to a table shared by every copy derived from the same parse.
class Equation {
 public:
  Equation(std::shared_ptr<SymbolTable> symbols, std::vector<Occurrence> lhs,
           std::vector<Occurrence> rhs);

  const SymbolTable& symbols() const { return *symbols_; }
  SymbolTable& symbols() { return *symbols_; }
  const std::shared_ptr<SymbolTable>& table() const { return symbols_; }

  const std::vector<Occurrence>& side(Side s) const { return s == Side::Lhs ? lhs_ : rhs_; }
  const std::vector<Occurrence>& lhs() const { return lhs_; }
  const std::vector<Occurrence>& rhs() const { return rhs_; }

  // Replaces both sides; n_X of vanished variables drops to 0.
  void set_sides(std::vector<Occurrence> lhs, std::vector<Occurrence> rhs);
  void set_side(Side s, std::vector<Occurrence> occs);
  // Overwrites depfactors in place (same symbol sequence).
  std::vector<Occurrence>& side_for_dep_update(Side s) { return s == Side::Lhs ? lhs_ : rhs_; }

  // Number of symbols on a side, end markers excluded.
  std::size_t length(Side s) const { return side(s).size() - 2; }

  // Letters present, in order of first occurrence (LHS then RHS).
  std::vector<SymbolId> letters() const;
  // Variables present, in order of first occurrence.
  std::vector<SymbolId> variables() const;
  // Stored occurrence count n_X (0 once X was removed or if never present).
  std::size_t occurrences(SymbolId var) const;
  const std::map<SymbolId, std::size_t>& occurrence_counts() const { return counts_; }
  // True iff a fresh recount matches the stored n_X values.
  bool bookkeeping_consistent() const;

  bool has_variables() const;
  bool is_trivial() const { return length(Side::Lhs) <= 1 && length(Side::Rhs) <= 1; }
  bool tracks_depfactors() const { return lhs_.front().dep.tracked(); }
  // Drops depfactor bookkeeping from every occurrence.
  void untrack_depfactors();

  std::string render() const;

  friend bool operator==(const Equation& a, const Equation& b) {
    return a.lhs_ == b.lhs_ && a.rhs_ == b.rhs_;
  }

 private:
  void recount();

  std::shared_ptr<SymbolTable> symbols_;
  std::vector<Occurrence> lhs_;
  std::vector<Occurrence> rhs_;
  std::map<SymbolId, std::size_t> counts_;
};

// Parses one line "LHS = RHS" (lowercase letters, uppercase variables,
// whitespace ignored, '#' starts a comment). Inserts end markers and basic
// depfactors.
Equation parse_equation(std::string_view text);
// Reads the first non-blank, non-comment line of a file.
Equation read_equation_file(const std::string& path);

// Builds an equation from letter/variable symbol sequences without markers.
Equation make_equation(std::shared_ptr<SymbolTable> symbols, const std::vector<SymbolId>& lhs,
                       const std::vector<SymbolId>& rhs);

std::string render_word(const SymbolTable& symbols, const Word& w);

// Returns (sigma(U), sigma(V)) with end markers stripped.
// Throws MissingVariable if sigma is undefined on a variable of eq.
std::pair<Word, Word> apply_substitution(const Equation& eq, const Substitution& sigma);
bool check_solution(const Equation& eq, const Substitution& sigma);

// Witness text: one line "X = abba" per variable, "X = <eps>" for empty.
std::string render_witness(const SymbolTable& symbols, const Substitution& sigma);
Substitution parse_witness(std::string_view text, const Equation& eq);
Substitution read_witness_file(const std::string& path, const Equation& eq);

}  // namespace wordeq
