#pragma once

#include "wordeq/equation.hpp"
#include "wordeq/recompression.hpp"

namespace wordeq {

// Expands a letter back to input letters through the pair and block rules
// of the log. Throws DanglingRule for a fresh letter without a rule or a rule
// that refers to a later symbol.
class RuleExpander {
 public:
  RuleExpander(const DerivationLog& log, const SymbolTable& symbols);
  const Word& expand(SymbolId letter);
  Word expand(const Word& w);

 private:
  const SymbolTable* symbols_;
  std::map<SymbolId, const LogEntry*> rules_;
  std::map<SymbolId, Word> memo_;
};

// sigma(X) for every variable of `original`: left pops in order, then the
// expanded final image (from `final_images`, empty if X was removed or is
// absent), then right pops in reverse order.
Substitution reconstruct_witness(const DerivationLog& log, const Equation& original,
                                 const Substitution& final_images);

}  // namespace wordeq
