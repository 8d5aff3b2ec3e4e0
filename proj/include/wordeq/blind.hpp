#pragma once

#include <cstddef>
#include <string>

#include "wordeq/config.hpp"
#include "wordeq/equation.hpp"

namespace wordeq {

enum class VerdictKind { Sat, UnsatWithinBounds, Unknown };
const char* verdict_name(VerdictKind k);

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t max_phase = 0;  // deepest phase entered
  std::size_t max_bits = 0;   // largest equation encoding seen
  std::size_t memo_hits = 0;
  double seconds = 0;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  Substitution witness;  // Sat only; verified on the input equation
  SearchStats stats;
  SolverConfig caps;
  std::string reason;  // why the search stopped for Unknown
  bool sat() const { return kind == VerdictKind::Sat; }
};

// Depth-first search over block and pair pop guesses with the canonical
// partition schedule. Exponents are capped by config.max_block_exponent,
// phases by config.max_phases and the encoded size by config.space_cap_bits;
// a failed search is therefore only unsatisfiable within those caps.
// Node or time budget exhaustion yields Unknown.
Verdict solve_blind(const Equation& eq, const SolverConfig& config);

}  // namespace wordeq
