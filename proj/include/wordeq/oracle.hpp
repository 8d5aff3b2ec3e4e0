#pragma once

#include <cstddef>
#include <optional>

#include "wordeq/equation.hpp"

namespace wordeq {

struct OracleResult {
  std::optional<Substitution> witness;  // set iff SAT within the bound
  std::size_t candidates = 0;           // substitutions checked
  bool sat() const { return witness.has_value(); }
};

// Exhaustive search over substitutions with |sigma(X)| <= max_len and images
// over the equation's letters. Candidates are visited in order of total
// image weight sum n_X |sigma(X)|, then by length vector, then
// lexicographically, so a returned witness is length-minimal.
// Throws ResourceExceeded when the enumeration would exceed `budget`.
OracleResult brute_force_solve(const Equation& eq, std::size_t max_len,
                               std::size_t budget = 200'000'000);

}  // namespace wordeq
