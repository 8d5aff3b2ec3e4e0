#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wordeq/config.hpp"
#include "wordeq/equation.hpp"
#include "wordeq/metrics.hpp"
#include "wordeq/recompression.hpp"

namespace wordeq {

// Restricts sigma to the variables of eq and maps every letter that does not
// occur in eq to the letter of eq with the least display name. Without any
// letter in eq every image becomes empty (still a solution).
Substitution normalize_solution(const Equation& eq, const Substitution& sigma);

// Block pops read off sigma. Throws NotASolution unless sigma solves eq.
BlockPops derive_guesses_from_solution(const Equation& eq, const Substitution& sigma);

// sigma after the rewrite described by ev: popped letters are stripped,
// compressions are applied inside every image, removed variables dropped.
// `after` is the rewritten equation; throws Desync if the result does not
// solve it.
Substitution advance_solution(const Equation& after, const Substitution& sigma, const StepEvent& ev,
                              const LetterSet& gamma);

// ceil(log_{3/2} max(n, 1)) + 2
std::size_t guided_phase_bound(std::size_t n);

struct GuidedReport {
  bool sat = false;
  Substitution witness;  // verified on the input equation
  std::size_t phases = 0;
  std::size_t solution_length = 0;  // |sigma(U)| of the normalized solution
  std::size_t partitions = 0;
  std::size_t max_bits = 0;
  std::size_t halving_checks = 0;
  RunMetrics metrics;
  // "<category>: <detail>" for every failed runtime check; categories are
  // invariant, encoding, monotone, blocked_pops, halving, no_equal_adjacent,
  // phase_bound and space_bound.
  std::vector<std::string> violations;
};

// Runs phases with every guess taken from sigma until both sides have at
// most one symbol. Partitions come from the strategy or the canonical
// schedule per config.partition_mode.
// Throws NotASolution, Desync, SpaceCapExceeded, PhaseCapExceeded,
// NoHalvingPartitionFound.
GuidedReport solve_guided(const Equation& eq, const Substitution& sigma, const SolverConfig& config);

}  // namespace wordeq
