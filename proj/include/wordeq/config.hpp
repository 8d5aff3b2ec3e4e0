#pragma once

#include <cstddef>
#include <cstdint>

namespace wordeq {

enum class PartitionMode { Canonical, Strategy };

// Which letters count as "new" when classifying blocked sides.
enum class NewLetterRule {
  OutsidePhaseAlphabet,  // any letter not in the phase-start alphabet
  PairCompressionOnly,   // only letters created by pair compression this phase
};

struct SolverConfig {
  std::size_t max_phases = 64;
  std::size_t max_block_exponent = 8;
  std::size_t max_oracle_len = 8;
  std::size_t space_cap_bits = 1'000'000;
  std::uint64_t rng_seed = 0;
  PartitionMode partition_mode = PartitionMode::Strategy;

  NewLetterRule new_letter_rule = NewLetterRule::OutsidePhaseAlphabet;
  // Search budget for blind mode; 0 disables the respective limit.
  std::size_t node_budget = 20'000'000;
  double time_budget_seconds = 0;
  // Guided runs: verify D1-D3 and the no-equal-adjacent property after every step.
  bool check_invariants = true;

  // Throws std::invalid_argument when a cap is out of range.
  void validate() const;
};

}  // namespace wordeq
