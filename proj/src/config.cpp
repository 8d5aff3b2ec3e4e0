#include "wordeq/config.hpp"

#include <stdexcept>

namespace wordeq {

void SolverConfig::validate() const {
  if (max_phases < 1) throw std::invalid_argument("max_phases must be at least 1");
  if (max_block_exponent < 1) throw std::invalid_argument("max_block_exponent must be at least 1");
  if (space_cap_bits < 1) throw std::invalid_argument("space_cap_bits must be at least 1");
  if (time_budget_seconds < 0) throw std::invalid_argument("time budget must be non-negative");
}

}  // namespace wordeq
