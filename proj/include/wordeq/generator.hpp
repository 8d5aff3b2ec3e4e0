#pragma once

#include <cstddef>
#include <cstdint>

#include "wordeq/equation.hpp"

namespace wordeq {

struct Instance {
  Equation eq;
  Substitution solution;
};

// Draws a satisfiable equation with a planted solution. Variables are named
// A, B, ... and letters a, b, ...; the left side has `side_len` symbols and
// each image has at most `sol_len` letters. The right side is a random
// factorisation of sigma(U) into letters and variable images, so
// check_solution(eq, solution) holds by construction.
// Throws GenerationFailed after a bounded number of retries.
Instance generate_instance(std::uint64_t seed, std::size_t n_vars, std::size_t n_letters,
                           std::size_t side_len, std::size_t sol_len);

}  // namespace wordeq
