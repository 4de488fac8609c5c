#pragma once

#include <random>

#include "scat/term.hpp"

namespace scat {

// Random scattered terms of nesting depth at most max_depth, with small
// ranks below w*2+3. Deterministic for a given generator state.
Term random_term(std::mt19937& rng, int max_depth);

// As random_term, but occasionally idq or idbaire at the root.
Term random_term_or_sentinel(std::mt19937& rng, int max_depth);

}  // namespace scat
