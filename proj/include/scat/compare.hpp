#pragma once

#include <span>

#include "scat/engine.hpp"
#include "scat/term.hpp"
#include "scat/verdict.hpp"

namespace scat {

inline Verdict compare(const Term& f, const Term& g) { return default_engine().compare(f, g); }
inline Equivalence equivalent(const Term& f, const Term& g) { return default_engine().equivalent(f, g); }
inline Verdict dominates(std::span<const Term> f_set, std::span<const Term> g_set) {
  return default_engine().dominates(f_set, g_set);
}

// Reducibility between non-empty compact-domain terms, decided by the
// lexicographic order of their types. Throws std::invalid_argument otherwise.
bool le_compact(const Term& f, const Term& g);

}  // namespace scat
