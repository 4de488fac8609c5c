#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "scat/engine.hpp"
#include "scat/ordinal.hpp"
#include "scat/term.hpp"

namespace scat {

inline constexpr std::array<std::string_view, 7> rule_names = {
    "R-flat", "R-minmax", "R-omega", "R-pgl-members", "R-pgl-wedge", "R-pgl-absorb", "R-wedge-reduce"};

// Normal forms of the minimum and maximum functions, unfolded through
//   min(b+2) = pgl{min(b+1)}, min(1) = one,
//   max(b+1) = omega(pgl{max(b)}), max(1) = omega(one), max(0) = empty.
// Limit arguments stay atomic.
Term min_form(const Ordinal& successor_rank);
Term max_form(const Ordinal& rank);

// Structural recognizers for the above, accepting partially unfolded spellings.
bool is_min_form(const Term& t);
bool is_max_form(const Term& t);

inline Term normalize(const Term& t) { return default_engine().normalize(t); }
inline std::optional<Term> apply_rule(const Term& t, std::string_view rule) {
  return default_engine().apply_rule(t, rule);
}

}  // namespace scat
