#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "scat/engine.hpp"
#include "scat/ordinal.hpp"
#include "scat/term.hpp"

namespace scat {

inline constexpr std::size_t default_max_raw = 100000;

struct TermClass {
  Term representative;  // first member in enumeration order
  std::vector<Term> members;
};

struct GeneratorSet {
  Ordinal level;
  std::vector<Term> raw;
  std::vector<TermClass> classes;
  std::vector<std::pair<Term, Term>> undecided_pairs;
};

// Centered set C_alpha: [one] at 1, [min(l+1), pgl{max(l)}] at l+1 for l limit,
// and C_{a+1} = C_a plus pgl of every non-empty subset of C_a and omega(C_a).
// Empty at 0 and at limits. Throws FeasibilityError above max_raw terms.
GeneratorSet centered_set(const Ordinal& alpha, std::size_t max_raw = default_max_raw,
                          Engine& engine = default_engine());

// Generator set G_alpha: [max(l)] at a limit l; otherwise C_alpha, omega(C_alpha),
// and every wedge whose verticals are distinct non-empty subsets of G_{alpha-1}
// and whose diagonal is a subset of C_alpha. Above a limit l the lower-level
// maximum max(l) is included as well.
GeneratorSet generator_set(const Ordinal& alpha, std::size_t max_raw = default_max_raw,
                           Engine& engine = default_engine());

// Groups terms by equivalence. Unknown verdicts never merge classes and are
// recorded in undecided.
std::vector<TermClass> classify(const std::vector<Term>& terms, Engine& engine,
                                std::vector<std::pair<Term, Term>>* undecided = nullptr);

struct HasseDiagram {
  std::vector<TermClass> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (lower, upper) node indices
};

// Covering relation of the strict order on equivalence classes of terms.
// Throws UndecidedError naming the first pair whose verdict is Unknown.
HasseDiagram hasse(const std::vector<Term>& terms, Engine& engine = default_engine());

// Stable node identifier: FNV-1a of the formatted normal form.
std::string node_id(const Term& t, Engine& engine = default_engine());

std::string to_dot(const HasseDiagram& d, Engine& engine = default_engine());
std::string to_json(const HasseDiagram& d, Engine& engine = default_engine());

}  // namespace scat
