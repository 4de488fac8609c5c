#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string_view>

#include "scat/term.hpp"
#include "scat/verdict.hpp"

namespace scat {

struct EngineConfig {
  // Longest chain of nested sub-queries before a query gives up with blocker "depth".
  int depth = 64;
  // Sub-queries one top-level comparison may issue before giving up with blocker "budget".
  std::size_t step_budget = 200000;
  // Normalization aborts after cap_factor * term_size root rewrites.
  std::size_t cap_factor = 10;
  // Largest k tried when absorbing a summand into k copies of a pgl's members;
  // 0 means the width of the enclosing glue.
  std::size_t absorb_bound = 0;
};

// Normalizer and comparison engine. Normalization consults comparisons and
// comparisons normalize their arguments, so both share one set of memo tables.
// Thread-safe: memo tables are internally locked and only ever grow.
class Engine {
 public:
  explicit Engine(EngineConfig config = {});
  ~Engine();
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  const EngineConfig& config() const;

  // Throws RewriteCapError if the iteration cap is exceeded.
  Term normalize(const Term& t);
  // One outermost-leftmost application of the named rule. Throws
  // std::invalid_argument on an unknown rule name.
  std::optional<Term> apply_rule(const Term& t, std::string_view rule);

  Verdict compare(const Term& f, const Term& g);
  // Same rule set, but the two arguments are matched as given rather than
  // normalized first. Sub-queries are normalized as usual.
  Verdict compare_unnormalized(const Term& f, const Term& g);

  Equivalence equivalent(const Term& f, const Term& g);
  // Every member of f_set reduces to some member of g_set.
  Verdict dominates(std::span<const Term> f_set, std::span<const Term> g_set);

  struct Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

// Process-wide engine with the default configuration.
Engine& default_engine();

}  // namespace scat
