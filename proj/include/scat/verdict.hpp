#pragma once

#include <memory>
#include <string>
#include <vector>

#include "scat/term.hpp"

namespace scat {

enum class Outcome { le, not_le, unknown };

std::string to_string(Outcome o);  // "LE", "NOT_LE", "UNKNOWN"

// One rule application. Premises are derivations of the same polarity;
// side conditions of the other polarity are described in note.
struct Derivation {
  std::string rule;
  Term lhs;
  Term rhs;
  Outcome outcome = Outcome::le;
  std::string note;
  std::vector<std::shared_ptr<const Derivation>> premises;
};

struct TraceStep {
  std::string rule;
  std::string query;  // "f <= g" or "f !<= g"
  std::string note;
};

struct Verdict {
  Outcome outcome = Outcome::unknown;
  std::shared_ptr<const Derivation> derivation;  // set iff outcome is le or not_le
  std::vector<std::string> blockers;             // non-empty iff outcome is unknown

  bool le() const { return outcome == Outcome::le; }
  bool not_le() const { return outcome == Outcome::not_le; }
  bool unknown() const { return outcome == Outcome::unknown; }

  // Premises before conclusions; shared sub-derivations appear once.
  std::vector<TraceStep> trace() const;
};

enum class Equivalence { yes, no, unknown };

std::string to_string(Equivalence e);  // "YES", "NO", "UNKNOWN"

}  // namespace scat
