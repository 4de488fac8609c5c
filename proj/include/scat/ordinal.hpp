#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scat {

enum class OrdinalClass { zero, successor, limit };

// Ordinal below w^w in Cantor normal form:
//   w^e1*c1 + ... + w^em*cm + finite, with e1 > ... > em >= 1 and every ci >= 1.
class Ordinal {
 public:
  struct Term {
    std::uint32_t exponent;
    std::uint64_t coefficient;
    bool operator==(const Term&) const = default;
  };

  Ordinal() = default;
  explicit Ordinal(std::uint64_t n) : finite_(n) {}

  // Validates the normal-form invariants; throws std::invalid_argument.
  static Ordinal from_terms(std::vector<Term> terms, std::uint64_t finite = 0);
  static Ordinal omega_power(std::uint32_t exponent, std::uint64_t coefficient = 1);
  static Ordinal omega() { return omega_power(1); }

  const std::vector<Term>& terms() const { return terms_; }
  std::uint64_t finite_part() const { return finite_; }

  bool is_zero() const { return terms_.empty() && finite_ == 0; }
  bool is_finite() const { return terms_.empty(); }
  bool is_limit() const { return !terms_.empty() && finite_ == 0; }
  bool is_successor() const { return finite_ > 0; }

  bool operator==(const Ordinal&) const = default;
  std::strong_ordering operator<=>(const Ordinal& other) const;

  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
  std::uint64_t finite_ = 0;
};

struct OrdinalSplit {
  Ordinal limit_part;  // zero or a limit
  std::uint64_t finite_tail = 0;
};

// Left-absorbing ordinal sum.
Ordinal add(const Ordinal& a, const Ordinal& b);
inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }

// a = limit_part + finite_tail.
OrdinalSplit split(const Ordinal& a);

// lambda + n  |->  lambda + 2n. This is the only doubling used anywhere.
Ordinal twice(const Ordinal& a);

OrdinalClass classify(const Ordinal& a);
Ordinal succ(const Ordinal& a);
// Throws std::domain_error unless a is a successor.
Ordinal pred(const Ordinal& a);
// Throws std::invalid_argument on an empty list.
Ordinal sup(std::span<const Ordinal> xs);

std::string to_string(const Ordinal& a);
// Grammar: sum of atoms "w", "w*INT", "w^INT", "w^INT*INT", INT joined by '+'.
// Throws ParseError.
Ordinal parse_ordinal(std::string_view text);

}  // namespace scat
