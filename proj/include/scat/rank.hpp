#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "scat/ordinal.hpp"
#include "scat/term.hpp"

namespace scat {

// Cantor-Bendixson degree: a natural number or w. Fin(n) < w for every n.
class Degree {
 public:
  static Degree fin(std::uint64_t n) { return Degree(false, n); }
  static Degree omega() { return Degree(true, 0); }

  bool is_omega() const { return omega_; }
  std::uint64_t count() const { return n_; }  // meaningful only when finite

  bool operator==(const Degree&) const = default;
  std::strong_ordering operator<=>(const Degree& o) const {
    if (omega_ != o.omega_) return omega_ <=> o.omega_;
    return n_ <=> o.n_;
  }

 private:
  Degree(bool omega, std::uint64_t n) : omega_(omega), n_(n) {}
  bool omega_;
  std::uint64_t n_;
};

// w absorbs; finite degrees add.
Degree operator+(const Degree& a, const Degree& b);

struct CbType {
  Ordinal rank;
  Degree degree = Degree::fin(0);

  bool operator==(const CbType&) const = default;
  // Lexicographic: rank first, then degree.
  std::strong_ordering operator<=>(const CbType& o) const {
    if (auto c = rank <=> o.rank; c != 0) return c;
    return degree <=> o.degree;
  }
};

std::string to_string(const Degree& d);
// "(rank, degree)", e.g. "(w+1, 1)".
std::string to_string(const CbType& t);

// Throws std::domain_error for idq/idbaire.
CbType cb_type(const Term& t);
inline Ordinal cb_rank(const Term& t) { return cb_type(t).rank; }

bool is_simple(const Term& t);

// Syntax-directed; t must be normalized. Throws std::invalid_argument on a shape that
// normalization would still rewrite, std::domain_error on idq/idbaire.
bool is_centered(const Term& t);

// Throws std::domain_error on idq/idbaire.
bool is_compact_domain(const Term& t);

// Cheap local check of the shapes normalization removes. Not a full idempotence test.
bool has_normal_shape(const Term& t);

}  // namespace scat
