#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scat/ordinal.hpp"

namespace scat {

// Declaration order is the first key of syntactic_cmp.
enum class Kind : std::uint8_t { empty, one, id_q, id_baire, min_fn, max_fn, glue, omega, pgl, wedge };

namespace detail {
struct Node;
}

// Immutable, hash-consed syntax tree. Two terms are structurally equal iff
// they share a node, so == and hashing are O(1).
//
//   glue     finite multiset of summands (kept sorted)
//   omega    countable gluing of one body
//   pgl      pointed gluing of the constant sequence glue(members); members form a set
//   wedge    verticals: distinct non-empty sets, diagonal: a set
//   min_fn   the minimum function of a successor rank
//   max_fn   the maximum function of a rank
class Term {
 public:
  Term();  // empty

  static Term empty();
  static Term one();
  static Term id_q();
  static Term id_baire();
  // Throws std::invalid_argument unless rank is a successor.
  static Term min_fn(const Ordinal& rank);
  static Term max_fn(const Ordinal& rank);
  static Term glue(std::vector<Term> summands);
  // The n-fold glue of t (raw, even for n = 0 or 1).
  static Term copies(std::size_t n, const Term& t);
  static Term omega(const Term& body);
  // Throws std::invalid_argument on an empty member set.
  static Term pgl(std::vector<Term> members);
  // Throws std::invalid_argument on no verticals, an empty vertical, or duplicate verticals.
  static Term wedge(std::vector<std::vector<Term>> verticals, std::vector<Term> diagonal);

  Kind kind() const;
  const Ordinal& ordinal() const;                    // min_fn, max_fn
  std::span<const Term> summands() const;            // glue
  const Term& body() const;                          // omega
  std::span<const Term> members() const;             // pgl
  std::span<const std::vector<Term>> verticals() const;  // wedge
  std::span<const Term> diagonal() const;            // wedge

  bool is(Kind k) const { return kind() == k; }
  bool is_scattered() const { return kind() != Kind::id_q && kind() != Kind::id_baire; }

  // Creation-order identity; stable within a process only.
  std::uint64_t id() const;
  // Number of constructor nodes.
  std::size_t size() const;

  bool operator==(const Term& other) const { return node_ == other.node_; }

 private:
  explicit Term(const detail::Node* node) : node_(node) {}
  friend struct detail::Node;

  const detail::Node* node_;
};

// Fixed structural order, independent of creation order.
std::strong_ordering syntactic_cmp(const Term& a, const Term& b);

struct SyntacticLess {
  bool operator()(const Term& a, const Term& b) const { return syntactic_cmp(a, b) < 0; }
};

inline std::size_t term_size(const Term& t) { return t.size(); }

std::string to_string(const Term& t);

// Raw parse, no normalization. Throws ParseError.
Term parse_term(std::string_view text);

// Sorted copy, duplicates removed.
std::vector<Term> canonical_set(std::vector<Term> xs);

}  // namespace scat

template <>
struct std::hash<scat::Term> {
  std::size_t operator()(const scat::Term& t) const noexcept { return std::hash<std::uint64_t>{}(t.id()); }
};
