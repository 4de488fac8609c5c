#include "scat/ordinal.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "cursor.hpp"

namespace scat {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) throw std::overflow_error("ordinal coefficient overflow");
  return a + b;
}

}  // namespace

Ordinal Ordinal::from_terms(std::vector<Term> terms, std::uint64_t finite) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].exponent == 0) throw std::invalid_argument("ordinal exponent must be positive");
    if (terms[i].coefficient == 0) throw std::invalid_argument("ordinal coefficient must be positive");
    if (i > 0 && terms[i - 1].exponent <= terms[i].exponent)
      throw std::invalid_argument("ordinal exponents must strictly decrease");
  }
  Ordinal o;
  o.terms_ = std::move(terms);
  o.finite_ = finite;
  return o;
}

Ordinal Ordinal::omega_power(std::uint32_t exponent, std::uint64_t coefficient) {
  return from_terms({{exponent, coefficient}}, 0);
}

std::strong_ordering Ordinal::operator<=>(const Ordinal& other) const {
  std::size_t n = std::min(terms_.size(), other.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Term& a = terms_[i];
    const Term& b = other.terms_[i];
    if (a.exponent != b.exponent) return a.exponent <=> b.exponent;
    if (a.coefficient != b.coefficient) return a.coefficient <=> b.coefficient;
  }
  if (terms_.size() != other.terms_.size()) {
    // The longer list has an extra infinite term beyond the common prefix.
    return terms_.size() <=> other.terms_.size();
  }
  return finite_ <=> other.finite_;
}

std::size_t Ordinal::hash() const {
  std::size_t h = std::hash<std::uint64_t>{}(finite_);
  for (const Term& t : terms_) {
    h = h * 1000003u ^ std::hash<std::uint64_t>{}(t.exponent);
    h = h * 1000003u ^ std::hash<std::uint64_t>{}(t.coefficient);
  }
  return h;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.terms().empty()) return Ordinal::from_terms(a.terms(), checked_add(a.finite_part(), b.finite_part()));
  // Terms of a below b's leading exponent are absorbed, a's finite part included.
  std::uint32_t lead = b.terms().front().exponent;
  std::vector<Ordinal::Term> out;
  for (const auto& t : a.terms()) {
    if (t.exponent > lead) {
      out.push_back(t);
    } else if (t.exponent == lead) {
      out.push_back({lead, checked_add(t.coefficient, b.terms().front().coefficient)});
      break;
    } else {
      break;
    }
  }
  std::size_t start = 0;
  if (!out.empty() && out.back().exponent == lead) start = 1;
  for (std::size_t i = start; i < b.terms().size(); ++i) out.push_back(b.terms()[i]);
  return Ordinal::from_terms(std::move(out), b.finite_part());
}

OrdinalSplit split(const Ordinal& a) {
  return {Ordinal::from_terms(a.terms(), 0), a.finite_part()};
}

Ordinal twice(const Ordinal& a) {
  return Ordinal::from_terms(a.terms(), checked_add(a.finite_part(), a.finite_part()));
}

OrdinalClass classify(const Ordinal& a) {
  if (a.is_zero()) return OrdinalClass::zero;
  return a.is_successor() ? OrdinalClass::successor : OrdinalClass::limit;
}

Ordinal succ(const Ordinal& a) { return Ordinal::from_terms(a.terms(), checked_add(a.finite_part(), 1)); }

Ordinal pred(const Ordinal& a) {
  if (!a.is_successor()) throw std::domain_error("predecessor of a non-successor ordinal");
  return Ordinal::from_terms(a.terms(), a.finite_part() - 1);
}

Ordinal sup(std::span<const Ordinal> xs) {
  if (xs.empty()) throw std::invalid_argument("sup of an empty list");
  return *std::max_element(xs.begin(), xs.end());
}

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& t : a.terms()) {
    if (!s.empty()) s += '+';
    s += 'w';
    if (t.exponent != 1) s += '^' + std::to_string(t.exponent);
    if (t.coefficient != 1) s += '*' + std::to_string(t.coefficient);
  }
  if (a.finite_part() != 0) {
    if (!s.empty()) s += '+';
    s += std::to_string(a.finite_part());
  }
  return s;
}

namespace detail {

Ordinal parse_ordinal_at(Cursor& cur) {
  Ordinal acc;
  do {
    Ordinal atom;
    if (cur.at_digit()) {
      atom = Ordinal(cur.integer());
    } else if (cur.peek() == 'w') {
      cur.expect('w');
      std::uint64_t exponent = 1;
      if (cur.accept('^')) {
        std::size_t at = cur.position();
        exponent = cur.integer();
        if (exponent == 0) cur.fail_at("exponent 0 is not allowed; write the finite part as an integer", at);
        if (exponent > std::numeric_limits<std::uint32_t>::max()) cur.fail_at("exponent too large", at);
      }
      std::uint64_t coefficient = 1;
      if (cur.accept('*')) {
        std::size_t at = cur.position();
        coefficient = cur.integer();
        if (coefficient == 0) cur.fail_at("coefficient 0 is not allowed", at);
      }
      atom = Ordinal::omega_power(static_cast<std::uint32_t>(exponent), coefficient);
    } else {
      cur.fail("expected ordinal atom");
    }
    acc = add(acc, atom);
  } while (cur.accept('+'));
  return acc;
}

}  // namespace detail

Ordinal parse_ordinal(std::string_view text) {
  detail::Cursor cur(text);
  Ordinal o = detail::parse_ordinal_at(cur);
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return o;
}

}  // namespace scat
