#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "scat/ordinal.hpp"
#include "scat/term.hpp"

namespace scat::test {

inline Term T(std::string_view text) { return parse_term(text); }

// Reference ordinal below w^w as a digit vector: digits[e] is the coefficient
// of w^e. Independent of the library's term list.
struct RefOrdinal {
  std::vector<std::uint64_t> digits;

  static RefOrdinal of(const Ordinal& a) {
    RefOrdinal r;
    std::size_t top = a.terms().empty() ? 0 : a.terms().front().exponent;
    r.digits.assign(top + 1, 0);
    r.digits[0] = a.finite_part();
    for (const auto& t : a.terms()) r.digits[t.exponent] = t.coefficient;
    return r;
  }

  void trim() {
    while (digits.size() > 1 && digits.back() == 0) digits.pop_back();
  }

  // Highest non-zero exponent, or -1 for zero.
  long leading() const {
    for (long e = static_cast<long>(digits.size()) - 1; e >= 0; --e)
      if (digits[static_cast<std::size_t>(e)] != 0) return e;
    return -1;
  }

  std::uint64_t at(std::size_t e) const { return e < digits.size() ? digits[e] : 0; }

  friend int cmp(const RefOrdinal& a, const RefOrdinal& b) {
    std::size_t n = std::max(a.digits.size(), b.digits.size());
    for (std::size_t k = n; k-- > 0;) {
      if (a.at(k) != b.at(k)) return a.at(k) < b.at(k) ? -1 : 1;
    }
    return 0;
  }

  // Digits of a above b's leading exponent survive; the leading digits add;
  // everything below comes from b.
  friend RefOrdinal add(const RefOrdinal& a, const RefOrdinal& b) {
    long lead = b.leading();
    if (lead < 0) return a;
    auto e = static_cast<std::size_t>(lead);
    RefOrdinal r;
    r.digits.assign(std::max(a.digits.size(), b.digits.size()), 0);
    for (std::size_t k = e + 1; k < a.digits.size(); ++k) r.digits[k] = a.digits[k];
    r.digits[e] = a.at(e) + b.at(e);
    for (std::size_t k = 0; k < e; ++k) r.digits[k] = b.at(k);
    r.trim();
    return r;
  }

  Ordinal to_ordinal() const {
    std::vector<Ordinal::Term> ts;
    for (std::size_t k = digits.size(); k-- > 1;)
      if (digits[k] != 0) ts.push_back({static_cast<std::uint32_t>(k), digits[k]});
    return Ordinal::from_terms(ts, digits.empty() ? 0 : digits[0]);
  }
};

// Random ordinal with exponents below max_exp and small coefficients.
inline Ordinal random_ordinal(std::mt19937& rng, std::uint32_t max_exp = 3, std::uint64_t max_coef = 4) {
  std::uniform_int_distribution<std::uint64_t> coef(0, max_coef);
  std::vector<Ordinal::Term> ts;
  for (std::uint32_t e = max_exp; e >= 1; --e) {
    std::uint64_t c = coef(rng);
    if (c != 0) ts.push_back({e, c});
  }
  return Ordinal::from_terms(ts, coef(rng));
}

}  // namespace scat::test
