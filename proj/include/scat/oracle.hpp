#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "scat/term.hpp"

namespace scat {

// A function {0..dom_size-1} -> {0..cod_size-1} between finite discrete spaces.
struct FiniteFn {
  std::size_t dom_size = 1;
  std::size_t cod_size = 1;
  std::vector<std::size_t> values;

  bool operator==(const FiniteFn&) const = default;
};

// Throws std::invalid_argument on a non-positive size, a wrong value count or
// a value outside the codomain.
FiniteFn make_finite_fn(std::size_t dom_size, std::size_t cod_size, std::vector<std::size_t> values);

// "a b v0 v1 ... v_{a-1}". Throws ParseError.
FiniteFn parse_finite_fn(std::string_view text);
std::string to_string(const FiniteFn& f);

std::size_t image_size(const FiniteFn& f);

// Searches every sigma: dom(f) -> dom(g) for one making g(sigma(x)) |-> f(x)
// a function. Cost dom(g)^dom(f).
bool brute_force_le(const FiniteFn& f, const FiniteFn& g);

bool image_formula_le(const FiniteFn& f, const FiniteFn& g);

// one, or a glue of |im f| copies of one.
Term term_of(const FiniteFn& f);

}  // namespace scat
