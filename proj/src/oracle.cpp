#include "scat/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "cursor.hpp"
#include "scat/error.hpp"

namespace scat {

FiniteFn make_finite_fn(std::size_t dom_size, std::size_t cod_size, std::vector<std::size_t> values) {
  if (dom_size == 0 || cod_size == 0) throw std::invalid_argument("finite function sizes must be positive");
  if (values.size() != dom_size) throw std::invalid_argument("finite function needs exactly dom_size values");
  for (std::size_t v : values)
    if (v >= cod_size) throw std::invalid_argument("finite function value outside the codomain");
  return FiniteFn{dom_size, cod_size, std::move(values)};
}

FiniteFn parse_finite_fn(std::string_view text) {
  detail::Cursor c(text);
  auto positive = [&](const char* what) {
    if (!c.at_digit()) c.fail(std::string("expected ") + what);
    std::size_t at = c.position();
    std::uint64_t n = c.integer();
    if (n == 0) c.fail_at(std::string(what) + " must be positive", at);
    return static_cast<std::size_t>(n);
  };
  std::size_t a = positive("domain size");
  std::size_t b = positive("codomain size");
  std::vector<std::size_t> values;
  for (std::size_t i = 0; i < a; ++i) {
    if (!c.at_digit()) c.fail("expected " + std::to_string(a) + " values");
    std::size_t at = c.position();
    std::uint64_t v = c.integer();
    if (v >= b) c.fail_at("value outside the codomain", at);
    values.push_back(static_cast<std::size_t>(v));
  }
  if (!c.at_end()) c.fail("trailing input");
  return FiniteFn{a, b, std::move(values)};
}

std::string to_string(const FiniteFn& f) {
  std::string out = std::to_string(f.dom_size) + " " + std::to_string(f.cod_size);
  for (std::size_t v : f.values) out += " " + std::to_string(v);
  return out;
}

std::size_t image_size(const FiniteFn& f) {
  std::vector<char> hit(f.cod_size, 0);
  std::size_t n = 0;
  for (std::size_t v : f.values)
    if (!hit[v]) {
      hit[v] = 1;
      ++n;
    }
  return n;
}

bool brute_force_le(const FiniteFn& f, const FiniteFn& g) {
  std::vector<std::size_t> sigma(f.dom_size, 0);
  std::vector<long> tau(g.cod_size);
  for (;;) {
    std::fill(tau.begin(), tau.end(), -1);
    bool functional = true;
    for (std::size_t x = 0; x < f.dom_size && functional; ++x) {
      long& slot = tau[g.values[sigma[x]]];
      long want = static_cast<long>(f.values[x]);
      if (slot < 0) {
        slot = want;
      } else if (slot != want) {
        functional = false;
      }
    }
    if (functional) return true;
    std::size_t i = 0;
    while (i < sigma.size() && ++sigma[i] == g.dom_size) sigma[i++] = 0;
    if (i == sigma.size()) return false;
  }
}

bool image_formula_le(const FiniteFn& f, const FiniteFn& g) { return image_size(f) <= image_size(g); }

Term term_of(const FiniteFn& f) {
  std::size_t k = image_size(f);
  return k == 1 ? Term::one() : Term::copies(k, Term::one());
}

}  // namespace scat
