#include "scat/sample.hpp"

#include <algorithm>
#include <vector>

namespace scat {

namespace {

int pick(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Ordinal random_rank(std::mt19937& rng) {
  static const Ordinal w = Ordinal::omega();
  switch (pick(rng, 0, 6)) {
    case 0: return Ordinal(1);
    case 1: return Ordinal(2);
    case 2: return Ordinal(3);
    case 3: return w;
    case 4: return w + Ordinal(1);
    case 5: return w + w;
    default: return w + w + Ordinal(2);
  }
}

std::vector<Term> children(std::mt19937& rng, int lo, int hi, int depth) {
  std::vector<Term> out;
  int n = pick(rng, lo, hi);
  for (int i = 0; i < n; ++i) out.push_back(random_term(rng, depth));
  return out;
}

}  // namespace

Term random_term(std::mt19937& rng, int max_depth) {
  int choice = max_depth <= 1 ? pick(rng, 0, 3) : pick(rng, 0, 9);
  switch (choice) {
    case 0: return pick(rng, 0, 5) == 0 ? Term::empty() : Term::one();
    case 1: return Term::one();
    case 2: return Term::min_fn(succ(random_rank(rng)));
    case 3: return Term::max_fn(random_rank(rng));
    case 4:
    case 5: return Term::glue(children(rng, 1, 3, max_depth - 1));
    case 6: return Term::omega(random_term(rng, max_depth - 1));
    case 7:
    case 8: return Term::pgl(children(rng, 1, 3, max_depth - 1));
    default: {
      std::vector<std::vector<Term>> verticals;
      int k = pick(rng, 1, 2);
      for (int i = 0; i < k; ++i) {
        std::vector<Term> v = children(rng, 1, 2, max_depth - 1);
        if (std::find(verticals.begin(), verticals.end(), canonical_set(v)) == verticals.end())
          verticals.push_back(canonical_set(v));
      }
      if (verticals.empty()) verticals.push_back({Term::one()});
      return Term::wedge(verticals, children(rng, 0, 2, max_depth - 1));
    }
  }
}

Term random_term_or_sentinel(std::mt19937& rng, int max_depth) {
  switch (pick(rng, 0, 39)) {
    case 0: return Term::id_q();
    case 1: return Term::id_baire();
    default: return random_term(rng, max_depth);
  }
}

}  // namespace scat
