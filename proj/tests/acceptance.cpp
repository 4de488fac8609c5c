// One PASS/FAIL line per acceptance criterion, with wall time.
#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "scat/cli.hpp"
#include "scat/compare.hpp"
#include "scat/generators.hpp"
#include "scat/oracle.hpp"
#include "scat/rank.hpp"
#include "scat/rewrite.hpp"
#include "scat/sample.hpp"

using namespace scat;

namespace {

struct Result {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Result()>& body) {
  auto start = std::chrono::steady_clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.ok && s > limit_s) r.fail("took longer than " + std::to_string(limit_s) + " s");
  if (!r.ok) ++failures;
  std::printf("%s %d %s (%.3f s, limit %.1f s)%s%s\n", r.ok ? "PASS" : "FAIL", id, name.c_str(), s, limit_s,
              r.detail.empty() ? "" : ": ", r.detail.c_str());
  std::fflush(stdout);
}

Term T(std::string_view s) { return parse_term(s); }

std::string pair_text(const Term& f, const Term& g) { return to_string(f) + " vs " + to_string(g); }

Result generator_base_case() {
  Result r;
  std::ostringstream out, err;
  int code = run({"generators", "1", "--raw"}, out, err);
  if (code != 0) r.fail("exit " + std::to_string(code));
  if (out.str() != "one\nomega(one)\n") r.fail("got " + out.str());
  return r;
}

Result centered_at_two() {
  Result r;
  GeneratorSet c = centered_set(Ordinal(2));
  if (c.classes.size() != 3) r.fail(std::to_string(c.classes.size()) + " classes");
  int rank_two = 0;
  for (const TermClass& k : c.classes)
    if (cb_rank(k.representative) == Ordinal(2)) ++rank_two;
  if (rank_two != 2) r.fail(std::to_string(rank_two) + " classes of rank 2");
  if (!c.undecided_pairs.empty()) r.fail("undecided pairs");
  return r;
}

Result hasse_above_limit() {
  Result r;
  for (const Ordinal& lam : {Ordinal::omega(), Ordinal::omega() + Ordinal::omega()}) {
    Ordinal alpha = succ(lam);
    Term lambda = Term::max_fn(lam);
    Term v = Term::min_fn(alpha);
    Term p = Term::pgl({lambda});
    Term wv = Term::omega(v);
    Term wedge = Term::wedge({{lambda}}, {v});
    Term top = Term::max_fn(alpha);
    std::vector<Term> six{lambda, v, p, wv, wedge, top};

    std::vector<Term> all = generator_set(alpha).raw;
    all.insert(all.end(), six.begin(), six.end());
    std::vector<std::pair<Term, Term>> undecided;
    auto classes = classify(all, default_engine(), &undecided);
    if (classes.size() != 6) r.fail(to_string(lam) + ": " + std::to_string(classes.size()) + " classes");
    if (!undecided.empty()) r.fail(to_string(lam) + ": undecided " + pair_text(undecided[0].first, undecided[0].second));

    HasseDiagram d = hasse(six);
    if (d.nodes.size() != 6) {
      r.fail(to_string(lam) + ": six-set collapsed");
      continue;
    }
    std::vector<std::pair<std::size_t, std::size_t>> expected{{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}};
    auto edges = d.edges;
    std::sort(edges.begin(), edges.end());
    if (edges != expected) r.fail(to_string(lam) + ": covering relation differs");
    if (!compare(p, wv).not_le() || !compare(wv, p).not_le()) r.fail(to_string(lam) + ": pgl and omega comparable");
    for (const auto& [lo, hi] : expected) {
      if (!compare(six[lo], six[hi]).le()) r.fail(to_string(lam) + ": " + to_string(six[lo]) + " <= " + to_string(six[hi]));
      if (!compare(six[hi], six[lo]).not_le())
        r.fail(to_string(lam) + ": " + to_string(six[hi]) + " !<= " + to_string(six[lo]));
    }
  }
  return r;
}

Result strict_chain() {
  Result r;
  for (const Ordinal& lam : {Ordinal(1), Ordinal::omega()}) {
    Term lambda = max_form(lam);
    Term v = min_form(succ(lam));
    Term vl = Term::glue({v, lambda});
    Term p = Term::pgl({lambda});
    if (!compare(v, vl).le()) r.fail(to_string(lam) + ": V <= V+L");
    if (!compare(vl, p).le()) r.fail(to_string(lam) + ": V+L <= pgl L");
    if (!compare(vl, v).not_le()) r.fail(to_string(lam) + ": V+L !<= V");
    if (!compare(p, vl).not_le()) r.fail(to_string(lam) + ": pgl L !<= V+L");
  }
  return r;
}

Result compact_fragment() {
  Result r;
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::uint64_t> a(0, 2), bc(0, 9), mult(1, 9);
  auto ordinal = [&] {
    std::vector<Ordinal::Term> ts;
    std::uint64_t x = a(rng), y = bc(rng), z = bc(rng);
    if (x) ts.push_back({2, x});
    if (y) ts.push_back({1, y});
    return Ordinal::from_terms(ts, z);
  };
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    Ordinal alpha = succ(ordinal());
    Ordinal beta = succ(ordinal());
    std::uint64_t m = mult(rng), n = mult(rng);
    Term f = Term::copies(m, Term::min_fn(alpha));
    Term g = Term::copies(n, Term::min_fn(beta));
    bool lex = alpha < beta || (alpha == beta && m <= n);
    bool got = le_compact(f, g);
    if (got != lex) {
      ++mismatches;
      r.fail("le_compact on " + pair_text(f, g));
    }
    Verdict v = compare(f, g);
    if (got && !v.le()) {
      ++mismatches;
      r.fail("compare " + to_string(v.outcome) + " on " + pair_text(f, g));
    }
    if (!got && v.le()) {
      ++mismatches;
      r.fail("compare LE against the type order on " + pair_text(f, g));
    }
  }
  if (mismatches) r.detail += " (" + std::to_string(mismatches) + " mismatches)";
  return r;
}

Result oracle_equivalence() {
  Result r;
  std::vector<FiniteFn> fns;
  for (std::size_t a = 1; a <= 4; ++a) {
    for (std::size_t b = 1; b <= 4; ++b) {
      std::vector<std::size_t> v(a, 0);
      for (;;) {
        fns.push_back(make_finite_fn(a, b, v));
        std::size_t i = 0;
        while (i < a && ++v[i] == b) v[i++] = 0;
        if (i == a) break;
      }
    }
  }
  std::vector<Term> terms;
  for (const FiniteFn& f : fns) terms.push_back(term_of(f));
  long mismatches = 0, unknowns = 0, pairs = 0;
  for (std::size_t i = 0; i < fns.size(); ++i) {
    for (std::size_t j = 0; j < fns.size(); ++j) {
      ++pairs;
      bool brute = brute_force_le(fns[i], fns[j]);
      if (brute != image_formula_le(fns[i], fns[j])) {
        ++mismatches;
        r.fail("formula on " + to_string(fns[i]) + " | " + to_string(fns[j]));
      }
      Verdict v = compare(terms[i], terms[j]);
      if (v.unknown()) {
        ++unknowns;
        r.fail("unknown on " + pair_text(terms[i], terms[j]));
      } else if (v.le() != brute) {
        ++mismatches;
        r.fail("engine on " + to_string(fns[i]) + " | " + to_string(fns[j]));
      }
    }
  }
  r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(pairs) + " pairs, " + std::to_string(mismatches) +
              " mismatches, " + std::to_string(unknowns) + " unknown";
  return r;
}

Result antichain() {
  Result r;
  Term a = T("pgl{pgl{max(w)}}");
  Term b = T("pgl{omega(min(w+1))}");
  std::vector<Term> ts;
  for (std::size_t k = 0; k <= 3; ++k) {
    std::vector<Term> parts(k, a);
    parts.insert(parts.end(), 3 - k, b);
    ts.push_back(Term::glue(parts));
  }
  int not_le = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = 0; j < ts.size(); ++j) {
      if (i == j) continue;
      Verdict v = compare(ts[i], ts[j]);
      std::string rule = v.trace().empty() ? "" : v.trace().back().rule;
      if (v.not_le() && (rule == "N-capacity" || rule == "N-lex")) {
        ++not_le;
      } else {
        r.fail(to_string(v.outcome) + " by " + rule + " on k=" + std::to_string(i) + " vs k=" + std::to_string(j));
      }
    }
  }
  r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(not_le) + "/12 NOT_LE";
  return r;
}

Result generator_count() {
  Result r;
  std::size_t n = generator_set(Ordinal(2)).raw.size();
  if (n != 120) r.fail(std::to_string(n) + " raw terms");
  return r;
}

Result property_suites() {
  Result r;
  std::mt19937 rng(424242);
  constexpr int n = 10000;
  std::vector<Term> terms;
  terms.reserve(n);
  for (int i = 0; i < n; ++i) terms.push_back(random_term(rng, 5));

  long a = 0, b = 0, c = 0, d = 0, e = 0;
  for (const Term& t : terms) {
    Term x = normalize(t);
    if (normalize(x) != x || cb_type(x) != cb_type(t)) {
      if (!a++) r.fail("(a) on " + to_string(t));
    }
  }
  for (int i = 0; i < n; ++i) {
    const Term& f = terms[static_cast<std::size_t>(i)];
    const Term& g = terms[static_cast<std::size_t>((i * 7919 + 1) % n)];
    Verdict v = compare(f, g);
    if (v.le() && cb_type(f) > cb_type(g)) {
      if (!b++) r.fail("(b) on " + pair_text(f, g));
    }
    if (twice(cb_rank(f)) < cb_rank(g) && !v.le()) {
      if (!d++) r.fail("(d) on " + pair_text(f, g));
    }
  }
  // Triples drawn from a small pool so that Le chains actually occur.
  std::vector<Term> pool(terms.begin(), terms.begin() + 60);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  long chains = 0;
  for (int i = 0; i < n; ++i) {
    const Term& f = pool[pick(rng)];
    const Term& g = pool[pick(rng)];
    const Term& h = pool[pick(rng)];
    if (compare(f, g).le() && compare(g, h).le()) {
      ++chains;
      if (compare(f, h).not_le() && !c++) r.fail("(c) on " + to_string(f) + ", " + to_string(g) + ", " + to_string(h));
    }
  }
  std::uniform_int_distribution<int> width(1, 3);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Term> members;
    int k = width(rng);
    for (int j = 0; j < k; ++j) members.push_back(random_term(rng, 4));
    if (!compare(Term::glue(members), Term::pgl(members)).le()) {
      if (!e++) r.fail("(e) on " + to_string(Term::pgl(members)));
    }
  }
  r.detail += (r.detail.empty() ? "" : "; ") + std::string("violations a=") + std::to_string(a) +
              " b=" + std::to_string(b) + " c=" + std::to_string(c) + " d=" + std::to_string(d) +
              " e=" + std::to_string(e) + ", " + std::to_string(chains) + " Le chains checked";
  return r;
}

}  // namespace

int main() {
  criterion(1, "generators 1 --raw is exactly one, omega(one)", 0.1, generator_base_case);
  criterion(2, "centered_set(2) has 3 classes, 2 of rank 2", 1.0, centered_at_two);
  criterion(3, "six generators above w and w*2 form the expected Hasse diagram", 5.0, hasse_above_limit);
  criterion(4, "V < V+L < pgl L strictly at 1 and w", 1.0, strict_chain);
  criterion(5, "compact fragment follows the type order on 1000 pairs", 2.0, compact_fragment);
  criterion(6, "oracle, image formula and engine agree on finite functions", 10.0, oracle_equivalence);
  criterion(7, "gluings of pgl{pgl{max(w)}} and pgl{omega(min(w+1))} form an antichain", 2.0, antichain);
  criterion(8, "generator_set(2) has 120 raw terms", 1.0, generator_count);
  criterion(9, "property suites on 10000 random terms", 60.0, property_suites);
  return failures == 0 ? 0 : 1;
}
