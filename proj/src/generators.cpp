#include "scat/generators.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "scat/error.hpp"

namespace scat {

namespace {

// 2^n - 1, or max_raw + 1 when that would exceed max_raw.
std::size_t nonempty_subsets(std::size_t n, std::size_t max_raw) {
  if (n >= 63) return max_raw + 1;
  std::uint64_t c = (std::uint64_t{1} << n) - 1;
  return c > max_raw ? max_raw + 1 : static_cast<std::size_t>(c);
}

std::size_t saturating_mul(std::size_t a, std::size_t b, std::size_t limit) {
  if (a != 0 && b > limit / a) return limit + 1;
  return a * b;
}

void check_bound(std::size_t count, std::size_t max_raw, const Ordinal& alpha) {
  if (count > max_raw)
    throw FeasibilityError("level " + to_string(alpha) + " needs more than " + std::to_string(max_raw) +
                           " raw terms");
}

std::vector<Term> subset(const std::vector<Term>& pool, std::uint64_t mask) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (mask >> i & 1) out.push_back(pool[i]);
  return out;
}

std::vector<Term> centered_raw(const Ordinal& alpha, std::size_t max_raw) {
  if (alpha.is_zero() || alpha.is_limit()) return {};
  auto [lambda, n] = split(alpha);
  if (n == 1) {
    if (lambda.is_zero()) return {Term::one()};
    return {Term::min_fn(alpha), Term::pgl({Term::max_fn(lambda)})};
  }
  std::vector<Term> prev = centered_raw(pred(alpha), max_raw);
  std::vector<Term> pool = prev;
  for (const Term& c : prev) pool.push_back(Term::omega(c));
  std::size_t count = prev.size() + nonempty_subsets(pool.size(), max_raw);
  check_bound(count, max_raw, alpha);
  std::vector<Term> out = prev;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pool.size()); ++mask) out.push_back(Term::pgl(subset(pool, mask)));
  return out;
}

std::vector<Term> generator_raw(const Ordinal& alpha, std::size_t max_raw) {
  if (alpha.is_zero()) return {};
  if (alpha.is_limit()) return {Term::max_fn(alpha)};
  auto [lambda, n] = split(alpha);
  std::vector<Term> cs = centered_raw(alpha, max_raw);
  std::vector<Term> lower = generator_raw(pred(alpha), max_raw);

  std::size_t families = nonempty_subsets(nonempty_subsets(lower.size(), max_raw), max_raw);
  std::size_t diagonals = nonempty_subsets(cs.size(), max_raw);
  diagonals = diagonals > max_raw ? diagonals : diagonals + 1;
  std::size_t count = saturating_mul(families, diagonals, max_raw);
  count = count > max_raw ? count : count + 2 * cs.size() + (lambda.is_zero() ? 0 : 1);
  check_bound(count, max_raw, alpha);

  std::vector<Term> out;
  if (!lambda.is_zero()) out.push_back(Term::max_fn(lambda));
  out.insert(out.end(), cs.begin(), cs.end());
  for (const Term& c : cs) out.push_back(Term::omega(c));
  std::vector<std::vector<Term>> vertical_pool;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << lower.size()); ++mask)
    vertical_pool.push_back(subset(lower, mask));
  for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << vertical_pool.size()); ++fam) {
    std::vector<std::vector<Term>> verticals;
    for (std::size_t i = 0; i < vertical_pool.size(); ++i)
      if (fam >> i & 1) verticals.push_back(vertical_pool[i]);
    for (std::uint64_t diag = 0; diag < (std::uint64_t{1} << cs.size()); ++diag)
      out.push_back(Term::wedge(verticals, subset(cs, diag)));
  }
  return out;
}

GeneratorSet assemble(const Ordinal& alpha, std::vector<Term> raw, Engine& engine) {
  GeneratorSet s;
  s.level = alpha;
  s.raw = std::move(raw);
  s.classes = classify(s.raw, engine, &s.undecided_pairs);
  return s;
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

GeneratorSet centered_set(const Ordinal& alpha, std::size_t max_raw, Engine& engine) {
  return assemble(alpha, centered_raw(alpha, max_raw), engine);
}

GeneratorSet generator_set(const Ordinal& alpha, std::size_t max_raw, Engine& engine) {
  return assemble(alpha, generator_raw(alpha, max_raw), engine);
}

std::vector<TermClass> classify(const std::vector<Term>& terms, Engine& engine,
                                std::vector<std::pair<Term, Term>>* undecided) {
  std::vector<TermClass> classes;
  for (const Term& t : terms) {
    bool placed = false;
    for (TermClass& c : classes) {
      Equivalence e = engine.equivalent(c.representative, t);
      if (e == Equivalence::yes) {
        c.members.push_back(t);
        placed = true;
        break;
      }
      if (e == Equivalence::unknown && undecided) undecided->emplace_back(c.representative, t);
    }
    if (!placed) classes.push_back({t, {t}});
  }
  return classes;
}

HasseDiagram hasse(const std::vector<Term>& terms, Engine& engine) {
  HasseDiagram d;
  std::vector<std::pair<Term, Term>> undecided;
  d.nodes = classify(terms, engine, &undecided);
  if (!undecided.empty())
    throw UndecidedError("undecided pair: " + to_string(undecided[0].first) + " vs " + to_string(undecided[0].second));
  const std::size_t n = d.nodes.size();
  std::vector<std::vector<char>> below(n, std::vector<char>(n, 0));  // below[i][j]: i < j strictly
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Verdict v = engine.compare(d.nodes[i].representative, d.nodes[j].representative);
      if (v.unknown())
        throw UndecidedError("undecided pair: " + to_string(d.nodes[i].representative) + " <= " +
                             to_string(d.nodes[j].representative));
      below[i][j] = v.le();  // distinct classes, so Le is strict
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!below[i][j]) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k)
        if (below[i][k] && below[k][j]) covered = false;
      if (covered) d.edges.emplace_back(i, j);
    }
  }
  return d;
}

std::string node_id(const Term& t, Engine& engine) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_string(engine.normalize(t))) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "n%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string to_dot(const HasseDiagram& d, Engine& engine) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  std::vector<std::string> ids;
  for (const TermClass& c : d.nodes) {
    ids.push_back(node_id(c.representative, engine));
    out << "  " << ids.back() << " [label=\"" << escape_dot(to_string(c.representative)) << "\"];\n";
  }
  for (const auto& [lo, hi] : d.edges) out << "  " << ids[lo] << " -> " << ids[hi] << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_json(const HasseDiagram& d, Engine& engine) {
  nlohmann::json j;
  j["schema"] = 1;
  j["nodes"] = nlohmann::json::array();
  std::vector<std::string> ids;
  for (const TermClass& c : d.nodes) {
    ids.push_back(node_id(c.representative, engine));
    nlohmann::json members = nlohmann::json::array();
    for (const Term& m : c.members) members.push_back(to_string(m));
    j["nodes"].push_back({{"id", ids.back()}, {"label", to_string(c.representative)}, {"members", members}});
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& [lo, hi] : d.edges) j["edges"].push_back({{"from", ids[lo]}, {"to", ids[hi]}});
  return j.dump(2);
}

}  // namespace scat
