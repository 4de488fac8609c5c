#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "scat/engine.hpp"
#include "scat/ordinal.hpp"
#include "scat/term.hpp"
#include "scat/verdict.hpp"

namespace scat {

struct PairKey {
  std::uint64_t f;
  std::uint64_t g;
  bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.f * 0x9e3779b97f4a7c15ULL ^ k.g);
  }
};

enum class Rule { flat, minmax, omega, pgl_members, pgl_wedge, pgl_absorb, wedge_reduce };

// Instances of the axiom table at one level lambda (lambda = 1 or a limit).
struct AxiomInstances {
  Term lam;           // max(lambda)
  Term v;             // min(lambda+1)
  Term pgl_lam;       // pgl{max(lambda)}
  Term v_glue_lam;    // glue(min(lambda+1), max(lambda))
  Term omega_pgl_lam; // omega(pgl{max(lambda)})
  Term wedge_lam_v;   // wedge({max(lambda)} | {min(lambda+1)})
};

struct Engine::Impl {
  explicit Impl(EngineConfig c) : cfg(c) {}

  EngineConfig cfg;

  // ---- normalization -------------------------------------------------------
  struct NormCtx {
    std::size_t steps = 0;
    std::size_t cap = 0;
    bool provisional = false;  // some rule check ran out of depth or budget
  };

  Term norm(const Term& t);
  Term norm_in(NormCtx& ctx, const Term& t);
  Term normalize_children(NormCtx& ctx, const Term& t);
  std::optional<Term> step(Rule rule, const Term& t, NormCtx& ctx);
  std::optional<Term> apply_outermost(Rule rule, const Term& t, NormCtx& ctx);
  // Le check used by rewrite side conditions.
  bool le(NormCtx& ctx, const Term& a, const Term& b);

  std::mutex norm_mu;
  std::unordered_map<std::uint64_t, Term> norm_memo;

  // ---- comparison ----------------------------------------------------------
  struct Search {
    std::size_t steps = 0;
    std::unordered_set<PairKey, PairKeyHash> in_progress;
  };

  struct Res {
    Verdict v;
    bool provisional = false;  // Unknown caused by a cycle, depth or budget cut
  };

  Res query(Search& s, const Term& f, const Term& g, int depth);   // normalizes
  Res decide(Search& s, const Term& f, const Term& g, int depth);  // normalized input
  Res derive(Search& s, const Term& f, const Term& g, int depth, bool raw);
  Verdict top(const Term& f, const Term& g);

  const AxiomInstances& axioms(const Ordinal& lambda);

  std::mutex cmp_mu;
  std::unordered_map<PairKey, Verdict, PairKeyHash> cmp_memo;
  std::unordered_map<std::uint64_t, std::vector<Term>> le_succ;  // f -> {h : f <= h known}

  std::mutex ax_mu;
  std::map<Ordinal, AxiomInstances> ax_cache;
};

// Builds a wedge after canonicalizing sets and merging equal verticals.
Term make_wedge(std::vector<std::vector<Term>> verticals, std::vector<Term> diagonal);

// Summands of a glue, flattened through nested glues and without empties;
// [t] for anything else; [] for empty.
std::vector<Term> glue_parts(const Term& t);

std::string query_text(const Term& f, const Term& g, Outcome o);

}  // namespace scat
