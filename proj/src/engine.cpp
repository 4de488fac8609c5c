#include <memory>

#include "engine_impl.hpp"
#include "scat/compare.hpp"

namespace scat {

Engine::Engine(EngineConfig config) : impl_(std::make_unique<Impl>(config)) {}

Engine::~Engine() = default;

const EngineConfig& Engine::config() const { return impl_->cfg; }

Verdict Engine::Impl::top(const Term& f, const Term& g) {
  Search s;
  return query(s, f, g, 0).v;
}

Verdict Engine::compare(const Term& f, const Term& g) { return impl_->top(f, g); }

Verdict Engine::compare_unnormalized(const Term& f, const Term& g) {
  Impl::Search s;
  return impl_->derive(s, f, g, 0, true).v;
}

Equivalence Engine::equivalent(const Term& f, const Term& g) {
  Verdict a = compare(f, g);
  if (a.not_le()) return Equivalence::no;
  Verdict b = compare(g, f);
  if (b.not_le()) return Equivalence::no;
  if (a.le() && b.le()) return Equivalence::yes;
  return Equivalence::unknown;
}

Verdict Engine::dominates(std::span<const Term> f_set, std::span<const Term> g_set) {
  Verdict out;
  auto d = std::make_shared<Derivation>();
  d->lhs = Term::glue({f_set.begin(), f_set.end()});
  d->rhs = Term::glue({g_set.begin(), g_set.end()});
  for (const Term& f : f_set) {
    Verdict best;
    bool found = false;
    std::vector<std::shared_ptr<const Derivation>> refutations;
    std::vector<std::string> blockers;
    for (const Term& g : g_set) {
      Verdict v = compare(f, g);
      if (v.le()) {
        d->premises.push_back(v.derivation);
        found = true;
        break;
      }
      if (v.not_le()) {
        refutations.push_back(v.derivation);
      } else {
        blockers.insert(blockers.end(), v.blockers.begin(), v.blockers.end());
      }
    }
    if (found) continue;
    if (blockers.empty()) {
      d->rule = "N-dominates";
      d->outcome = Outcome::not_le;
      d->note = to_string(f) + " reduces to no member";
      d->premises = std::move(refutations);
      out.outcome = Outcome::not_le;
      out.derivation = d;
      return out;
    }
    out.blockers.insert(out.blockers.end(), blockers.begin(), blockers.end());
  }
  if (!out.blockers.empty()) return out;
  d->rule = "L-dominates";
  d->outcome = Outcome::le;
  out.outcome = Outcome::le;
  out.derivation = d;
  return out;
}

Engine& default_engine() {
  static Engine engine;
  return engine;
}

}  // namespace scat
