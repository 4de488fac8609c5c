#include "scat/compare.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "engine_impl.hpp"
#include "scat/rank.hpp"
#include "scat/rewrite.hpp"

namespace scat {

namespace {

using DerivPtr = std::shared_ptr<const Derivation>;

DerivPtr make_derivation(std::string rule, const Term& f, const Term& g, Outcome o, std::string note = {},
                         std::vector<DerivPtr> premises = {}) {
  auto d = std::make_shared<Derivation>();
  d->rule = std::move(rule);
  d->lhs = f;
  d->rhs = g;
  d->outcome = o;
  d->note = std::move(note);
  d->premises = std::move(premises);
  return d;
}

bool centered_shape(const Term& t) { return t.is(Kind::one) || t.is(Kind::min_fn) || t.is(Kind::pgl); }

bool omega_of_centered(const Term& t) { return t.is(Kind::omega) && centered_shape(t.body()); }

bool limit_max(const Term& t) { return t.is(Kind::max_fn) && t.ordinal().is_limit(); }

std::vector<Term> distinct(std::vector<Term> xs) {
  std::vector<Term> out;
  for (const Term& x : xs)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  return out;
}

// Kuhn's augmenting paths; adj(i, j) is evaluated lazily and cached by the caller.
bool perfect_matching(std::size_t left, std::size_t right, const std::function<bool(std::size_t, std::size_t)>& adj,
                      std::vector<int>& match_of_right) {
  match_of_right.assign(right, -1);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t j = 0; j < right; ++j) {
      if (seen[j] || !adj(i, j)) continue;
      seen[j] = 1;
      if (match_of_right[j] < 0 || augment(static_cast<std::size_t>(match_of_right[j]))) {
        match_of_right[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < left; ++i) {
    seen.assign(right, 0);
    if (!augment(i)) return false;
  }
  return true;
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::le: return "LE";
    case Outcome::not_le: return "NOT_LE";
    case Outcome::unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string to_string(Equivalence e) {
  switch (e) {
    case Equivalence::yes: return "YES";
    case Equivalence::no: return "NO";
    case Equivalence::unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string query_text(const Term& f, const Term& g, Outcome o) {
  return to_string(f) + (o == Outcome::not_le ? " !<= " : " <= ") + to_string(g);
}

std::vector<TraceStep> Verdict::trace() const {
  std::vector<TraceStep> out;
  std::vector<const Derivation*> seen;
  std::function<void(const Derivation&)> walk = [&](const Derivation& d) {
    if (std::find(seen.begin(), seen.end(), &d) != seen.end()) return;
    seen.push_back(&d);
    for (const auto& p : d.premises) walk(*p);
    out.push_back({d.rule, query_text(d.lhs, d.rhs, d.outcome), d.note});
  };
  if (derivation) walk(*derivation);
  return out;
}

bool le_compact(const Term& f, const Term& g) {
  if (!f.is_scattered() || !g.is_scattered() || !is_compact_domain(f) || !is_compact_domain(g))
    throw std::invalid_argument("le_compact needs compact-domain terms");
  CbType tf = cb_type(f);
  CbType tg = cb_type(g);
  if (tf.rank.is_zero() || tg.rank.is_zero()) throw std::invalid_argument("le_compact needs non-empty terms");
  return tf <= tg;
}

const AxiomInstances& Engine::Impl::axioms(const Ordinal& lambda) {
  {
    std::lock_guard<std::mutex> lock(ax_mu);
    if (auto it = ax_cache.find(lambda); it != ax_cache.end()) return it->second;
  }
  // Written directly in normal form; building them through the normalizer
  // would consult these very axioms.
  AxiomInstances a;
  a.lam = max_form(lambda);
  a.v = min_form(succ(lambda));
  a.pgl_lam = Term::pgl({a.lam});
  a.v_glue_lam = Term::glue({a.v, a.lam});
  a.omega_pgl_lam = Term::omega(a.pgl_lam);
  a.wedge_lam_v = Term::wedge({{a.lam}}, {a.v});
  std::lock_guard<std::mutex> lock(ax_mu);
  return ax_cache.emplace(lambda, a).first->second;
}

Engine::Impl::Res Engine::Impl::query(Search& s, const Term& f, const Term& g, int depth) {
  return decide(s, norm(f), norm(g), depth);
}

Engine::Impl::Res Engine::Impl::decide(Search& s, const Term& f, const Term& g, int depth) {
  PairKey key{f.id(), g.id()};
  {
    std::lock_guard<std::mutex> lock(cmp_mu);
    if (auto it = cmp_memo.find(key); it != cmp_memo.end()) return {it->second, false};
  }
  auto cut = [&](std::string why) {
    Res r;
    r.v.blockers = {std::move(why)};
    r.provisional = true;
    return r;
  };
  if (s.in_progress.count(key)) return cut("cycle at " + query_text(f, g, Outcome::le));
  if (depth > cfg.depth) return cut("depth");
  if (++s.steps > cfg.step_budget) return cut("budget");

  s.in_progress.insert(key);
  Res r = derive(s, f, g, depth, false);
  s.in_progress.erase(key);

  if (!r.v.unknown() || !r.provisional) {
    std::lock_guard<std::mutex> lock(cmp_mu);
    cmp_memo.emplace(key, r.v);
    if (r.v.le()) le_succ[f.id()].push_back(g);
  }
  return r;
}

Engine::Impl::Res Engine::Impl::derive(Search& s, const Term& f, const Term& g, int depth, bool raw) {
  auto conclude = [&](Outcome o, std::string rule, std::string note = {}, std::vector<DerivPtr> premises = {}) {
    Res r;
    r.v.outcome = o;
    r.v.derivation = make_derivation(std::move(rule), f, g, o, std::move(note), std::move(premises));
    return r;
  };
  auto le = [&](std::string rule, std::string note = {}, std::vector<DerivPtr> premises = {}) {
    return conclude(Outcome::le, std::move(rule), std::move(note), std::move(premises));
  };
  auto not_le = [&](std::string rule, std::string note = {}, std::vector<DerivPtr> premises = {}) {
    return conclude(Outcome::not_le, std::move(rule), std::move(note), std::move(premises));
  };

  // ---- structural equality and the non-scattered sentinels ----------------
  if (f == g) return le("L-refl");
  if (g.is(Kind::id_baire)) return le("L-sent", "every function reduces to idbaire");
  if (f.is(Kind::id_baire)) return not_le("N-scat", "idbaire reduces to no scattered function nor to idq");
  if (g.is(Kind::id_q)) return le("L-sent", "every scattered function reduces to idq");
  if (f.is(Kind::id_q)) return not_le("N-scat", "reducibility preserves scatteredness");

  // ---- type-level rules -----------------------------------------------------
  const CbType tf = cb_type(f);
  const CbType tg = cb_type(g);
  const Ordinal& rf = tf.rank;
  const Ordinal& rg = tg.rank;
  if (tf > tg) return not_le("N-lex", "tp " + to_string(tf) + " > " + to_string(tg));

  if (is_max_form(f) && is_min_form(g) && (rf.is_limit() || rf == Ordinal(1)) && rg == succ(rf))
    return le("A1");
  if ((rg.is_limit() || rg.is_zero()) && rf <= rg) return le("L-gst", "limit rank " + to_string(rg));
  if (twice(rf) < rg) return le("L-gst", "2*" + to_string(rf) + " < " + to_string(rg));
  if (rf.is_finite() && rg.is_finite() && twice(rf) <= rg)
    return le("L-gst", "finite ranks, 2*" + to_string(rf) + " <= " + to_string(rg));
  if (rg == Ordinal(1)) return le("L-rank-one", "locally constant functions ordered by image size");
  if (rf.is_successor() && is_min_form(f) && rf <= rg) return le("L-min");
  if (is_max_form(g) && rf <= rg) return le("L-max");
  if (g.is(Kind::pgl) && g.members().size() == 1 && is_max_form(g.members()[0]) && tf.degree == Degree::fin(1) &&
      rf <= rg)
    return le("L-max-simple");
  if (g.is(Kind::pgl)) {
    std::vector<Term> ms(g.members().begin(), g.members().end());
    Term lower = Term::glue(ms);
    bool same = raw ? (glue_parts(f) == glue_parts(lower)) : (f == norm(lower));
    if (same) return le("L-pgl-lower");
  }

  // ---- axiom table ----------------------------------------------------------
  if (rf.is_successor()) {
    Ordinal lambda = pred(rf);
    if (lambda == Ordinal(1) || lambda.is_limit()) {
      const AxiomInstances& ax = axioms(lambda);
      if (f == ax.pgl_lam && g == ax.v) return not_le("A4", "V < pgl Lambda at successor of " + to_string(lambda));
      if (f == ax.v_glue_lam && g == ax.v) return not_le("A5a", "V < V + Lambda at " + to_string(lambda));
      if (f == ax.pgl_lam && g == ax.v_glue_lam)
        return not_le("A5b", "V + Lambda < pgl Lambda at " + to_string(lambda));
      if (f == ax.omega_pgl_lam && g == ax.wedge_lam_v)
        return not_le("A3", "Lambda above the wedge at " + to_string(lambda));
    }
  }

  // ---- transitivity over facts already derived -----------------------------
  {
    std::vector<std::pair<DerivPtr, DerivPtr>> hit;
    std::lock_guard<std::mutex> lock(cmp_mu);
    if (auto it = le_succ.find(f.id()); it != le_succ.end()) {
      for (const Term& h : it->second) {
        auto second = cmp_memo.find(PairKey{h.id(), g.id()});
        if (second == cmp_memo.end() || !second->second.le()) continue;
        auto first = cmp_memo.find(PairKey{f.id(), h.id()});
        if (first == cmp_memo.end()) continue;
        Res r;
        r.v.outcome = Outcome::le;
        r.v.derivation = make_derivation("L-trans", f, g, Outcome::le, "via " + to_string(h),
                                         {first->second.derivation, second->second.derivation});
        return r;
      }
    }
  }

  // ---- rules with sub-queries ----------------------------------------------
  std::vector<std::pair<Term, Term>> open;  // unknown sub-queries, for blockers
  std::vector<std::string> cuts;
  bool provisional = false;
  auto sub = [&](const Term& a, const Term& b) {
    Res r = query(s, a, b, depth + 1);
    if (r.v.unknown()) {
      provisional = provisional || r.provisional;
      if (open.size() < 4) open.emplace_back(a, b);
      // Resource cuts surface as blockers of their own.
      if (r.provisional)
        for (const std::string& why : r.v.blockers)
          if ((why == "depth" || why == "budget") && std::find(cuts.begin(), cuts.end(), why) == cuts.end())
            cuts.push_back(why);
    }
    return r;
  };

  const std::vector<Term> gparts = glue_parts(g);
  // Summands of f, with omega spread over a glued body and rank-zero pieces
  // dropped since they reduce to anything.
  const std::vector<Term> fparts = [&] {
    std::vector<Term> out;
    for (const Term& p : glue_parts(f)) {
      if (p.is(Kind::omega) && p.body().is(Kind::glue)) {
        for (const Term& b : glue_parts(p.body()))
          if (!cb_rank(b).is_zero()) out.push_back(Term::omega(b));
      } else if (!cb_rank(p).is_zero()) {
        out.push_back(p);
      }
    }
    return out;
  }();

  // L-glue: summands of f into distinct summands of g. An omega summand of g,
  // and every member of a pgl summand of g, accepts any number of summands.
  {
    struct Slot {
      Term target;
      bool unbounded;
    };
    std::vector<Slot> slots;
    for (const Term& t : gparts) {
      if (t.is(Kind::omega)) {
        slots.push_back({t, true});
        continue;
      }
      slots.push_back({t, false});
      if (t.is(Kind::pgl))
        for (const Term& m : t.members()) slots.push_back({m, true});
    }
    bool progress = fparts.size() != 1 || gparts.size() != 1 || fparts[0] != f || gparts[0] != g ||
                    g.is(Kind::omega) || g.is(Kind::pgl);
    if (progress && !fparts.empty()) {
      std::map<std::pair<std::size_t, std::size_t>, DerivPtr> edges;
      std::map<std::pair<std::size_t, std::size_t>, bool> tried;
      auto edge = [&](std::size_t i, std::size_t j) -> bool {
        auto key = std::make_pair(i, j);
        if (auto it = tried.find(key); it != tried.end()) return it->second;
        // Equal summands share verdicts.
        for (std::size_t k = 0; k < i; ++k) {
          if (fparts[k] == fparts[i]) {
            auto kt = tried.find({k, j});
            if (kt != tried.end()) {
              tried[key] = kt->second;
              if (kt->second) edges[key] = edges[{k, j}];
              return kt->second;
            }
          }
        }
        const Term& p = fparts[i];
        const Term& t = slots[j].target;
        Res r;
        bool same_query = (p == f && t == g);
        if (t.is(Kind::omega) && slots[j].unbounded && p.is(Kind::omega)) {
          r = sub(p.body(), t);
        } else if (same_query) {
          if (!t.is(Kind::omega)) {
            tried[key] = false;
            return false;
          }
          r = sub(p, t.body());
        } else {
          r = sub(p, t);
        }
        tried[key] = r.v.le();
        if (r.v.le()) edges[key] = r.v.derivation;
        return r.v.le();
      };

      std::vector<std::size_t> bounded_slots;
      for (std::size_t j = 0; j < slots.size(); ++j)
        if (!slots[j].unbounded) bounded_slots.push_back(j);

      std::vector<DerivPtr> premises;
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < fparts.size(); ++i) {
        bool placed = false;
        for (std::size_t j = 0; j < slots.size() && !placed; ++j) {
          if (slots[j].unbounded && edge(i, j)) {
            premises.push_back(edges[{i, j}]);
            placed = true;
          }
        }
        if (!placed) rest.push_back(i);
      }
      bool ok = rest.size() <= bounded_slots.size();
      std::vector<int> match;
      if (ok && !rest.empty()) {
        ok = perfect_matching(
            rest.size(), bounded_slots.size(),
            [&](std::size_t a, std::size_t b) { return edge(rest[a], bounded_slots[b]); }, match);
        if (ok) {
          for (std::size_t b = 0; b < match.size(); ++b)
            if (match[b] >= 0) premises.push_back(edges[{rest[static_cast<std::size_t>(match[b])], bounded_slots[b]}]);
        }
      }
      if (ok) return le("L-glue", {}, std::move(premises));
    }
  }

  // L-pgl-mono: every member of f reduces to a finite gluing of g's members.
  if (f.is(Kind::pgl) && g.is(Kind::pgl)) {
    std::vector<DerivPtr> premises;
    bool all = true;
    std::vector<Term> gms(g.members().begin(), g.members().end());
    for (const Term& m : f.members()) {
      bool found = false;
      for (const Term& gm : gms) {
        Res r = sub(m, gm);
        if (r.v.le()) {
          premises.push_back(r.v.derivation);
          found = true;
          break;
        }
      }
      std::size_t k = std::max<std::size_t>(1, glue_parts(m).size());
      if (!found && (gms.size() > 1 || k > 1)) {
        std::vector<Term> copies;
        for (std::size_t i = 0; i < k; ++i) copies.insert(copies.end(), gms.begin(), gms.end());
        Res r = sub(m, Term::glue(copies));
        if (r.v.le()) {
          premises.push_back(r.v.derivation);
          found = true;
        }
      }
      if (!found) {
        all = false;
        break;
      }
    }
    if (all) return le("L-pgl-mono", {}, std::move(premises));
  }

  // L-wedge-bounds.
  auto wedge_lower_bounds = [&](const Term& w) {
    std::vector<Term> out;
    for (const auto& v : w.verticals()) out.push_back(norm(Term::pgl(v)));
    if (!w.diagonal().empty()) {
      std::vector<Term> d(w.diagonal().begin(), w.diagonal().end());
      out.push_back(norm(Term::omega(Term::glue(d))));
    }
    return distinct(out);
  };
  auto wedge_upper_bound = [&](const Term& w) {
    std::vector<Term> parts;
    for (const auto& v : w.verticals()) parts.push_back(Term::pgl(v));
    if (!w.diagonal().empty()) {
      std::vector<Term> d(w.diagonal().begin(), w.diagonal().end());
      parts.push_back(Term::omega(Term::glue(d)));
    }
    return norm(Term::glue(parts));
  };
  if (g.is(Kind::wedge)) {
    auto bounds = wedge_lower_bounds(g);
    for (const Term& b : bounds)
      if (f == b) return le("L-wedge-bounds", "lower bound of the wedge");
    for (const Term& b : bounds) {
      Res r = sub(f, b);
      if (r.v.le()) return le("L-wedge-bounds", "below the lower bound " + to_string(b), {r.v.derivation});
    }
  }
  if (f.is(Kind::wedge)) {
    Term b = wedge_upper_bound(f);
    if (b == g) return le("L-wedge-bounds", "upper bound of the wedge");
    Res r = sub(b, g);
    if (r.v.le()) return le("L-wedge-bounds", "upper bound " + to_string(b) + " reduces", {r.v.derivation});
  }

  // L-wedge-mono: verticals dominated by verticals, diagonal below diagonal.
  if (f.is(Kind::wedge) && g.is(Kind::wedge)) {
    std::vector<DerivPtr> premises;
    bool all = true;
    for (const auto& fv : f.verticals()) {
      bool found = false;
      for (const auto& gv : g.verticals()) {
        Res r = sub(Term::glue(fv), Term::glue(gv));
        if (r.v.le()) {
          premises.push_back(r.v.derivation);
          found = true;
          break;
        }
      }
      if (!found) {
        all = false;
        break;
      }
    }
    if (all && !f.diagonal().empty()) {
      Res r = sub(Term::glue({f.diagonal().begin(), f.diagonal().end()}),
                  Term::glue({g.diagonal().begin(), g.diagonal().end()}));
      all = r.v.le();
      if (all) premises.push_back(r.v.derivation);
    }
    if (all) return le("L-wedge-mono", {}, std::move(premises));
  }

  // N-centered: a centered f below a gluing lands inside a single piece.
  if (centered_shape(f) && (g.is(Kind::glue) || g.is(Kind::omega))) {
    std::vector<Term> pieces;
    for (const Term& p : gparts) pieces.push_back(p.is(Kind::omega) ? p.body() : p);
    pieces = distinct(pieces);
    std::vector<DerivPtr> premises;
    bool all = true;
    for (const Term& p : pieces) {
      Res r = sub(f, p);
      if (!r.v.not_le()) {
        all = false;
        break;
      }
      premises.push_back(r.v.derivation);
    }
    if (all) return not_le("N-centered", "no piece of the gluing receives the center", std::move(premises));
  }
  // The same for omega of a centered function, or a limit maximum, against a
  // finite gluing: one summand must take it whole.
  if ((omega_of_centered(f) || limit_max(f)) && g.is(Kind::glue)) {
    std::vector<DerivPtr> premises;
    bool all = true;
    for (const Term& p : distinct(gparts)) {
      Res r = sub(f, p);
      if (!r.v.not_le()) {
        all = false;
        break;
      }
      premises.push_back(r.v.derivation);
    }
    if (all) return not_le("N-centered", "no summand of the finite gluing takes it whole", std::move(premises));
  }

  // N-pgl-rigid: between pointed gluings of equal rank the basepoint maps to the
  // basepoint, so each member of f reduces to a finite gluing of g's members.
  if (f.is(Kind::pgl) && g.is(Kind::pgl) && rf == rg) {
    Ordinal rho = pred(rg);
    for (const Term& m : f.members()) {
      CbType tm = cb_type(m);
      if (tm.rank == rho && rho.is_successor() && tm.degree.is_omega()) {
        bool finite = std::all_of(g.members().begin(), g.members().end(), [&](const Term& gm) {
          CbType t = cb_type(gm);
          return t.rank != rho || !t.degree.is_omega();
        });
        if (finite)
          return not_le("N-pgl-rigid", "member " + to_string(m) + " has degree w, finite gluings of g's members do not");
      }
      if (centered_shape(m) || omega_of_centered(m) || limit_max(m)) {
        std::vector<DerivPtr> premises;
        bool all = true;
        for (const Term& gm : g.members()) {
          Res r = sub(m, gm);
          if (!r.v.not_le()) {
            all = false;
            break;
          }
          premises.push_back(r.v.derivation);
        }
        if (all)
          return not_le("N-pgl-rigid", "member " + to_string(m) + " reduces to no member of g", std::move(premises));
      }
    }
  }

  // N-capacity: top-rank centered summands of f need distinct top-rank simple
  // centered summands of g; omega summands of g take any number.
  if (rf == rg && rf.is_successor() && (f.is(Kind::glue) || g.is(Kind::glue))) {
    struct Top {
      Term piece;
      bool many;
    };
    auto tops = [&](const std::vector<Term>& parts, bool& ok) {
      std::vector<Top> out;
      for (const Term& p : parts) {
        if (cb_type(p).rank != rf) continue;
        if (centered_shape(p)) {
          out.push_back({p, false});
        } else if (omega_of_centered(p)) {
          out.push_back({p.body(), true});
        } else {
          ok = false;
        }
      }
      return out;
    };
    bool ok = true;
    std::vector<Top> ft = tops(fparts, ok);
    std::vector<Top> gt = tops(gparts, ok);
    if (ok) {
      std::vector<DerivPtr> premises;
      std::map<std::pair<std::size_t, std::size_t>, bool> cache;
      auto possible = [&](std::size_t i, std::size_t j) {
        auto key = std::make_pair(i, j);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
        Res r = sub(ft[i].piece, gt[j].piece);
        if (r.v.not_le()) premises.push_back(r.v.derivation);
        return cache[key] = !r.v.not_le();
      };
      std::vector<std::size_t> need;  // f tops that must use a capacity-one slot
      std::vector<std::size_t> single;
      for (std::size_t j = 0; j < gt.size(); ++j)
        if (!gt[j].many) single.push_back(j);
      bool feasible = true;
      for (std::size_t i = 0; i < ft.size() && feasible; ++i) {
        bool absorbed = false;
        for (std::size_t j = 0; j < gt.size() && !absorbed; ++j)
          if (gt[j].many && possible(i, j)) absorbed = true;
        if (absorbed) continue;
        if (ft[i].many) {
          feasible = false;
        } else {
          need.push_back(i);
        }
      }
      if (feasible) {
        std::vector<int> match;
        feasible = need.size() <= single.size() &&
                   perfect_matching(
                       need.size(), single.size(),
                       [&](std::size_t a, std::size_t b) { return possible(need[a], single[b]); }, match);
        if (!feasible && need.size() > single.size()) {
          // Counting alone decides; make the premises complete anyway.
          for (std::size_t a = 0; a < need.size(); ++a)
            for (std::size_t b = 0; b < single.size(); ++b) possible(need[a], single[b]);
        }
      }
      if (!feasible)
        return not_le("N-capacity", "top-rank centered summands of f cannot be placed in distinct summands of g",
                      std::move(premises));
    }
  }

  // N-mono: shrink f to a structural lower bound or grow g to an upper bound.
  {
    std::vector<Term> lowers;
    if (f.is(Kind::glue)) lowers = distinct(fparts);
    if (f.is(Kind::omega)) lowers.push_back(f.body());
    if (f.is(Kind::wedge)) lowers = wedge_lower_bounds(f);
    if (f.is(Kind::pgl)) lowers.assign(f.members().begin(), f.members().end());

    std::vector<Term> uppers;
    if (g.is(Kind::wedge)) uppers.push_back(wedge_upper_bound(g));
    if (g.is(Kind::glue) && std::any_of(gparts.begin(), gparts.end(), [](const Term& p) { return p.is(Kind::wedge); })) {
      std::vector<Term> parts;
      for (const Term& p : gparts) parts.push_back(p.is(Kind::wedge) ? wedge_upper_bound(p) : p);
      uppers.push_back(norm(Term::glue(parts)));
    }
    if (g.is(Kind::omega) && g.body().is(Kind::wedge)) uppers.push_back(norm(Term::omega(wedge_upper_bound(g.body()))));

    for (const Term& lo : lowers) {
      if (lo == f) continue;
      Res r = sub(lo, g);
      if (r.v.not_le())
        return not_le("N-mono", to_string(lo) + " <= " + to_string(f) + " structurally", {r.v.derivation});
    }
    for (const Term& up : uppers) {
      if (up == g) continue;
      Res r = sub(f, up);
      if (r.v.not_le())
        return not_le("N-mono", to_string(g) + " <= " + to_string(up) + " structurally", {r.v.derivation});
    }
    for (const Term& lo : lowers) {
      for (const Term& up : uppers) {
        Res r = sub(lo, up);
        if (r.v.not_le())
          return not_le("N-mono", "through " + to_string(lo) + " and " + to_string(up), {r.v.derivation});
      }
    }
  }

  Res r;
  r.provisional = provisional;
  for (const auto& [a, b] : open) r.v.blockers.push_back(query_text(a, b, Outcome::le));
  r.v.blockers.insert(r.v.blockers.end(), cuts.begin(), cuts.end());
  if (r.v.blockers.empty()) r.v.blockers.push_back("no rule decides " + query_text(f, g, Outcome::le));
  return r;
}

}  // namespace scat
