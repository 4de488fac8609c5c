#include "scat/rewrite.hpp"

#include <algorithm>
#include <stdexcept>

#include "engine_impl.hpp"
#include "scat/error.hpp"
#include "scat/rank.hpp"

namespace scat {

Term min_form(const Ordinal& rank) {
  if (!rank.is_successor()) throw std::invalid_argument("min function needs a successor rank");
  auto [lambda, n] = split(rank);
  Term t = lambda.is_zero() ? Term::one() : Term::min_fn(succ(lambda));
  for (std::uint64_t k = 1; k < n; ++k) t = Term::pgl({t});
  return t;
}

Term max_form(const Ordinal& rank) {
  auto [lambda, n] = split(rank);
  Term t;
  if (lambda.is_zero()) {
    if (n == 0) return Term::empty();
    t = Term::omega(Term::one());
    --n;
  } else {
    t = Term::max_fn(lambda);
  }
  for (std::uint64_t k = 0; k < n; ++k) t = Term::omega(Term::pgl({t}));
  return t;
}

bool is_min_form(const Term& t) {
  switch (t.kind()) {
    case Kind::one:
    case Kind::min_fn:
      return true;
    case Kind::pgl:
      return t.members().size() == 1 && is_min_form(t.members()[0]);
    default:
      return false;
  }
}

bool is_max_form(const Term& t) {
  switch (t.kind()) {
    case Kind::empty:
    case Kind::max_fn:
      return true;
    case Kind::omega: {
      const Term& b = t.body();
      if (b.is(Kind::one)) return true;
      return b.is(Kind::pgl) && b.members().size() == 1 && is_max_form(b.members()[0]);
    }
    default:
      return false;
  }
}

std::vector<Term> glue_parts(const Term& t) {
  std::vector<Term> out;
  if (t.is(Kind::empty)) return out;
  if (!t.is(Kind::glue)) return {t};
  for (const Term& s : t.summands()) {
    auto sub = glue_parts(s);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

Term make_wedge(std::vector<std::vector<Term>> verticals, std::vector<Term> diagonal) {
  for (auto& v : verticals) v = canonical_set(std::move(v));
  auto set_less = [](const std::vector<Term>& a, const std::vector<Term>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), SyntacticLess{});
  };
  std::sort(verticals.begin(), verticals.end(), set_less);
  verticals.erase(std::unique(verticals.begin(), verticals.end()), verticals.end());
  return Term::wedge(std::move(verticals), std::move(diagonal));
}

namespace {

bool has_glue_or_empty(std::span<const Term> xs) {
  return std::any_of(xs.begin(), xs.end(), [](const Term& x) { return x.is(Kind::glue) || x.is(Kind::empty); });
}

// Splices glue members into the set and drops empties.
std::vector<Term> flatten_set(std::span<const Term> xs) {
  std::vector<Term> out;
  for (const Term& x : xs) {
    auto parts = glue_parts(x);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  return canonical_set(std::move(out));
}

std::vector<Term> without(std::span<const Term> xs, std::size_t i) {
  std::vector<Term> out(xs.begin(), xs.end());
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

std::vector<std::vector<Term>> verticals_of(const Term& w) { return {w.verticals().begin(), w.verticals().end()}; }

std::vector<Term> as_vector(std::span<const Term> xs) { return {xs.begin(), xs.end()}; }

std::optional<Term> flat_step(const Term& t) {
  switch (t.kind()) {
    case Kind::glue: {
      auto xs = t.summands();
      if (has_glue_or_empty(xs)) {
        std::vector<Term> out;
        for (const Term& x : xs) {
          if (x.is(Kind::glue)) {
            out.insert(out.end(), x.summands().begin(), x.summands().end());
          } else if (!x.is(Kind::empty)) {
            out.push_back(x);
          }
        }
        return Term::glue(std::move(out));
      }
      if (xs.empty()) return Term::empty();
      if (xs.size() == 1) return xs[0];
      return std::nullopt;
    }
    case Kind::pgl: {
      if (!has_glue_or_empty(t.members())) return std::nullopt;
      auto ms = flatten_set(t.members());
      // The pointed gluing of the empty function is a single point.
      if (ms.empty()) return Term::one();
      return Term::pgl(std::move(ms));
    }
    case Kind::wedge: {
      bool dirty = has_glue_or_empty(t.diagonal());
      for (const auto& v : t.verticals()) dirty = dirty || has_glue_or_empty(v);
      if (!dirty) return std::nullopt;
      std::vector<Term> diag = flatten_set(t.diagonal());
      std::vector<std::vector<Term>> verts;
      for (const auto& v : t.verticals()) {
        auto fv = flatten_set(v);
        if (!fv.empty()) verts.push_back(std::move(fv));
      }
      if (verts.empty()) {
        // The only vertical is the empty function: an isolated point mapped to
        // the basepoint, with the diagonal copies accumulating on its image.
        if (diag.empty()) return Term::one();
        return Term::glue({Term::one(), Term::omega(Term::glue(diag))});
      }
      // An empty vertical next to a non-empty one is dominated by it.
      return make_wedge(std::move(verts), std::move(diag));
    }
    default:
      return std::nullopt;
  }
}

std::optional<Term> minmax_step(const Term& t) {
  if (t.is(Kind::min_fn)) {
    const Ordinal& r = t.ordinal();
    if (r == Ordinal(1)) return Term::one();
    if (split(r).finite_tail >= 2) return Term::pgl({Term::min_fn(pred(r))});
    return std::nullopt;
  }
  if (t.is(Kind::max_fn)) {
    const Ordinal& r = t.ordinal();
    if (r.is_zero()) return Term::empty();
    if (r == Ordinal(1)) return Term::omega(Term::one());
    if (r.is_successor()) return Term::omega(Term::pgl({Term::max_fn(pred(r))}));
  }
  return std::nullopt;
}

}  // namespace

bool Engine::Impl::le(NormCtx& ctx, const Term& a, const Term& b) {
  Search s;
  Res r = query(s, a, b, 0);
  if (r.v.unknown() && r.provisional) ctx.provisional = true;
  return r.v.le();
}

std::optional<Term> Engine::Impl::step(Rule rule, const Term& t, NormCtx& ctx) {
  switch (rule) {
    case Rule::flat:
      return flat_step(t);
    case Rule::minmax:
      return minmax_step(t);

    case Rule::omega: {
      if (t.is(Kind::omega)) {
        const Term& b = t.body();
        if (b.is(Kind::empty)) return Term::empty();
        if (b.is(Kind::omega)) return b;
        if (b.is(Kind::glue)) {
          std::vector<Term> out;
          for (const Term& m : b.summands()) out.push_back(Term::omega(m));
          return Term::glue(std::move(out));
        }
        return std::nullopt;
      }
      if (!t.is(Kind::glue)) return std::nullopt;
      auto xs = t.summands();
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = 0; j < xs.size(); ++j) {
          if (i == j || !xs[j].is(Kind::omega)) continue;
          const Term& s = xs[i];
          const Term& w = xs[j];
          if (s == w) return Term::glue(without(xs, i));
          if (s == w.body()) return Term::glue(without(xs, i));
          if (!le(ctx, s, w)) continue;
          // Two equivalent omegas: keep the syntactically least.
          if (s.is(Kind::omega) && syntactic_cmp(s, w) < 0 && le(ctx, w, s)) continue;
          return Term::glue(without(xs, i));
        }
      }
      return std::nullopt;
    }

    case Rule::pgl_members: {
      if (!t.is(Kind::pgl)) return std::nullopt;
      auto ms = t.members();
      for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = 0; j < ms.size(); ++j) {
          if (i == j || !le(ctx, ms[i], ms[j])) continue;
          // Members are sorted, so j < i means ms[j] is the syntactically smaller.
          if (j > i && le(ctx, ms[j], ms[i])) continue;
          return Term::pgl(without(ms, i));
        }
      }
      return std::nullopt;
    }

    case Rule::pgl_wedge: {
      if (!t.is(Kind::pgl)) return std::nullopt;
      auto ms = t.members();
      for (std::size_t i = 0; i < ms.size(); ++i) {
        if (!ms[i].is(Kind::wedge)) continue;
        std::vector<Term> out = without(ms, i);
        for (const auto& v : ms[i].verticals()) out.push_back(Term::pgl(v));
        for (const Term& h : ms[i].diagonal()) out.push_back(Term::omega(h));
        return Term::pgl(std::move(out));
      }
      return std::nullopt;
    }

    case Rule::pgl_absorb: {
      if (!t.is(Kind::glue)) return std::nullopt;
      auto xs = t.summands();
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = 0; j < xs.size(); ++j) {
          if (i == j || !xs[j].is(Kind::pgl)) continue;
          const Term& m = xs[i];
          const Term& p = xs[j];
          if (!(cb_rank(m) < cb_rank(p))) continue;
          std::size_t k = cfg.absorb_bound ? cfg.absorb_bound : std::max<std::size_t>(1, glue_parts(m).size());
          std::vector<Term> copies;
          for (std::size_t c = 0; c < k; ++c) copies.insert(copies.end(), p.members().begin(), p.members().end());
          if (le(ctx, m, Term::glue(std::move(copies)))) return Term::glue(without(xs, i));
        }
      }
      return std::nullopt;
    }

    case Rule::wedge_reduce: {
      if (!t.is(Kind::wedge)) return std::nullopt;
      auto verts = verticals_of(t);
      std::vector<Term> diag = as_vector(t.diagonal());
      if (verts.size() == 1 && diag.empty()) return Term::pgl(verts[0]);

      // A vertical stands for the gluing of its set; use the summands of that
      // gluing's normal form when they form a different set.
      for (auto& v : verts) {
        Term glued = Term::glue(v);
        NormCtx sub;
        sub.cap = cfg.cap_factor * glued.size();
        std::vector<Term> parts = glue_parts(norm_in(sub, glued));
        ctx.provisional = ctx.provisional || sub.provisional;
        std::vector<Term> as_set = canonical_set(parts);
        if (parts.empty() || as_set.size() != parts.size() || as_set == v) continue;
        v = std::move(as_set);
        return make_wedge(std::move(verts), std::move(diag));
      }

      // Keep a domination antichain of verticals; ties go to the sorted-first set.
      for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = 0; j < verts.size(); ++j) {
          if (i == j) continue;
          Term gi = Term::glue(verts[i]);
          Term gj = Term::glue(verts[j]);
          if (!le(ctx, gi, gj)) continue;
          if (j > i && le(ctx, gj, gi)) continue;
          verts.erase(verts.begin() + static_cast<std::ptrdiff_t>(i));
          return make_wedge(std::move(verts), std::move(diag));
        }
      }

      // Diagonal members below a vertical or below another diagonal member.
      for (std::size_t i = 0; i < diag.size(); ++i) {
        bool drop = false;
        for (const auto& v : verts) {
          if (le(ctx, diag[i], Term::glue(v))) {
            drop = true;
            break;
          }
        }
        for (std::size_t j = 0; !drop && j < diag.size(); ++j) {
          if (i == j || !le(ctx, diag[i], diag[j])) continue;
          if (j > i && le(ctx, diag[j], diag[i])) continue;
          drop = true;
        }
        if (drop) {
          diag.erase(diag.begin() + static_cast<std::ptrdiff_t>(i));
          return make_wedge(std::move(verts), std::move(diag));
        }
      }

      // Verticals whose pointed gluing sits below a diagonal member.
      if (diag.empty()) return std::nullopt;
      std::vector<std::size_t> covered;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        Term p = Term::pgl(verts[i]);
        for (const Term& h : diag) {
          if (le(ctx, p, h)) {
            covered.push_back(i);
            break;
          }
        }
      }
      if (covered.size() == verts.size()) {
        std::vector<Term> out;
        for (const Term& h : diag) out.push_back(Term::omega(h));
        return Term::glue(std::move(out));
      }
      if (!covered.empty()) {
        verts.erase(verts.begin() + static_cast<std::ptrdiff_t>(covered.front()));
        return make_wedge(std::move(verts), std::move(diag));
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Term Engine::Impl::normalize_children(NormCtx& ctx, const Term& t) {
  auto norm_all = [&](std::span<const Term> xs) {
    std::vector<Term> out;
    out.reserve(xs.size());
    for (const Term& x : xs) out.push_back(norm_in(ctx, x));
    return out;
  };
  switch (t.kind()) {
    case Kind::glue:
      return Term::glue(norm_all(t.summands()));
    case Kind::omega:
      return Term::omega(norm_in(ctx, t.body()));
    case Kind::pgl:
      return Term::pgl(norm_all(t.members()));
    case Kind::wedge: {
      std::vector<std::vector<Term>> verts;
      for (const auto& v : t.verticals()) verts.push_back(norm_all(v));
      return make_wedge(std::move(verts), norm_all(t.diagonal()));
    }
    default:
      return t;
  }
}

Term Engine::Impl::norm(const Term& t) {
  {
    std::lock_guard<std::mutex> lock(norm_mu);
    if (auto it = norm_memo.find(t.id()); it != norm_memo.end()) return it->second;
  }
  NormCtx ctx;
  ctx.cap = cfg.cap_factor * t.size();
  return norm_in(ctx, t);
}

Term Engine::Impl::norm_in(NormCtx& ctx, const Term& t) {
  {
    std::lock_guard<std::mutex> lock(norm_mu);
    if (auto it = norm_memo.find(t.id()); it != norm_memo.end()) return it->second;
  }
  Term r;
  switch (t.kind()) {
    case Kind::empty:
    case Kind::one:
    case Kind::id_q:
    case Kind::id_baire:
      return t;
    case Kind::min_fn:
      r = min_form(t.ordinal());
      break;
    case Kind::max_fn:
      r = max_form(t.ordinal());
      break;
    default: {
      static constexpr Rule order[] = {Rule::flat, Rule::omega, Rule::pgl_wedge, Rule::pgl_members,
                                       Rule::pgl_absorb, Rule::wedge_reduce};
      bool was_provisional = ctx.provisional;
      ctx.provisional = false;
      r = normalize_children(ctx, t);
      for (;;) {
        std::optional<Term> next;
        for (Rule rule : order) {
          if ((next = step(rule, r, ctx))) break;
        }
        if (!next) break;
        if (++ctx.steps > ctx.cap)
          throw RewriteCapError("normalization exceeded " + std::to_string(ctx.cap) + " rewrites on " + to_string(t));
        r = normalize_children(ctx, *next);
      }
      bool provisional = ctx.provisional;
      ctx.provisional = was_provisional || provisional;
      if (provisional) return r;
      break;
    }
  }
  std::lock_guard<std::mutex> lock(norm_mu);
  norm_memo.emplace(t.id(), r);
  norm_memo.emplace(r.id(), r);
  return r;
}

std::optional<Term> Engine::Impl::apply_outermost(Rule rule, const Term& t, NormCtx& ctx) {
  if (auto r = step(rule, t, ctx)) return r;
  auto try_list = [&](std::span<const Term> xs) -> std::optional<std::vector<Term>> {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (auto r = apply_outermost(rule, xs[i], ctx)) {
        std::vector<Term> out(xs.begin(), xs.end());
        out[i] = *r;
        return out;
      }
    }
    return std::nullopt;
  };
  switch (t.kind()) {
    case Kind::glue:
      if (auto xs = try_list(t.summands())) return Term::glue(std::move(*xs));
      return std::nullopt;
    case Kind::omega:
      if (auto b = apply_outermost(rule, t.body(), ctx)) return Term::omega(*b);
      return std::nullopt;
    case Kind::pgl:
      if (auto xs = try_list(t.members())) return Term::pgl(std::move(*xs));
      return std::nullopt;
    case Kind::wedge: {
      auto verts = verticals_of(t);
      for (auto& v : verts) {
        if (auto xs = try_list(v)) {
          v = std::move(*xs);
          return make_wedge(std::move(verts), as_vector(t.diagonal()));
        }
      }
      if (auto xs = try_list(t.diagonal())) return make_wedge(std::move(verts), std::move(*xs));
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

Term Engine::normalize(const Term& t) { return impl_->norm(t); }

std::optional<Term> Engine::apply_rule(const Term& t, std::string_view rule) {
  static constexpr Rule rules[] = {Rule::flat, Rule::minmax, Rule::omega, Rule::pgl_members,
                                   Rule::pgl_wedge, Rule::pgl_absorb, Rule::wedge_reduce};
  for (std::size_t i = 0; i < rule_names.size(); ++i) {
    if (rule_names[i] == rule) {
      Impl::NormCtx ctx;
      return impl_->apply_outermost(rules[i], t, ctx);
    }
  }
  throw std::invalid_argument("unknown rewrite rule: " + std::string(rule));
}

}  // namespace scat
