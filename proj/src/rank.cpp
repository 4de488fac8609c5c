#include "scat/rank.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace scat {

Degree operator+(const Degree& a, const Degree& b) {
  if (a.is_omega() || b.is_omega()) return Degree::omega();
  return Degree::fin(a.count() + b.count());
}

std::string to_string(const Degree& d) { return d.is_omega() ? "w" : std::to_string(d.count()); }

std::string to_string(const CbType& t) { return "(" + to_string(t.rank) + ", " + to_string(t.degree) + ")"; }

namespace {

// Type of a finite gluing: sup of ranks; degrees of the summands attaining a
// successor maximum add up.
template <class Range>
CbType glue_type(const Range& parts) {
  Ordinal top;
  for (const Term& p : parts) {
    Ordinal r = cb_type(p).rank;
    if (r > top) top = r;
  }
  Degree d = Degree::fin(0);
  if (top.is_successor()) {
    for (const Term& p : parts) {
      CbType c = cb_type(p);
      if (c.rank == top) d = d + c.degree;
    }
  }
  return {top, d};
}

CbType compute(const Term& t) {
  switch (t.kind()) {
    case Kind::empty:
      return {Ordinal(), Degree::fin(0)};
    case Kind::one:
      return {Ordinal(1), Degree::fin(1)};
    case Kind::id_q:
    case Kind::id_baire:
      throw std::domain_error("rank undefined for a non-scattered function");
    case Kind::glue:
      return glue_type(t.summands());
    case Kind::omega: {
      CbType b = cb_type(t.body());
      if (!b.degree.is_omega() && b.degree.count() == 0) return b;
      return {b.rank, Degree::omega()};
    }
    case Kind::pgl:
      return {succ(glue_type(t.members()).rank), Degree::fin(1)};
    case Kind::wedge: {
      Ordinal r;
      for (const auto& v : t.verticals()) {
        Ordinal vr = succ(glue_type(v).rank);
        if (vr > r) r = vr;
      }
      CbType diag = glue_type(t.diagonal());
      if (diag.rank > r) r = diag.rank;
      Degree d = Degree::fin(0);
      for (const auto& v : t.verticals()) {
        if (succ(glue_type(v).rank) == r) {
          d = Degree::fin(1);
          break;
        }
      }
      if (diag.rank == r && diag.degree > Degree::fin(0)) d = d + Degree::omega();
      return {r, d};
    }
    case Kind::min_fn:
      return {t.ordinal(), Degree::fin(1)};
    case Kind::max_fn:
      if (t.ordinal().is_successor()) return {t.ordinal(), Degree::omega()};
      return {t.ordinal(), Degree::fin(0)};
  }
  throw std::logic_error("unhandled term kind");
}

struct TypeCache {
  std::shared_mutex mu;
  std::unordered_map<std::uint64_t, CbType> map;
};

TypeCache& cache() {
  static TypeCache* c = new TypeCache();
  return *c;
}

}  // namespace

CbType cb_type(const Term& t) {
  if (!t.is_scattered()) throw std::domain_error("rank undefined for a non-scattered function");
  if (t.is(Kind::empty) || t.is(Kind::one)) return compute(t);
  TypeCache& c = cache();
  {
    std::shared_lock lock(c.mu);
    if (auto it = c.map.find(t.id()); it != c.map.end()) return it->second;
  }
  CbType r = compute(t);
  std::unique_lock lock(c.mu);
  c.map.emplace(t.id(), r);
  return r;
}

bool is_simple(const Term& t) { return cb_type(t).degree == Degree::fin(1); }

bool has_normal_shape(const Term& t) {
  switch (t.kind()) {
    case Kind::min_fn:
      return split(t.ordinal()).finite_tail == 1 && !split(t.ordinal()).limit_part.is_zero();
    case Kind::max_fn:
      return t.ordinal().is_limit();
    case Kind::glue:
      if (t.summands().size() < 2) return false;
      for (const Term& s : t.summands())
        if (s.is(Kind::glue) || s.is(Kind::empty)) return false;
      return true;
    case Kind::omega:
      return !t.body().is(Kind::glue) && !t.body().is(Kind::omega) && !t.body().is(Kind::empty);
    case Kind::pgl:
      for (const Term& m : t.members())
        if (m.is(Kind::glue) || m.is(Kind::empty) || m.is(Kind::wedge)) return false;
      return true;
    case Kind::wedge:
      return !(t.verticals().size() == 1 && t.diagonal().empty());
    default:
      return true;
  }
}

bool is_centered(const Term& t) {
  if (!t.is_scattered()) throw std::domain_error("centeredness undefined for a non-scattered function");
  if (!has_normal_shape(t)) throw std::invalid_argument("is_centered needs a normalized term: " + to_string(t));
  switch (t.kind()) {
    case Kind::one:
    case Kind::min_fn:
    case Kind::pgl:
      return true;
    default:
      return false;
  }
}

bool is_compact_domain(const Term& t) {
  if (!t.is_scattered()) throw std::domain_error("compactness undefined for a non-scattered function");
  switch (t.kind()) {
    case Kind::empty:
    case Kind::one:
    case Kind::min_fn:
      return true;
    case Kind::glue:
      for (const Term& s : t.summands())
        if (!is_compact_domain(s)) return false;
      return true;
    case Kind::pgl:
      for (const Term& m : t.members())
        if (!is_compact_domain(m)) return false;
      return true;
    case Kind::max_fn:
      return t.ordinal().is_zero();
    case Kind::wedge:
      // Without a diagonal the domain is a finite union of pointed gluings.
      if (!t.diagonal().empty()) return false;
      for (const auto& v : t.verticals())
        for (const Term& m : v)
          if (!is_compact_domain(m)) return false;
      return true;
    default:
      return false;
  }
}

}  // namespace scat
