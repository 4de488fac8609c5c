#include "scat/term.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "cursor.hpp"

namespace scat {

namespace detail {

struct Node {
  Kind kind = Kind::empty;
  Ordinal ord;
  std::vector<Term> kids;
  std::vector<std::vector<Term>> verts;
  std::uint64_t id = 0;
  std::size_t size = 1;
  std::size_t hash = 0;

  static Term make(Node&& n);
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

struct NodeHash {
  std::size_t operator()(const Node* n) const { return n->hash; }
};

struct NodeEq {
  bool operator()(const Node* a, const Node* b) const {
    return a->kind == b->kind && a->ord == b->ord && a->kids == b->kids && a->verts == b->verts;
  }
};

struct InternTable {
  std::mutex mu;
  std::unordered_set<const Node*, NodeHash, NodeEq> index;
  std::deque<std::unique_ptr<Node>> storage;
};

InternTable& table() {
  static InternTable* t = new InternTable();  // intentionally leaked; terms outlive static destructors
  return *t;
}

}  // namespace

Term Node::make(Node&& n) {
  std::size_t h = mix(static_cast<std::size_t>(n.kind), n.ord.hash());
  n.size = 1;
  for (const Term& k : n.kids) {
    h = mix(h, k.id());
    n.size += k.size();
  }
  for (const auto& v : n.verts) {
    h = mix(h, 0x51ed27);
    for (const Term& k : v) {
      h = mix(h, k.id());
      n.size += k.size();
    }
  }
  n.hash = h;

  InternTable& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  if (auto it = t.index.find(&n); it != t.index.end()) return Term(*it);
  n.id = t.storage.size() + 1;
  t.storage.push_back(std::make_unique<Node>(std::move(n)));
  const Node* p = t.storage.back().get();
  t.index.insert(p);
  return Term(p);
}

}  // namespace detail

namespace {

void require_scattered(const Term& t) {
  if (!t.is_scattered()) throw std::invalid_argument("idq/idbaire cannot occur beneath a constructor");
}

Term atom(Kind k) {
  detail::Node n;
  n.kind = k;
  return detail::Node::make(std::move(n));
}

template <class Cmp>
int lex_cmp(std::span<const Term> a, std::span<const Term> b, Cmp cmp) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

}  // namespace

Term::Term() : Term(empty()) {}

Term Term::empty() {
  static const Term t = atom(Kind::empty);
  return t;
}
Term Term::one() {
  static const Term t = atom(Kind::one);
  return t;
}
Term Term::id_q() {
  static const Term t = atom(Kind::id_q);
  return t;
}
Term Term::id_baire() {
  static const Term t = atom(Kind::id_baire);
  return t;
}

Term Term::min_fn(const Ordinal& rank) {
  if (!rank.is_successor()) throw std::invalid_argument("min function needs a successor rank");
  detail::Node n;
  n.kind = Kind::min_fn;
  n.ord = rank;
  return detail::Node::make(std::move(n));
}

Term Term::max_fn(const Ordinal& rank) {
  detail::Node n;
  n.kind = Kind::max_fn;
  n.ord = rank;
  return detail::Node::make(std::move(n));
}

Term Term::glue(std::vector<Term> summands) {
  for (const Term& t : summands) require_scattered(t);
  std::sort(summands.begin(), summands.end(), SyntacticLess{});
  detail::Node n;
  n.kind = Kind::glue;
  n.kids = std::move(summands);
  return detail::Node::make(std::move(n));
}

Term Term::copies(std::size_t count, const Term& t) { return glue(std::vector<Term>(count, t)); }

Term Term::omega(const Term& body) {
  require_scattered(body);
  detail::Node n;
  n.kind = Kind::omega;
  n.kids = {body};
  return detail::Node::make(std::move(n));
}

Term Term::pgl(std::vector<Term> members) {
  if (members.empty()) throw std::invalid_argument("pgl needs at least one member");
  for (const Term& t : members) require_scattered(t);
  detail::Node n;
  n.kind = Kind::pgl;
  n.kids = canonical_set(std::move(members));
  return detail::Node::make(std::move(n));
}

Term Term::wedge(std::vector<std::vector<Term>> verticals, std::vector<Term> diagonal) {
  if (verticals.empty()) throw std::invalid_argument("wedge needs at least one vertical");
  for (auto& v : verticals) {
    if (v.empty()) throw std::invalid_argument("wedge verticals must be non-empty");
    for (const Term& t : v) require_scattered(t);
    v = canonical_set(std::move(v));
  }
  for (const Term& t : diagonal) require_scattered(t);
  auto set_less = [](const std::vector<Term>& a, const std::vector<Term>& b) {
    return lex_cmp(a, b, syntactic_cmp) < 0;
  };
  std::sort(verticals.begin(), verticals.end(), set_less);
  if (std::adjacent_find(verticals.begin(), verticals.end()) != verticals.end())
    throw std::invalid_argument("wedge verticals must be pairwise distinct");
  detail::Node n;
  n.kind = Kind::wedge;
  n.verts = std::move(verticals);
  n.kids = canonical_set(std::move(diagonal));
  return detail::Node::make(std::move(n));
}

Kind Term::kind() const { return node_->kind; }
const Ordinal& Term::ordinal() const { return node_->ord; }
std::span<const Term> Term::summands() const { return node_->kids; }
const Term& Term::body() const { return node_->kids.front(); }
std::span<const Term> Term::members() const { return node_->kids; }
std::span<const std::vector<Term>> Term::verticals() const { return node_->verts; }
std::span<const Term> Term::diagonal() const { return node_->kids; }
std::uint64_t Term::id() const { return node_->id; }
std::size_t Term::size() const { return node_->size; }

std::strong_ordering syntactic_cmp(const Term& a, const Term& b) {
  if (a == b) return std::strong_ordering::equal;
  if (a.kind() != b.kind()) return a.kind() <=> b.kind();
  switch (a.kind()) {
    case Kind::empty:
    case Kind::one:
    case Kind::id_q:
    case Kind::id_baire:
      return std::strong_ordering::equal;
    case Kind::min_fn:
    case Kind::max_fn:
      return a.ordinal() <=> b.ordinal();
    case Kind::omega:
      return syntactic_cmp(a.body(), b.body());
    case Kind::glue:
    case Kind::pgl:
      return lex_cmp(a.summands(), b.summands(), syntactic_cmp) <=> 0;
    case Kind::wedge: {
      auto va = a.verticals();
      auto vb = b.verticals();
      std::size_t n = std::min(va.size(), vb.size());
      for (std::size_t i = 0; i < n; ++i) {
        int c = lex_cmp(va[i], vb[i], syntactic_cmp);
        if (c != 0) return c <=> 0;
      }
      if (va.size() != vb.size()) return va.size() <=> vb.size();
      return lex_cmp(a.diagonal(), b.diagonal(), syntactic_cmp) <=> 0;
    }
  }
  return std::strong_ordering::equal;
}

std::vector<Term> canonical_set(std::vector<Term> xs) {
  std::sort(xs.begin(), xs.end(), SyntacticLess{});
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

namespace {

void write_list(std::string& out, std::span<const Term> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += to_string(xs[i]);
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  switch (t.kind()) {
    case Kind::empty: return "empty";
    case Kind::one: return "one";
    case Kind::id_q: return "idq";
    case Kind::id_baire: return "idbaire";
    case Kind::min_fn: return "min(" + to_string(t.ordinal()) + ")";
    case Kind::max_fn: return "max(" + to_string(t.ordinal()) + ")";
    case Kind::omega: return "omega(" + to_string(t.body()) + ")";
    case Kind::glue:
      out = "glue(";
      write_list(out, t.summands());
      return out + ")";
    case Kind::pgl:
      out = "pgl{";
      write_list(out, t.members());
      return out + "}";
    case Kind::wedge:
      out = "wedge(";
      for (std::size_t i = 0; i < t.verticals().size(); ++i) {
        if (i) out += ", ";
        out += '{';
        write_list(out, t.verticals()[i]);
        out += '}';
      }
      out += " | {";
      write_list(out, t.diagonal());
      return out + "})";
  }
  return out;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : cur_(text) {}

  Term parse_all() {
    Term t = term();
    if (!cur_.at_end()) cur_.fail("unexpected trailing input");
    return t;
  }

 private:
  Term term() {
    if (cur_.at_digit()) {
      std::uint64_t n = cur_.integer();
      cur_.expect('*');
      Term body = scattered_term();
      return Term::copies(static_cast<std::size_t>(n), body);
    }
    if (cur_.accept_word("empty")) return Term::empty();
    if (cur_.accept_word("one")) return Term::one();
    if (cur_.accept_word("idq")) return Term::id_q();
    if (cur_.accept_word("idbaire")) return Term::id_baire();
    if (cur_.accept_word("min")) {
      cur_.expect('(');
      std::size_t at = cur_.position();
      Ordinal o = detail::parse_ordinal_at(cur_);
      if (!o.is_successor()) cur_.fail_at("min needs a successor rank", at);
      cur_.expect(')');
      return Term::min_fn(o);
    }
    if (cur_.accept_word("max")) {
      cur_.expect('(');
      Ordinal o = detail::parse_ordinal_at(cur_);
      cur_.expect(')');
      return Term::max_fn(o);
    }
    if (cur_.accept_word("glue")) {
      cur_.expect('(');
      std::vector<Term> xs = list(')');
      return Term::glue(std::move(xs));
    }
    if (cur_.accept_word("omega")) {
      cur_.expect('(');
      Term body = scattered_term();
      cur_.expect(')');
      return Term::omega(body);
    }
    if (cur_.accept_word("pgl")) {
      cur_.expect('{');
      std::vector<Term> xs = list('}');
      return Term::pgl(std::move(xs));
    }
    if (cur_.accept_word("wedge")) return wedge();
    cur_.fail("expected term");
  }

  Term scattered_term() {
    std::size_t at = cur_.position();
    Term t = term();
    if (!t.is_scattered()) cur_.fail_at("idq/idbaire cannot occur beneath a constructor", at);
    return t;
  }

  // One or more comma-separated terms, then the closing character.
  std::vector<Term> list(char close) {
    std::vector<Term> xs;
    do xs.push_back(scattered_term());
    while (cur_.accept(','));
    cur_.expect(close);
    return xs;
  }

  std::vector<Term> set() {
    cur_.expect('{');
    if (cur_.accept('}')) return {};
    return list('}');
  }

  Term wedge() {
    cur_.expect('(');
    std::vector<std::vector<Term>> verticals;
    do {
      std::size_t at = cur_.position();
      std::vector<Term> v = canonical_set(set());
      if (v.empty()) cur_.fail_at("wedge verticals must be non-empty", at);
      for (const auto& w : verticals)
        if (w == v) cur_.fail_at("duplicate wedge vertical", at);
      verticals.push_back(std::move(v));
    } while (cur_.accept(','));
    cur_.expect('|');
    std::vector<Term> diagonal = set();
    cur_.expect(')');
    return Term::wedge(std::move(verticals), std::move(diagonal));
  }

  detail::Cursor cur_;
};

}  // namespace

Term parse_term(std::string_view text) { return TermParser(text).parse_all(); }

}  // namespace scat
