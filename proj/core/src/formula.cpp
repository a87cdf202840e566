#include "namecalc/formula.hpp"

#include <algorithm>
#include <unordered_set>

#include "namecalc/errors.hpp"

namespace namecalc {

namespace {

struct FunctorInfo {
  Functor functor;
  std::string_view tag;
  std::string_view symbol;
  int arity;
};

constexpr std::array<FunctorInfo, 14> kFunctorTable = {{
    {Functor::A, "a", "\\sa", 2},
    {Functor::I, "i", "\\si", 2},
    {Functor::E, "e", "\\se", 2},
    {Functor::O, "o", "\\so", 2},
    {Functor::KA, "ka", "\\ska", 2},
    {Functor::KE, "ke", "\\ske", 2},
    {Functor::KKE, "kke", "\\skke", 2},
    {Functor::CEQ, "ceq", "\\circeq", 2},
    {Functor::DEQ, "deq", "\\doteq", 2},
    {Functor::OT, "ot", "\\textsf{\\~{o}}", 2},
    {Functor::EPS, "eps", "\\sis", 2},
    {Functor::NEPS, "neps", "\\bar{\\sis}", 2},
    {Functor::IDEQ, "ideq", "\\idsf", 2},
    {Functor::EX, "ex", "\\ex", 1},
}};

const FunctorInfo& info(Functor f) { return kFunctorTable[static_cast<std::size_t>(f)]; }

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Letter::Letter(std::string id) : id_(std::move(id)) {
  if (!valid_id(id_)) throw Error("invalid name letter '" + id_ + "'");
}

bool Letter::valid_id(std::string_view id) {
  if (id.empty() || id[0] < 'A' || id[0] > 'Z') return false;
  return std::all_of(id.begin() + 1, id.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

int arity(Functor f) { return info(f).arity; }
std::string_view functor_tag(Functor f) { return info(f).tag; }
std::string_view functor_symbol(Functor f) { return info(f).symbol; }

std::optional<Functor> functor_from_tag(std::string_view tag) {
  for (const auto& row : kFunctorTable)
    if (row.tag == tag) return row.functor;
  return std::nullopt;
}

std::string_view connective_token(Connective c) {
  switch (c) {
    case Connective::And: return "&";
    case Connective::Or: return "|";
    case Connective::Imp: return "->";
    case Connective::Iff: return "<->";
  }
  return "?";
}

struct Formula::Node {
  Kind kind;
  Functor functor = Functor::A;
  Connective connective = Connective::And;
  Letter subject;
  Letter predicate;
  std::optional<Formula> left;
  std::optional<Formula> right;
  std::size_t hash = 0;
};

Formula Formula::atom(Functor f, Letter subject, Letter predicate) {
  if (f == Functor::EX) {
    if (subject != predicate) throw Error("ex takes a single letter");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->functor = f;
  n->subject = std::move(subject);
  n->predicate = std::move(predicate);
  std::hash<std::string> h;
  n->hash = mix(mix(mix(1, static_cast<std::size_t>(f)), h(n->subject.id())), h(n->predicate.id()));
  return Formula(std::move(n));
}

Formula Formula::ex(Letter subject) {
  Letter copy = subject;
  return atom(Functor::EX, std::move(subject), std::move(copy));
}

Formula Formula::neg(Formula operand) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Neg;
  n->hash = mix(2, operand.hash());
  n->left = std::move(operand);
  return Formula(std::move(n));
}

Formula Formula::bin(Connective c, Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bin;
  n->connective = c;
  n->hash = mix(mix(mix(3, static_cast<std::size_t>(c)), lhs.hash()), rhs.hash());
  n->left = std::move(lhs);
  n->right = std::move(rhs);
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }
Functor Formula::functor() const { return node_->functor; }
const Letter& Formula::subject() const { return node_->subject; }
const Letter& Formula::predicate() const { return node_->predicate; }
const Formula& Formula::operand() const { return *node_->left; }
Connective Formula::connective() const { return node_->connective; }
const Formula& Formula::lhs() const { return *node_->left; }
const Formula& Formula::rhs() const { return *node_->right; }
std::size_t Formula::hash() const { return node_->hash; }

bool operator==(const Formula& x, const Formula& y) {
  if (x.node_ == y.node_) return true;
  if (x.hash() != y.hash() || x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Formula::Kind::Atom:
      return x.functor() == y.functor() && x.subject() == y.subject() && x.predicate() == y.predicate();
    case Formula::Kind::Neg:
      return x.operand() == y.operand();
    case Formula::Kind::Bin:
      return x.connective() == y.connective() && x.lhs() == y.lhs() && x.rhs() == y.rhs();
  }
  return false;
}

std::strong_ordering operator<=>(const Formula& x, const Formula& y) {
  if (x.node_ == y.node_) return std::strong_ordering::equal;
  if (auto c = x.kind() <=> y.kind(); c != 0) return c;
  switch (x.kind()) {
    case Formula::Kind::Atom:
      if (auto c = x.functor() <=> y.functor(); c != 0) return c;
      if (auto c = x.subject() <=> y.subject(); c != 0) return c;
      return x.predicate() <=> y.predicate();
    case Formula::Kind::Neg:
      return x.operand() <=> y.operand();
    case Formula::Kind::Bin:
      if (auto c = x.connective() <=> y.connective(); c != 0) return c;
      if (auto c = x.lhs() <=> y.lhs(); c != 0) return c;
      return x.rhs() <=> y.rhs();
  }
  return std::strong_ordering::equal;
}

Formula conj_all(const std::vector<Formula>& xs) {
  if (xs.empty()) throw Error("conj_all of an empty list");
  Formula acc = xs.front();
  for (std::size_t k = 1; k < xs.size(); ++k) acc = conj(acc, xs[k]);
  return acc;
}

namespace {

template <class Fn>
void visit_atoms(const Formula& f, Fn&& fn) {
  switch (f.kind()) {
    case Formula::Kind::Atom: fn(f); break;
    case Formula::Kind::Neg: visit_atoms(f.operand(), fn); break;
    case Formula::Kind::Bin:
      visit_atoms(f.lhs(), fn);
      visit_atoms(f.rhs(), fn);
      break;
  }
}

}  // namespace

std::set<Letter> letters(const Formula& f) {
  std::set<Letter> out;
  visit_atoms(f, [&](const Formula& a) {
    out.insert(a.subject());
    out.insert(a.predicate());
  });
  return out;
}

std::vector<Formula> atoms(const Formula& f) {
  std::vector<Formula> out;
  std::unordered_set<Formula> seen;
  visit_atoms(f, [&](const Formula& a) {
    if (seen.insert(a).second) out.push_back(a);
  });
  return out;
}

std::size_t depth(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return 0;
    case Formula::Kind::Neg: return 1 + depth(f.operand());
    case Formula::Kind::Bin: return 1 + std::max(depth(f.lhs()), depth(f.rhs()));
  }
  return 0;
}

bool uses_only(const Formula& f, std::initializer_list<Functor> allowed) {
  bool ok = true;
  visit_atoms(f, [&](const Formula& a) {
    if (std::find(allowed.begin(), allowed.end(), a.functor()) == allowed.end()) ok = false;
  });
  return ok;
}

Substitution::Substitution(std::initializer_list<std::pair<Letter, Letter>> pairs) {
  for (const auto& [from, to] : pairs) set(from, to);
}

void Substitution::set(const Letter& from, const Letter& to) {
  if (from == to)
    map_.erase(from);
  else
    map_[from] = to;
}

Letter Substitution::operator()(const Letter& l) const {
  auto it = map_.find(l);
  return it == map_.end() ? l : it->second;
}

Substitution Substitution::restricted_to(const std::set<Letter>& domain) const {
  Substitution out;
  for (const auto& [from, to] : map_)
    if (domain.count(from)) out.map_.emplace(from, to);
  return out;
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  Substitution out;
  for (const auto& [from, to] : inner.mapping()) out.set(from, outer(to));
  for (const auto& [from, to] : outer.mapping())
    if (!inner.mapping().count(from)) out.set(from, to);
  return out;
}

Formula substitute(const Formula& f, const Substitution& s) {
  if (s.empty()) return f;
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return Formula::atom(f.functor(), s(f.subject()), s(f.predicate()));
    case Formula::Kind::Neg:
      return Formula::neg(substitute(f.operand(), s));
    case Formula::Kind::Bin:
      return Formula::bin(f.connective(), substitute(f.lhs(), s), substitute(f.rhs(), s));
  }
  return f;
}

namespace {

bool bind(std::map<Letter, Letter>& env, const Letter& var, const Letter& value) {
  auto [it, inserted] = env.emplace(var, value);
  return inserted || it->second == value;
}

bool match_into(const Formula& p, const Formula& c, std::map<Letter, Letter>& env) {
  if (p.kind() != c.kind()) return false;
  switch (p.kind()) {
    case Formula::Kind::Atom:
      return p.functor() == c.functor() && bind(env, p.subject(), c.subject()) &&
             bind(env, p.predicate(), c.predicate());
    case Formula::Kind::Neg:
      return match_into(p.operand(), c.operand(), env);
    case Formula::Kind::Bin:
      return p.connective() == c.connective() && match_into(p.lhs(), c.lhs(), env) &&
             match_into(p.rhs(), c.rhs(), env);
  }
  return false;
}

}  // namespace

std::optional<Substitution> match_schema(const Formula& pattern, const Formula& candidate) {
  std::map<Letter, Letter> env;
  if (!match_into(pattern, candidate, env)) return std::nullopt;
  Substitution out;
  for (const auto& [var, value] : env) out.set(var, value);
  return out;
}

}  // namespace namecalc
