#include "reference.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace namecalc::testing {

namespace {

using Set = std::set<std::size_t>;

Set denoted(const Model& m, const Letter& l) {
  const auto& d = m.denotation(l);
  return Set(d.begin(), d.end());
}

bool subset(const Set& x, const Set& y) { return std::includes(y.begin(), y.end(), x.begin(), x.end()); }

bool meet(const Set& x, const Set& y) {
  return std::any_of(x.begin(), x.end(), [&](std::size_t e) { return y.count(e) != 0; });
}

bool atom_holds(const Model& m, const Formula& f) {
  const Set s = denoted(m, f.subject());
  const Set p = denoted(m, f.predicate());
  switch (f.functor()) {
    case Functor::A: return subset(s, p);
    case Functor::I: return meet(s, p);
    case Functor::E: return !meet(s, p);
    case Functor::O: return !subset(s, p);
    case Functor::EX: return !s.empty();
    case Functor::KA: return !s.empty() && subset(s, p);
    case Functor::KE: return !s.empty() && !meet(s, p);
    case Functor::KKE: return !s.empty() && !p.empty() && !meet(s, p);
    case Functor::CEQ: return s == p;
    case Functor::DEQ: return s == p && !s.empty();
    case Functor::OT: return !(!s.empty() && subset(s, p));
    case Functor::EPS: return s.size() == 1 && subset(s, p);
    case Functor::NEPS: return s.size() == 1 && !meet(s, p);
    case Functor::IDEQ: return s.size() == 1 && s == p;
  }
  return false;
}

bool boolean_eval(const Formula& f, const std::function<bool(const Formula&)>& atom_value) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return atom_value(f);
    case Formula::Kind::Neg: return !boolean_eval(f.operand(), atom_value);
    case Formula::Kind::Bin: {
      bool x = boolean_eval(f.lhs(), atom_value);
      bool y = boolean_eval(f.rhs(), atom_value);
      switch (f.connective()) {
        case Connective::And: return x && y;
        case Connective::Or: return x || y;
        case Connective::Imp: return !x || y;
        case Connective::Iff: return x == y;
      }
    }
  }
  return false;
}

void collect_atoms(const Formula& f, std::vector<Formula>& out) {
  if (f.is_atom()) {
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  } else if (f.is_neg()) {
    collect_atoms(f.operand(), out);
  } else {
    collect_atoms(f.lhs(), out);
    collect_atoms(f.rhs(), out);
  }
}

void collect_letters(const Formula& f, std::set<Letter>& out) {
  if (f.is_atom()) {
    out.insert(f.subject());
    out.insert(f.predicate());
  } else if (f.is_neg()) {
    collect_letters(f.operand(), out);
  } else {
    collect_letters(f.lhs(), out);
    collect_letters(f.rhs(), out);
  }
}

}  // namespace

bool reference_eval(const Model& m, const Formula& f) {
  return boolean_eval(f, [&](const Formula& a) { return atom_holds(m, a); });
}

bool reference_in_class(const Model& m, ModelClass c, const std::set<Letter>& vocab) {
  for (const auto& l : vocab) {
    std::size_t n = m.denotation(l).size();
    if (c == ModelClass::Traditional && n == 0) return false;
    if (c == ModelClass::Polyreferential && n < 2) return false;
    if (c == ModelClass::NonMonoreferential && n == 1) return false;
  }
  if (c == ModelClass::Traditional && m.size() == 0) return false;
  if ((c == ModelClass::Polyreferential || c == ModelClass::NonMonoreferential) && m.size() < 2) return false;
  return true;
}

bool brute_force_valid(const Formula& f, ModelClass c, std::size_t universe) {
  std::set<Letter> vocab_set;
  collect_letters(f, vocab_set);
  std::vector<Letter> vocab(vocab_set.begin(), vocab_set.end());
  const std::size_t subsets = std::size_t{1} << universe;
  std::vector<std::size_t> choice(vocab.size(), 0);
  for (;;) {
    Model m;
    for (std::size_t k = 0; k < universe; ++k) m.add_element("r" + std::to_string(k));
    for (std::size_t v = 0; v < vocab.size(); ++v) {
      std::vector<std::size_t> elems;
      for (std::size_t k = 0; k < universe; ++k)
        if (choice[v] >> k & 1U) elems.push_back(k);
      m.set_denotation(vocab[v], elems);
    }
    if (reference_in_class(m, c, vocab_set) && !reference_eval(m, f)) return false;
    std::size_t v = 0;
    while (v < vocab.size() && ++choice[v] == subsets) choice[v++] = 0;
    if (v == vocab.size()) return true;
  }
}

bool reference_tautology(const Formula& f) {
  std::vector<Formula> atoms;
  collect_atoms(f, atoms);
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << atoms.size()); ++row) {
    auto value = [&](const Formula& a) {
      auto it = std::find(atoms.begin(), atoms.end(), a);
      return (row >> static_cast<std::size_t>(it - atoms.begin()) & 1U) != 0;
    };
    if (!boolean_eval(f, value)) return false;
  }
  return true;
}

std::vector<Letter> letter_list(std::initializer_list<const char*> ids) {
  std::vector<Letter> out;
  for (const char* id : ids) out.emplace_back(id);
  return out;
}

Formula random_atom(Rng& rng, const std::vector<Letter>& letters, const std::vector<Functor>& functors) {
  Functor f = functors[rng() % functors.size()];
  const Letter& s = letters[rng() % letters.size()];
  if (f == Functor::EX) return Formula::ex(s);
  return atom(f, s, letters[rng() % letters.size()]);
}

Formula random_formula(Rng& rng, const std::vector<Letter>& letters, const std::vector<Functor>& functors,
                       std::size_t max_depth) {
  if (max_depth == 0 || rng() % 3 == 0) return random_atom(rng, letters, functors);
  if (rng() % 4 == 0) return neg(random_formula(rng, letters, functors, max_depth - 1));
  static const Connective kConnectives[] = {Connective::And, Connective::Or, Connective::Imp, Connective::Iff};
  Connective c = kConnectives[rng() % 4];
  Formula x = random_formula(rng, letters, functors, max_depth - 1);
  Formula y = random_formula(rng, letters, functors, max_depth - 1);
  return Formula::bin(c, x, y);
}

Substitution random_substitution(Rng& rng, const std::vector<Letter>& from, const std::vector<Letter>& to) {
  Substitution s;
  for (const auto& l : from)
    if (rng() % 2 == 0) s.set(l, to[rng() % to.size()]);
  return s;
}

Model random_any_model(Rng& rng, const std::vector<Letter>& letters, std::size_t max_universe) {
  Model m;
  std::size_t n = rng() % (max_universe + 1);
  for (std::size_t k = 0; k < n; ++k) m.add_element("x" + std::to_string(k));
  for (const auto& l : letters) {
    std::vector<std::size_t> elems;
    for (std::size_t k = 0; k < n; ++k)
      if (rng() % 2 == 0) elems.push_back(k);
    m.set_denotation(l, elems);
  }
  return m;
}

std::vector<Functor> all_functors() { return {kAllFunctors.begin(), kAllFunctors.end()}; }

std::vector<Functor> categorical_functors() { return {Functor::A, Functor::I, Functor::E, Functor::O}; }

std::vector<Formula> shape_suite(const std::vector<Formula>& atoms) {
  std::vector<Formula> out;
  for (const auto& x : atoms) out.push_back(x);
  for (const auto& x : atoms) out.push_back(neg(x));
  for (const auto& x : atoms)
    for (const auto& y : atoms) out.push_back(imp(x, y));
  for (const auto& x : atoms)
    for (const auto& y : atoms)
      for (const auto& z : atoms) out.push_back(imp(conj(x, y), z));
  return out;
}

std::vector<Formula> all_atoms(const std::vector<Letter>& letters) {
  std::vector<Formula> out;
  for (Functor f : kAllFunctors) {
    if (f == Functor::EX) {
      for (const auto& s : letters) out.push_back(Formula::ex(s));
      continue;
    }
    for (const auto& s : letters)
      for (const auto& p : letters) out.push_back(atom(f, s, p));
  }
  return out;
}

bool classes_monotone(bool all, bool trad, bool poly, bool nonmono) {
  return (!all || trad) && (!trad || poly) && (!all || nonmono) && (!nonmono || poly);
}

}  // namespace namecalc::testing
