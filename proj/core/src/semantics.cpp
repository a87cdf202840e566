#include "namecalc/semantics.hpp"

#include <algorithm>
#include <random>

#include "namecalc/errors.hpp"

namespace namecalc {

namespace {

const std::vector<std::size_t> kEmpty;

bool overlaps(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) return true;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return false;
}

bool within(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

}  // namespace

Model::Model(std::vector<std::string> universe) {
  for (auto& id : universe) add_element(std::move(id));
}

std::size_t Model::add_element(std::string id) {
  if (index_of(id)) throw PreconditionError("duplicate universe element '" + id + "'");
  universe_.push_back(std::move(id));
  return universe_.size() - 1;
}

void Model::set_denotation(const Letter& l, std::vector<std::size_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!elements.empty() && elements.back() >= universe_.size())
    throw PreconditionError("denotation of " + l.id() + " leaves the universe");
  denotation_[l] = std::move(elements);
}

const std::vector<std::size_t>& Model::denotation(const Letter& l) const {
  auto it = denotation_.find(l);
  return it == denotation_.end() ? kEmpty : it->second;
}

std::optional<std::size_t> Model::index_of(const std::string& element) const {
  auto it = std::find(universe_.begin(), universe_.end(), element);
  if (it == universe_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - universe_.begin());
}

bool eval(const Model& m, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      const auto& s = m.denotation(f.subject());
      const auto& p = m.denotation(f.predicate());
      AtomFacts<bool> x{!s.empty(), !p.empty(), overlaps(s, p), within(s, p), within(p, s), s.size() == 1};
      return atom_truth(f.functor(), x);
    }
    case Formula::Kind::Neg:
      return !eval(m, f.operand());
    case Formula::Kind::Bin:
      switch (f.connective()) {
        case Connective::And: return eval(m, f.lhs()) && eval(m, f.rhs());
        case Connective::Or: return eval(m, f.lhs()) || eval(m, f.rhs());
        case Connective::Imp: return !eval(m, f.lhs()) || eval(m, f.rhs());
        case Connective::Iff: return eval(m, f.lhs()) == eval(m, f.rhs());
      }
  }
  return false;
}

bool in_class(const Model& m, ModelClass c, const std::set<Letter>& vocab) {
  auto all_letters = [&](auto pred) {
    return std::all_of(vocab.begin(), vocab.end(), [&](const Letter& l) { return pred(m.denotation(l).size()); });
  };
  switch (c) {
    case ModelClass::All: return true;
    case ModelClass::Traditional: return m.size() >= 1 && all_letters([](std::size_t n) { return n >= 1; });
    case ModelClass::Polyreferential: return m.size() >= 2 && all_letters([](std::size_t n) { return n >= 2; });
    case ModelClass::NonMonoreferential:
      return m.size() >= 2 && all_letters([](std::size_t n) { return n == 0 || n >= 2; });
  }
  return false;
}

Model random_model(std::uint64_t seed, const std::set<Letter>& vocab, ModelClass c, std::size_t max_universe) {
  std::size_t min_universe = 0;
  std::size_t min_denotation = 0;
  switch (c) {
    case ModelClass::All: break;
    case ModelClass::Traditional: min_universe = min_denotation = 1; break;
    case ModelClass::Polyreferential:
    case ModelClass::NonMonoreferential: min_universe = min_denotation = 2; break;
  }
  if (max_universe < min_universe)
    throw PreconditionError("class " + std::string(class_tag(c)) + " needs a universe of at least " +
                            std::to_string(min_universe) + " elements");
  std::mt19937_64 rng(seed);
  auto below = [&](std::uint64_t n) { return rng() % n; };
  std::size_t n = min_universe + below(max_universe - min_universe + 1);
  Model m;
  for (std::size_t k = 0; k < n; ++k) m.add_element("u" + std::to_string(k));
  for (const auto& l : vocab) {
    std::vector<std::size_t> elems;
    // Per-letter density keeps empty and full denotations reasonably frequent.
    std::uint64_t density = below(5);
    for (;;) {
      elems.clear();
      for (std::size_t k = 0; k < n; ++k)
        if (below(4) < density) elems.push_back(k);
      bool ok = elems.size() >= min_denotation;
      if (c == ModelClass::NonMonoreferential) ok = elems.empty() || elems.size() >= 2;
      if (ok) break;
      density = 1 + below(4);
    }
    m.set_denotation(l, std::move(elems));
  }
  return m;
}

Model pad(const Model& m, std::size_t extra) {
  Model out = m;
  std::size_t k = 0;
  for (std::size_t added = 0; added < extra; ++k) {
    std::string id = "pad" + std::to_string(k);
    if (out.index_of(id)) continue;
    out.add_element(id);
    ++added;
  }
  return out;
}

}  // namespace namecalc
