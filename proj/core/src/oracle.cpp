#include <algorithm>
#include <unordered_map>

#include "namecalc/decide.hpp"
#include "namecalc/errors.hpp"

namespace namecalc {

namespace {

constexpr std::size_t kMaxLetters = 3;
constexpr std::size_t kMaxBits = 18;

struct TruthHash {
  std::size_t operator()(const std::vector<bool>& v) const { return std::hash<std::vector<bool>>{}(v); }
};

}  // namespace

Oracle::Oracle(std::vector<Letter> vocab, ModelClass c, std::size_t max_universe)
    : vocab_(std::move(vocab)), class_(c), size_(max_universe) {
  std::sort(vocab_.begin(), vocab_.end());
  vocab_.erase(std::unique(vocab_.begin(), vocab_.end()), vocab_.end());
  const std::size_t k = vocab_.size();
  if (k > kMaxLetters || k * size_ > kMaxBits)
    throw GuardError("oracle-size", std::to_string(k) + " letters over a universe of " + std::to_string(size_) +
                                        " (limit: 3 letters and letters x universe <= 18)");
  std::vector<Formula> all_atoms;
  for (Functor f : kAllFunctors)
    for (std::size_t s = 0; s < k; ++s)
      for (std::size_t p = 0; p < k; ++p) all_atoms.push_back(atom(f, vocab_[s], f == Functor::EX ? vocab_[s] : vocab_[p]));

  const std::set<Letter> vocab_set(vocab_.begin(), vocab_.end());
  std::unordered_map<std::vector<bool>, std::size_t, TruthHash> seen;
  assignments_ = std::size_t{1} << (k * size_);
  for (std::size_t a = 0; a < assignments_; ++a) {
    Model m = model_for(a);
    if (!in_class(m, class_, vocab_set)) continue;
    std::vector<bool> truth;
    truth.reserve(all_atoms.size());
    for (const auto& at : all_atoms) truth.push_back(eval(m, at));
    if (seen.emplace(truth, rows_.size()).second) rows_.push_back({std::move(truth), a});
  }
}

Model Oracle::model_for(std::size_t assignment) const {
  Model m;
  for (std::size_t e = 0; e < size_; ++e) m.add_element("e" + std::to_string(e));
  // vocab_[0] occupies the most significant block of bits.
  const std::size_t k = vocab_.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t block = assignment >> ((k - 1 - i) * size_);
    std::vector<std::size_t> elems;
    for (std::size_t e = 0; e < size_; ++e)
      if (block >> e & 1U) elems.push_back(e);
    m.set_denotation(vocab_[i], std::move(elems));
  }
  return m;
}

std::size_t Oracle::atom_index(const Formula& a) const {
  auto pos = [&](const Letter& l) {
    auto it = std::lower_bound(vocab_.begin(), vocab_.end(), l);
    if (it == vocab_.end() || *it != l) throw PreconditionError("letter " + l.id() + " is outside the oracle vocabulary");
    return static_cast<std::size_t>(it - vocab_.begin());
  };
  const std::size_t k = vocab_.size();
  return static_cast<std::size_t>(a.functor()) * k * k + pos(a.subject()) * k + pos(a.predicate());
}

bool Oracle::eval_row(const Formula& f, const Row& row) const {
  switch (f.kind()) {
    case Formula::Kind::Atom: return row.truth[atom_index(f)];
    case Formula::Kind::Neg: return !eval_row(f.operand(), row);
    case Formula::Kind::Bin:
      switch (f.connective()) {
        case Connective::And: return eval_row(f.lhs(), row) && eval_row(f.rhs(), row);
        case Connective::Or: return eval_row(f.lhs(), row) || eval_row(f.rhs(), row);
        case Connective::Imp: return !eval_row(f.lhs(), row) || eval_row(f.rhs(), row);
        case Connective::Iff: return eval_row(f.lhs(), row) == eval_row(f.rhs(), row);
      }
  }
  return false;
}

Verdict Oracle::decide(const Formula& f) const {
  for (const auto& row : rows_)
    if (!eval_row(f, row)) return Verdict::refuted(model_for(row.first_assignment));
  return Verdict::valid_verdict();
}

Verdict oracle_decide(const Formula& f, ModelClass c, std::size_t max_universe) {
  auto ls = letters(f);
  return Oracle(std::vector<Letter>(ls.begin(), ls.end()), c, max_universe).decide(f);
}

}  // namespace namecalc
