#include "namecalc/decide.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "namecalc/errors.hpp"

namespace namecalc {

namespace {

/// Three-valued (strong Kleene) truth: F < U < T.
struct Kleene {
  std::uint8_t v;
  static constexpr std::uint8_t F = 0, U = 1, T = 2;

  friend Kleene operator!(Kleene x) { return {static_cast<std::uint8_t>(2 - x.v)}; }
  friend Kleene operator&&(Kleene x, Kleene y) { return {std::min(x.v, y.v)}; }
  friend Kleene operator||(Kleene x, Kleene y) { return {std::max(x.v, y.v)}; }
  bool is(std::uint8_t w) const { return v == w; }
};

Kleene iff_k(Kleene x, Kleene y) {
  if (x.is(Kleene::U) || y.is(Kleene::U)) return {Kleene::U};
  return {x.v == y.v ? Kleene::T : Kleene::F};
}

std::size_t min_universe(ModelClass c) {
  switch (c) {
    case ModelClass::All: return 0;
    case ModelClass::Traditional: return 1;
    case ModelClass::Polyreferential:
    case ModelClass::NonMonoreferential: return 2;
  }
  return 0;
}

bool letter_ok(ModelClass c, std::size_t n) {
  switch (c) {
    case ModelClass::All: return true;
    case ModelClass::Traditional: return n >= 1;
    case ModelClass::Polyreferential: return n >= 2;
    case ModelClass::NonMonoreferential: return n == 0 || n >= 2;
  }
  return false;
}

/// Flattened formula with atoms resolved to vocabulary positions.
struct Compiled {
  enum class Op : std::uint8_t { Atom, Not, And, Or, Imp, Iff };
  struct Node {
    Op op;
    Functor functor = Functor::A;
    std::uint32_t s = 0, p = 0;  // letter positions (atoms)
    std::uint32_t a = 0, b = 0;  // child nodes
  };
  std::vector<Node> nodes;
  std::uint32_t root = 0;

  Compiled(const Formula& f, const std::vector<Letter>& vocab) { root = add(f, vocab); }

  std::uint32_t add(const Formula& f, const std::vector<Letter>& vocab) {
    Node n{};
    switch (f.kind()) {
      case Formula::Kind::Atom: {
        n.op = Op::Atom;
        n.functor = f.functor();
        auto pos = [&](const Letter& l) {
          return static_cast<std::uint32_t>(std::lower_bound(vocab.begin(), vocab.end(), l) - vocab.begin());
        };
        n.s = pos(f.subject());
        n.p = pos(f.predicate());
        break;
      }
      case Formula::Kind::Neg:
        n.op = Op::Not;
        n.a = add(f.operand(), vocab);
        break;
      case Formula::Kind::Bin:
        switch (f.connective()) {
          case Connective::And: n.op = Op::And; break;
          case Connective::Or: n.op = Op::Or; break;
          case Connective::Imp: n.op = Op::Imp; break;
          case Connective::Iff: n.op = Op::Iff; break;
        }
        n.a = add(f.lhs(), vocab);
        n.b = add(f.rhs(), vocab);
        break;
    }
    nodes.push_back(n);
    return static_cast<std::uint32_t>(nodes.size() - 1);
  }
};

class Search {
 public:
  Search(const Formula& f, ModelClass c, std::vector<Letter> vocab, bool three_label)
      : compiled_(f, vocab), class_(c), vocab_(std::move(vocab)), three_label_(three_label) {
    k_ = vocab_.size();
    regions_ = std::size_t{1} << k_;
    for (std::size_t i = 0; i < k_; ++i) {
      std::uint32_t m = 0;
      for (std::size_t r = 0; r < regions_; ++r)
        if (r >> i & 1U) m |= 1U << r;
      letter_mask_.push_back(m);
    }
    labels_.assign(regions_, Label::Zero);
  }

  std::optional<RegionLabeling> run() {
    assigned_ = 1U;  // region 0 lies outside every denotation and stays Zero
    if (dfs(1)) return RegionLabeling{vocab_, labels_};
    return std::nullopt;
  }

 private:
  Kleene nonempty(std::uint32_t mask) const {
    if (nonzero_ & mask) return {Kleene::T};
    if ((mask & ~assigned_) == 0) return {Kleene::F};
    return {Kleene::U};
  }

  unsigned count(std::uint32_t mask) const {
    return static_cast<unsigned>(std::popcount(one_ & mask) + 2 * std::popcount(many_ & mask));
  }

  Kleene singleton(std::uint32_t mask) const {
    unsigned n = count(mask);
    if (n >= 2) return {Kleene::F};
    if ((mask & ~assigned_) == 0) return {n == 1 ? Kleene::T : Kleene::F};
    return {Kleene::U};
  }

  Kleene class_ok() const {
    Kleene acc{Kleene::T};
    for (auto m : letter_mask_) {
      unsigned n = count(m);
      bool open = (m & ~assigned_) != 0;
      Kleene here{Kleene::T};
      switch (class_) {
        case ModelClass::All: break;
        case ModelClass::Traditional: here = nonempty(m); break;
        case ModelClass::Polyreferential: here = {n >= 2 ? Kleene::T : open ? Kleene::U : Kleene::F}; break;
        case ModelClass::NonMonoreferential:
          if (n >= 2)
            here = {Kleene::T};
          else
            here = {open ? Kleene::U : (n == 0 ? Kleene::T : Kleene::F)};
          break;
      }
      acc = acc && here;
      if (acc.is(Kleene::F)) break;
    }
    return acc;
  }

  Kleene eval(std::uint32_t idx) const {
    const auto& n = compiled_.nodes[idx];
    switch (n.op) {
      case Compiled::Op::Atom: {
        std::uint32_t s = letter_mask_[n.s], p = letter_mask_[n.p];
        AtomFacts<Kleene> x{nonempty(s), nonempty(p),           nonempty(s & p),
                            !nonempty(s & ~p), !nonempty(p & ~s), singleton(s)};
        return atom_truth(n.functor, x);
      }
      case Compiled::Op::Not: return !eval(n.a);
      case Compiled::Op::And: return eval(n.a) && eval(n.b);
      case Compiled::Op::Or: return eval(n.a) || eval(n.b);
      case Compiled::Op::Imp: return !eval(n.a) || eval(n.b);
      case Compiled::Op::Iff: return iff_k(eval(n.a), eval(n.b));
    }
    return {Kleene::U};
  }

  /// Assigns regions r.. in order; true when a countermodel labeling has been fixed in labels_.
  bool dfs(std::size_t r) {
    Kleene value = eval(compiled_.root);
    if (value.is(Kleene::T)) return false;
    Kleene member = class_ok();
    if (member.is(Kleene::F)) return false;
    if (value.is(Kleene::F) && member.is(Kleene::T)) {
      // Every completion refutes; the all-Zero completion is the lexicographically first.
      for (std::size_t q = r; q < regions_; ++q) labels_[q] = Label::Zero;
      return true;
    }
    if (r == regions_) return false;
    const std::uint32_t bit = 1U << r;
    assigned_ |= bit;
    for (Label l : {Label::Zero, Label::One, Label::Many}) {
      if (l == Label::One && !three_label_) continue;
      labels_[r] = l;
      nonzero_ &= ~bit;
      one_ &= ~bit;
      many_ &= ~bit;
      if (l != Label::Zero) nonzero_ |= bit;
      if (l == Label::One) one_ |= bit;
      if (l == Label::Many) many_ |= bit;
      if (dfs(r + 1)) return true;
    }
    assigned_ &= ~bit;
    nonzero_ &= ~bit;
    one_ &= ~bit;
    many_ &= ~bit;
    labels_[r] = Label::Zero;
    return false;
  }

  Compiled compiled_;
  ModelClass class_;
  std::vector<Letter> vocab_;
  bool three_label_;
  std::size_t k_ = 0;
  std::size_t regions_ = 0;
  std::vector<std::uint32_t> letter_mask_;
  std::vector<Label> labels_;
  std::uint32_t assigned_ = 0, nonzero_ = 0, one_ = 0, many_ = 0;
};

}  // namespace

bool needs_singletons(const Formula& f) {
  for (const auto& a : atoms(f))
    if (a.functor() == Functor::EPS || a.functor() == Functor::NEPS || a.functor() == Functor::IDEQ) return true;
  return false;
}

std::optional<Model> realize(const RegionLabeling& l, ModelClass c, std::size_t many_size) {
  if (many_size < 2) throw PreconditionError("Many regions need at least two elements");
  const std::size_t k = l.vocab.size();
  if (l.labels.size() != (std::size_t{1} << k)) throw PreconditionError("labeling must cover all 2^k regions");
  Model m;
  std::vector<std::vector<std::size_t>> den(k);
  for (std::size_t r = 0; r < l.labels.size(); ++r) {
    std::size_t n = l.labels[r] == Label::Zero ? 0 : l.labels[r] == Label::One ? 1 : many_size;
    for (std::size_t e = 0; e < n; ++e) {
      std::size_t id = m.add_element("u" + std::to_string(m.size()));
      for (std::size_t i = 0; i < k; ++i)
        if (r >> i & 1U) den[i].push_back(id);
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    if (!letter_ok(c, den[i].size())) return std::nullopt;
  while (m.size() < min_universe(c)) m.add_element("u" + std::to_string(m.size()));
  for (std::size_t i = 0; i < k; ++i) m.set_denotation(l.vocab[i], den[i]);
  return m;
}

Verdict decide(const Formula& f, ModelClass c, const DecideOptions& options) {
  auto letter_set = letters(f);
  std::vector<Letter> vocab(letter_set.begin(), letter_set.end());
  const bool three_label = needs_singletons(f);
  const std::size_t cap = three_label ? options.letter_cap : options.two_label_cap;
  if (vocab.size() > cap || vocab.size() > 5)
    throw GuardError("letter-cap", std::to_string(vocab.size()) + " letters exceed the cap of " +
                                       std::to_string(std::min<std::size_t>(cap, 5)));
  Search search(f, c, vocab, three_label);
  auto labeling = search.run();
  if (!labeling) return Verdict::valid_verdict();
  auto model = realize(*labeling, c);
  if (!model || !in_class(*model, c, letter_set) || eval(*model, f))
    throw std::logic_error("decision procedure produced a labeling that does not refute the formula");
  return Verdict::refuted(std::move(*model));
}

}  // namespace namecalc
