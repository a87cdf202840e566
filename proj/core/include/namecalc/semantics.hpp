#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "namecalc/formula.hpp"
#include "namecalc/systems.hpp"

namespace namecalc {

/// Finite universe with a denotation for finitely many letters; other letters denote ∅.
class Model {
 public:
  Model() = default;
  explicit Model(std::vector<std::string> universe);

  std::size_t add_element(std::string id);
  /// Element indices; duplicates are merged.
  void set_denotation(const Letter& l, std::vector<std::size_t> elements);

  const std::vector<std::string>& universe() const { return universe_; }
  std::size_t size() const { return universe_.size(); }
  /// Sorted element indices.
  const std::vector<std::size_t>& denotation(const Letter& l) const;
  const std::map<Letter, std::vector<std::size_t>>& denotations() const { return denotation_; }
  std::optional<std::size_t> index_of(const std::string& element) const;

  friend bool operator==(const Model&, const Model&) = default;

 private:
  std::vector<std::string> universe_;
  std::map<Letter, std::vector<std::size_t>> denotation_;
};

/// The cardinality facts about D(S), D(P) that every atom's truth depends on.
template <class T>
struct AtomFacts {
  T s_nonempty;
  T p_nonempty;
  T overlap;      // D(S) ∩ D(P) ≠ ∅
  T s_within_p;   // D(S) ⊆ D(P)
  T p_within_s;   // D(P) ⊆ D(S)
  T s_singleton;  // |D(S)| = 1
};

/// Atom truth from facts; T is bool or any type with the same operators (e.g. Kleene values).
template <class T>
T atom_truth(Functor f, const AtomFacts<T>& x) {
  switch (f) {
    case Functor::A: return x.s_within_p;
    case Functor::I: return x.overlap;
    case Functor::E: return !x.overlap;
    case Functor::O: return !x.s_within_p;
    case Functor::EX: return x.s_nonempty;
    case Functor::KA: return x.s_nonempty && x.s_within_p;
    case Functor::CEQ: return x.s_within_p && x.p_within_s;
    case Functor::DEQ: return x.s_nonempty && x.s_within_p && x.p_within_s;
    case Functor::KE: return x.s_nonempty && !x.overlap;
    case Functor::KKE: return x.s_nonempty && x.p_nonempty && !x.overlap;
    case Functor::OT: return !(x.s_nonempty && x.s_within_p);
    case Functor::EPS: return x.s_singleton && x.s_within_p;
    case Functor::NEPS: return x.s_singleton && !x.overlap;
    case Functor::IDEQ: return x.s_singleton && x.s_within_p && x.p_within_s;
  }
  return x.s_within_p;
}

bool eval(const Model& m, const Formula& f);

bool in_class(const Model& m, ModelClass c, const std::set<Letter>& vocab);

/// Deterministic in `seed`; the result satisfies in_class. Throws PreconditionError when
/// the class cannot be met within `max_universe` elements.
Model random_model(std::uint64_t seed, const std::set<Letter>& vocab, ModelClass c, std::size_t max_universe);

/// Copy of `m` with `extra` fresh elements outside every denotation.
Model pad(const Model& m, std::size_t extra);

}  // namespace namecalc
