#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace namecalc {

/// A name letter. Identifiers match [A-Z][A-Za-z0-9_]* and compare by exact string.
class Letter {
 public:
  Letter() = default;
  explicit Letter(std::string id);
  Letter(const char* id) : Letter(std::string(id)) {}

  const std::string& id() const { return id_; }

  static bool valid_id(std::string_view id);

  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend bool operator==(const Letter&, const Letter&) = default;

 private:
  std::string id_;
};

enum class Functor : std::uint8_t { A, I, E, O, KA, KE, KKE, CEQ, DEQ, OT, EPS, NEPS, IDEQ, EX };

inline constexpr std::array<Functor, 14> kAllFunctors = {
    Functor::A,  Functor::I,   Functor::E,   Functor::O,   Functor::KA,   Functor::KE,   Functor::KKE,
    Functor::CEQ, Functor::DEQ, Functor::OT, Functor::EPS, Functor::NEPS, Functor::IDEQ, Functor::EX};

int arity(Functor f);
/// ASCII tag used by the concrete syntax ("a", "ka", "eps", ...).
std::string_view functor_tag(Functor f);
std::optional<Functor> functor_from_tag(std::string_view tag);
/// Typeset symbol (LaTeX macro form) conventionally used for the functor.
std::string_view functor_symbol(Functor f);

enum class Connective : std::uint8_t { And, Or, Imp, Iff };

std::string_view connective_token(Connective c);

/// Immutable formula tree. Copies share structure.
class Formula {
 public:
  enum class Kind : std::uint8_t { Atom, Neg, Bin };

  static Formula atom(Functor f, Letter subject, Letter predicate);
  static Formula ex(Letter subject);
  static Formula neg(Formula operand);
  static Formula bin(Connective c, Formula lhs, Formula rhs);

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_neg() const { return kind() == Kind::Neg; }
  bool is_bin() const { return kind() == Kind::Bin; }
  bool is_bin(Connective c) const { return is_bin() && connective() == c; }

  // Atom accessors.
  Functor functor() const;
  const Letter& subject() const;
  /// Second argument; for `ex` atoms this is the subject.
  const Letter& predicate() const;

  // Neg accessor.
  const Formula& operand() const;

  // Bin accessors.
  Connective connective() const;
  const Formula& lhs() const;
  const Formula& rhs() const;

  std::size_t hash() const;

  friend bool operator==(const Formula& x, const Formula& y);
  friend std::strong_ordering operator<=>(const Formula& x, const Formula& y);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Construction shorthands.
inline Formula atom(Functor f, Letter s, Letter p) { return Formula::atom(f, std::move(s), std::move(p)); }
inline Formula neg(Formula x) { return Formula::neg(std::move(x)); }
inline Formula conj(Formula x, Formula y) { return Formula::bin(Connective::And, std::move(x), std::move(y)); }
inline Formula disj(Formula x, Formula y) { return Formula::bin(Connective::Or, std::move(x), std::move(y)); }
inline Formula imp(Formula x, Formula y) { return Formula::bin(Connective::Imp, std::move(x), std::move(y)); }
inline Formula iff(Formula x, Formula y) { return Formula::bin(Connective::Iff, std::move(x), std::move(y)); }
/// Left-nested conjunction of a nonempty list.
Formula conj_all(const std::vector<Formula>& xs);

std::set<Letter> letters(const Formula& f);
/// Distinct atomic subformulas in order of first (left-to-right) occurrence.
std::vector<Formula> atoms(const Formula& f);
std::size_t depth(const Formula& f);
/// True when every atom uses one of `allowed`.
bool uses_only(const Formula& f, std::initializer_list<Functor> allowed);

/// Letter-for-letter substitution with finite support. Identity pairs are not stored,
/// so two substitutions compare equal iff they act identically.
class Substitution {
 public:
  Substitution() = default;
  Substitution(std::initializer_list<std::pair<Letter, Letter>> pairs);

  void set(const Letter& from, const Letter& to);
  Letter operator()(const Letter& l) const;

  const std::map<Letter, Letter>& mapping() const { return map_; }
  bool empty() const { return map_.empty(); }
  Substitution restricted_to(const std::set<Letter>& domain) const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<Letter, Letter> map_;
};

/// (outer ∘ inner)(L) = outer(inner(L)).
Substitution compose(const Substitution& outer, const Substitution& inner);

Formula substitute(const Formula& f, const Substitution& s);

/// Finds the (unique) σ with substitute(pattern, σ) == candidate, restricted to letters(pattern).
std::optional<Substitution> match_schema(const Formula& pattern, const Formula& candidate);

}  // namespace namecalc

template <>
struct std::hash<namecalc::Formula> {
  std::size_t operator()(const namecalc::Formula& f) const noexcept { return f.hash(); }
};

template <>
struct std::hash<namecalc::Letter> {
  std::size_t operator()(const namecalc::Letter& l) const noexcept { return std::hash<std::string>{}(l.id()); }
};
