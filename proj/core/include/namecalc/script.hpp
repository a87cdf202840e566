#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "namecalc/formula.hpp"

namespace namecalc {

// Hilbert-style scripts.

struct AxiomInstance {
  std::string schema;
  Substitution sigma;
  friend bool operator==(const AxiomInstance&, const AxiomInstance&) = default;
};
struct CplTautology {
  friend bool operator==(const CplTautology&, const CplTautology&) = default;
};
/// Line `major` carries formula_minor -> formula_this.
struct Detach {
  std::size_t minor;
  std::size_t major;
  friend bool operator==(const Detach&, const Detach&) = default;
};
struct SubstituteLine {
  std::size_t source;
  Substitution sigma;
  friend bool operator==(const SubstituteLine&, const SubstituteLine&) = default;
};
struct DefInstance {
  std::string definition;
  Substitution sigma;
  friend bool operator==(const DefInstance&, const DefInstance&) = default;
};

using Justification = std::variant<AxiomInstance, CplTautology, Detach, SubstituteLine, DefInstance>;

struct ProofLine {
  std::size_t index;
  Formula formula;
  Justification why;
  friend bool operator==(const ProofLine&, const ProofLine&) = default;
};

struct ProofScript {
  std::vector<ProofLine> lines;
  const Formula& conclusion() const { return lines.back().formula; }
  friend bool operator==(const ProofScript&, const ProofScript&) = default;
};

struct CheckReport {
  bool accepted = true;
  struct Failure {
    std::size_t line;
    std::string reason;
  };
  std::optional<Failure> first_failure;
  /// Primitive expansions of derived-rule lines, as script text keyed by line index.
  std::vector<std::pair<std::size_t, std::string>> expansions;

  static CheckReport ok() { return {}; }
  static CheckReport fail(std::size_t line, std::string reason) {
    CheckReport r;
    r.accepted = false;
    r.first_failure = Failure{line, std::move(reason)};
    return r;
  }
};

// Sequents.

/// Premises are kept sorted and duplicate-free.
class Sequent {
 public:
  Sequent(std::vector<Formula> premises, Formula conclusion);

  const std::vector<Formula>& premises() const { return premises_; }
  const Formula& conclusion() const { return conclusion_; }
  bool has_premise(const Formula& f) const;
  /// (π1 ∧ … ∧ πn) → ω, or ω itself when there are no premises.
  Formula as_implication() const;

  friend bool operator==(const Sequent&, const Sequent&) = default;

 private:
  std::vector<Formula> premises_;
  Formula conclusion_;
};

std::vector<Formula> formula_set(std::vector<Formula> xs);
std::vector<Formula> set_union(const std::vector<Formula>& x, const std::vector<Formula>& y);
std::vector<Formula> set_minus(const std::vector<Formula>& x, const std::vector<Formula>& y);
bool is_subset(const std::vector<Formula>& x, const std::vector<Formula>& y);

struct LukAxiomSequent {
  std::string name;
  Substitution sigma;
  friend bool operator==(const LukAxiomSequent&, const LukAxiomSequent&) = default;
};
struct CplConsequenceAxiom {
  friend bool operator==(const CplConsequenceAxiom&, const CplConsequenceAxiom&) = default;
};
/// Line `left` is A ⟹ α, line `right` is B, α ⟹ ω.
struct Cut {
  std::size_t left;
  std::size_t right;
  friend bool operator==(const Cut&, const Cut&) = default;
};
struct Deduction {
  std::size_t source;
  friend bool operator==(const Deduction&, const Deduction&) = default;
};
struct DerivedRule {
  std::string name;
  std::vector<std::size_t> cited;
  friend bool operator==(const DerivedRule&, const DerivedRule&) = default;
};
/// Hypothesis line; only admitted inside derived-rule expansions.
struct Given {
  friend bool operator==(const Given&, const Given&) = default;
};

using SequentJustification = std::variant<LukAxiomSequent, CplConsequenceAxiom, Cut, Deduction, DerivedRule, Given>;

struct SequentLine {
  std::size_t index;
  Sequent sequent;
  SequentJustification why;
  friend bool operator==(const SequentLine&, const SequentLine&) = default;
};

struct SequentScript {
  std::vector<SequentLine> lines;
  friend bool operator==(const SequentScript&, const SequentScript&) = default;
};

// Smiley deductions.

struct Trivial {
  friend bool operator==(const Trivial&, const Trivial&) = default;
};
struct CutWithRule {
  int rule;
  std::size_t first;
  std::optional<std::size_t> second;
  friend bool operator==(const CutWithRule&, const CutWithRule&) = default;
};
/// Line `first` is Π1, ¬ω ⊢ α; line `second` is Π2 ⊢ ¬α (¬ = contradictory).
struct Reductio {
  std::size_t first;
  std::size_t second;
  friend bool operator==(const Reductio&, const Reductio&) = default;
};

using DeductionJustification = std::variant<Trivial, CutWithRule, Reductio>;

struct DeductionLine {
  std::size_t index;
  Sequent claim;
  DeductionJustification why;
  friend bool operator==(const DeductionLine&, const DeductionLine&) = default;
};

struct DeductionScript {
  std::vector<DeductionLine> lines;
  friend bool operator==(const DeductionScript&, const DeductionScript&) = default;
};

}  // namespace namecalc
