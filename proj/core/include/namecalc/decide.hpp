#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "namecalc/formula.hpp"
#include "namecalc/semantics.hpp"

namespace namecalc {

enum class Label : std::uint8_t { Zero, One, Many };

/// Region r (0 ≤ r < 2^k) is the Venn cell lying inside D(vocab[i]) exactly for the bits i set in r.
struct RegionLabeling {
  std::vector<Letter> vocab;
  std::vector<Label> labels;
};

/// Zero ↦ 0 elements, One ↦ 1, Many ↦ `many_size` (≥ 2); returns none when a letter
/// cannot meet the class constraint. The universe is padded to the class minimum.
std::optional<Model> realize(const RegionLabeling& l, ModelClass c, std::size_t many_size = 2);

struct Verdict {
  bool valid = true;
  std::optional<Model> countermodel;

  static Verdict valid_verdict() { return {}; }
  static Verdict refuted(Model m) { return {false, std::move(m)}; }
};

struct DecideOptions {
  /// Letter cap when singleton-sensitive functors (eps, neps, ideq) occur.
  std::size_t letter_cap = 4;
  /// Letter cap for formulas evaluated with the two-label abstraction.
  std::size_t two_label_cap = 5;
};

/// True when the formula mentions eps, neps or ideq.
bool needs_singletons(const Formula& f);

/// Exact validity over the class; the countermodel is the first in lexicographic labeling order.
/// Throws GuardError("letter-cap") above the configured cap.
Verdict decide(const Formula& f, ModelClass c, const DecideOptions& options = {});

/// Brute force over every denotation assignment into a fixed universe of `max_universe` elements.
/// Throws GuardError("oracle-size") unless |letters| ≤ 3 and |letters|·max_universe ≤ 18.
Verdict oracle_decide(const Formula& f, ModelClass c, std::size_t max_universe);

/// Oracle state for a fixed vocabulary, reusable across many formulas over that vocabulary.
class Oracle {
 public:
  Oracle(std::vector<Letter> vocab, ModelClass c, std::size_t max_universe);

  /// `f` must only use letters of the vocabulary.
  Verdict decide(const Formula& f) const;

  std::size_t assignments() const { return assignments_; }
  std::size_t distinct_diagrams() const { return rows_.size(); }

 private:
  struct Row {
    std::vector<bool> truth;
    std::size_t first_assignment;
  };

  Model model_for(std::size_t assignment) const;
  std::size_t atom_index(const Formula& atom) const;
  bool eval_row(const Formula& f, const Row& row) const;

  std::vector<Letter> vocab_;
  ModelClass class_;
  std::size_t size_;
  std::size_t assignments_ = 0;
  std::vector<Row> rows_;
};

}  // namespace namecalc
