#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "namecalc/formula.hpp"
#include "namecalc/semantics.hpp"
#include "namecalc/systems.hpp"

namespace namecalc {

/// Finite carrier with relations A, I and (for kind C) eps, given as index pairs.
struct RelationalStructure {
  using Relation = std::set<std::pair<std::size_t, std::size_t>>;

  std::vector<std::string> carrier;
  Relation A;
  Relation I;
  std::optional<Relation> eps;

  std::size_t size() const { return carrier.size(); }
  bool a(std::size_t x, std::size_t y) const { return A.count({x, y}) != 0; }
  bool i(std::size_t x, std::size_t y) const { return I.count({x, y}) != 0; }
  bool e(std::size_t x, std::size_t y) const { return eps && eps->count({x, y}) != 0; }

  friend bool operator==(const RelationalStructure&, const RelationalStructure&) = default;
};

/// {"carrier":[...],"A":[[x,y],...],"I":[...],"eps":[...]} with element names in the pairs.
RelationalStructure parse_structure(const std::string& json_text);
std::string format_structure(const RelationalStructure& s);

enum class StructureKind : std::uint8_t { B1, B3, C };

std::string_view structure_kind_tag(StructureKind k);
std::optional<StructureKind> structure_kind_from_tag(std::string_view tag);

struct Violation {
  std::string condition;
  std::vector<std::string> witness;
};

/// B1: B1..B5. B3: B1..B3 and Iaa. C: the B1 conditions and C0, C1, C2, C4.
std::vector<Violation> verify_structure(const RelationalStructure& s, StructureKind kind);

/// Sorted carrier indices.
using ElementSet = std::vector<std::size_t>;

inline constexpr std::size_t kCarrierLimit = 16;

bool is_i_set(const RelationalStructure& s, const ElementSet& f);
/// All I-sets in lexicographic order of their bit masks. Throws GuardError("carrier-size").
std::vector<ElementSet> i_sets(const RelationalStructure& s);
/// {c : Aac or Abc} when Iab holds.
std::optional<ElementSet> bracket(const RelationalStructure& s, std::size_t a, std::size_t b);

struct RepresentationReport {
  bool a_is_inclusion = true;
  bool i_is_overlap = true;
  std::optional<bool> eps_is_singleton_inclusion;
  std::optional<bool> images_nonempty;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Points are the I-sets (indices below isets.size()) followed, for kind C, by the carrier.
struct Representation {
  std::vector<ElementSet> isets;
  std::size_t carrier_points = 0;
  /// image[a] = sorted point indices of e(a).
  std::vector<std::vector<std::size_t>> image;
  RepresentationReport report;

  std::size_t point_count() const { return isets.size() + carrier_points; }
};

/// Throws PreconditionError when verify_structure reports a violation.
Representation represent(const RelationalStructure& s, StructureKind kind);

/// Carrier = vocab, A/I (and eps when `with_eps`) read off `m` by eval.
RelationalStructure harvest_structure(const Model& m, const std::vector<Letter>& vocab, bool with_eps);

/// Atomic diagram of a finite model over a vocabulary.
class DiagramTheory {
 public:
  DiagramTheory(Model m, std::vector<Letter> vocab);

  const std::vector<Letter>& vocab() const { return vocab_; }
  const Model& model() const { return model_; }
  bool holds(Functor f, const Letter& s, const Letter& p) const;

  /// Nonempty, closed under a, pairwise i.
  bool is_filter(const std::vector<Letter>& letters) const;
  /// Every filter over vocab, each sorted by vocab position. Throws GuardError("vocab-size").
  std::vector<std::vector<Letter>> filters() const;
  /// {M : S a M or P a M}.
  std::vector<Letter> bracket(const Letter& s, const Letter& p) const;
  /// S a P and P a S.
  bool equivalent(const Letter& s, const Letter& p) const;
  std::vector<Letter> block(const Letter& s) const;

 private:
  Model model_;
  std::vector<Letter> vocab_;
};

inline constexpr std::size_t kCanonicalVocabLimit = 12;

enum class CanonicalMethod : std::uint8_t { Filters, Pairs };

enum class CanonicalVariant : std::uint8_t {
  Standard,
  /// SH/LUK built with the SHIS universe and the second denotation clause: no singleton denotations.
  NonMonoreferential
};

std::optional<CanonicalMethod> canonical_method_from_tag(std::string_view tag);

/// `sys` is LUK, SH or SHIS_I. Throws PreconditionError for other systems, for a LUK input that
/// is not traditional on vocab, and for the non-monoreferential variant of SHIS.
Model canonical_model(const Model& m, const std::vector<Letter>& vocab, SystemId sys, CanonicalMethod method,
                      CanonicalVariant variant = CanonicalVariant::Standard);
/// Vocabulary taken from the letters `m` denotes.
Model canonical_model(const Model& m, SystemId sys, CanonicalMethod method,
                      CanonicalVariant variant = CanonicalVariant::Standard);

/// Functors whose atomic truth the construction for `sys` preserves.
std::vector<Functor> canonical_functors(SystemId sys);

}  // namespace namecalc
