#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "namecalc/formula.hpp"

namespace namecalc {

enum class ModelClass : std::uint8_t { All, Traditional, Polyreferential, NonMonoreferential };

inline constexpr std::array<ModelClass, 4> kAllClasses = {ModelClass::All, ModelClass::Traditional,
                                                          ModelClass::Polyreferential,
                                                          ModelClass::NonMonoreferential};

/// "all", "trad", "poly", "nonmono".
std::string_view class_tag(ModelClass c);
std::optional<ModelClass> class_from_tag(std::string_view tag);

/// Schema patterns are written over the reserved letters S, P, M, Q.
struct AxiomSchema {
  std::string name;
  Formula pattern;
};

bool is_schema_letter(const Letter& l);

/// Every named schema and definition known to the registry.
const std::vector<AxiomSchema>& all_schemas();
const AxiomSchema* find_schema(std::string_view name);
const AxiomSchema& schema(std::string_view name);

enum class SystemId : std::uint8_t {
  LUK,
  SH,
  SLU,
  SLU_A,
  SLU_B,
  SLU_C,
  SLU_D,
  ONTO,
  SHIS_I,
  SHIS_II,
  SHIS_III,
  SHIS_IV,
  KAIS_A,
  KAIS_B,
  KAIS_C,
  KAIS_D
};

struct SystemSpec {
  SystemId id;
  /// Command-line tag: "luk", "sh", "shis1", "slu-a", "kais-d", ...
  std::string tag;
  std::vector<AxiomSchema> schemas;
  /// Definitions counted among the system's axioms.
  std::vector<AxiomSchema> definitions;
  /// Further df-equivalences admitted as definitional extensions (usable with `def`).
  std::vector<AxiomSchema> extensions;
  /// Classes for which the system is sound and complete; the first is the primary one.
  std::vector<ModelClass> model_classes;
  /// Whether the primitive atoms are read through the ka-i basis (Słupecki-style systems).
  bool strong_basis = false;
  bool substitution_rule_enabled = true;

  ModelClass model_class() const { return model_classes.front(); }
  SystemSpec with_substitution(bool enabled) const;
};

const std::vector<SystemSpec>& all_systems();
const SystemSpec& system_spec(SystemId id);
std::optional<SystemId> system_from_tag(std::string_view tag);

/// Schemas followed by definitions, exactly as tabulated for the system.
std::vector<AxiomSchema> axioms_of(const SystemSpec& sys);

}  // namespace namecalc
