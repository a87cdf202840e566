#pragma once

#include <optional>
#include <string>
#include <vector>

#include "namecalc/formula.hpp"
#include "namecalc/script.hpp"

namespace namecalc {

/// Axiomatic sequents of the sequent reconstruction: Ia, Ii, Barbara, Datisi, df_e, df_o
/// (the two definitions in either direction). Each entry lists the sequents the name stands for.
std::vector<Sequent> luk_axiom_sequents(const std::string& name, const Substitution& sigma);

/// Names of the derived rules accepted by `rule NAME ...` lines.
const std::vector<std::string>& derived_rule_names();

/// Primitive-rule derivation of `result` from the cited sequents by the named derived rule,
/// or none (with `reason` set) when the shapes do not fit the rule.
std::optional<SequentScript> expand_derived_rule(const std::string& name, const std::vector<Sequent>& cited,
                                                 const Sequent& result, std::string& reason);

CheckReport check_sequent_proof(const SequentScript& script);

/// a ↔ o and i ↔ e on the same letters. Throws PreconditionError for other formulas.
Formula contradictory(const Formula& f);

CheckReport check_smiley_deduction(const DeductionScript& script);

}  // namespace namecalc
