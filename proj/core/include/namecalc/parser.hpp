#pragma once

#include <string>
#include <string_view>

#include "namecalc/errors.hpp"
#include "namecalc/formula.hpp"
#include "namecalc/script.hpp"
#include "namecalc/semantics.hpp"

namespace namecalc {

Formula parse_formula(std::string_view text);
std::string format_formula(const Formula& f);

/// `φ1, …, φn ==> ω` or `==> ω`.
Sequent parse_sequent(std::string_view text);
std::string format_sequent(const Sequent& s);

/// `[L:=L', …]`; the empty list `[]` is the identity.
Substitution parse_substitution(std::string_view text);
std::string format_substitution(const Substitution& s);

/// {"universe":[...],"denotation":{"L":[...],...}}
Model parse_model(std::string_view text);
std::string format_model(const Model& m);

/// Lines `N: FORMULA ; JUST`. Blank lines and `#` comments are skipped.
ProofScript parse_proof_script(std::string_view text);
std::string format_proof_script(const ProofScript& script);

/// Lines `N: SEQUENT ; JUST` with JUST one of `luk NAME [σ]`, `cpl`, `cut I J`, `ded I`,
/// `rule NAME I [J]`, `given`.
SequentScript parse_sequent_script(std::string_view text);
std::string format_sequent_script(const SequentScript& script);

/// Lines `N: π1, …, πn |- ω ; JUST` with JUST one of `trivial`, `cut R<k> I [J]`, `reductio I J`.
DeductionScript parse_deduction_script(std::string_view text);
std::string format_deduction_script(const DeductionScript& script);

}  // namespace namecalc
