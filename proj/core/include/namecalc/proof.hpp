#pragma once

#include <vector>

#include "namecalc/formula.hpp"
#include "namecalc/script.hpp"
#include "namecalc/systems.hpp"

namespace namecalc {

/// Truth-table guard on the number of distinct atoms.
inline constexpr std::size_t kCplAtomLimit = 20;

/// Atoms are treated as independent propositional letters. Throws GuardError("cpl-atoms").
bool is_cpl_tautology(const Formula& f);

/// Every Boolean assignment satisfying all premises satisfies the goal.
bool cpl_consequence(const std::vector<Formula>& premises, const Formula& goal);

CheckReport check_proof(const SystemSpec& sys, const ProofScript& script);

enum class Basis : std::uint8_t {
  /// a, i and eps atoms remain.
  AI,
  /// ka, i and eps atoms remain; a is read through ka.
  KAI,
  /// a, i, e, o and eps atoms remain.
  AIE_FULL
};

Formula expand_definitions(const Formula& f, Basis basis);

}  // namespace namecalc
