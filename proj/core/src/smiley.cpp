#include <map>

#include "namecalc/errors.hpp"
#include "namecalc/parser.hpp"
#include "namecalc/sequent.hpp"

namespace namecalc {

namespace {

struct SmileyRule {
  std::vector<Formula> premises;
  Formula conclusion;
};

const SmileyRule& smiley_rule(int r) {
  static const std::vector<SmileyRule> rules = [] {
    auto f = [](const char* text) { return parse_formula(text); };
    return std::vector<SmileyRule>{
        {{f("a(S,M)"), f("a(M,P)")}, f("a(S,P)")},
        {{f("a(S,M)"), f("e(M,P)")}, f("e(S,P)")},
        {{f("e(P,S)")}, f("e(S,P)")},
        {{f("a(P,S)")}, f("i(S,P)")},
    };
  }();
  return rules.at(static_cast<std::size_t>(r - 1));
}

bool categorical(const Formula& f) {
  return f.is_atom() && (f.functor() == Functor::A || f.functor() == Functor::I || f.functor() == Functor::E ||
                         f.functor() == Functor::O);
}

}  // namespace

Formula contradictory(const Formula& f) {
  if (!categorical(f)) throw PreconditionError("contradictory needs an a, i, e or o atom");
  Functor g = Functor::A;
  switch (f.functor()) {
    case Functor::A: g = Functor::O; break;
    case Functor::O: g = Functor::A; break;
    case Functor::I: g = Functor::E; break;
    case Functor::E: g = Functor::I; break;
    default: break;
  }
  return atom(g, f.subject(), f.predicate());
}

CheckReport check_smiley_deduction(const DeductionScript& script) {
  if (script.lines.empty()) return CheckReport::fail(0, "empty script");
  std::map<std::size_t, Sequent> proved;
  for (const auto& line : script.lines) {
    const Sequent& here = line.claim;
    auto cited = [&](std::size_t k) -> const Sequent* {
      auto it = proved.find(k);
      return it == proved.end() ? nullptr : &it->second;
    };
    std::string failure;
    if (here.premises().empty()) failure = "deductions need at least one premise";
    for (const auto& f : here.premises())
      if (!categorical(f)) failure = "premise " + format_formula(f) + " is not a categorical atom";
    if (!categorical(here.conclusion())) failure = "conclusion is not a categorical atom";
    if (failure.empty())
      failure = std::visit(
          [&](const auto& j) -> std::string {
            using J = std::decay_t<decltype(j)>;
            if constexpr (std::is_same_v<J, Trivial>) {
              if (here.premises().size() != 1 || here.premises().front() != here.conclusion())
                return "a trivial deduction has the form α |- α";
              return {};
            } else if constexpr (std::is_same_v<J, CutWithRule>) {
              if (j.rule < 1 || j.rule > 4) return "unknown rule R" + std::to_string(j.rule);
              const SmileyRule& rule = smiley_rule(j.rule);
              if (rule.premises.size() != (j.second ? 2U : 1U))
                return "R" + std::to_string(j.rule) + " takes " + std::to_string(rule.premises.size()) + " premise(s)";
              const Sequent* first = cited(j.first);
              const Sequent* second = j.second ? cited(*j.second) : nullptr;
              if (!first || (j.second && !second)) return "cites a line that is not an earlier line";
              Formula pattern = rule.premises[0];
              Formula given = first->conclusion();
              std::vector<Formula> context = first->premises();
              if (second) {
                pattern = conj(pattern, rule.premises[1]);
                given = conj(given, second->conclusion());
                context = set_union(context, second->premises());
              }
              auto sigma = match_schema(pattern, given);
              if (!sigma) return "cited conclusions do not match the premises of R" + std::to_string(j.rule);
              if (here.conclusion() != substitute(rule.conclusion, *sigma))
                return "conclusion is not what R" + std::to_string(j.rule) + " yields";
              if (here.premises() != context) return "premises are not the union of the cited premises";
              return {};
            } else {
              const Sequent* first = cited(j.first);
              const Sequent* second = cited(j.second);
              if (!first || !second) return "cites a line that is not an earlier line";
              Formula assumed = contradictory(here.conclusion());
              if (!first->has_premise(assumed))
                return "line " + std::to_string(j.first) + " does not assume " + format_formula(assumed);
              if (second->conclusion() != contradictory(first->conclusion()))
                return "line " + std::to_string(j.second) + " does not contradict line " + std::to_string(j.first);
              std::vector<Formula> kept = set_union(set_minus(first->premises(), {assumed}), second->premises());
              if (here.premises() != kept && here.premises() != set_union(kept, {assumed}))
                return "premises are not the union of the cited premises less the reductio assumption";
              return {};
            }
          },
          line.why);
    if (!failure.empty()) return CheckReport::fail(line.index, failure);
    proved.emplace(line.index, here);
  }
  return CheckReport::ok();
}

}  // namespace namecalc
