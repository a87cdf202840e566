#include "namecalc/sequent.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "namecalc/errors.hpp"
#include "namecalc/parser.hpp"
#include "namecalc/proof.hpp"
#include "namecalc/systems.hpp"

namespace namecalc {

namespace {

using Set = std::vector<Formula>;

Set single(const Formula& f) { return {f}; }

bool contains(const Set& s, const Formula& f) { return std::binary_search(s.begin(), s.end(), f); }

Set flatten_and(const Formula& f) {
  if (!f.is_bin(Connective::And)) return {f};
  return set_union(flatten_and(f.lhs()), flatten_and(f.rhs()));
}

/// Result premises Δ come from cited premises Γ by adding `add` and dropping `removed`.
bool context_fits(const Set& gamma, const Set& delta, const Set& add, const Set& removed) {
  return is_subset(add, delta) && is_subset(set_minus(delta, add), gamma) &&
         is_subset(set_minus(gamma, removed), delta);
}

std::optional<Formula> negated(const Formula& f) {
  if (f.is_neg()) return f.operand();
  return std::nullopt;
}

struct RuleShape {
  std::size_t arity;
  std::function<bool(const std::vector<Sequent>&, const Sequent&)> fits;
};

const std::map<std::string, RuleShape>& rule_table() {
  static const std::map<std::string, RuleShape> table = [] {
    std::map<std::string, RuleShape> t;
    // Π, α, β ⟹ ω  /  Π, α∧β ⟹ ω
    t["and-combine"] = {1, [](const auto& c, const Sequent& r) {
                          if (c[0].conclusion() != r.conclusion()) return false;
                          for (const auto& x : r.premises())
                            if (x.is_bin(Connective::And) && c[0].has_premise(x.lhs()) && c[0].has_premise(x.rhs()) &&
                                context_fits(c[0].premises(), r.premises(), single(x), formula_set({x.lhs(), x.rhs()})))
                              return true;
                          return false;
                        }};
    // Π, α∧β ⟹ ω  /  Π, α, β ⟹ ω
    t["and-intro-left"] = {1, [](const auto& c, const Sequent& r) {
                             if (c[0].conclusion() != r.conclusion()) return false;
                             for (const auto& x : c[0].premises())
                               if (x.is_bin(Connective::And) && r.has_premise(x.lhs()) && r.has_premise(x.rhs()) &&
                                   context_fits(c[0].premises(), r.premises(), formula_set({x.lhs(), x.rhs()}),
                                                single(x)))
                                 return true;
                             return false;
                           }};
    // Π ⟹ α,  Π' ⟹ β  /  Π, Π' ⟹ α∧β
    t["and-intro-right"] = {2, [](const auto& c, const Sequent& r) {
                              return r.conclusion() == conj(c[0].conclusion(), c[1].conclusion()) &&
                                     r.premises() == set_union(c[0].premises(), c[1].premises());
                            }};
    // Π ⟹ α→β  /  Π, α ⟹ β
    t["imp-unpack"] = {1, [](const auto& c, const Sequent& r) {
                         const Formula& w = c[0].conclusion();
                         return w.is_bin(Connective::Imp) && r.conclusion() == w.rhs() &&
                                r.premises() == set_union(c[0].premises(), single(w.lhs()));
                       }};
    // Π ⟹ α→β,  Π ⟹ α  /  Π ⟹ β
    t["imp-apply"] = {2, [](const auto& c, const Sequent& r) {
                        const Formula& w = c[0].conclusion();
                        return w.is_bin(Connective::Imp) && w.lhs() == c[1].conclusion() &&
                               r.conclusion() == w.rhs() && r.premises() == set_union(c[0].premises(), c[1].premises());
                      }};
    // ⟹ α↔β  /  α ⟹ β   (or β ⟹ α)
    t["biconditional-split"] = {1, [](const auto& c, const Sequent& r) {
                                  const Formula& w = c[0].conclusion();
                                  if (!c[0].premises().empty() || !w.is_bin(Connective::Iff)) return false;
                                  return (r.premises() == single(w.lhs()) && r.conclusion() == w.rhs()) ||
                                         (r.premises() == single(w.rhs()) && r.conclusion() == w.lhs());
                                }};
    // Π ⟹ α→β,  Π' ⟹ β→α  /  Π, Π' ⟹ α↔β
    t["biconditional-join"] = {2, [](const auto& c, const Sequent& r) {
                                 const Formula& x = c[0].conclusion();
                                 const Formula& y = c[1].conclusion();
                                 return x.is_bin(Connective::Imp) && y.is_bin(Connective::Imp) && x.lhs() == y.rhs() &&
                                        x.rhs() == y.lhs() && r.conclusion() == iff(x.lhs(), x.rhs()) &&
                                        r.premises() == set_union(c[0].premises(), c[1].premises());
                               }};
    // Contraposition: premise `from` ⟹ `to` becomes `from2` ⟹ `to2`.
    auto contraposition = [](std::function<std::optional<std::pair<Formula, Formula>>(const Formula&, const Formula&)>
                                 flip) {
      return RuleShape{1, [flip](const auto& c, const Sequent& r) {
                         for (const auto& from : c[0].premises()) {
                           auto swapped = flip(from, c[0].conclusion());
                           if (!swapped) continue;
                           const auto& [new_premise, new_conclusion] = *swapped;
                           if (r.conclusion() == new_conclusion && r.has_premise(new_premise) &&
                               context_fits(c[0].premises(), r.premises(), single(new_premise), single(from)))
                             return true;
                         }
                         return false;
                       }};
    };
    using Pair = std::optional<std::pair<Formula, Formula>>;
    // Π, α ⟹ β  /  Π, ¬β ⟹ ¬α
    t["contraposition-1"] = contraposition([](const Formula& a, const Formula& b) -> Pair {
      return std::pair{neg(b), neg(a)};
    });
    // Π, ¬α ⟹ ¬β  /  Π, β ⟹ α
    t["contraposition-2"] = contraposition([](const Formula& na, const Formula& nb) -> Pair {
      auto a = negated(na);
      auto b = negated(nb);
      if (!a || !b) return std::nullopt;
      return std::pair{*b, *a};
    });
    // Π, ¬α ⟹ β  /  Π, ¬β ⟹ α
    t["contraposition-3"] = contraposition([](const Formula& na, const Formula& b) -> Pair {
      auto a = negated(na);
      if (!a) return std::nullopt;
      return std::pair{neg(b), *a};
    });
    // Π, α ⟹ ¬β  /  Π, β ⟹ ¬α
    t["contraposition-4"] = contraposition([](const Formula& a, const Formula& nb) -> Pair {
      auto b = negated(nb);
      if (!b) return std::nullopt;
      return std::pair{*b, neg(a)};
    });
    // Π, α∨β ⟹ ω  /  Π, α ⟹ ω   (disjunction-2 keeps β)
    auto disjunct = [](bool left) {
      return RuleShape{1, [left](const auto& c, const Sequent& r) {
                         if (c[0].conclusion() != r.conclusion()) return false;
                         for (const auto& x : c[0].premises()) {
                           if (!x.is_bin(Connective::Or)) continue;
                           const Formula& kept = left ? x.lhs() : x.rhs();
                           if (r.has_premise(kept) && context_fits(c[0].premises(), r.premises(), single(kept), single(x)))
                             return true;
                         }
                         return false;
                       }};
    };
    t["disjunction-1"] = disjunct(true);
    t["disjunction-2"] = disjunct(false);
    // Π, α ⟹ ω,  Π', β ⟹ ω  /  Π, Π', α∨β ⟹ ω
    t["disjunction-3"] = {2, [](const auto& c, const Sequent& r) {
                            if (c[0].conclusion() != r.conclusion() || c[1].conclusion() != r.conclusion()) return false;
                            for (const auto& x : r.premises()) {
                              if (!x.is_bin(Connective::Or) || !c[0].has_premise(x.lhs()) || !c[1].has_premise(x.rhs()))
                                continue;
                              Set rest = set_union(set_minus(c[0].premises(), single(x.lhs())),
                                                   set_minus(c[1].premises(), single(x.rhs())));
                              Set both = set_union(c[0].premises(), c[1].premises());
                              if (is_subset(rest, r.premises()) && is_subset(set_minus(r.premises(), single(x)), both))
                                return true;
                            }
                            return false;
                          }};
    // π1, …, πn ⟹ ω  /  ⟹ (π1 ∧ … ∧ πn) → ω
    t["bridge-to-implication"] = {1, [](const auto& c, const Sequent& r) {
                                    const Formula& w = r.conclusion();
                                    return r.premises().empty() && !c[0].premises().empty() &&
                                           w.is_bin(Connective::Imp) && w.rhs() == c[0].conclusion() &&
                                           flatten_and(w.lhs()) == c[0].premises();
                                  }};
    // ⟹ (π1 ∧ … ∧ πn) → ω  /  π1, …, πn ⟹ ω
    t["bridge-to-sequent"] = {1, [](const auto& c, const Sequent& r) {
                                const Formula& w = c[0].conclusion();
                                return c[0].premises().empty() && w.is_bin(Connective::Imp) &&
                                       w.rhs() == r.conclusion() && flatten_and(w.lhs()) == r.premises();
                              }};
    return t;
  }();
  return table;
}

/// Checks lines with the primitive rules; `hypotheses` are the sequents `given` lines may state.
CheckReport check_lines(const SequentScript& script, const std::vector<Sequent>* hypotheses) {
  if (script.lines.empty()) return CheckReport::fail(0, "empty script");
  CheckReport report;
  std::map<std::size_t, Sequent> proved;
  for (const auto& line : script.lines) {
    const Sequent& here = line.sequent;
    auto cited = [&](std::size_t k) -> const Sequent* {
      auto it = proved.find(k);
      return it == proved.end() ? nullptr : &it->second;
    };
    std::string failure = std::visit(
        [&](const auto& j) -> std::string {
          using J = std::decay_t<decltype(j)>;
          if constexpr (std::is_same_v<J, LukAxiomSequent>) {
            auto options = luk_axiom_sequents(j.name, j.sigma);
            if (options.empty()) return "'" + j.name + "' is not an axiomatic sequent";
            if (std::find(options.begin(), options.end(), here) == options.end())
              return "sequent is not an instance of " + j.name + " under " + format_substitution(j.sigma);
            return {};
          } else if constexpr (std::is_same_v<J, CplConsequenceAxiom>) {
            if (!cpl_consequence(here.premises(), here.conclusion())) return "not a CPL consequence";
            return {};
          } else if constexpr (std::is_same_v<J, Cut>) {
            const Sequent* a = cited(j.left);
            const Sequent* b = cited(j.right);
            if (!a || !b) return "cites a line that is not an earlier line";
            const Formula& alpha = a->conclusion();
            if (!b->has_premise(alpha))
              return "cut formula " + format_formula(alpha) + " is not a premise of line " + std::to_string(j.right);
            if (here.conclusion() != b->conclusion()) return "conclusion differs from line " + std::to_string(j.right);
            Set keep = set_union(a->premises(), b->premises());
            Set drop = set_union(a->premises(), set_minus(b->premises(), single(alpha)));
            if (here.premises() != keep && here.premises() != drop) return "premises are not A ∪ B";
            return {};
          } else if constexpr (std::is_same_v<J, Deduction>) {
            const Sequent* s = cited(j.source);
            if (!s) return "cites a line that is not an earlier line";
            const Formula& w = here.conclusion();
            if (!w.is_bin(Connective::Imp) || w.rhs() != s->conclusion())
              return "conclusion is not α -> (conclusion of line " + std::to_string(j.source) + ")";
            if (!s->has_premise(w.lhs())) return "discharged formula is not a premise of the cited line";
            if (here.premises() != set_minus(s->premises(), single(w.lhs())) && here.premises() != s->premises())
              return "premises are not those of the cited line less the discharged formula";
            return {};
          } else if constexpr (std::is_same_v<J, DerivedRule>) {
            std::vector<Sequent> from;
            for (auto k : j.cited) {
              const Sequent* s = cited(k);
              if (!s) return "cites a line that is not an earlier line";
              from.push_back(*s);
            }
            std::string reason;
            auto expansion = expand_derived_rule(j.name, from, here, reason);
            if (!expansion) return reason;
            CheckReport inner = check_lines(*expansion, &from);
            if (!inner.accepted)
              return "expansion of " + j.name + " fails at its line " + std::to_string(inner.first_failure->line) +
                     ": " + inner.first_failure->reason;
            if (expansion->lines.back().sequent != here) return "expansion of " + j.name + " ends elsewhere";
            report.expansions.emplace_back(line.index, format_sequent_script(*expansion));
            return {};
          } else {
            if (!hypotheses) return "'given' lines are only admitted inside derived-rule expansions";
            if (std::find(hypotheses->begin(), hypotheses->end(), here) == hypotheses->end())
              return "sequent is not one of the cited hypotheses";
            return {};
          }
        },
        line.why);
    if (!failure.empty()) {
      CheckReport bad = CheckReport::fail(line.index, failure);
      bad.expansions = std::move(report.expansions);
      return bad;
    }
    proved.emplace(line.index, here);
  }
  return report;
}

}  // namespace

std::vector<Sequent> luk_axiom_sequents(const std::string& name, const Substitution& sigma) {
  auto f = [&](const char* text) { return substitute(parse_formula(text), sigma); };
  if (name == "Ia") return {Sequent({}, f("a(S,S)"))};
  if (name == "Ii") return {Sequent({}, f("i(S,S)"))};
  if (name == "Barbara") return {Sequent({f("a(M,P)"), f("a(S,M)")}, f("a(S,P)"))};
  if (name == "Datisi") return {Sequent({f("a(M,P)"), f("i(M,S)")}, f("i(S,P)"))};
  if (name == "df_e") return {Sequent({f("e(S,P)")}, f("~i(S,P)")), Sequent({f("~i(S,P)")}, f("e(S,P)"))};
  if (name == "df_o") return {Sequent({f("o(S,P)")}, f("~a(S,P)")), Sequent({f("~a(S,P)")}, f("o(S,P)"))};
  return {};
}

const std::vector<std::string>& derived_rule_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : rule_table()) out.push_back(name);
    return out;
  }();
  return names;
}

std::optional<SequentScript> expand_derived_rule(const std::string& name, const std::vector<Sequent>& cited,
                                                 const Sequent& result, std::string& reason) {
  auto it = rule_table().find(name);
  if (it == rule_table().end()) {
    reason = "unknown derived rule '" + name + "'";
    return std::nullopt;
  }
  if (cited.size() != it->second.arity) {
    reason = name + " cites " + std::to_string(it->second.arity) + " line(s)";
    return std::nullopt;
  }
  if (!it->second.fits(cited, result)) {
    reason = "sequent does not have the shape of " + name;
    return std::nullopt;
  }

  // Discharge the cited premises foreign to the result, conclude by a CPL axiom, then cut.
  SequentScript out;
  auto add = [&](Sequent s, SequentJustification why) {
    std::size_t n = out.lines.size() + 1;
    out.lines.push_back({n, std::move(s), std::move(why)});
    return n;
  };
  const Set& delta = result.premises();
  std::vector<std::pair<std::size_t, Formula>> closed;
  for (const auto& c : cited) {
    std::size_t at = add(c, Given{});
    Sequent cur = c;
    Set foreign = set_minus(c.premises(), delta);
    for (auto f = foreign.rbegin(); f != foreign.rend(); ++f) {
      cur = Sequent(set_minus(cur.premises(), single(*f)), imp(*f, cur.conclusion()));
      at = add(cur, Deduction{at});
    }
    closed.emplace_back(at, cur.conclusion());
  }
  Set taus;
  for (const auto& [_, tau] : closed) taus.push_back(tau);
  taus = formula_set(taus);
  Sequent cur(set_union(delta, taus), result.conclusion());
  std::size_t at = add(cur, CplConsequenceAxiom{});
  Set done;
  for (const auto& [line, tau] : closed) {
    if (contains(done, tau)) continue;
    done = set_union(done, single(tau));
    const Sequent& left = out.lines[line - 1].sequent;
    Set prem = set_union(left.premises(), set_minus(cur.premises(), single(tau)));
    if (contains(delta, tau)) prem = set_union(prem, single(tau));
    cur = Sequent(prem, result.conclusion());
    at = add(cur, Cut{line, at});
  }
  return out;
}

CheckReport check_sequent_proof(const SequentScript& script) { return check_lines(script, nullptr); }

}  // namespace namecalc
