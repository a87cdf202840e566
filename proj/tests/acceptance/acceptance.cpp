// Acceptance run: one PASS/FAIL line per criterion, nonzero exit when any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "namecalc/corpus.hpp"
#include "namecalc/decide.hpp"
#include "namecalc/parser.hpp"
#include "namecalc/proof.hpp"
#include "namecalc/representation.hpp"
#include "namecalc/sequent.hpp"
#include "reference.hpp"

using namespace namecalc;
using namespace namecalc::testing;

namespace {

using Clock = std::chrono::steady_clock;

class Gate {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }

  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }
  const std::string& first() const { return first_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  std::function<void(Gate&)> body;
};

const std::string& file(const std::string& path) { return builtin_corpus().files.at(path); }

Formula decided_form(const SystemSpec& sys, const Formula& f) {
  return sys.strong_basis ? expand_definitions(f, Basis::AI) : f;
}

// Moods.
void moods(Gate& g) {
  std::size_t count = 0, all_valid = 0;
  for (const auto& e : corpus_entries()) {
    if (e.group != "moods-plain" && e.group != "moods-existential") continue;
    ++count;
    g.expect(decide(e.formula, ModelClass::Traditional).valid, e.name + " in trad");
    g.expect(decide(e.formula, ModelClass::Polyreferential).valid, e.name + " in poly");
    Verdict v = decide(e.formula, ModelClass::All);
    if (v.valid) {
      ++all_valid;
      g.expect(e.group == "moods-plain", e.name + " unexpectedly valid in all");
      continue;
    }
    g.expect(e.group == "moods-existential", e.name + " unexpectedly invalid in all");
    bool some_empty = false;
    for (const auto& l : letters(e.formula)) some_empty |= v.countermodel->denotation(l).empty();
    g.expect(some_empty, e.name + " countermodel has no empty name");
    g.expect(!reference_eval(*v.countermodel, e.formula), e.name + " countermodel does not refute");
  }
  g.expect(count == 24, "mood count " + std::to_string(count));
  g.expect(all_valid == 15, "valid in all " + std::to_string(all_valid));
}

// Axiom soundness.
void axioms(Gate& g) {
  for (const auto& sys : all_systems())
    for (const auto& ax : axioms_of(sys)) {
      Formula f = decided_form(sys, ax.pattern);
      for (ModelClass c : sys.model_classes)
        g.expect(decide(f, c).valid, std::string(sys.tag) + " " + ax.name + " in " + std::string(class_tag(c)));
    }
}

// Decision procedure against brute force.
void decide_vs_oracle(Gate& g) {
  const auto vocab = letter_list({"S", "P"});
  const auto suite = shape_suite(all_atoms(vocab));
  for (ModelClass c : kAllClasses) {
    Oracle oracle(vocab, c, 8);
    for (const auto& f : suite) {
      Verdict d = decide(f, c);
      Verdict o = oracle.decide(f);
      g.expect(d.valid == o.valid, format_formula(f) + " in " + std::string(class_tag(c)));
    }
  }
}

// Hilbert scripts from the corpus.
void derivations(Gate& g) {
  std::size_t scripts = 0;
  std::set<std::string> proved;
  for (const auto& e : corpus_entries())
    for (const auto& s : e.scripts) {
      if (s.kind != ScriptKind::Hilbert) continue;
      ++scripts;
      const SystemSpec& sys = system_spec(*s.system);
      ProofScript p = parse_proof_script(file(s.path));
      CheckReport r = check_proof(sys.with_substitution(s.substitution_rule), p);
      g.expect(r.accepted, s.path + (r.first_failure ? ": " + r.first_failure->reason : ""));
      g.expect(p.conclusion() == e.formula, s.path + " concludes another formula");
      Formula f = decided_form(sys, p.conclusion());
      for (ModelClass c : sys.model_classes)
        g.expect(decide(f, c).valid, s.path + " conclusion in " + std::string(class_tag(c)));
      if (r.accepted) proved.insert(e.name);
    }
  g.expect(scripts >= 30, "only " + std::to_string(scripts) + " scripts");
  for (const auto& e : corpus_entries())
    if (e.group == "relations" || e.group == "moods-existential" || e.group == "shepherdson")
      g.expect(proved.count(e.name) == 1, e.name + " has no checked script");
  for (const char* name : {"Ish2", "Ish3", "thesis 8", "thesis 9", "percent"})
    g.expect(proved.count(name) == 1, std::string(name) + " has no checked script");
}

// The script's lines before `at`, followed by the expansion with its given lines replaced by
// references to the cited lines, so it checks without hypotheses.
SequentScript splice(const SequentScript& script, std::size_t at, const std::vector<std::size_t>& cited,
                     const SequentScript& expansion) {
  SequentScript out;
  std::size_t next = 0;
  for (const auto& line : script.lines) {
    if (line.index == at) break;
    out.lines.push_back(line);
    next = std::max(next, line.index);
  }
  std::map<std::size_t, std::size_t> renumber;
  std::size_t given = 0;
  for (const auto& line : expansion.lines) {
    if (std::holds_alternative<Given>(line.why)) {
      renumber[line.index] = cited.at(given++);
      continue;
    }
    SequentLine copy = line;
    copy.index = ++next;
    renumber[line.index] = copy.index;
    std::visit(
        [&](auto& j) {
          using J = std::decay_t<decltype(j)>;
          if constexpr (std::is_same_v<J, Cut>) {
            j.left = renumber.at(j.left);
            j.right = renumber.at(j.right);
          } else if constexpr (std::is_same_v<J, Deduction>) {
            j.source = renumber.at(j.source);
          } else if constexpr (std::is_same_v<J, DerivedRule>) {
            for (auto& k : j.cited) k = renumber.at(k);
          }
        },
        copy.why);
    out.lines.push_back(std::move(copy));
  }
  return out;
}

// Sequent kernel.
void sequents(Gate& g) {
  auto check_file = [&](const std::string& path) {
    SequentScript s = parse_sequent_script(file(path));
    CheckReport r = check_sequent_proof(s);
    g.expect(r.accepted, path + (r.first_failure ? ": " + r.first_failure->reason : ""));
    return s;
  };
  SequentScript sub = check_file("scripts/sequent/cut-subalternation.seq");
  g.expect(sub.lines.back().sequent == parse_sequent("a(S,P) ==> i(S,P)"), "subalternation sequent");
  SequentScript conv = check_file("scripts/sequent/cut-conversion.seq");
  g.expect(conv.lines.back().sequent == parse_sequent("i(P,S) ==> i(S,P)"), "conversion sequent");

  SequentScript rules = check_file("scripts/sequent/derived-rules.seq");
  std::map<std::size_t, Sequent> proved;
  std::set<std::string> used;
  for (const auto& line : rules.lines) {
    proved.emplace(line.index, line.sequent);
    const auto* rule = std::get_if<DerivedRule>(&line.why);
    if (!rule) continue;
    used.insert(rule->name);
    std::vector<Sequent> cited;
    for (auto k : rule->cited) cited.push_back(proved.at(k));
    std::string reason;
    auto expansion = expand_derived_rule(rule->name, cited, line.sequent, reason);
    if (!expansion) {
      g.expect(false, rule->name + ": " + reason);
      continue;
    }
    bool primitive = std::none_of(expansion->lines.begin(), expansion->lines.end(),
                                  [](const auto& l) { return std::holds_alternative<DerivedRule>(l.why); });
    g.expect(primitive, rule->name + " expansion uses a derived rule");
    g.expect(expansion->lines.back().sequent == line.sequent, rule->name + " expansion ends elsewhere");
    SequentScript spliced = splice(rules, line.index, rule->cited, *expansion);
    g.expect(check_sequent_proof(spliced).accepted, rule->name + " expansion does not re-check");
  }
  g.expect(used.size() == derived_rule_names().size(), "derived-rules script misses a rule");

  std::size_t round_trips = 0;
  for (const auto& e : corpus_entries()) {
    if (e.name.rfind("bridge: ", 0) != 0) continue;
    const CorpusScript* seq = nullptr;
    const CorpusScript* hilbert = nullptr;
    for (const auto& s : e.scripts) (s.kind == ScriptKind::Sequent ? seq : hilbert) = &s;
    if (!seq || !hilbert) {
      g.expect(false, e.name + " lacks a script");
      continue;
    }
    SequentScript s = check_file(seq->path);
    std::optional<Formula> implication;
    std::optional<Sequent> before, after;
    std::map<std::size_t, Sequent> by_index;
    for (const auto& line : s.lines) {
      by_index.emplace(line.index, line.sequent);
      const auto* rule = std::get_if<DerivedRule>(&line.why);
      if (!rule) continue;
      if (rule->name == "bridge-to-implication") {
        before = by_index.at(rule->cited.at(0));
        implication = line.sequent.conclusion();
      }
      if (rule->name == "bridge-to-sequent") after = line.sequent;
    }
    ProofScript p = parse_proof_script(file(hilbert->path));
    g.expect(check_proof(system_spec(*hilbert->system), p).accepted, hilbert->path);
    bool ok = implication && before && after && *before == *after && *implication == p.conclusion() &&
              before->as_implication() == *implication;
    g.expect(ok, e.name + " round trip");
    round_trips += ok;
  }
  g.expect(round_trips >= 5, "round trips " + std::to_string(round_trips));
}

// Smiley kernel.
void smiley(Gate& g) {
  bool barbara = false, reductio = false;
  for (const auto& e : corpus_entries())
    for (const auto& s : e.scripts) {
      if (s.kind != ScriptKind::Deduction) continue;
      DeductionScript d = parse_deduction_script(file(s.path));
      CheckReport r = check_smiley_deduction(d);
      g.expect(r.accepted, s.path);
      if (!r.accepted) continue;
      for (const auto& line : d.lines) {
        g.expect(decide(line.claim.as_implication(), ModelClass::Traditional).valid, s.path + " line");
        if (const auto* c = std::get_if<CutWithRule>(&line.why))
          barbara |= c->rule == 1 && line.claim == parse_sequent("a(S,M), a(M,P) ==> a(S,P)");
        reductio |= std::holds_alternative<Reductio>(line.why);
      }
    }
  g.expect(barbara, "no Barbara deduction by R1");
  g.expect(reductio, "no deduction by reductio");
}

// Canonical models.
void canonical(Gate& g) {
  Rng rng(7001);
  const auto pool = letter_list({"S", "P", "M"});
  const SystemId systems[] = {SystemId::SH, SystemId::LUK, SystemId::SHIS_I};
  for (int k = 0; k < 500; ++k) {
    std::vector<Letter> vocab(pool.begin(), pool.begin() + static_cast<long>(1 + k % 3));
    for (SystemId sys : systems) {
      const auto& classes = system_spec(sys).model_classes;
      ModelClass c = classes[rng() % classes.size()];
      Model m = random_model(rng(), {vocab.begin(), vocab.end()}, c, 4);
      for (CanonicalMethod method : {CanonicalMethod::Filters, CanonicalMethod::Pairs}) {
        Model canon = canonical_model(m, vocab, sys, method);
        for (Functor f : canonical_functors(sys))
          for (const auto& s : vocab)
            for (const auto& p : vocab) {
              Formula a = arity(f) == 1 ? Formula::ex(s) : atom(f, s, p);
              g.expect(reference_eval(canon, a) == reference_eval(m, a), format_model(m) + " " + format_formula(a));
            }
      }
    }
  }
}

bool subset(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

bool meet(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
  return std::any_of(x.begin(), x.end(), [&](std::size_t p) { return std::binary_search(y.begin(), y.end(), p); });
}

// Representation by I-sets.
void representation(Gate& g) {
  Rng rng(7002);
  auto run = [&](StructureKind kind, const std::vector<Letter>& vocab, ModelClass c) {
    for (int k = 0; k < 50; ++k) {
      Model m = random_model(rng(), {vocab.begin(), vocab.end()}, c, 4);
      auto s = harvest_structure(m, vocab, kind == StructureKind::C);
      auto violations = verify_structure(s, kind);
      g.expect(violations.empty(), "harvested structure violates " +
                                       (violations.empty() ? std::string() : violations[0].condition));
      if (!violations.empty()) continue;
      Representation r = represent(s, kind);
      for (std::size_t a = 0; a < s.size(); ++a) {
        if (kind == StructureKind::B3) g.expect(!r.image[a].empty(), "empty image");
        for (std::size_t b = 0; b < s.size(); ++b) {
          g.expect(s.a(a, b) == subset(r.image[a], r.image[b]), "A against inclusion");
          g.expect(s.i(a, b) == meet(r.image[a], r.image[b]), "I against overlap");
          if (kind == StructureKind::C)
            g.expect(s.e(a, b) == (r.image[a].size() == 1 && subset(r.image[a], r.image[b])),
                     "eps against singleton inclusion");
        }
      }
    }
  };
  run(StructureKind::C, letter_list({"S", "P", "M"}), ModelClass::All);
  run(StructureKind::B3, letter_list({"S", "P", "M", "Q"}), ModelClass::Traditional);
}

// Słupecki gap.
void slupecki(Gate& g) {
  std::size_t entries = 0;
  for (const auto& e : corpus_entries()) {
    if (e.group != "slupecki") continue;
    ++entries;
    g.expect(decide(expand_definitions(e.formula, Basis::AI), ModelClass::All).valid, e.name);
  }
  g.expect(entries >= 7, "slupecki entries " + std::to_string(entries));
  for (const char* name : {"dagger", "ddagger", "cIi (ka-i)", "percent"})
    g.expect(builtin_corpus().find(name) != nullptr, std::string(name) + " missing");
  const CorpusEntry* percent = builtin_corpus().find("percent");
  bool checked = false;
  if (percent)
    for (const auto& s : percent->scripts)
      if (s.system == SystemId::SLU)
        checked |= check_proof(system_spec(SystemId::SLU), parse_proof_script(file(s.path))).accepted;
  g.expect(checked, "percent has no checked SLU script");
}

// Boundary of the non-monoreferential class.
void shis_boundary(Gate& g) {
  Formula f = parse_formula("eps(S,S) -> eps(M,M)");
  g.expect(decide(f, ModelClass::NonMonoreferential).valid, "not valid in nonmono");
  g.expect(!decide(f, ModelClass::All).valid, "valid in all");
  const CorpusEntry* e = builtin_corpus().find("eps(S,S) -> eps(M,M)");
  g.expect(e != nullptr, "boundary entry missing");
  if (!e) return;
  for (SystemId id : {SystemId::SHIS_I, SystemId::SHIS_II, SystemId::SHIS_III, SystemId::SHIS_IV})
    g.expect(std::find(e->not_thesis_of.begin(), e->not_thesis_of.end(), id) != e->not_thesis_of.end(),
             "boundary entry is listed for " + std::string(system_spec(id).tag));
  for (const auto& other : corpus_entries())
    if (other.group == "shis" && &other != e) g.expect(!(other.formula == f), other.name + " repeats the formula");
  g.expect(e->scripts.empty(), "boundary entry carries a proof script");
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1", "moods", 10, moods},
      {"AC2", "axiom soundness", 0, axioms},
      {"AC3", "decide agrees with the oracle", 300, decide_vs_oracle},
      {"AC4", "Hilbert derivations", 0, derivations},
      {"AC5", "sequent kernel", 0, sequents},
      {"AC6", "Smiley kernel", 0, smiley},
      {"AC7", "canonical models", 120, canonical},
      {"AC8", "representation", 0, representation},
      {"AC9", "Slupecki gap", 0, slupecki},
      {"AC10", "non-monoreferential boundary", 0, shis_boundary},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Gate g;
    auto start = Clock::now();
    try {
      c.body(g);
    } catch (const std::exception& e) {
      g.expect(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    bool in_time = c.budget_seconds == 0 || seconds < c.budget_seconds;
    bool pass = g.failures() == 0 && in_time;
    failed += !pass;
    std::ostringstream line;
    line << std::fixed << std::setprecision(3);
    line << c.id << ' ' << (pass ? "PASS" : "FAIL") << ' ' << c.title << " (" << g.checks() << " checks, "
         << g.failures() << " failures, " << seconds << " s";
    if (c.budget_seconds > 0) line << " of " << c.budget_seconds << " s";
    line << ')';
    if (!g.first().empty()) line << " first failure: " << g.first();
    std::cout << line.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
