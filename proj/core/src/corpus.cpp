#include "namecalc/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "corpus_data.hpp"
#include "namecalc/decide.hpp"
#include "namecalc/errors.hpp"
#include "namecalc/parser.hpp"
#include "namecalc/sequent.hpp"

namespace namecalc {

namespace {

using Json = nlohmann::json;

std::optional<Basis> basis_from_tag(const std::string& tag) {
  if (tag == "ai") return Basis::AI;
  if (tag == "kai") return Basis::KAI;
  if (tag == "aie") return Basis::AIE_FULL;
  return std::nullopt;
}

ScriptKind script_kind_from_tag(const std::string& tag) {
  if (tag == "hilbert") return ScriptKind::Hilbert;
  if (tag == "sequent") return ScriptKind::Sequent;
  if (tag == "deduction") return ScriptKind::Deduction;
  throw ParseError("unknown script kind '" + tag + "'", {0, 0});
}

SystemId system_or_throw(const std::string& tag) {
  auto id = system_from_tag(tag);
  if (!id) throw ParseError("unknown system '" + tag + "'", {0, 0});
  return *id;
}

CorpusEntry read_entry(const Json& j, const std::map<std::string, std::string>& files) {
  CorpusEntry e{j.at("name").get<std::string>(), j.at("group").get<std::string>(),
                parse_formula(j.at("formula").get<std::string>())};
  if (j.contains("basis")) {
    auto b = basis_from_tag(j["basis"].get<std::string>());
    if (!b) throw ParseError("entry " + e.name + ": unknown basis", {0, 0});
    e.basis = b;
  }
  const Json expect = j.value("expect", Json::object());
  for (const auto& [tag, value] : expect.items()) {
    auto c = class_from_tag(tag);
    if (!c) throw ParseError("entry " + e.name + ": unknown class '" + tag + "'", {0, 0});
    e.expected[*c] = value.get<std::string>() == "valid";
  }
  for (const auto& tag : j.value("not_thesis_of", Json::array())) e.not_thesis_of.push_back(system_or_throw(tag));
  for (const auto& s : j.value("scripts", Json::array())) {
    CorpusScript cs;
    cs.kind = script_kind_from_tag(s.at("kind").get<std::string>());
    cs.path = s.at("path").get<std::string>();
    if (!files.count(cs.path)) throw ParseError("entry " + e.name + ": missing script file " + cs.path, {0, 0});
    if (s.contains("system")) cs.system = system_or_throw(s["system"].get<std::string>());
    if (cs.kind == ScriptKind::Hilbert && !cs.system)
      throw ParseError("entry " + e.name + ": hilbert scripts need a system", {0, 0});
    cs.substitution_rule = s.value("substitution", true);
    e.scripts.push_back(std::move(cs));
  }
  e.note = j.value("note", "");
  return e;
}

/// Conclusion of a script as an implication, or a failure reason.
struct ScriptOutcome {
  std::optional<Formula> conclusion;
  std::string failure;
};

ScriptOutcome check_script(const CorpusScript& s, const std::string& text) {
  auto failed = [](const CheckReport& r) {
    return "line " + std::to_string(r.first_failure->line) + ": " + r.first_failure->reason;
  };
  try {
    switch (s.kind) {
      case ScriptKind::Hilbert: {
        auto script = parse_proof_script(text);
        auto r = check_proof(system_spec(*s.system).with_substitution(s.substitution_rule), script);
        if (!r.accepted) return {std::nullopt, failed(r)};
        return {script.conclusion(), {}};
      }
      case ScriptKind::Sequent: {
        auto script = parse_sequent_script(text);
        auto r = check_sequent_proof(script);
        if (!r.accepted) return {std::nullopt, failed(r)};
        return {script.lines.back().sequent.as_implication(), {}};
      }
      case ScriptKind::Deduction: {
        auto script = parse_deduction_script(text);
        auto r = check_smiley_deduction(script);
        if (!r.accepted) return {std::nullopt, failed(r)};
        return {script.lines.back().claim.as_implication(), {}};
      }
    }
  } catch (const Error& e) {
    return {std::nullopt, e.what()};
  }
  return {std::nullopt, "unknown script kind"};
}

std::vector<ModelClass> soundness_classes(const CorpusScript& s) {
  if (s.kind == ScriptKind::Hilbert) return system_spec(*s.system).model_classes;
  return {ModelClass::Traditional};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

const CorpusEntry* Corpus::find(const std::string& name) const {
  auto it = std::find_if(entries.begin(), entries.end(), [&](const CorpusEntry& e) { return e.name == name; });
  return it == entries.end() ? nullptr : &*it;
}

std::vector<std::string> Corpus::groups() const {
  std::vector<std::string> out;
  for (const auto& e : entries)
    if (std::find(out.begin(), out.end(), e.group) == out.end()) out.push_back(e.group);
  return out;
}

Corpus parse_corpus(const std::string& manifest_json, std::map<std::string, std::string> files) {
  Json j;
  try {
    j = Json::parse(manifest_json);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed manifest: ") + e.what(), {e.byte, e.byte});
  }
  Corpus c;
  c.files = std::move(files);
  try {
    const Json groups = j.value("groups", Json::object());
    for (const auto& [group, size] : groups.items())
      c.group_sizes[group] = size.get<std::size_t>();
    for (const auto& entry : j.at("entries")) c.entries.push_back(read_entry(entry, c.files));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed manifest: ") + e.what(), {0, 0});
  }
  return c;
}

const Corpus& builtin_corpus() {
  static const Corpus corpus = [] {
    std::map<std::string, std::string> files;
    for (const auto& f : detail::embedded_corpus()) files.emplace(std::string(f.path), std::string(f.content));
    auto manifest = files.find("manifest.json");
    if (manifest == files.end()) throw Error("built-in corpus has no manifest.json");
    std::string text = manifest->second;
    return parse_corpus(text, std::move(files));
  }();
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& item : std::filesystem::recursive_directory_iterator(root))
    if (item.is_regular_file())
      files.emplace(std::filesystem::relative(item.path(), root).generic_string(), read_file(item.path()));
  auto manifest = files.find("manifest.json");
  if (manifest == files.end()) throw Error("no manifest.json under " + root.string());
  std::string text = manifest->second;
  return parse_corpus(text, std::move(files));
}

const std::vector<CorpusEntry>& corpus_entries() { return builtin_corpus().entries; }

CorpusReport run_corpus(const Corpus& corpus, const CorpusSelection& selection) {
  CorpusReport report;
  auto mismatch = [&](const CorpusEntry& e, std::string detail) {
    report.mismatches.push_back({e.name, std::move(detail)});
  };

  // Conclusions established by accepted scripts, per system.
  std::map<SystemId, std::set<Formula>> theses;

  for (const auto& e : corpus.entries) {
    if (selection.group && e.group != *selection.group) continue;
    if (selection.name && e.name != *selection.name) continue;
    ++report.entries;
    ++report.group_counts[e.group];
    const Formula target = e.basis ? expand_definitions(e.formula, *e.basis) : e.formula;
    for (const auto& [c, want] : e.expected) {
      ++report.verdicts;
      try {
        Verdict v = decide(target, c);
        if (v.valid != want)
          mismatch(e, std::string("expected ") + (want ? "valid" : "invalid") + " in class " +
                          std::string(class_tag(c)) + ", decided " + (v.valid ? "valid" : "invalid"));
      } catch (const Error& err) {
        mismatch(e, std::string("decide failed in class ") + std::string(class_tag(c)) + ": " + err.what());
      }
    }
    for (const auto& s : e.scripts) {
      ++report.scripts;
      ScriptOutcome out = check_script(s, corpus.files.at(s.path));
      if (!out.conclusion) {
        mismatch(e, s.path + " rejected: " + out.failure);
        continue;
      }
      if (format_formula(*out.conclusion) != format_formula(e.formula)) {
        mismatch(e, s.path + " concludes " + format_formula(*out.conclusion));
        continue;
      }
      for (auto c : soundness_classes(s)) {
        Verdict v = decide(*out.conclusion, c);
        if (!v.valid) mismatch(e, s.path + " conclusion is not valid in class " + std::string(class_tag(c)));
      }
      if (s.system) theses[*s.system].insert(*out.conclusion);
    }
  }
  for (const auto& e : corpus.entries) {
    if (selection.group && e.group != *selection.group) continue;
    if (selection.name && e.name != *selection.name) continue;
    for (auto sys : e.not_thesis_of)
      if (theses[sys].count(e.formula))
        mismatch(e, "listed as a non-thesis of " + system_spec(sys).tag + " but a script proves it");
  }
  if (!selection.group && !selection.name)
    for (const auto& [group, size] : corpus.group_sizes)
      if (report.group_counts[group] != size)
        report.mismatches.push_back({"manifest", "group " + group + " declares " + std::to_string(size) +
                                                     " entries, found " + std::to_string(report.group_counts[group])});
  return report;
}

CorpusReport run_corpus(const CorpusSelection& selection) { return run_corpus(builtin_corpus(), selection); }

}  // namespace namecalc
