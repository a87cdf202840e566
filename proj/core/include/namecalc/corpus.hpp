#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "namecalc/formula.hpp"
#include "namecalc/proof.hpp"
#include "namecalc/systems.hpp"

namespace namecalc {

enum class ScriptKind : std::uint8_t { Hilbert, Sequent, Deduction };

struct CorpusScript {
  ScriptKind kind = ScriptKind::Hilbert;
  /// Path relative to the corpus root.
  std::string path;
  /// Hilbert scripts only.
  std::optional<SystemId> system;
  /// Hilbert scripts only: checked with the substitution rule on (true) or off (false).
  bool substitution_rule = true;
};

struct CorpusEntry {
  std::string name;
  std::string group;
  /// Implication form for sequents and deductions.
  Formula formula;
  /// Decide after expanding definitions over this basis.
  std::optional<Basis> basis{};
  std::map<ModelClass, bool> expected{};
  /// The entry formula must not be a thesis listed for these systems.
  std::vector<SystemId> not_thesis_of{};
  std::vector<CorpusScript> scripts{};
  std::string note{};
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  /// Group name to the number of entries the manifest declares for it.
  std::map<std::string, std::size_t> group_sizes;
  /// Relative path to file content.
  std::map<std::string, std::string> files;

  const CorpusEntry* find(const std::string& name) const;
  std::vector<std::string> groups() const;
};

/// The catalogue built into the library.
const Corpus& builtin_corpus();
/// A catalogue read from a directory holding manifest.json and the files it names.
Corpus load_corpus(const std::filesystem::path& root);
/// Parses a manifest against the given files. Throws ParseError on malformed input.
Corpus parse_corpus(const std::string& manifest_json, std::map<std::string, std::string> files);

const std::vector<CorpusEntry>& corpus_entries();

struct CorpusSelection {
  std::optional<std::string> group;
  std::optional<std::string> name;
};

struct CorpusMismatch {
  std::string entry;
  std::string detail;
};

struct CorpusReport {
  std::size_t entries = 0;
  std::size_t verdicts = 0;
  std::size_t scripts = 0;
  std::vector<CorpusMismatch> mismatches;
  /// Per-group entry counts for the selection.
  std::map<std::string, std::size_t> group_counts;

  bool ok() const { return mismatches.empty(); }
};

/// Re-decides every expected verdict and re-checks every script of the selected entries.
CorpusReport run_corpus(const Corpus& corpus, const CorpusSelection& selection = {});
CorpusReport run_corpus(const CorpusSelection& selection = {});

}  // namespace namecalc
