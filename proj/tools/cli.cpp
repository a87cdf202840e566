#include "cli.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "namecalc/corpus.hpp"
#include "namecalc/decide.hpp"
#include "namecalc/errors.hpp"
#include "namecalc/parser.hpp"
#include "namecalc/proof.hpp"
#include "namecalc/representation.hpp"
#include "namecalc/semantics.hpp"
#include "namecalc/sequent.hpp"

namespace namecalc::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Inline text, or the contents of FILE for "@FILE".
std::string inline_or_file(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::string text = read_file(arg.substr(1));
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.pop_back();
  return text;
}

Json versioned(const char* command) {
  Json j;
  j["version"] = 1;
  j["command"] = command;
  return j;
}

Json model_json(const Model& m) { return Json::parse(format_model(m)); }

Json report_json(const CheckReport& r) {
  Json j;
  j["accepted"] = r.accepted;
  if (r.first_failure) j["failure"] = {{"line", r.first_failure->line}, {"reason", r.first_failure->reason}};
  return j;
}

int print_report(const CheckReport& r, bool json, const char* command, std::ostream& out) {
  if (json) {
    Json j = versioned(command);
    j.update(report_json(r));
    out << j.dump() << '\n';
  } else if (r.accepted) {
    out << "ACCEPTED\n";
  } else {
    out << "REJECTED line " << r.first_failure->line << ": " << r.first_failure->reason << '\n';
  }
  return r.accepted ? kOk : kRejected;
}

std::vector<Letter> parse_vocab(const std::string& text) {
  std::vector<Letter> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.emplace_back(item);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for calculi of names", "namecalc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "namecalc 1.0.0");

  // decide
  std::string formula_text;
  std::string class_name = "all";
  std::size_t oracle_size = 0;
  bool json = false;
  auto* decide_cmd = app.add_subcommand("decide", "Decide validity over a model class");
  decide_cmd->add_option("formula", formula_text, "Formula, or @FILE")->required();
  decide_cmd->add_option("--class", class_name, "all, trad, poly or nonmono")
      ->check(CLI::IsMember({"all", "trad", "poly", "nonmono"}));
  decide_cmd->add_option("--oracle", oracle_size, "Use brute force over a universe of N elements");
  decide_cmd->add_flag("--json", json, "JSON output");

  // eval
  std::string model_file;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula in a model");
  eval_cmd->add_option("--model", model_file, "Model JSON file")->required();
  eval_cmd->add_option("formula", formula_text, "Formula, or @FILE")->required();
  eval_cmd->add_flag("--json", json, "JSON output");

  // check
  std::string system_name;
  std::string script_file;
  bool no_substitution = false;
  auto* check_cmd = app.add_subcommand("check", "Check a Hilbert-style proof script");
  check_cmd->add_option("--system", system_name, "System tag")->required();
  check_cmd->add_option("file", script_file, "Proof script")->required();
  check_cmd->add_flag("--no-substitution", no_substitution, "Disable the substitution rule");
  check_cmd->add_flag("--json", json, "JSON output");

  // sequent-check
  bool show_expansions = false;
  auto* seq_cmd = app.add_subcommand("sequent-check", "Check a sequent-style proof script");
  seq_cmd->add_option("file", script_file, "Sequent script")->required();
  seq_cmd->add_flag("--expansions", show_expansions, "Print primitive expansions of derived-rule lines");
  seq_cmd->add_flag("--json", json, "JSON output");

  // smiley-check
  auto* smiley_cmd = app.add_subcommand("smiley-check", "Check a Smiley-style deduction");
  smiley_cmd->add_option("file", script_file, "Deduction script")->required();
  smiley_cmd->add_flag("--json", json, "JSON output");

  // canonical
  std::string method_name;
  std::string vocab_text;
  bool nonmono = false;
  auto* canon_cmd = app.add_subcommand("canonical", "Build a canonical model from a model's atomic diagram");
  canon_cmd->add_option("--system", system_name, "sh, luk or shis")->required()->check(
      CLI::IsMember({"sh", "luk", "shis"}));
  canon_cmd->add_option("--method", method_name, "filters or pairs")->required()->check(
      CLI::IsMember({"filters", "pairs"}));
  canon_cmd->add_option("--model", model_file, "Model JSON file")->required();
  canon_cmd->add_option("--vocab", vocab_text, "Comma-separated letters (default: letters the model denotes)");
  canon_cmd->add_flag("--nonmono", nonmono, "Use the letters-and-second-clause variant (sh, luk)");
  canon_cmd->add_flag("--json", json, "JSON output");

  // represent
  std::string kind_name;
  std::string structure_file;
  auto* rep_cmd = app.add_subcommand("represent", "Represent a relational structure by I-sets");
  rep_cmd->add_option("--kind", kind_name, "b1, b3 or c")->required()->check(CLI::IsMember({"b1", "b3", "c"}));
  rep_cmd->add_option("--structure", structure_file, "Structure JSON file")->required();
  rep_cmd->add_flag("--json", json, "JSON output");

  // translate
  std::string basis_name;
  auto* tr_cmd = app.add_subcommand("translate", "Expand defined functors");
  tr_cmd->add_option("--to", basis_name, "ai or kai")->required()->check(CLI::IsMember({"ai", "kai"}));
  tr_cmd->add_option("formula", formula_text, "Formula, or @FILE")->required();
  tr_cmd->add_flag("--json", json, "JSON output");

  // corpus run
  std::string section;
  std::string corpus_dir;
  auto* corpus_cmd = app.add_subcommand("corpus", "Catalogue operations");
  corpus_cmd->require_subcommand(1);
  auto* corpus_run = corpus_cmd->add_subcommand("run", "Re-decide verdicts and re-check scripts");
  corpus_run->add_option("--section", section, "Restrict to one group");
  corpus_run->add_option("--dir", corpus_dir, "Read the catalogue from a directory");
  corpus_run->add_flag("--json", json, "JSON output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "namecalc 1.0.0\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (decide_cmd->parsed()) {
      Formula f = parse_formula(inline_or_file(formula_text));
      ModelClass c = *class_from_tag(class_name);
      Verdict v = oracle_size > 0 ? oracle_decide(f, c, oracle_size) : decide(f, c);
      if (json) {
        Json j = versioned("decide");
        j["formula"] = format_formula(f);
        j["class"] = class_name;
        j["valid"] = v.valid;
        if (v.countermodel) j["countermodel"] = model_json(*v.countermodel);
        out << j.dump() << '\n';
      } else if (v.valid) {
        out << "VALID\n";
      } else {
        out << format_model(*v.countermodel) << '\n';
      }
      return v.valid ? kOk : kRejected;
    }

    if (eval_cmd->parsed()) {
      Model m = parse_model(read_file(model_file));
      Formula f = parse_formula(inline_or_file(formula_text));
      bool value = eval(m, f);
      if (json) {
        Json j = versioned("eval");
        j["formula"] = format_formula(f);
        j["value"] = value;
        out << j.dump() << '\n';
      } else {
        out << (value ? "true" : "false") << '\n';
      }
      return value ? kOk : kRejected;
    }

    if (check_cmd->parsed()) {
      auto id = system_from_tag(system_name);
      if (!id) {
        err << "error: unknown system '" << system_name << "'\n";
        return kUsage;
      }
      ProofScript script = parse_proof_script(read_file(script_file));
      CheckReport r = check_proof(system_spec(*id).with_substitution(!no_substitution), script);
      return print_report(r, json, "check", out);
    }

    if (seq_cmd->parsed()) {
      SequentScript script = parse_sequent_script(read_file(script_file));
      CheckReport r = check_sequent_proof(script);
      if (json) {
        Json j = versioned("sequent-check");
        j.update(report_json(r));
        if (show_expansions) {
          j["expansions"] = Json::array();
          for (const auto& [line, text] : r.expansions) j["expansions"].push_back({{"line", line}, {"script", text}});
        }
        out << j.dump() << '\n';
        return r.accepted ? kOk : kRejected;
      }
      int code = print_report(r, false, "sequent-check", out);
      if (show_expansions)
        for (const auto& [line, text] : r.expansions) out << "# expansion of line " << line << '\n' << text;
      return code;
    }

    if (smiley_cmd->parsed()) {
      DeductionScript script = parse_deduction_script(read_file(script_file));
      return print_report(check_smiley_deduction(script), json, "smiley-check", out);
    }

    if (canon_cmd->parsed()) {
      Model m = parse_model(read_file(model_file));
      SystemId sys = system_name == "sh" ? SystemId::SH : system_name == "luk" ? SystemId::LUK : SystemId::SHIS_I;
      std::vector<Letter> vocab;
      if (vocab_text.empty())
        for (const auto& [l, unused] : m.denotations()) vocab.push_back(l);
      else
        vocab = parse_vocab(vocab_text);
      Model canonical = canonical_model(m, vocab, sys, *canonical_method_from_tag(method_name),
                                        nonmono ? CanonicalVariant::NonMonoreferential : CanonicalVariant::Standard);
      std::vector<std::string> disagreements;
      for (auto f : canonical_functors(sys))
        for (const auto& s : vocab)
          for (const auto& p : vocab) {
            Formula a = atom(f, s, p);
            if (eval(m, a) != eval(canonical, a)) disagreements.push_back(format_formula(a));
          }
      if (json) {
        Json j = versioned("canonical");
        j["model"] = model_json(canonical);
        j["agrees"] = disagreements.empty();
        j["disagreements"] = disagreements;
        out << j.dump() << '\n';
      } else {
        out << format_model(canonical) << '\n';
        for (const auto& d : disagreements) err << "disagrees on " << d << '\n';
      }
      return disagreements.empty() ? kOk : kRejected;
    }

    if (rep_cmd->parsed()) {
      RelationalStructure s = parse_structure(read_file(structure_file));
      StructureKind kind = *structure_kind_from_tag(kind_name);
      auto violations = verify_structure(s, kind);
      if (!violations.empty()) {
        if (json) {
          Json j = versioned("represent");
          j["violations"] = Json::array();
          for (const auto& v : violations) j["violations"].push_back({{"condition", v.condition}, {"witness", v.witness}});
          out << j.dump() << '\n';
        } else {
          for (const auto& v : violations) {
            out << "violates " << v.condition << " at";
            for (const auto& w : v.witness) out << ' ' << w;
            out << '\n';
          }
        }
        return kRejected;
      }
      Representation r = represent(s, kind);
      auto point_name = [&](std::size_t p) {
        if (p >= r.isets.size()) return s.carrier[p - r.isets.size()];
        std::string name = "{";
        for (auto x : r.isets[p]) name += (name.size() > 1 ? "," : "") + s.carrier[x];
        return name + "}";
      };
      if (json) {
        Json j = versioned("represent");
        Json images = Json::object();
        for (std::size_t a = 0; a < s.size(); ++a) {
          Json pts = Json::array();
          for (auto p : r.image[a]) pts.push_back(point_name(p));
          images[s.carrier[a]] = pts;
        }
        j["images"] = images;
        j["ok"] = r.report.ok();
        j["failures"] = r.report.failures;
        out << j.dump() << '\n';
      } else {
        for (std::size_t a = 0; a < s.size(); ++a) {
          out << "e(" << s.carrier[a] << ") =";
          for (auto p : r.image[a]) out << ' ' << point_name(p);
          out << '\n';
        }
        out << (r.report.ok() ? "REPRESENTED\n" : "NOT REPRESENTED\n");
        for (const auto& f : r.report.failures) out << "fails: " << f << '\n';
      }
      return r.report.ok() ? kOk : kRejected;
    }

    if (tr_cmd->parsed()) {
      Formula f = parse_formula(inline_or_file(formula_text));
      Formula g = expand_definitions(f, basis_name == "ai" ? Basis::AI : Basis::KAI);
      if (json) {
        Json j = versioned("translate");
        j["formula"] = format_formula(f);
        j["translation"] = format_formula(g);
        out << j.dump() << '\n';
      } else {
        out << format_formula(g) << '\n';
      }
      return kOk;
    }

    if (corpus_run->parsed()) {
      Corpus loaded;
      const Corpus& corpus = corpus_dir.empty() ? builtin_corpus() : (loaded = load_corpus(corpus_dir));
      CorpusSelection sel;
      if (!section.empty()) {
        auto groups = corpus.groups();
        if (std::find(groups.begin(), groups.end(), section) == groups.end()) {
          err << "error: unknown section '" << section << "'\n";
          return kUsage;
        }
        sel.group = section;
      }
      CorpusReport r = run_corpus(corpus, sel);
      if (json) {
        Json j = versioned("corpus run");
        j["entries"] = r.entries;
        j["verdicts"] = r.verdicts;
        j["scripts"] = r.scripts;
        j["groups"] = r.group_counts;
        j["mismatches"] = Json::array();
        for (const auto& m : r.mismatches) j["mismatches"].push_back({{"entry", m.entry}, {"detail", m.detail}});
        out << j.dump() << '\n';
      } else {
        out << "group                entries\n";
        for (const auto& [g, n] : r.group_counts) {
          std::string name = g;
          name.resize(std::max<std::size_t>(name.size() + 1, 21), ' ');
          out << name << n << '\n';
        }
        out << "entries " << r.entries << ", verdicts " << r.verdicts << ", scripts " << r.scripts << ", mismatches "
            << r.mismatches.size() << '\n';
        for (const auto& m : r.mismatches) out << "MISMATCH " << m.entry << ": " << m.detail << '\n';
      }
      return r.ok() ? kOk : kRejected;
    }
  } catch (const GuardError& e) {
    err << "error: guard " << e.guard() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace namecalc::cli
