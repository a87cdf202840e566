#include "namecalc/systems.hpp"

#include <algorithm>

#include "namecalc/errors.hpp"
#include "namecalc/parser.hpp"

namespace namecalc {

namespace {

struct SchemaText {
  const char* name;
  const char* text;
};

constexpr SchemaText kSchemaTable[] = {
    // Łukasiewicz and Shepherdson
    {"Ia", "a(S,S)"},
    {"Ii", "i(S,S)"},
    {"Barbara", "(a(M,P) & a(S,M)) -> a(S,P)"},
    {"Datisi", "(a(M,P) & i(M,S)) -> i(S,P)"},
    {"cIi", "i(S,P) -> i(S,S)"},
    {"nES", "~i(S,S) -> a(S,P)"},
    // Definitions
    {"df_e", "e(S,P) <-> ~i(S,P)"},
    {"df_o", "o(S,P) <-> ~a(S,P)"},
    {"df_ex", "ex(S) <-> i(S,S)"},
    {"df_ka", "ka(S,P) <-> ex(S) & a(S,P)"},
    {"df_ceq", "ceq(S,P) <-> a(S,P) & a(P,S)"},
    {"df_deq", "deq(S,P) <-> ka(S,P) & ka(P,S)"},
    {"df_ke", "ke(S,P) <-> ex(S) & e(S,P)"},
    {"df_kke", "kke(S,P) <-> ex(S) & ex(P) & e(S,P)"},
    {"df_ot", "ot(S,P) <-> ~ka(S,P)"},
    {"df_a", "a(S,P) <-> ~ka(S,S) | ka(S,P)"},
    {"df_neps", "neps(S,P) <-> eps(S,S) & ~eps(S,P)"},
    {"df_ideq", "ideq(S,P) <-> eps(S,P) & eps(P,S)"},
    // Słupecki
    {"Ci", "i(P,S) -> i(S,P)"},
    {"kaSi", "ka(S,P) -> i(S,P)"},
    {"Barbara_k", "(ka(M,P) & ka(S,M)) -> ka(S,P)"},
    {"Darii_k", "(ka(M,P) & i(S,M)) -> i(S,P)"},
    {"Datisi_k", "(ka(M,P) & i(M,S)) -> i(S,P)"},
    {"dagger", "i(S,P) -> ka(S,S)"},
    {"ddagger", "ka(S,P) -> i(S,S)"},
    // Ishimoto
    {"Ish1", "eps(S,P) -> eps(S,S)"},
    {"Ish2", "(eps(M,P) & eps(S,M)) -> eps(S,P)"},
    {"Ish3", "(eps(P,S) & eps(S,M)) -> eps(S,P)"},
    // Shepherdson with the copula
    {"isSa", "eps(S,P) -> a(S,P)"},
    {"isSi", "eps(S,S) -> i(S,S)"},
    {"moje", "(a(S,M) & eps(M,M) & i(S,P)) -> eps(S,P)"},
    {"eq4", "(eps(S,S) & a(S,P)) -> eps(S,P)"},
    {"eq5", "(eps(S,S) & i(S,P)) -> a(S,P)"},
    {"eq6", "(a(S,P) & i(S,S) & eps(P,P)) -> eps(S,S)"},
    {"eq7", "(i(S,P) & eps(S,S)) -> eps(S,P)"},
    {"eqIV", "(a(S,P) & eps(P,S)) -> eps(S,S)"},
    // Strong-basis counterparts
    {"kj", "eps(S,P) -> ka(S,P)"},
    {"kt", "(ka(S,M) & eps(M,M) & i(S,P)) -> eps(S,P)"},
};

std::vector<AxiomSchema> build_schemas() {
  std::vector<AxiomSchema> out;
  for (const auto& row : kSchemaTable) out.push_back({row.name, parse_formula(row.text)});
  return out;
}

std::vector<AxiomSchema> pick(std::initializer_list<const char*> names) {
  std::vector<AxiomSchema> out;
  for (const char* n : names) out.push_back(schema(n));
  return out;
}

SystemSpec make(SystemId id, std::string tag, std::initializer_list<const char*> schemas,
                std::initializer_list<const char*> defs, std::initializer_list<const char*> extensions,
                std::vector<ModelClass> classes, bool strong) {
  return SystemSpec{id, std::move(tag), pick(schemas), pick(defs), pick(extensions), std::move(classes), strong, true};
}

std::vector<SystemSpec> build_systems() {
  using MC = ModelClass;
  const std::vector<MC> traditional = {MC::Traditional, MC::Polyreferential};
  const std::vector<MC> all = {MC::All, MC::NonMonoreferential};
  const std::vector<MC> all_only = {MC::All};
  const auto sh_ext = {"df_ex", "df_ka", "df_ceq", "df_deq", "df_ke", "df_kke"};
  const auto slu_ext = {"df_a", "df_o", "df_ex", "df_ceq", "df_deq", "df_ke", "df_kke"};
  const auto eps_ext = {"df_ex", "df_ka", "df_ceq", "df_deq", "df_ke", "df_kke", "df_neps", "df_ideq"};
  const auto kais_ext = {"df_a", "df_o", "df_ex", "df_ceq", "df_deq", "df_ke", "df_kke", "df_neps", "df_ideq"};

  std::vector<SystemSpec> v;
  v.push_back(make(SystemId::LUK, "luk", {"Ia", "Ii", "Barbara", "Datisi"}, {"df_e", "df_o"}, {}, traditional, false));
  v.push_back(make(SystemId::SH, "sh", {"Ia", "Barbara", "Datisi", "cIi", "nES"}, {"df_e", "df_o"}, sh_ext, all, false));
  v.push_back(make(SystemId::SLU, "slu", {"Ci", "kaSi", "Barbara_k", "Darii_k"}, {"df_e", "df_ot"}, slu_ext, all_only,
                   true));
  v.push_back(make(SystemId::SLU_A, "slu-a", {"Ci", "kaSi", "Barbara_k", "Darii_k", "dagger"}, {"df_e", "df_ot"},
                   slu_ext, all_only, true));
  v.push_back(make(SystemId::SLU_B, "slu-b", {"Ci", "Barbara_k", "Darii_k", "dagger", "ddagger"}, {"df_e", "df_ot"},
                   slu_ext, all_only, true));
  v.push_back(make(SystemId::SLU_C, "slu-c", {"kaSi", "Barbara_k", "dagger", "Datisi_k"}, {"df_e", "df_ot"}, slu_ext,
                   all_only, true));
  v.push_back(make(SystemId::SLU_D, "slu-d", {"Barbara_k", "Datisi_k", "dagger", "ddagger"}, {"df_e", "df_ot"}, slu_ext,
                   all_only, true));
  v.push_back(make(SystemId::ONTO, "onto", {"Ish1", "Ish2", "Ish3"}, {}, {"df_neps", "df_ideq"}, all_only, false));
  const auto sh_axioms = {"Ia", "Barbara", "Datisi", "cIi", "nES"};
  auto shis = [&](SystemId id, std::string tag, std::initializer_list<const char*> group) {
    std::vector<const char*> names(sh_axioms);
    names.insert(names.end(), group);
    SystemSpec s = make(id, std::move(tag), {}, {"df_e", "df_o"}, eps_ext, all_only, false);
    for (const char* n : names) s.schemas.push_back(schema(n));
    return s;
  };
  v.push_back(shis(SystemId::SHIS_I, "shis1", {"Ish1", "isSa", "isSi", "moje"}));
  v.push_back(shis(SystemId::SHIS_II, "shis2", {"Ish1", "isSa", "isSi", "eq4", "eq5", "eq6"}));
  v.push_back(shis(SystemId::SHIS_III, "shis3", {"Ish1", "isSa", "isSi", "eq6", "eq7"}));
  v.push_back(shis(SystemId::SHIS_IV, "shis4", {"Ish1", "isSa", "isSi", "eq7", "eqIV"}));
  auto kais = [&](SystemId id, std::string tag, SystemId base) {
    SystemSpec s = v[static_cast<std::size_t>(base)];
    s.id = id;
    s.tag = std::move(tag);
    for (auto& extra : pick({"Ish1", "kj", "kt"})) s.schemas.push_back(extra);
    s.extensions = pick(kais_ext);
    return s;
  };
  v.push_back(kais(SystemId::KAIS_A, "kais-a", SystemId::SLU_A));
  v.push_back(kais(SystemId::KAIS_B, "kais-b", SystemId::SLU_B));
  v.push_back(kais(SystemId::KAIS_C, "kais-c", SystemId::SLU_C));
  v.push_back(kais(SystemId::KAIS_D, "kais-d", SystemId::SLU_D));
  return v;
}

}  // namespace

std::string_view class_tag(ModelClass c) {
  switch (c) {
    case ModelClass::All: return "all";
    case ModelClass::Traditional: return "trad";
    case ModelClass::Polyreferential: return "poly";
    case ModelClass::NonMonoreferential: return "nonmono";
  }
  return "?";
}

std::optional<ModelClass> class_from_tag(std::string_view tag) {
  for (auto c : kAllClasses)
    if (class_tag(c) == tag) return c;
  return std::nullopt;
}

bool is_schema_letter(const Letter& l) {
  const auto& id = l.id();
  return id == "S" || id == "P" || id == "M" || id == "Q";
}

const std::vector<AxiomSchema>& all_schemas() {
  static const std::vector<AxiomSchema> table = build_schemas();
  return table;
}

const AxiomSchema* find_schema(std::string_view name) {
  const auto& table = all_schemas();
  auto it = std::find_if(table.begin(), table.end(), [&](const AxiomSchema& s) { return s.name == name; });
  return it == table.end() ? nullptr : &*it;
}

const AxiomSchema& schema(std::string_view name) {
  const auto* s = find_schema(name);
  if (!s) throw Error("unknown schema '" + std::string(name) + "'");
  return *s;
}

SystemSpec SystemSpec::with_substitution(bool enabled) const {
  SystemSpec copy = *this;
  copy.substitution_rule_enabled = enabled;
  return copy;
}

const std::vector<SystemSpec>& all_systems() {
  static const std::vector<SystemSpec> table = build_systems();
  return table;
}

const SystemSpec& system_spec(SystemId id) { return all_systems()[static_cast<std::size_t>(id)]; }

std::optional<SystemId> system_from_tag(std::string_view tag) {
  for (const auto& s : all_systems())
    if (s.tag == tag) return s.id;
  return std::nullopt;
}

std::vector<AxiomSchema> axioms_of(const SystemSpec& sys) {
  std::vector<AxiomSchema> out = sys.schemas;
  out.insert(out.end(), sys.definitions.begin(), sys.definitions.end());
  return out;
}

}  // namespace namecalc
