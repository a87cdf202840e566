#include "namecalc/representation.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "namecalc/errors.hpp"

namespace namecalc {

namespace {

using Json = nlohmann::ordered_json;

RelationalStructure::Relation read_relation(const Json& j, const std::map<std::string, std::size_t>& index,
                                            const char* name) {
  if (!j.is_array()) throw ParseError(std::string("\"") + name + "\" must be an array of pairs", {0, 0});
  RelationalStructure::Relation out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      throw ParseError(std::string("\"") + name + "\" entries must be [x, y] element names", {0, 0});
    auto x = index.find(pair[0].get<std::string>());
    auto y = index.find(pair[1].get<std::string>());
    if (x == index.end() || y == index.end())
      throw ParseError(std::string("\"") + name + "\" names an element outside the carrier", {0, 0});
    out.emplace(x->second, y->second);
  }
  return out;
}

Json write_relation(const RelationalStructure& s, const RelationalStructure::Relation& r) {
  Json out = Json::array();
  for (const auto& [x, y] : r) out.push_back(Json::array({s.carrier[x], s.carrier[y]}));
  return out;
}

void check_carrier(const RelationalStructure& s) {
  if (s.size() > kCarrierLimit)
    throw GuardError("carrier-size", std::to_string(s.size()) + " elements exceed the limit of " +
                                         std::to_string(kCarrierLimit));
}

bool contains(const ElementSet& f, std::size_t x) { return std::binary_search(f.begin(), f.end(), x); }

bool subset(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

bool meets(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i;
    else ++j;
  }
  return false;
}

std::string letters_name(const std::vector<Letter>& ls) {
  std::string out;
  for (const auto& l : ls) out += (out.empty() ? "" : ",") + l.id();
  return out;
}

}  // namespace

RelationalStructure parse_structure(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed structure JSON: ") + e.what(), {e.byte, e.byte});
  }
  if (!j.is_object() || !j.contains("carrier") || !j["carrier"].is_array())
    throw ParseError("structure JSON needs a \"carrier\" array", {0, 0});
  RelationalStructure s;
  std::map<std::string, std::size_t> index;
  for (const auto& x : j["carrier"]) {
    if (!x.is_string()) throw ParseError("carrier elements must be strings", {0, 0});
    auto name = x.get<std::string>();
    if (!index.emplace(name, s.carrier.size()).second)
      throw ParseError("duplicate carrier element '" + name + "'", {0, 0});
    s.carrier.push_back(name);
  }
  if (s.carrier.empty()) throw ParseError("the carrier must be nonempty", {0, 0});
  s.A = read_relation(j.value("A", Json::array()), index, "A");
  s.I = read_relation(j.value("I", Json::array()), index, "I");
  if (j.contains("eps")) s.eps = read_relation(j["eps"], index, "eps");
  return s;
}

std::string format_structure(const RelationalStructure& s) {
  Json j;
  j["carrier"] = s.carrier;
  j["A"] = write_relation(s, s.A);
  j["I"] = write_relation(s, s.I);
  if (s.eps) j["eps"] = write_relation(s, *s.eps);
  return j.dump();
}

std::string_view structure_kind_tag(StructureKind k) {
  switch (k) {
    case StructureKind::B1: return "b1";
    case StructureKind::B3: return "b3";
    case StructureKind::C: return "c";
  }
  return "b1";
}

std::optional<StructureKind> structure_kind_from_tag(std::string_view tag) {
  for (auto k : {StructureKind::B1, StructureKind::B3, StructureKind::C})
    if (structure_kind_tag(k) == tag) return k;
  return std::nullopt;
}

std::vector<Violation> verify_structure(const RelationalStructure& s, StructureKind kind) {
  std::vector<Violation> out;
  const std::size_t n = s.size();
  auto report = [&](const char* name, std::initializer_list<std::size_t> xs) {
    Violation v{name, {}};
    for (auto x : xs) v.witness.push_back(s.carrier[x]);
    out.push_back(std::move(v));
  };
  for (std::size_t a = 0; a < n; ++a) {
    if (!s.a(a, a)) report("B1", {a});
    if (kind == StructureKind::B3 && !s.i(a, a)) report("Iaa", {a});
    if (kind == StructureKind::C) {
      if (s.e(a, a) && !s.i(a, a)) report("C2", {a});
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (kind != StructureKind::B3) {
        if (s.i(a, b) && !s.i(a, a)) report("B4", {a, b});
        if (!s.i(a, a) && !s.a(a, b)) report("B5", {a, b});
      }
      if (kind == StructureKind::C) {
        if (s.e(a, b) && !s.e(a, a)) report("C0", {a, b});
        if (s.e(a, b) && !s.a(a, b)) report("C1", {a, b});
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (s.a(a, b) && s.a(b, c) && !s.a(a, c)) report("B2", {a, b, c});
        if (s.a(a, b) && s.i(a, c) && !s.i(c, b)) report("B3", {a, b, c});
        if (kind == StructureKind::C && s.a(a, c) && s.e(c, c) && s.i(a, b) && !s.e(a, b))
          report("C4", {a, b, c});
      }
    }
  }
  return out;
}

bool is_i_set(const RelationalStructure& s, const ElementSet& f) {
  if (f.empty()) return false;
  for (auto a : f) {
    for (std::size_t b = 0; b < s.size(); ++b)
      if (s.a(a, b) && !contains(f, b)) return false;
    for (auto b : f)
      if (!s.i(a, b)) return false;
  }
  return true;
}

std::vector<ElementSet> i_sets(const RelationalStructure& s) {
  check_carrier(s);
  std::vector<ElementSet> out;
  const std::size_t n = s.size();
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    ElementSet f;
    for (std::size_t x = 0; x < n; ++x)
      if (mask >> x & 1U) f.push_back(x);
    if (is_i_set(s, f)) out.push_back(std::move(f));
  }
  return out;
}

std::optional<ElementSet> bracket(const RelationalStructure& s, std::size_t a, std::size_t b) {
  if (!s.i(a, b)) return std::nullopt;
  ElementSet f;
  for (std::size_t c = 0; c < s.size(); ++c)
    if (s.a(a, c) || s.a(b, c)) f.push_back(c);
  return f;
}

Representation represent(const RelationalStructure& s, StructureKind kind) {
  auto violations = verify_structure(s, kind);
  if (!violations.empty())
    throw PreconditionError("structure violates " + violations.front().condition + " for kind " +
                            std::string(structure_kind_tag(kind)));
  Representation r;
  r.isets = i_sets(s);
  const std::size_t n = s.size();
  const bool c_kind = kind == StructureKind::C;
  if (c_kind) r.carrier_points = n;
  r.image.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t p = 0; p < r.isets.size(); ++p)
      if (contains(r.isets[p], a)) r.image[a].push_back(p);
    if (c_kind && !s.e(a, a))
      for (std::size_t c = 0; c < n; ++c)
        if (s.i(c, c) && s.a(c, a)) r.image[a].push_back(r.isets.size() + c);
  }

  auto& rep = r.report;
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    rep.failures.push_back(what);
  };
  bool eps_ok = true;
  bool nonempty = true;
  for (std::size_t a = 0; a < n; ++a) {
    if (kind == StructureKind::B3 && r.image[a].empty()) fail(nonempty, "e(" + s.carrier[a] + ") is empty");
    for (std::size_t b = 0; b < n; ++b) {
      const std::string pair = "(" + s.carrier[a] + "," + s.carrier[b] + ")";
      if (s.a(a, b) != subset(r.image[a], r.image[b])) fail(rep.a_is_inclusion, "A" + pair + " versus inclusion");
      if (s.i(a, b) != meets(r.image[a], r.image[b])) fail(rep.i_is_overlap, "I" + pair + " versus overlap");
      if (c_kind && s.e(a, b) != (r.image[a].size() == 1 && subset(r.image[a], r.image[b])))
        fail(eps_ok, "eps" + pair + " versus singleton inclusion");
    }
  }
  if (c_kind) rep.eps_is_singleton_inclusion = eps_ok;
  if (kind == StructureKind::B3) rep.images_nonempty = nonempty;
  return r;
}

RelationalStructure harvest_structure(const Model& m, const std::vector<Letter>& vocab, bool with_eps) {
  RelationalStructure s;
  for (const auto& l : vocab) s.carrier.push_back(l.id());
  if (with_eps) s.eps.emplace();
  for (std::size_t x = 0; x < vocab.size(); ++x)
    for (std::size_t y = 0; y < vocab.size(); ++y) {
      if (eval(m, atom(Functor::A, vocab[x], vocab[y]))) s.A.emplace(x, y);
      if (eval(m, atom(Functor::I, vocab[x], vocab[y]))) s.I.emplace(x, y);
      if (with_eps && eval(m, atom(Functor::EPS, vocab[x], vocab[y]))) s.eps->emplace(x, y);
    }
  return s;
}

DiagramTheory::DiagramTheory(Model m, std::vector<Letter> vocab) : model_(std::move(m)), vocab_(std::move(vocab)) {
  std::sort(vocab_.begin(), vocab_.end());
  vocab_.erase(std::unique(vocab_.begin(), vocab_.end()), vocab_.end());
}

bool DiagramTheory::holds(Functor f, const Letter& s, const Letter& p) const { return eval(model_, atom(f, s, p)); }

bool DiagramTheory::is_filter(const std::vector<Letter>& letters) const {
  if (letters.empty()) return false;
  auto member = [&](const Letter& l) { return std::find(letters.begin(), letters.end(), l) != letters.end(); };
  for (const auto& s : letters) {
    for (const auto& p : vocab_)
      if (holds(Functor::A, s, p) && !member(p)) return false;
    for (const auto& p : letters)
      if (!holds(Functor::I, s, p)) return false;
  }
  return true;
}

std::vector<std::vector<Letter>> DiagramTheory::filters() const {
  const std::size_t k = vocab_.size();
  if (k > kCanonicalVocabLimit)
    throw GuardError("vocab-size", std::to_string(k) + " letters exceed the limit of " +
                                       std::to_string(kCanonicalVocabLimit));
  std::vector<std::vector<Letter>> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    std::vector<Letter> f;
    for (std::size_t x = 0; x < k; ++x)
      if (mask >> x & 1U) f.push_back(vocab_[x]);
    if (is_filter(f)) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Letter> DiagramTheory::bracket(const Letter& s, const Letter& p) const {
  std::vector<Letter> out;
  for (const auto& m : vocab_)
    if (holds(Functor::A, s, m) || holds(Functor::A, p, m)) out.push_back(m);
  return out;
}

bool DiagramTheory::equivalent(const Letter& s, const Letter& p) const {
  return holds(Functor::A, s, p) && holds(Functor::A, p, s);
}

std::vector<Letter> DiagramTheory::block(const Letter& s) const {
  std::vector<Letter> out;
  for (const auto& m : vocab_)
    if (equivalent(s, m)) out.push_back(m);
  return out;
}

std::optional<CanonicalMethod> canonical_method_from_tag(std::string_view tag) {
  if (tag == "filters") return CanonicalMethod::Filters;
  if (tag == "pairs") return CanonicalMethod::Pairs;
  return std::nullopt;
}

std::vector<Functor> canonical_functors(SystemId sys) {
  std::vector<Functor> out = {Functor::A, Functor::I, Functor::E, Functor::O};
  if (sys != SystemId::SH && sys != SystemId::LUK) out.push_back(Functor::EPS);
  return out;
}

Model canonical_model(const Model& m, const std::vector<Letter>& vocab_in, SystemId sys, CanonicalMethod method,
                      CanonicalVariant variant) {
  const bool shis = sys == SystemId::SHIS_I || sys == SystemId::SHIS_II || sys == SystemId::SHIS_III ||
                    sys == SystemId::SHIS_IV;
  if (!shis && sys != SystemId::SH && sys != SystemId::LUK)
    throw PreconditionError("canonical models are built for luk, sh and shis");
  if (shis && variant == CanonicalVariant::NonMonoreferential)
    throw PreconditionError("the non-monoreferential variant applies to luk and sh");
  const DiagramTheory g(m, vocab_in);
  const auto& vocab = g.vocab();
  if (sys == SystemId::LUK && !in_class(m, ModelClass::Traditional, {vocab.begin(), vocab.end()}))
    throw PreconditionError("luk canonical models need a traditional input model");
  if (vocab.size() > kCanonicalVocabLimit)
    throw GuardError("vocab-size", std::to_string(vocab.size()) + " letters exceed the limit of " +
                                       std::to_string(kCanonicalVocabLimit));

  auto A = [&](const Letter& s, const Letter& p) { return g.holds(Functor::A, s, p); };
  auto I = [&](const Letter& s, const Letter& p) { return g.holds(Functor::I, s, p); };
  auto EPS = [&](const Letter& s) { return g.holds(Functor::EPS, s, s); };
  const bool letters_clause = shis || variant == CanonicalVariant::NonMonoreferential;

  Model out;
  std::map<Letter, std::vector<std::size_t>> den;
  // Letters M with (M i M): points of the SHIS-style universes.
  std::map<Letter, std::size_t> letter_point;
  if (letters_clause)
    for (const auto& l : vocab)
      if (I(l, l)) letter_point.emplace(l, 0);

  if (method == CanonicalMethod::Filters) {
    for (const auto& f : g.filters()) {
      std::size_t id = out.add_element("[" + letters_name(f) + "]");
      for (const auto& l : f) den[l].push_back(id);
    }
    for (auto& [l, id] : letter_point) id = out.add_element(l.id());
    for (const auto& l : vocab) {
      if (shis && EPS(l)) continue;
      for (const auto& [mm, id] : letter_point)
        if (A(mm, l)) den[l].push_back(id);
    }
  } else {
    for (std::size_t x = 0; x < vocab.size(); ++x)
      for (std::size_t y = x; y < vocab.size(); ++y) {
        const Letter& mm = vocab[x];
        const Letter& q = vocab[y];
        if (!I(mm, q)) continue;
        std::size_t id = out.add_element("{" + (x == y ? mm.id() : mm.id() + "," + q.id()) + "}");
        for (const auto& l : vocab)
          if ((A(mm, l) || A(q, l)) && !(shis && EPS(l))) den[l].push_back(id);
      }
    if (shis) {
      std::map<std::vector<Letter>, std::size_t> blocks;
      for (const auto& [mm, unused] : letter_point) {
        auto b = g.block(mm);
        if (!blocks.count(b)) blocks.emplace(b, out.add_element("||" + letters_name(b) + "||"));
      }
      // ‖M‖ ∈ D(L) iff M a L; the ε case keeps only these.
      for (const auto& l : vocab)
        for (const auto& [mm, unused] : letter_point)
          if (A(mm, l)) den[l].push_back(blocks.at(g.block(mm)));
    }
    for (auto& [l, id] : letter_point) id = out.add_element(l.id());
    for (const auto& l : vocab) {
      if (shis && EPS(l)) continue;
      for (const auto& [mm, id] : letter_point)
        if (A(mm, l)) den[l].push_back(id);
    }
  }
  for (const auto& l : vocab) out.set_denotation(l, den[l]);
  return out;
}

Model canonical_model(const Model& m, SystemId sys, CanonicalMethod method, CanonicalVariant variant) {
  std::vector<Letter> vocab;
  for (const auto& [l, unused] : m.denotations()) vocab.push_back(l);
  return canonical_model(m, vocab, sys, method, variant);
}

}  // namespace namecalc
