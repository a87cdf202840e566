#include "namecalc/parser.hpp"

#include <cctype>
#include <json.hpp>

namespace namecalc {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool name_char(char c) { return ident_char(c) || c == '-'; }

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t begin, std::size_t end) : text_(text), pos_(begin), end_(end) {}
  explicit Cursor(std::string_view text) : Cursor(text, 0, text.size()) {}

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < end_ && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= end_;
  }

  bool looking_at(std::string_view tok) {
    skip_ws();
    return end_ - pos_ >= tok.size() && text_.substr(pos_, tok.size()) == tok;
  }

  bool try_consume(std::string_view tok) {
    if (!looking_at(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (try_consume(tok)) return;
    fail("expected '" + std::string(tok) + "'" + found());
  }

  void expect_end() {
    if (!at_end()) fail("unexpected input" + found());
  }

  [[noreturn]] void fail(const std::string& message) { fail_at(message, pos_, token_end()); }

  [[noreturn]] static void fail_at(const std::string& message, std::size_t start, std::size_t end) {
    throw ParseError(message, SourceSpan{start, end});
  }

  std::string_view word(bool (*accept)(char)) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < end_ && accept(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::size_t number() {
    skip_ws();
    std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1'000'000'000) fail_at("line number too large", start, pos_);
      ++pos_;
    }
    if (start == pos_) fail("expected a line number" + found());
    return value;
  }

  bool looking_at_number() {
    skip_ws();
    return pos_ < end_ && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string name() {
    std::size_t start = (skip_ws(), pos_);
    auto w = word(name_char);
    if (w.empty() || !ident_start(w[0])) fail_at("expected a name" + found_at(start), start, token_end_from(start));
    return std::string(w);
  }

  Letter letter() {
    std::size_t start = (skip_ws(), pos_);
    auto w = word(ident_char);
    if (w.empty() || !Letter::valid_id(w)) {
      pos_ = start;
      fail("expected a name letter" + found());
    }
    return Letter(std::string(w));
  }

  Formula formula() { return iff_level(); }

  Substitution substitution() {
    Substitution s;
    expect("[");
    if (try_consume("]")) return s;
    std::set<Letter> seen;
    do {
      std::size_t start = (skip_ws(), pos_);
      Letter from = letter();
      expect(":=");
      Letter to = letter();
      if (!seen.insert(from).second) fail_at("letter substituted twice", start, pos_);
      s.set(from, to);
    } while (try_consume(","));
    expect("]");
    return s;
  }

  Substitution optional_substitution() {
    if (looking_at("[")) return substitution();
    return {};
  }

  /// Premise list up to (and including) `arrow`.
  std::vector<Formula> premises(std::string_view arrow) {
    std::vector<Formula> out;
    if (try_consume(arrow)) return out;
    do {
      out.push_back(formula());
    } while (try_consume(","));
    expect(arrow);
    return out;
  }

 private:
  std::string found() { return found_at(pos_); }

  std::string found_at(std::size_t at) {
    if (at >= end_) return ", found end of input";
    return ", found '" + std::string(text_.substr(at, token_end_from(at) - at)) + "'";
  }

  std::size_t token_end() { return token_end_from(pos_); }

  std::size_t token_end_from(std::size_t at) const {
    if (at >= end_) return at;
    std::size_t e = at;
    if (ident_char(text_[e])) {
      while (e < end_ && ident_char(text_[e])) ++e;
    } else {
      ++e;
    }
    return e;
  }

  Formula iff_level() {
    Formula acc = imp_level();
    while (try_consume("<->")) acc = iff(acc, imp_level());
    return acc;
  }

  Formula imp_level() {
    Formula lhs = or_level();
    if (try_consume("->")) return imp(lhs, imp_level());
    return lhs;
  }

  Formula or_level() {
    Formula acc = and_level();
    while (looking_at("|") && !looking_at("|-")) {
      ++pos_;
      acc = disj(acc, and_level());
    }
    return acc;
  }

  Formula and_level() {
    Formula acc = neg_level();
    while (try_consume("&")) acc = conj(acc, neg_level());
    return acc;
  }

  Formula neg_level() {
    if (try_consume("~")) return neg(neg_level());
    if (try_consume("(")) {
      Formula inner = formula();
      expect(")");
      return inner;
    }
    return atom_level();
  }

  Formula atom_level() {
    std::size_t start = (skip_ws(), pos_);
    auto tag = word(ident_char);
    if (tag.empty()) {
      pos_ = start;
      fail("expected a formula" + found());
    }
    auto f = functor_from_tag(tag);
    if (!f) fail_at("unknown functor '" + std::string(tag) + "'", start, pos_);
    expect("(");
    Letter subject = letter();
    if (arity(*f) == 1) {
      if (looking_at(",")) fail("'" + std::string(tag) + "' takes one letter");
      expect(")");
      return Formula::ex(subject);
    }
    if (looking_at(")")) fail("'" + std::string(tag) + "' takes two letters");
    expect(",");
    Letter predicate = letter();
    if (looking_at(",")) fail("'" + std::string(tag) + "' takes two letters");
    expect(")");
    return atom(*f, subject, predicate);
  }

  std::string_view text_;
  std::size_t pos_;
  std::size_t end_;
};

int precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return 6;
    case Formula::Kind::Neg: return 5;
    case Formula::Kind::Bin:
      switch (f.connective()) {
        case Connective::Iff: return 1;
        case Connective::Imp: return 2;
        case Connective::Or: return 3;
        case Connective::And: return 4;
      }
  }
  return 0;
}

void format_into(const Formula& f, std::string& out);

void format_wrapped(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  format_into(f, out);
  if (parens) out += ')';
}

void format_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += functor_tag(f.functor());
      out += '(';
      out += f.subject().id();
      if (f.functor() != Functor::EX) {
        out += ',';
        out += f.predicate().id();
      }
      out += ')';
      return;
    case Formula::Kind::Neg:
      out += '~';
      format_wrapped(f.operand(), precedence(f.operand()) < 5, out);
      return;
    case Formula::Kind::Bin: {
      int p = precedence(f);
      bool right_assoc = f.connective() == Connective::Imp;
      format_wrapped(f.lhs(), right_assoc ? precedence(f.lhs()) <= p : precedence(f.lhs()) < p, out);
      out += ' ';
      out += connective_token(f.connective());
      out += ' ';
      format_wrapped(f.rhs(), right_assoc ? precedence(f.rhs()) < p : precedence(f.rhs()) <= p, out);
      return;
    }
  }
}

struct RawLine {
  std::size_t begin;
  std::size_t end;
};

/// Non-blank, non-comment lines with `#` comments stripped.
std::vector<RawLine> script_lines(std::string_view text) {
  std::vector<RawLine> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::size_t stop = nl == std::string_view::npos ? text.size() : nl;
    std::size_t hash = text.find('#', start);
    std::size_t content_end = (hash != std::string_view::npos && hash < stop) ? hash : stop;
    bool blank = true;
    for (std::size_t k = start; k < content_end; ++k)
      if (!std::isspace(static_cast<unsigned char>(text[k]))) blank = false;
    if (!blank) out.push_back({start, content_end});
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return out;
}

/// Parses `N:` and splits the line at the justification separator.
template <class Body, class Just, class Make>
void parse_script(std::string_view text, Body body, Just just, Make make) {
  std::size_t previous = 0;
  for (const auto& raw : script_lines(text)) {
    Cursor head(text, raw.begin, raw.end);
    std::size_t num_start = (head.skip_ws(), head.pos());
    std::size_t n = head.number();
    if (n == 0 || n <= previous)
      Cursor::fail_at(previous == 0 ? "line numbers must start at 1" : "line numbers must increase", num_start,
                      head.pos());
    if (previous == 0 && n != 1) Cursor::fail_at("line numbers must start at 1", num_start, head.pos());
    previous = n;
    head.expect(":");
    std::size_t semi = text.find(';', head.pos());
    if (semi == std::string_view::npos || semi >= raw.end)
      Cursor::fail_at("missing ';' before the justification", raw.end, raw.end);
    Cursor lhs(text, head.pos(), semi);
    auto content = body(lhs);
    lhs.expect_end();
    Cursor rhs(text, semi + 1, raw.end);
    auto why = just(rhs);
    rhs.expect_end();
    make(n, std::move(content), std::move(why));
  }
}

std::string numbered(std::size_t n) { return std::to_string(n) + ": "; }

std::string with_sigma(std::string head, const Substitution& s) {
  if (!s.empty()) head += " " + format_substitution(s);
  return head;
}

std::string join_premises(const std::vector<Formula>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += ", ";
    out += format_formula(xs[k]);
  }
  return out;
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Cursor c(text);
  Formula f = c.formula();
  c.expect_end();
  return f;
}

std::string format_formula(const Formula& f) {
  std::string out;
  format_into(f, out);
  return out;
}

Sequent parse_sequent(std::string_view text) {
  Cursor c(text);
  auto prem = c.premises("==>");
  Formula concl = c.formula();
  c.expect_end();
  return Sequent(std::move(prem), concl);
}

std::string format_sequent(const Sequent& s) {
  if (s.premises().empty()) return "==> " + format_formula(s.conclusion());
  return join_premises(s.premises()) + " ==> " + format_formula(s.conclusion());
}

Substitution parse_substitution(std::string_view text) {
  Cursor c(text);
  Substitution s = c.substitution();
  c.expect_end();
  return s;
}

std::string format_substitution(const Substitution& s) {
  std::string out = "[";
  bool first = true;
  for (const auto& [from, to] : s.mapping()) {
    if (!first) out += ", ";
    first = false;
    out += from.id() + ":=" + to.id();
  }
  return out + "]";
}

Model parse_model(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError("malformed model JSON", SourceSpan{at, at});
  }
  SourceSpan whole{0, text.size()};
  auto bad = [&](const std::string& msg) { return ParseError(msg, whole); };
  if (!j.is_object()) throw bad("model must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "universe" && key != "denotation") throw bad("unknown model field '" + key + "'");
  if (!j.contains("universe") || !j["universe"].is_array()) throw bad("model needs a \"universe\" array");
  Model m;
  std::set<std::string> seen;
  for (const auto& el : j["universe"]) {
    if (!el.is_string()) throw bad("universe elements must be strings");
    auto id = el.get<std::string>();
    if (!seen.insert(id).second) throw bad("duplicate universe element '" + id + "'");
    m.add_element(id);
  }
  if (j.contains("denotation")) {
    const auto& d = j["denotation"];
    if (!d.is_object()) throw bad("\"denotation\" must be an object");
    for (const auto& [key, val] : d.items()) {
      if (!Letter::valid_id(key)) throw bad("invalid name letter '" + key + "'");
      if (!val.is_array()) throw bad("denotation of " + key + " must be an array");
      std::vector<std::size_t> elems;
      for (const auto& el : val) {
        if (!el.is_string()) throw bad("denotation elements must be strings");
        auto idx = m.index_of(el.get<std::string>());
        if (!idx) throw bad("denotation of " + key + " mentions '" + el.get<std::string>() + "' outside the universe");
        elems.push_back(*idx);
      }
      m.set_denotation(Letter(key), std::move(elems));
    }
  }
  return m;
}

std::string format_model(const Model& m) {
  nlohmann::ordered_json j;
  j["universe"] = m.universe();
  j["denotation"] = nlohmann::ordered_json::object();
  for (const auto& [l, elems] : m.denotations()) {
    auto arr = nlohmann::ordered_json::array();
    for (auto e : elems) arr.push_back(m.universe()[e]);
    j["denotation"][l.id()] = arr;
  }
  return j.dump();
}

ProofScript parse_proof_script(std::string_view text) {
  ProofScript script;
  parse_script(
      text, [](Cursor& c) { return c.formula(); },
      [](Cursor& c) -> Justification {
        std::size_t start = (c.skip_ws(), c.pos());
        std::string tag = c.name();
        if (tag == "ax") {
          std::string name = c.name();
          return AxiomInstance{name, c.optional_substitution()};
        }
        if (tag == "def") {
          std::string name = c.name();
          return DefInstance{name, c.optional_substitution()};
        }
        if (tag == "cpl") return CplTautology{};
        if (tag == "mp") {
          std::size_t i = c.number();
          std::size_t j = c.number();
          return Detach{i, j};
        }
        if (tag == "sub") {
          std::size_t i = c.number();
          return SubstituteLine{i, c.optional_substitution()};
        }
        Cursor::fail_at("unknown justification '" + tag + "'", start, c.pos());
      },
      [&](std::size_t n, Formula f, Justification why) { script.lines.push_back({n, std::move(f), std::move(why)}); });
  return script;
}

std::string format_proof_script(const ProofScript& script) {
  std::string out;
  for (const auto& line : script.lines) {
    out += numbered(line.index) + format_formula(line.formula) + " ; ";
    std::visit(
        [&](const auto& j) {
          using J = std::decay_t<decltype(j)>;
          if constexpr (std::is_same_v<J, AxiomInstance>)
            out += with_sigma("ax " + j.schema, j.sigma);
          else if constexpr (std::is_same_v<J, DefInstance>)
            out += with_sigma("def " + j.definition, j.sigma);
          else if constexpr (std::is_same_v<J, CplTautology>)
            out += "cpl";
          else if constexpr (std::is_same_v<J, Detach>)
            out += "mp " + std::to_string(j.minor) + " " + std::to_string(j.major);
          else
            out += with_sigma("sub " + std::to_string(j.source), j.sigma);
        },
        line.why);
    out += '\n';
  }
  return out;
}

SequentScript parse_sequent_script(std::string_view text) {
  SequentScript script;
  parse_script(
      text,
      [](Cursor& c) {
        auto prem = c.premises("==>");
        Formula concl = c.formula();
        return Sequent(std::move(prem), concl);
      },
      [](Cursor& c) -> SequentJustification {
        std::size_t start = (c.skip_ws(), c.pos());
        std::string tag = c.name();
        if (tag == "luk") {
          std::string name = c.name();
          return LukAxiomSequent{name, c.optional_substitution()};
        }
        if (tag == "cpl") return CplConsequenceAxiom{};
        if (tag == "given") return Given{};
        if (tag == "cut") {
          std::size_t i = c.number();
          std::size_t j = c.number();
          return Cut{i, j};
        }
        if (tag == "ded") return Deduction{c.number()};
        if (tag == "rule") {
          DerivedRule r{c.name(), {}};
          do {
            r.cited.push_back(c.number());
          } while (c.looking_at_number());
          return r;
        }
        Cursor::fail_at("unknown justification '" + tag + "'", start, c.pos());
      },
      [&](std::size_t n, Sequent s, SequentJustification why) {
        script.lines.push_back({n, std::move(s), std::move(why)});
      });
  return script;
}

std::string format_sequent_script(const SequentScript& script) {
  std::string out;
  for (const auto& line : script.lines) {
    out += numbered(line.index) + format_sequent(line.sequent) + " ; ";
    std::visit(
        [&](const auto& j) {
          using J = std::decay_t<decltype(j)>;
          if constexpr (std::is_same_v<J, LukAxiomSequent>)
            out += with_sigma("luk " + j.name, j.sigma);
          else if constexpr (std::is_same_v<J, CplConsequenceAxiom>)
            out += "cpl";
          else if constexpr (std::is_same_v<J, Cut>)
            out += "cut " + std::to_string(j.left) + " " + std::to_string(j.right);
          else if constexpr (std::is_same_v<J, Deduction>)
            out += "ded " + std::to_string(j.source);
          else if constexpr (std::is_same_v<J, DerivedRule>) {
            out += "rule " + j.name;
            for (auto k : j.cited) out += " " + std::to_string(k);
          } else
            out += "given";
        },
        line.why);
    out += '\n';
  }
  return out;
}

DeductionScript parse_deduction_script(std::string_view text) {
  DeductionScript script;
  parse_script(
      text,
      [](Cursor& c) {
        auto prem = c.premises("|-");
        Formula concl = c.formula();
        return Sequent(std::move(prem), concl);
      },
      [](Cursor& c) -> DeductionJustification {
        std::size_t start = (c.skip_ws(), c.pos());
        std::string tag = c.name();
        if (tag == "trivial") return Trivial{};
        if (tag == "reductio") {
          std::size_t i = c.number();
          std::size_t j = c.number();
          return Reductio{i, j};
        }
        if (tag == "cut") {
          std::size_t rule_start = (c.skip_ws(), c.pos());
          std::string rule = c.name();
          if (rule.size() != 2 || rule[0] != 'R' || rule[1] < '1' || rule[1] > '4')
            Cursor::fail_at("unknown rule '" + rule + "'", rule_start, c.pos());
          CutWithRule cut{rule[1] - '0', c.number(), std::nullopt};
          if (c.looking_at_number()) cut.second = c.number();
          return cut;
        }
        Cursor::fail_at("unknown justification '" + tag + "'", start, c.pos());
      },
      [&](std::size_t n, Sequent s, DeductionJustification why) {
        script.lines.push_back({n, std::move(s), std::move(why)});
      });
  return script;
}

std::string format_deduction_script(const DeductionScript& script) {
  std::string out;
  for (const auto& line : script.lines) {
    const auto& s = line.claim;
    out += numbered(line.index) + join_premises(s.premises()) + (s.premises().empty() ? "|- " : " |- ") +
           format_formula(s.conclusion()) + " ; ";
    std::visit(
        [&](const auto& j) {
          using J = std::decay_t<decltype(j)>;
          if constexpr (std::is_same_v<J, Trivial>)
            out += "trivial";
          else if constexpr (std::is_same_v<J, CutWithRule>) {
            out += "cut R" + std::to_string(j.rule) + " " + std::to_string(j.first);
            if (j.second) out += " " + std::to_string(*j.second);
          } else
            out += "reductio " + std::to_string(j.first) + " " + std::to_string(j.second);
        },
        line.why);
    out += '\n';
  }
  return out;
}

}  // namespace namecalc
