#include "namecalc/proof.hpp"

#include <map>
#include <unordered_map>

#include "namecalc/errors.hpp"
#include "namecalc/parser.hpp"

namespace namecalc {

namespace {

/// Bit-parallel truth table: each 64-bit word covers 64 assignments of the atoms.
class TruthTable {
 public:
  explicit TruthTable(const std::vector<Formula>& roots) {
    for (const auto& r : roots)
      for (const auto& a : atoms(r)) index_.try_emplace(a, index_.size());
    if (index_.size() > kCplAtomLimit)
      throw GuardError("cpl-atoms", std::to_string(index_.size()) + " distinct atoms exceed the limit of " +
                                        std::to_string(kCplAtomLimit));
  }

  /// True when `f` holds in every row where all of `given` hold.
  bool entails(const std::vector<Formula>& given, const Formula& f) const {
    const std::size_t n = index_.size();
    const std::size_t rows = std::size_t{1} << n;
    const std::size_t chunks = rows <= 64 ? 1 : rows / 64;
    const std::uint64_t live = rows >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << rows) - 1);
    for (std::size_t chunk = 0; chunk < chunks; ++chunk) {
      std::uint64_t ok = live;
      for (const auto& g : given) ok &= eval(g, chunk);
      if (ok & ~eval(f, chunk)) return false;
    }
    return true;
  }

 private:
  std::uint64_t letter_word(std::size_t i, std::size_t chunk) const {
    static constexpr std::uint64_t kPatterns[6] = {0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL,
                                                   0xF0F0F0F0F0F0F0F0ULL, 0xFF00FF00FF00FF00ULL,
                                                   0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
    if (i < 6) return kPatterns[i];
    return (chunk >> (i - 6) & 1U) ? ~std::uint64_t{0} : 0;
  }

  std::uint64_t eval(const Formula& f, std::size_t chunk) const {
    switch (f.kind()) {
      case Formula::Kind::Atom: return letter_word(index_.at(f), chunk);
      case Formula::Kind::Neg: return ~eval(f.operand(), chunk);
      case Formula::Kind::Bin: {
        std::uint64_t x = eval(f.lhs(), chunk), y = eval(f.rhs(), chunk);
        switch (f.connective()) {
          case Connective::And: return x & y;
          case Connective::Or: return x | y;
          case Connective::Imp: return ~x | y;
          case Connective::Iff: return ~(x ^ y);
        }
      }
    }
    return 0;
  }

  std::unordered_map<Formula, std::size_t> index_;
};

const AxiomSchema* lookup(const std::vector<AxiomSchema>& xs, const std::string& name) {
  for (const auto& s : xs)
    if (s.name == name) return &s;
  return nullptr;
}

std::string names_of(const std::vector<const std::vector<AxiomSchema>*>& groups) {
  std::string out;
  for (const auto* g : groups)
    for (const auto& s : *g) out += (out.empty() ? "" : ", ") + s.name;
  return out;
}

Formula ex_ai(const Letter& s) { return atom(Functor::I, s, s); }

/// a(S,P) read through ka.
Formula a_kai(const Letter& s, const Letter& p) {
  return disj(neg(atom(Functor::KA, s, s)), atom(Functor::KA, s, p));
}

Formula expand_atom(const Formula& x, Basis basis) {
  const Letter& s = x.subject();
  const Letter& p = x.predicate();
  auto A = [&](const Letter& u, const Letter& v) {
    return basis == Basis::KAI ? a_kai(u, v) : atom(Functor::A, u, v);
  };
  auto I = [](const Letter& u, const Letter& v) { return atom(Functor::I, u, v); };
  auto KA = [&](const Letter& u, const Letter& v) {
    return basis == Basis::KAI ? atom(Functor::KA, u, v) : conj(ex_ai(u), atom(Functor::A, u, v));
  };
  auto E = [&](const Letter& u, const Letter& v) {
    return basis == Basis::AIE_FULL ? atom(Functor::E, u, v) : neg(I(u, v));
  };
  auto EPS = [](const Letter& u, const Letter& v) { return atom(Functor::EPS, u, v); };
  switch (x.functor()) {
    case Functor::A: return A(s, p);
    case Functor::I: return x;
    case Functor::EPS: return x;
    case Functor::E: return E(s, p);
    case Functor::O: return basis == Basis::AIE_FULL ? x : neg(A(s, p));
    case Functor::EX: return ex_ai(s);
    case Functor::KA: return KA(s, p);
    case Functor::OT: return neg(KA(s, p));
    case Functor::KE: return conj(ex_ai(s), E(s, p));
    case Functor::KKE: return conj(conj(ex_ai(s), ex_ai(p)), E(s, p));
    case Functor::CEQ: return conj(A(s, p), A(p, s));
    case Functor::DEQ: return conj(KA(s, p), KA(p, s));
    case Functor::NEPS: return conj(EPS(s, s), neg(EPS(s, p)));
    case Functor::IDEQ: return conj(EPS(s, p), EPS(p, s));
  }
  return x;
}

}  // namespace

bool is_cpl_tautology(const Formula& f) { return TruthTable({f}).entails({}, f); }

bool cpl_consequence(const std::vector<Formula>& premises, const Formula& goal) {
  std::vector<Formula> roots = premises;
  roots.push_back(goal);
  return TruthTable(roots).entails(premises, goal);
}

CheckReport check_proof(const SystemSpec& sys, const ProofScript& script) {
  if (script.lines.empty()) return CheckReport::fail(0, "empty script");
  std::map<std::size_t, Formula> proved;
  for (const auto& line : script.lines) {
    auto cited = [&](std::size_t k) -> const Formula* {
      auto it = proved.find(k);
      return it == proved.end() ? nullptr : &it->second;
    };
    std::string failure = std::visit(
        [&](const auto& j) -> std::string {
          using J = std::decay_t<decltype(j)>;
          if constexpr (std::is_same_v<J, AxiomInstance>) {
            const AxiomSchema* s = lookup(sys.schemas, j.schema);
            if (!s) s = lookup(sys.definitions, j.schema);
            if (!s)
              return "'" + j.schema + "' is not an axiom of " + sys.tag + " (axioms: " +
                     names_of({&sys.schemas, &sys.definitions}) + ")";
            if (substitute(s->pattern, j.sigma) != line.formula)
              return "formula is not the instance of " + j.schema + " under " + format_substitution(j.sigma);
            return {};
          } else if constexpr (std::is_same_v<J, DefInstance>) {
            const AxiomSchema* s = lookup(sys.definitions, j.definition);
            if (!s) s = lookup(sys.extensions, j.definition);
            if (!s)
              return "'" + j.definition + "' is not a definition of " + sys.tag + " (definitions: " +
                     names_of({&sys.definitions, &sys.extensions}) + ")";
            if (substitute(s->pattern, j.sigma) != line.formula)
              return "formula is not the instance of " + j.definition + " under " + format_substitution(j.sigma);
            return {};
          } else if constexpr (std::is_same_v<J, CplTautology>) {
            if (!is_cpl_tautology(line.formula)) return "not a CPL tautology";
            return {};
          } else if constexpr (std::is_same_v<J, Detach>) {
            const Formula* minor = cited(j.minor);
            const Formula* major = cited(j.major);
            if (!minor || !major) return "cites a line that is not an earlier line";
            if (*major != imp(*minor, line.formula))
              return "line " + std::to_string(j.major) + " is not line " + std::to_string(j.minor) +
                     " -> this formula";
            return {};
          } else {
            if (!sys.substitution_rule_enabled) return "the substitution rule is disabled in this version";
            const Formula* source = cited(j.source);
            if (!source) return "cites a line that is not an earlier line";
            if (substitute(*source, j.sigma) != line.formula)
              return "formula is not line " + std::to_string(j.source) + " under " + format_substitution(j.sigma);
            return {};
          }
        },
        line.why);
    if (!failure.empty()) return CheckReport::fail(line.index, failure);
    proved.emplace(line.index, line.formula);
  }
  return CheckReport::ok();
}

Formula expand_definitions(const Formula& f, Basis basis) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return expand_atom(f, basis);
    case Formula::Kind::Neg: return neg(expand_definitions(f.operand(), basis));
    case Formula::Kind::Bin:
      return Formula::bin(f.connective(), expand_definitions(f.lhs(), basis), expand_definitions(f.rhs(), basis));
  }
  return f;
}

}  // namespace namecalc
