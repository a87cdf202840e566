#include <doctest.h>

#include <string>

#include "namecalc/parser.hpp"
#include "namecalc/systems.hpp"
#include "reference.hpp"

using namespace namecalc;
using namespace namecalc::testing;

namespace {

const std::vector<Letter> kLetters = letter_list({"S", "P", "M", "Q", "Name_1"});

Substitution random_sigma(Rng& rng) { return random_substitution(rng, kLetters, kLetters); }

Sequent random_sequent(Rng& rng) {
  std::vector<Formula> premises;
  for (std::size_t k = rng() % 4; k > 0; --k) premises.push_back(random_formula(rng, kLetters, all_functors(), 3));
  return Sequent(premises, random_formula(rng, kLetters, all_functors(), 3));
}

Sequent random_categorical_sequent(Rng& rng) {
  std::vector<Formula> premises;
  for (std::size_t k = 1 + rng() % 3; k > 0; --k) premises.push_back(random_atom(rng, kLetters, categorical_functors()));
  return Sequent(premises, random_atom(rng, kLetters, categorical_functors()));
}

ProofScript random_proof_script(Rng& rng) {
  ProofScript s;
  std::size_t index = 0;
  for (std::size_t k = 1 + rng() % 6; k > 0; --k) {
    index += index == 0 ? 1 : 1 + rng() % 3;
    Justification why;
    switch (rng() % 5) {
      case 0: why = AxiomInstance{"Barbara", random_sigma(rng)}; break;
      case 1: why = CplTautology{}; break;
      case 2: why = Detach{1 + rng() % 9, 1 + rng() % 9}; break;
      case 3: why = SubstituteLine{1 + rng() % 9, random_sigma(rng)}; break;
      default: why = DefInstance{"df_e", random_sigma(rng)}; break;
    }
    s.lines.push_back({index, random_formula(rng, kLetters, all_functors(), 4), why});
  }
  return s;
}

SequentScript random_sequent_script(Rng& rng) {
  SequentScript s;
  std::size_t index = 0;
  for (std::size_t k = 1 + rng() % 6; k > 0; --k) {
    index += index == 0 ? 1 : 1 + rng() % 2;
    SequentJustification why;
    switch (rng() % 6) {
      case 0: why = LukAxiomSequent{"Datisi", random_sigma(rng)}; break;
      case 1: why = CplConsequenceAxiom{}; break;
      case 2: why = Cut{1 + rng() % 9, 1 + rng() % 9}; break;
      case 3: why = Deduction{1 + rng() % 9}; break;
      case 4: why = DerivedRule{"imp-apply", {1 + rng() % 9, 1 + rng() % 9}}; break;
      default: why = Given{}; break;
    }
    s.lines.push_back({index, random_sequent(rng), why});
  }
  return s;
}

DeductionScript random_deduction_script(Rng& rng) {
  DeductionScript s;
  for (std::size_t k = 1; k <= 1 + rng() % 6; ++k) {
    DeductionJustification why;
    switch (rng() % 4) {
      case 0: why = Trivial{}; break;
      case 1: why = CutWithRule{1 + static_cast<int>(rng() % 2), 1 + rng() % 9, 1 + rng() % 9}; break;
      case 2: why = CutWithRule{3 + static_cast<int>(rng() % 2), 1 + rng() % 9, std::nullopt}; break;
      default: why = Reductio{1 + rng() % 9, 1 + rng() % 9}; break;
    }
    s.lines.push_back({k, random_categorical_sequent(rng), why});
  }
  return s;
}

template <class F>
void check_span(F&& parse, std::size_t pos) {
  try {
    parse();
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK_MESSAGE(e.span().covers(pos), e.what());
  }
}

}  // namespace

TEST_SUITE("parser") {
  TEST_CASE("Barbara instance") {
    Formula f = parse_formula("(a(M,P) & a(S,M)) -> a(S,P)");
    CHECK(f == schema("Barbara").pattern);
    CHECK(f == imp(conj(atom(Functor::A, "M", "P"), atom(Functor::A, "S", "M")), atom(Functor::A, "S", "P")));
  }

  TEST_CASE("negated atom") { CHECK(parse_formula("~i(S,S)") == neg(atom(Functor::I, "S", "S"))); }

  TEST_CASE("truncated input reports a span covering the end") {
    check_span([] { parse_formula("a(S,"); }, 4);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(parse_formula("u(S,P)"), ParseError);
    CHECK_THROWS_AS(parse_formula("ex(S,P)"), ParseError);
    CHECK_THROWS_AS(parse_formula("a(S)"), ParseError);
    CHECK_THROWS_AS(parse_formula("(a(S,P)"), ParseError);
    CHECK_THROWS_AS(parse_formula("a(S,P))"), ParseError);
    CHECK_THROWS_AS(parse_formula("a(s,P)"), ParseError);
    CHECK_THROWS_AS(parse_formula(""), ParseError);
    check_span([] { parse_formula("a(S,P) & zz(S,P)"); }, 9);
  }

  TEST_CASE("precedence and associativity") {
    CHECK(parse_formula("a(S,P) -> i(S,P) -> e(S,P)") ==
          parse_formula("a(S,P) -> (i(S,P) -> e(S,P))"));
    CHECK(parse_formula("a(S,P) <-> i(S,P) <-> e(S,P)") ==
          parse_formula("(a(S,P) <-> i(S,P)) <-> e(S,P)"));
    CHECK(parse_formula("~a(S,P) & i(S,P) | e(S,P) -> o(S,P)") ==
          parse_formula("(((~a(S,P)) & i(S,P)) | e(S,P)) -> o(S,P)"));
    CHECK(parse_formula("  a ( S , P )  ") == atom(Functor::A, "S", "P"));
  }

  TEST_CASE("formatting") {
    CHECK(format_formula(Formula::ex("S")) == "ex(S)");
    CHECK(format_formula(imp(atom(Functor::A, "S", "P"), atom(Functor::I, "S", "P"))) == "a(S,P) -> i(S,P)");
    CHECK(format_formula(parse_formula("(a(S,P) -> i(S,P)) -> e(S,P)")) == "(a(S,P) -> i(S,P)) -> e(S,P)");
  }

  TEST_CASE("formula round trip on random formulas") {
    Rng rng(21);
    for (int k = 0; k < 1000; ++k) {
      Formula f = random_formula(rng, kLetters, all_functors(), 6);
      CHECK(parse_formula(format_formula(f)) == f);
    }
  }

  TEST_CASE("sequents") {
    Sequent barbara = parse_sequent("a(M,P), a(S,M) ==> a(S,P)");
    CHECK(barbara.premises().size() == 2);
    CHECK(barbara.conclusion() == parse_formula("a(S,P)"));
    Sequent ia = parse_sequent("==> a(S,S)");
    CHECK(ia.premises().empty());
    CHECK(parse_sequent("a(S,P), a(S,P) ==> a(S,P)") == parse_sequent("a(S,P) ==> a(S,P)"));
    CHECK(parse_sequent("a(S,M), a(M,P) ==> a(S,P)") == barbara);
    CHECK_THROWS_AS(parse_sequent("a(S,P)"), ParseError);
  }

  TEST_CASE("sequent round trip") {
    Rng rng(22);
    for (int k = 0; k < 1000; ++k) {
      Sequent s = random_sequent(rng);
      CHECK(parse_sequent(format_sequent(s)) == s);
    }
  }

  TEST_CASE("models") {
    Model m = parse_model(R"({"universe":["u0"],"denotation":{"S":["u0"],"P":[]}})");
    CHECK(m.size() == 1);
    CHECK(m.denotation("S") == std::vector<std::size_t>{0});
    CHECK(m.denotation("P").empty());
    Model empty = parse_model(R"({"universe":[],"denotation":{}})");
    CHECK(empty.size() == 0);
    CHECK_THROWS_AS(parse_model(R"({"universe":["u0"],"denotation":{"S":["u9"]}})"), ParseError);
    CHECK_THROWS_AS(parse_model(R"({"universe":["u0","u0"],"denotation":{}})"), ParseError);
    CHECK_THROWS_AS(parse_model(R"({"universe":["u0"],"denotation":[]})"), ParseError);
    CHECK_THROWS_AS(parse_model("not json"), ParseError);
  }

  TEST_CASE("model round trip") {
    Rng rng(23);
    for (int k = 0; k < 1000; ++k) {
      Model m = random_any_model(rng, kLetters, 5);
      CHECK(parse_model(format_model(m)) == m);
    }
  }

  TEST_CASE("proof scripts") {
    ProofScript two = parse_proof_script(
        "1: a(S,S) ; ax Ia\n"
        "2: a(P,P) ; sub 1 [S:=P]\n");
    REQUIRE(two.lines.size() == 2);
    CHECK(std::get<SubstituteLine>(two.lines[1].why) == SubstituteLine{1, {{"S", "P"}}});
    ProofScript identity = parse_proof_script("# identity\n1: a(S,P) -> a(S,P) ; cpl\n");
    REQUIRE(identity.lines.size() == 1);
    CHECK(std::holds_alternative<CplTautology>(identity.lines[0].why));
    CHECK_THROWS_AS(parse_proof_script("1: a(S,S) ; axiom Ia\n"), ParseError);
    CHECK_THROWS_AS(parse_proof_script("2: a(S,S) ; ax Ia\n1: a(S,S) ; ax Ia\n"), ParseError);
    CHECK_THROWS_AS(parse_proof_script("0: a(S,S) ; ax Ia\n"), ParseError);
    CHECK_THROWS_AS(parse_proof_script("1 a(S,S) ; ax Ia\n"), ParseError);
  }

  TEST_CASE("proof script round trip") {
    Rng rng(24);
    for (int k = 0; k < 1000; ++k) {
      ProofScript s = random_proof_script(rng);
      CHECK(parse_proof_script(format_proof_script(s)) == s);
    }
  }

  TEST_CASE("sequent script round trip") {
    Rng rng(25);
    for (int k = 0; k < 1000; ++k) {
      SequentScript s = random_sequent_script(rng);
      CHECK(parse_sequent_script(format_sequent_script(s)) == s);
    }
  }

  TEST_CASE("deduction script round trip") {
    Rng rng(26);
    for (int k = 0; k < 1000; ++k) {
      DeductionScript s = random_deduction_script(rng);
      CHECK(parse_deduction_script(format_deduction_script(s)) == s);
    }
  }

  TEST_CASE("substitutions") {
    CHECK(parse_substitution("[]").empty());
    CHECK(parse_substitution("[S:=P, M:=S]") == Substitution{{"S", "P"}, {"M", "S"}});
    CHECK(parse_substitution(format_substitution({{"Q", "M"}})) == Substitution{{"Q", "M"}});
    CHECK_THROWS_AS(parse_substitution("[S:=p]"), ParseError);
  }

  TEST_CASE("parsing is total") {
    Rng rng(27);
    const std::string alphabet = "aieokxpsq()~&|-><=,SPMQ ";
    for (int k = 0; k < 5000; ++k) {
      std::string text;
      for (std::size_t n = rng() % 24; n > 0; --n) text.push_back(alphabet[rng() % alphabet.size()]);
      try {
        parse_formula(text);
      } catch (const ParseError&) {
      }
    }
    // Mutations of well-formed text.
    for (int k = 0; k < 2000; ++k) {
      std::string text = format_formula(random_formula(rng, kLetters, all_functors(), 3));
      text[rng() % text.size()] = alphabet[rng() % alphabet.size()];
      try {
        Formula f = parse_formula(text);
        CHECK(parse_formula(format_formula(f)) == f);
      } catch (const ParseError&) {
      }
    }
  }
}
