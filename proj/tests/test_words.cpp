#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "rookpm/diagram.hpp"
#include "rookpm/errors.hpp"
#include "rookpm/words.hpp"

using namespace rookpm;

TEST_CASE("generator diagrams at degree 3") {
  CHECK(to_literal(gen_e(3, 1)) == "n=3; 1; 2,2'; 3,3'; 1'");
  CHECK(to_literal(gen_t(3, 1, 2)) == "n=3; 1,2,1',2'; 3,3'");
  CHECK(to_literal(gen_t(3, 2, 1)) == "n=3; 1,2,1',2'; 3,3'");
  CHECK(to_literal(gen_s(3, 1)) == "n=3; 1,2'; 2,1'; 3,3'");
  CHECK(gen_q(3, 2) == gen_t(3, 2, 3));
  CHECK(to_literal(gen_o(3, 1)) == "n=3; 2,2'; 3,3'");
  CHECK(to_literal(gen_c(3)) == "n=3; 1,3'; 2,1'; 3,2'");
  CHECK(to_literal(gen_eij(3, 1, 2)) == "n=3; 1; 2,1'; 3,3'; 2'");
  CHECK(gen_eij(3, 1, 2) == gen_e(3, 1) * gen_t(3, 1, 2) * gen_e(3, 2));
  CHECK(gen_oA(3, {1, 3}) == parse_literal("n=3; 2,2'"));
  CHECK(gen_tA(3, {1, 2, 3}) == parse_literal("n=3; 1,2,3,1',2',3'"));
  CHECK_THROWS_AS(gen_e(3, 4), IndexOutOfRange);
  CHECK_THROWS_AS(gen_s(3, 3), IndexOutOfRange);
  CHECK_THROWS_AS(gen_t(3, 2, 2), IndexOutOfRange);
}

TEST_CASE("permutation diagrams and one-line forms") {
  RookPartition c = perm_diagram(4, {4, 1, 2, 3});
  CHECK(c == gen_c(4));
  CHECK(one_line(c) == std::vector<int>{4, 1, 2, 3});
  CHECK(one_line(RookPartition::identity(3)) == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(one_line(gen_e(3, 1)), NotInPn);
  CHECK_THROWS_AS(perm_diagram(3, {1, 1, 2}), ParseError);
}

TEST_CASE("word evaluation matches diagram products") {
  Word w = parse_word(Alphabet::SEQO, "o1 e1 o1");
  CHECK(evaluate(3, w) == gen_o(3, 1));
  Word empty = parse_word(Alphabet::SEQO, "");
  CHECK(evaluate(3, empty) == RookPartition::identity(3));
  Word sc = parse_word(Alphabet::SCEQO, "s c");
  CHECK(evaluate(3, sc) == gen_s(3, 1) * gen_c(3));
}

TEST_CASE("twist accumulates along a word") {
  auto [d, m] = evaluate_with_twist(1, parse_word(Alphabet::SEQO, "e1 e1"));
  CHECK(d == gen_e(1, 1));
  CHECK(m == 1);
  auto [d3, m3] = evaluate_with_twist(2, parse_word(Alphabet::SEQO, "e1 e1 e1"));
  CHECK(d3 == gen_e(2, 1));
  CHECK(m3 == 2);
}

TEST_CASE("tau expands through conjugation") {
  Word tau = parse_word(Alphabet::SEQO, "tau1,3");
  CHECK(print_word(tau) == "s2 q1 s2");
  CHECK(evaluate(3, tau) == gen_t(3, 1, 3));
  CHECK(parse_word(Alphabet::SEQO, "tau1,2").toks == std::vector<Tok>{tok_q(1)});
  for (int n : {3, 4, 5})
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        CHECK(evaluate(n, Word{Alphabet::SEQO, tau_tokens(i, j)}) == gen_t(n, i, j));
}

TEST_CASE("rho rewrites joins as conjugated squares") {
  Word w = parse_word(Alphabet::ETO, "o1 t1,3");
  Word r = rho(w);
  CHECK(r.alphabet == Alphabet::SEQO);
  CHECK(print_word(r) == "o1 s2 q1 s2");
  CHECK(evaluate(3, w) == evaluate(3, r));
  CHECK_THROWS_AS(rho(parse_word(Alphabet::SEQO, "s1")), UsageError);
}

TEST_CASE("capital macros reach every index") {
  for (int n : {3, 4}) {
    for (int i = 1; i <= n; ++i) {
      CHECK(evaluate(n, Word{Alphabet::SEQO, macro_E_tokens(i)}) == gen_e(n, i));
      CHECK(evaluate(n, Word{Alphabet::SEQO, macro_O_tokens(i)}) == gen_o(n, i));
    }
    for (int j = 1; j < n; ++j)
      CHECK(evaluate(n, Word{Alphabet::SEQO, macro_Q_tokens(j)}) == gen_q(n, j));
    for (int i = 1; i < n; ++i)
      CHECK(evaluate(n, Word{Alphabet::SCEQO, macro_S_tokens(n, i)}) == gen_s(n, i));
  }
}

TEST_CASE("macro tokens parse inside words") {
  CHECK(evaluate(3, parse_word(Alphabet::SEQO, "E2 Q2 O3")) ==
        gen_e(3, 2) * gen_q(3, 2) * gen_o(3, 3));
  CHECK(evaluate(4, parse_word(Alphabet::ETO, "tA{1,3,4}")) == gen_tA(4, {1, 3, 4}));
  CHECK(evaluate(4, parse_word(Alphabet::ETO, "oA{2,4}")) == gen_oA(4, {2, 4}));
  CHECK(evaluate(3, parse_word(Alphabet::ETO, "eij1,2")) == gen_eij(3, 1, 2));
}

TEST_CASE("alphabets restrict admissible tokens") {
  CHECK_THROWS_AS(parse_word(Alphabet::ETO, "s1"), ParseError);
  CHECK_THROWS_AS(parse_word(Alphabet::ETO, "q1"), ParseError);
  CHECK_THROWS_AS(parse_word(Alphabet::SEQO, "t1,2"), ParseError);
  CHECK_THROWS_AS(parse_word(Alphabet::SEQO, "s"), ParseError);
  CHECK_THROWS_AS(parse_word(Alphabet::SEQO3, "e2"), ParseError);
  CHECK_THROWS_AS(parse_word(Alphabet::SEQO3, "s"), ParseError);
  CHECK_THROWS_AS(parse_word(Alphabet::SCEQO, "s1 s"), ParseError);
  CHECK_THROWS_AS(parse_word(Alphabet::SEQO, "e"), ParseError);
  CHECK_THROWS_AS(parse_word(Alphabet::SEQO, "x1"), ParseError);
  CHECK_NOTHROW(parse_word(Alphabet::SEQO3, "s2 e1 q1 o1"));
  CHECK_NOTHROW(parse_word(Alphabet::SCEQO, "s c e1 q1 o1"));
}

TEST_CASE("degree errors surface at evaluation, not parsing") {
  Word w = parse_word(Alphabet::SEQO, "e5");
  CHECK_THROWS_AS(evaluate(3, w), IndexOutOfRange);
}

TEST_CASE("alphabet inference for bare words") {
  CHECK(parse_word_auto("s c").alphabet == Alphabet::SCEQO);
  CHECK(parse_word_auto("t1,2 e1").alphabet == Alphabet::ETO);
  CHECK(parse_word_auto("s1 e1").alphabet == Alphabet::SEQO);
  CHECK(parse_word_auto("o1 e1 o1").alphabet == Alphabet::SEQO);
}

TEST_CASE("printing and parsing are inverse") {
  for (const char* s : {"e1 t1,2 e2", "s1 q1 o1", "o1 e1 o1"}) {
    Word w = parse_word_auto(s);
    CHECK(print_word(w) == s);
  }
}
