#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "cfgkit/error.hpp"
#include "cfgkit/grammar.hpp"
#include "cfgkit/text.hpp"
#include "support/random_grammar.hpp"

using namespace cfgkit;

TEST_CASE("parsing accepts comments, blank lines and alternatives") {
  std::string text =
      "# a* b\n"
      "start: S'\n"
      "\n"
      "S' -> a S' | b   # trailing comment\n";
  Grammar g = parse_grammar(text);
  CHECK(g.start() == NonterminalId::base("S'"));
  CHECK(g.rules().size() == 2);
  CHECK(g.terminals().count(TerminalId("a")) == 1);
  CHECK(g.terminals().count(TerminalId("b")) == 1);
  CHECK(g.nonterminals().size() == 1);
}

TEST_CASE("canonical rendering sorts rules and omits redundant declarations") {
  Grammar g = parse_grammar("start: S'\nS' -> b | a S'\n");
  CHECK(render_grammar(g) ==
        "start: S'\n"
        "S' -> a S'\n"
        "S' -> b\n");
}

TEST_CASE("explicitly declared rule-less nonterminals survive a round trip") {
  std::string text =
      "start: S\n"
      "nonterminals: B A\n"
      "S -> a\n";
  Grammar g = parse_grammar(text);
  CHECK(g.nonterminals().size() == 3);
  std::string canonical = render_grammar(g);
  CHECK(canonical ==
        "start: S\n"
        "nonterminals: A B\n"
        "S -> a\n");
  CHECK(render_grammar(parse_grammar(canonical)) == canonical);
}

TEST_CASE("empty right-hand sides render as %empty and parse back") {
  Grammar g = parse_grammar("start: S\nS -> %empty | a S\n");
  CHECK(g.has_rule(Rule{NonterminalId::base("S"), {}}));
  std::string canonical = render_grammar(g);
  CHECK(canonical.find("S -> %empty\n") != std::string::npos);
  CHECK(parse_grammar(canonical).has_rule(Rule{NonterminalId::base("S"), {}}));
}

TEST_CASE("structured names flatten deterministically") {
  NonterminalId x = NonterminalId::base("X");
  CHECK(flattened_name(x) == "X");
  CHECK(flattened_name(NonterminalId::lifted1(x)) == "X@1");
  CHECK(flattened_name(NonterminalId::lifted2(x)) == "X@2");
  CHECK(flattened_name(NonterminalId::fresh_start(3)) == "S%3");
  NonterminalId y = NonterminalId::base("Y");
  NonterminalId z = NonterminalId::base("Z");
  SententialForm body{SymbolRef(y), SymbolRef(z), SymbolRef(TerminalId("d"))};
  CHECK(flattened_name(NonterminalId::group(body)) == "[Y.Z.d]");
  CHECK(flattened_name(NonterminalId::group({SymbolRef(
            NonterminalId::lifted1(y))})) == "[Y@1]");
}

TEST_CASE("sentences render with %empty for the empty string") {
  CHECK(render_sentence({}) == "%empty");
  CHECK(render_sentence({TerminalId("a"), TerminalId("b")}) == "a b");
}

TEST_CASE("round trip: parse after render is the identity on rendered text") {
  std::mt19937 rng(20240801);
  testkit::GrammarShape shape;
  for (int i = 0; i < 200; ++i) {
    Grammar g = testkit::random_grammar(rng, shape);
    std::string once = render_grammar(g);
    Grammar back = parse_grammar(once);
    CHECK(render_grammar(back) == once);
    CHECK(back.start() == g.start());
    CHECK(back.rules().size() == g.rules().size());
  }
}

TEST_CASE("syntax errors carry positions and the syntax kind") {
  auto expect_syntax = [](const std::string& text, const std::string& needle,
                          int line) {
    try {
      parse_grammar(text);
      FAIL("expected a syntax error for: ", text);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Syntax);
      CHECK(e.line() == line);
      std::string what = e.what();
      CHECK_MESSAGE(what.find(needle) != std::string::npos,
                    "message was: ", what);
    }
  };

  expect_syntax("S -> a\n", "start", 1);
  expect_syntax("start: S\nstart: T\nS -> a\n", "duplicate", 2);
  expect_syntax("start: S\nS ->\n", "empty alternative", 2);
  expect_syntax("start: S\nS -> a | | b\n", "empty alternative", 2);
  expect_syntax("start: S\nS -> %empty a\n", "%empty", 2);
  expect_syntax("start: S\nS a b\n", "'->'", 2);
  expect_syntax("start: S\nS -> a -> b\n", "unexpected '->'", 2);
  expect_syntax("start: S\n-> a\n", "invalid symbol", 2);
  expect_syntax("", "start", 1);
  expect_syntax("start: S T\n", "exactly one", 1);
}

TEST_CASE("a start symbol with no rules and no declaration fails validation") {
  try {
    parse_grammar("start: S\nT -> a\n");
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Validation);
  }
  // Declaring it explicitly repairs the grammar (it derives nothing, but it
  // is well-formed).
  Grammar g = parse_grammar("start: S\nnonterminals: S\nT -> a\n");
  CHECK(g.nonterminals().count(NonterminalId::base("S")) == 1);
}

TEST_CASE("parse_grammar_with_report returns violations instead of throwing") {
  auto [bad, bad_report] = parse_grammar_with_report("start: S\nT -> a\n");
  CHECK(!bad_report.ok);
  CHECK(!bad_report.violations.empty());
  CHECK(bad.start() == NonterminalId::base("S"));

  auto [good, good_report] = parse_grammar_with_report("start: S\nS -> a\n");
  CHECK(good_report.ok);
  CHECK(good.rules().size() == 1);
}
