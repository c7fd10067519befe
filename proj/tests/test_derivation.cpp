#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>

#include "cfgkit/cnf.hpp"
#include "cfgkit/derivation.hpp"
#include "cfgkit/error.hpp"
#include "cfgkit/simplify.hpp"
#include "cfgkit/text.hpp"
#include "support/oracles.hpp"
#include "support/random_grammar.hpp"

using namespace cfgkit;
using testkit::mk_sentence;

namespace {

Grammar astar_b() { return parse_grammar("start: S'\nS' -> a S' | b\n"); }

SymbolRef nt(const char* name) {
  return SymbolRef(NonterminalId::base(name));
}
SymbolRef t(const char* name) { return SymbolRef(TerminalId(name)); }

void check_step_error(const Grammar& g, const SententialForm& form,
                      std::size_t pos, const Rule& r,
                      const std::string& needle) {
  try {
    apply_step(g, form, pos, r);
    FAIL("expected a step error containing: ", needle);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Step);
    std::string what = e.what();
    CHECK_MESSAGE(what.find(needle) != std::string::npos, "message was: ",
                  what);
  }
}

}  // namespace

TEST_CASE("apply_step rewrites one nonterminal occurrence") {
  Grammar g = astar_b();
  Rule grow{NonterminalId::base("S'"), {t("a"), nt("S'")}};
  Rule stop{NonterminalId::base("S'"), {t("b")}};

  SententialForm form{nt("S'")};
  form = apply_step(g, form, 0, grow);
  CHECK(render_form(form) == "a S'");
  form = apply_step(g, form, 1, grow);
  CHECK(render_form(form) == "a a S'");
  form = apply_step(g, form, 2, stop);
  CHECK(render_form(form) == "a a b");
}

TEST_CASE("apply_step failures are distinguished") {
  Grammar g = astar_b();
  Rule grow{NonterminalId::base("S'"), {t("a"), nt("S'")}};
  SententialForm form{t("a"), nt("S'")};

  check_step_error(g, form, 2, grow, "out of range");
  check_step_error(g, form, 0, grow, "is the terminal a");
  Rule foreign_lhs{NonterminalId::base("T"), {t("a")}};
  check_step_error(g, form, 1, foreign_lhs, "the rule rewrites T");
  Rule not_in_grammar{NonterminalId::base("S'"), {t("a"), t("a")}};
  check_step_error(g, form, 1, not_in_grammar, "not part of the grammar");
}

TEST_CASE("replay applies a whole trace and tags failures with the step") {
  Grammar g = astar_b();
  Rule grow{NonterminalId::base("S'"), {t("a"), nt("S'")}};
  Rule stop{NonterminalId::base("S'"), {t("b")}};

  DerivationTrace trace{{0, grow}, {1, grow}, {2, stop}};
  SententialForm result = replay(g, {nt("S'")}, trace);
  CHECK(render_form(result) == "a a b");

  DerivationTrace broken{{0, grow}, {0, grow}};
  try {
    replay(g, {nt("S'")}, broken);
    FAIL("expected a step error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Step);
    CHECK(std::string(e.what()).find("step 1") != std::string::npos);
  }
}

TEST_CASE("derives_within finds witnesses and reports absence") {
  Grammar g = astar_b();
  SententialForm start{nt("S'")};
  SententialForm target{t("a"), t("a"), t("b")};

  SearchResult r = derives_within(g, start, target, 3);
  REQUIRE(r.outcome == SearchOutcome::Found);
  CHECK(r.trace.size() == 3);
  CHECK(render_form(replay(g, start, r.trace)) == "a a b");

  // Two steps cannot reach a form that needs three.
  CHECK(derives_within(g, start, target, 2).outcome ==
        SearchOutcome::NotFound);

  // Zero steps relate a form to itself.
  SearchResult self = derives_within(g, start, start, 0);
  CHECK(self.outcome == SearchOutcome::Found);
  CHECK(self.trace.empty());

  CHECK(derives_within(g, start, {t("b"), t("a")}, 10).outcome ==
        SearchOutcome::NotFound);
}

TEST_CASE("derives_within reports a cap hit instead of absence") {
  // a* b has unboundedly many reachable forms; a tiny cap trips first.
  Grammar g = astar_b();
  SearchResult r =
      derives_within(g, {nt("S'")}, {t("b"), t("b")}, 50, /*visited_cap=*/3);
  CHECK(r.outcome == SearchOutcome::CapExceeded);
}

TEST_CASE("random walks are always recoverable by search") {
  std::mt19937 rng(7);
  testkit::GrammarShape shape;
  shape.max_rhs_len = 2;
  int exercised = 0;
  for (int iter = 0; iter < 60; ++iter) {
    Grammar g = testkit::random_grammar(rng, shape);
    SententialForm form{SymbolRef(g.start())};
    DerivationTrace walked;
    for (int step = 0; step < 4; ++step) {
      std::vector<std::pair<std::size_t, const Rule*>> options;
      for (std::size_t i = 0; i < form.size(); ++i) {
        if (!form[i].is_nonterminal()) continue;
        for (std::size_t ri : g.rule_indices_for(form[i].nonterminal()))
          options.emplace_back(i, &g.rules()[ri]);
      }
      if (options.empty()) break;
      auto [pos, rule] = options[std::uniform_int_distribution<std::size_t>(
          0, options.size() - 1)(rng)];
      form = apply_step(g, form, pos, *rule);
      walked.push_back({pos, *rule});
    }
    if (walked.empty()) continue;
    ++exercised;
    SearchResult r =
        derives_within(g, {SymbolRef(g.start())}, form, walked.size());
    REQUIRE_MESSAGE(r.outcome == SearchOutcome::Found,
                    "walked to: ", render_form(form));
    CHECK(compare_forms(replay(g, {SymbolRef(g.start())}, r.trace), form) ==
          0);
  }
  CHECK(exercised > 20);
}

TEST_CASE("sentence ordering is by length then name") {
  CHECK(sentence_less(mk_sentence("b"), mk_sentence("a a")));
  CHECK(sentence_less(mk_sentence("a b"), mk_sentence("b a")));
  CHECK(!sentence_less(mk_sentence("a"), mk_sentence("a")));
  CHECK(sentence_less(mk_sentence(""), mk_sentence("a")));
}

TEST_CASE("cyk_member decides membership for normal-form grammars") {
  Grammar cnf = to_cnf(astar_b());
  CHECK(cyk_member(cnf, mk_sentence("b")));
  CHECK(cyk_member(cnf, mk_sentence("a a b")));
  CHECK(!cyk_member(cnf, mk_sentence("b a")));
  CHECK(!cyk_member(cnf, mk_sentence("")));
  CHECK(!cyk_member(cnf, mk_sentence("a a")));
}

TEST_CASE("cyk_member rejects grammars that are not in normal form") {
  Grammar g = astar_b();  // S' -> a S' is neither shape
  try {
    cyk_member(g, mk_sentence("b"));
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Precondition);
    CHECK(std::string(e.what()).find("S' -> a S'") != std::string::npos);
  }
}

TEST_CASE("cyk_member accepts the empty sentence only via the start rule") {
  Grammar with_empty = to_cnf(parse_grammar("start: S\nS -> a S | %empty\n"));
  CHECK(cyk_member(with_empty, mk_sentence("")));
  CHECK(cyk_member(with_empty, mk_sentence("a a")));
  CHECK(!cyk_member(with_empty, mk_sentence("b")));
}

TEST_CASE("enumerate_language lists exactly the bounded language") {
  LanguageSample s = enumerate_language(astar_b(), 4);
  CHECK(s.max_len == 4);
  REQUIRE(s.sentences.size() == 4);
  CHECK(render_sentence(s.sentences[0]) == "b");
  CHECK(render_sentence(s.sentences[1]) == "a b");
  CHECK(render_sentence(s.sentences[2]) == "a a b");
  CHECK(render_sentence(s.sentences[3]) == "a a a b");
  CHECK(s.contains(mk_sentence("a a b")));
  CHECK(!s.contains(mk_sentence("a a")));
  CHECK(!s.contains(mk_sentence("")));
}

TEST_CASE("enumerate_language of an empty language is empty") {
  Grammar g = parse_grammar("start: S\nS -> a S\n");
  CHECK(enumerate_language(g, 5).sentences.empty());
  Grammar no_rules = parse_grammar("start: S\nnonterminals: S\n");
  CHECK(enumerate_language(no_rules, 5).sentences.empty());
}

TEST_CASE("enumerate_language includes the empty sentence when derivable") {
  Grammar g = parse_grammar("start: S\nS -> %empty | a\n");
  LanguageSample s = enumerate_language(g, 2);
  REQUIRE(s.sentences.size() == 2);
  CHECK(s.sentences[0].empty());
  CHECK(render_sentence(s.sentences[1]) == "a");
}

TEST_CASE("search and CYK agree on simplified random grammars") {
  std::mt19937 rng(99);
  testkit::GrammarShape shape;
  int compared = 0;
  for (int iter = 0; iter < 40; ++iter) {
    Grammar g = simplify(testkit::random_nonempty_grammar(rng, shape));
    Grammar normal = to_cnf(g);
    LanguageSample sample = enumerate_language(g, 3);

    // Every candidate string over the alphabet: the CYK table, the sample
    // and (for short strings) explicit rewriting search must agree.
    std::vector<TerminalId> alphabet(g.terminals().begin(),
                                     g.terminals().end());
    std::vector<Sentence> candidates{Sentence{}};
    for (std::size_t len = 1; len <= 3; ++len) {
      std::vector<Sentence> next;
      for (const Sentence& base : candidates) {
        if (base.size() != len - 1) continue;
        for (const TerminalId& a : alphabet) {
          Sentence s = base;
          s.push_back(a);
          next.push_back(s);
        }
      }
      candidates.insert(candidates.end(), next.begin(), next.end());
    }
    for (const Sentence& w : candidates) {
      bool by_cyk = cyk_member(normal, w);
      CHECK(by_cyk == sample.contains(w));
      if (w.size() > 2) continue;
      SententialForm target;
      for (const TerminalId& a : w) target.push_back(SymbolRef(a));
      // Without epsilon or unit rules a sentence of length n needs at most
      // 2n-1 steps, so the bound keeps the search complete.
      SearchResult r = derives_within(g, {SymbolRef(g.start())}, target,
                                      2 * w.size() + 4, 20000);
      if (r.outcome == SearchOutcome::CapExceeded) continue;
      ++compared;
      CHECK_MESSAGE((r.outcome == SearchOutcome::Found) == by_cyk,
                    "disagreement on: ", render_sentence(w),
                    " grammar:\n", render_grammar(g));
      if (r.outcome == SearchOutcome::Found)
        CHECK(compare_forms(replay(g, {SymbolRef(g.start())}, r.trace),
                            target) == 0);
    }
  }
  CHECK(compared > 50);
}
