#include "support/random_grammar.hpp"

#include <stdexcept>
#include <vector>

#include "cfgkit/simplify.hpp"

namespace testkit {

using cfgkit::Grammar;
using cfgkit::NonterminalId;
using cfgkit::Rule;
using cfgkit::SententialForm;
using cfgkit::SymbolRef;
using cfgkit::TerminalId;

Grammar random_grammar(std::mt19937& rng, const GrammarShape& shape) {
  static const char* nt_pool[] = {"S", "A", "B", "C", "D", "E"};
  static const char* t_pool[] = {"a", "b", "c", "d", "e"};

  auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };

  std::size_t nt_count = 1 + pick(shape.max_nonterminals);
  std::size_t t_count = 1 + pick(shape.max_terminals);

  std::vector<NonterminalId> nts;
  for (std::size_t i = 0; i < nt_count; ++i)
    nts.push_back(NonterminalId::base(nt_pool[i]));
  std::vector<TerminalId> ts;
  for (std::size_t i = 0; i < t_count; ++i) ts.push_back(TerminalId(t_pool[i]));

  std::size_t rule_count = pick(shape.max_rules + 1);
  std::vector<Rule> rules;
  for (std::size_t i = 0; i < rule_count; ++i) {
    NonterminalId lhs = nts[pick(nt_count)];
    std::size_t len = shape.allow_epsilon_rules ? pick(shape.max_rhs_len + 1)
                                                : 1 + pick(shape.max_rhs_len);
    SententialForm rhs;
    for (std::size_t k = 0; k < len; ++k) {
      if (pick(2) == 0)
        rhs.push_back(SymbolRef(nts[pick(nt_count)]));
      else
        rhs.push_back(SymbolRef(ts[pick(t_count)]));
    }
    rules.push_back(Rule{lhs, std::move(rhs)});
  }

  return Grammar(nts[0], std::move(rules),
                 std::set<NonterminalId>(nts.begin(), nts.end()),
                 std::set<TerminalId>(ts.begin(), ts.end()));
}

Grammar random_nonempty_grammar(std::mt19937& rng, const GrammarShape& shape) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Grammar g = random_grammar(rng, shape);
    if (cfgkit::useful_set(g).count(g.start())) return g;
  }
  throw std::runtime_error("no non-empty grammar generated in 10000 tries");
}

}  // namespace testkit
