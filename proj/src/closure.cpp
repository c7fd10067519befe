#include "cfgkit/closure.hpp"

#include <vector>

namespace cfgkit {

namespace {

using Lift = NonterminalId (*)(NonterminalId);

SymbolRef lift_symbol(const SymbolRef& s, Lift lift) {
  if (s.is_terminal()) return s;
  return SymbolRef(lift(s.nonterminal()));
}

void append_lifted(const Grammar& g, Lift lift, std::vector<Rule>& rules,
                   std::set<NonterminalId>& nonterminals) {
  for (const NonterminalId& n : g.nonterminals())
    nonterminals.insert(lift(n));
  for (const Rule& r : g.rules()) {
    SententialForm rhs;
    rhs.reserve(r.rhs.size());
    for (const SymbolRef& s : r.rhs) rhs.push_back(lift_symbol(s, lift));
    rules.push_back(Rule{lift(r.lhs), std::move(rhs)});
  }
}

}  // namespace

Grammar grammar_union(const Grammar& g1, const Grammar& g2) {
  require_valid(g1);
  require_valid(g2);
  NonterminalId start = NonterminalId::fresh_start(0);

  std::vector<Rule> rules;
  rules.push_back(
      Rule{start, {SymbolRef(NonterminalId::lifted1(g1.start()))}});
  rules.push_back(
      Rule{start, {SymbolRef(NonterminalId::lifted2(g2.start()))}});

  std::set<NonterminalId> nonterminals{start};
  append_lifted(g1, NonterminalId::lifted1, rules, nonterminals);
  append_lifted(g2, NonterminalId::lifted2, rules, nonterminals);

  std::set<TerminalId> terminals = g1.terminals();
  terminals.insert(g2.terminals().begin(), g2.terminals().end());
  return Grammar(start, std::move(rules), std::move(nonterminals),
                 std::move(terminals));
}

Grammar grammar_concat(const Grammar& g1, const Grammar& g2) {
  require_valid(g1);
  require_valid(g2);
  NonterminalId start = NonterminalId::fresh_start(0);

  std::vector<Rule> rules;
  rules.push_back(Rule{start,
                       {SymbolRef(NonterminalId::lifted1(g1.start())),
                        SymbolRef(NonterminalId::lifted2(g2.start()))}});

  std::set<NonterminalId> nonterminals{start};
  append_lifted(g1, NonterminalId::lifted1, rules, nonterminals);
  append_lifted(g2, NonterminalId::lifted2, rules, nonterminals);

  std::set<TerminalId> terminals = g1.terminals();
  terminals.insert(g2.terminals().begin(), g2.terminals().end());
  return Grammar(start, std::move(rules), std::move(nonterminals),
                 std::move(terminals));
}

Grammar grammar_star(const Grammar& g) {
  require_valid(g);
  NonterminalId start = NonterminalId::fresh_start(0);

  // start -> start body | %empty; unbounded repetition grows to the left.
  std::vector<Rule> rules;
  rules.push_back(Rule{start,
                       {SymbolRef(start),
                        SymbolRef(NonterminalId::lifted1(g.start()))}});
  rules.push_back(Rule{start, {}});

  std::set<NonterminalId> nonterminals{start};
  append_lifted(g, NonterminalId::lifted1, rules, nonterminals);

  return Grammar(start, std::move(rules), std::move(nonterminals),
                 g.terminals());
}

}  // namespace cfgkit
