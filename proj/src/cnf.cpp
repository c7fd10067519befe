#include "cfgkit/cnf.hpp"

#include <vector>

#include "cfgkit/error.hpp"
#include "cfgkit/simplify.hpp"

namespace cfgkit {

namespace {

bool cnf_shape(const Rule& r) {
  if (r.rhs.size() == 1) return r.rhs[0].is_terminal();
  if (r.rhs.size() == 2)
    return r.rhs[0].is_nonterminal() && r.rhs[1].is_nonterminal();
  return false;
}

}  // namespace

bool is_cnf(const Grammar& g) {
  for (const Rule& r : g.rules())
    if (!cnf_shape(r)) return false;
  return true;
}

bool is_cnf_with_empty_rule(const Grammar& g) {
  std::size_t empty_rules = 0;
  for (const Rule& r : g.rules()) {
    if (r.rhs.empty()) {
      ++empty_rules;
      if (r.lhs != g.start()) return false;
    } else if (!cnf_shape(r)) {
      return false;
    }
    for (const SymbolRef& s : r.rhs)
      if (s.is_nonterminal() && s.nonterminal() == g.start()) return false;
  }
  return empty_rules == 1;
}

Grammar to_cnf(const Grammar& g) {
  Grammar simplified = simplify(g);  // validates and rejects empty languages
  bool empty_in_language = nullable_set(g).count(g.start()) > 0;

  // After simplification each rule body is %empty (start only), a single
  // terminal, or at least two symbols. Unit rules are gone, so a singleton
  // Group([A]) can take over A's own rules unchanged in spirit.
  auto singleton = [](const SymbolRef& s) {
    return NonterminalId::group(SententialForm{s});
  };

  std::vector<Rule> rules;
  std::set<TerminalId> lifted_terminals;
  for (const Rule& r : simplified.rules()) {
    if (r.rhs.empty()) continue;  // re-added below when the flag says so

    NonterminalId lhs = singleton(SymbolRef(r.lhs));
    if (r.rhs.size() == 1) {
      rules.push_back(Rule{lhs, r.rhs});  // single terminal
      continue;
    }

    for (const SymbolRef& s : r.rhs)
      if (s.is_terminal()) lifted_terminals.insert(s.terminal());

    // Right-associative cascade; identical suffixes collapse because Group
    // identity is structural.
    SententialForm suffix = r.rhs;
    NonterminalId head = lhs;
    while (suffix.size() > 2) {
      SententialForm rest(suffix.begin() + 1, suffix.end());
      NonterminalId rest_group = NonterminalId::group(rest);
      rules.push_back(Rule{
          head, {SymbolRef(singleton(suffix[0])), SymbolRef(rest_group)}});
      head = rest_group;
      suffix = std::move(rest);
    }
    rules.push_back(Rule{head, {SymbolRef(singleton(suffix[0])),
                                SymbolRef(singleton(suffix[1]))}});
  }

  for (const TerminalId& t : lifted_terminals)
    rules.push_back(
        Rule{NonterminalId::group({SymbolRef(t)}), {SymbolRef(t)}});

  NonterminalId start =
      NonterminalId::group({SymbolRef(simplified.start())});
  if (empty_in_language) rules.push_back(Rule{start, {}});

  std::set<NonterminalId> nonterminals{start};
  for (const Rule& r : rules) {
    nonterminals.insert(r.lhs);
    for (const SymbolRef& s : r.rhs)
      if (s.is_nonterminal()) nonterminals.insert(s.nonterminal());
  }

  return Grammar(start, std::move(rules), std::move(nonterminals),
                 simplified.terminals());
}

}  // namespace cfgkit
