#include "cfgkit/simplify.hpp"

#include <cstdint>
#include <vector>

#include "cfgkit/error.hpp"
#include "cfgkit/text.hpp"

namespace cfgkit {

NullableSet nullable_set(const Grammar& g) {
  require_valid(g);
  NullableSet nullable;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : g.rules()) {
      if (nullable.count(r.lhs)) continue;
      bool all = true;
      for (const SymbolRef& s : r.rhs) {
        if (s.is_terminal() || !nullable.count(s.nonterminal())) {
          all = false;
          break;
        }
      }
      if (all) {
        nullable.insert(r.lhs);
        changed = true;
      }
    }
  }
  return nullable;
}

Grammar remove_empty(const Grammar& g) {
  require_valid(g);
  NullableSet nullable = nullable_set(g);

  // The minted start must not collide with a FreshStart already present in
  // the input (simplification of a construction output, for instance).
  unsigned generation = 0;
  while (g.nonterminals().count(NonterminalId::fresh_start(generation)))
    ++generation;
  NonterminalId fresh = NonterminalId::fresh_start(generation);

  std::vector<Rule> rules;
  for (const Rule& r : g.rules()) {
    if (r.rhs.empty()) continue;  // epsilon rules do not carry over

    std::vector<std::size_t> occurrences;
    for (std::size_t i = 0; i < r.rhs.size(); ++i) {
      if (r.rhs[i].is_nonterminal() &&
          nullable.count(r.rhs[i].nonterminal()))
        occurrences.push_back(i);
    }
    if (occurrences.size() > kMaxNullableOccurrences)
      throw Error(ErrorKind::Limit,
                  "rule " + render_rule(r) + " has " +
                      std::to_string(occurrences.size()) +
                      " nullable occurrences; the expansion limit is " +
                      std::to_string(kMaxNullableOccurrences));

    // Every subset of nullable occurrences may vanish; the empty subset
    // keeps the original rule. Residuals that drop to %empty are skipped.
    const std::uint64_t subsets = std::uint64_t{1} << occurrences.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      SententialForm residual;
      residual.reserve(r.rhs.size());
      std::size_t next = 0;
      for (std::size_t i = 0; i < r.rhs.size(); ++i) {
        if (next < occurrences.size() && occurrences[next] == i) {
          bool deleted = (mask >> next) & 1;
          ++next;
          if (deleted) continue;
        }
        residual.push_back(r.rhs[i]);
      }
      if (!residual.empty()) rules.push_back(Rule{r.lhs, std::move(residual)});
    }
  }

  rules.push_back(Rule{fresh, {SymbolRef(g.start())}});
  if (nullable.count(g.start())) rules.push_back(Rule{fresh, {}});

  std::set<NonterminalId> nonterminals = g.nonterminals();
  nonterminals.insert(fresh);
  return Grammar(fresh, std::move(rules), std::move(nonterminals),
                 g.terminals());
}

UnitPairSet unit_pairs(const Grammar& g) {
  require_valid(g);
  std::unordered_map<NonterminalId, std::vector<NonterminalId>> edges;
  for (const Rule& r : g.rules())
    if (r.rhs.size() == 1 && r.rhs[0].is_nonterminal())
      edges[r.lhs].push_back(r.rhs[0].nonterminal());

  UnitPairSet pairs;
  for (const NonterminalId& a : g.nonterminals()) {
    // One or more edges; (a, a) shows up only through a cycle.
    std::set<NonterminalId> reached;
    std::vector<NonterminalId> todo;
    auto it = edges.find(a);
    if (it == edges.end()) continue;
    for (const NonterminalId& b : it->second) todo.push_back(b);
    while (!todo.empty()) {
      NonterminalId b = todo.back();
      todo.pop_back();
      if (!reached.insert(b).second) continue;
      pairs.insert({a, b});
      auto jt = edges.find(b);
      if (jt != edges.end())
        for (const NonterminalId& c : jt->second) todo.push_back(c);
    }
  }
  return pairs;
}

namespace {

bool is_unit_rule(const Rule& r) {
  return r.rhs.size() == 1 && r.rhs[0].is_nonterminal();
}

}  // namespace

Grammar remove_unit(const Grammar& g) {
  UnitPairSet pairs = unit_pairs(g);  // validates

  std::vector<Rule> rules;
  for (const Rule& r : g.rules())
    if (!is_unit_rule(r)) rules.push_back(r);
  for (const auto& [a, b] : pairs) {
    for (std::size_t i : g.rule_indices_for(b)) {
      const Rule& r = g.rules()[i];
      if (!is_unit_rule(r)) rules.push_back(Rule{a, r.rhs});
    }
  }
  return Grammar(g.start(), std::move(rules), g.nonterminals(),
                 g.terminals());
}

std::set<NonterminalId> useful_set(const Grammar& g) {
  require_valid(g);
  std::set<NonterminalId> useful;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : g.rules()) {
      if (useful.count(r.lhs)) continue;
      bool all = true;
      for (const SymbolRef& s : r.rhs) {
        if (s.is_nonterminal() && !useful.count(s.nonterminal())) {
          all = false;
          break;
        }
      }
      if (all) {
        useful.insert(r.lhs);
        changed = true;
      }
    }
  }
  return useful;
}

Grammar remove_useless(const Grammar& g) {
  std::set<NonterminalId> useful = useful_set(g);  // validates
  if (!useful.count(g.start()))
    throw Error(ErrorKind::Precondition,
                "empty language: the start symbol derives no sentence");

  std::vector<Rule> rules;
  for (const Rule& r : g.rules()) {
    if (!useful.count(r.lhs)) continue;
    bool keep = true;
    for (const SymbolRef& s : r.rhs) {
      if (s.is_nonterminal() && !useful.count(s.nonterminal())) {
        keep = false;
        break;
      }
    }
    if (keep) rules.push_back(r);
  }

  std::set<NonterminalId> nonterminals;
  for (const NonterminalId& n : g.nonterminals())
    if (useful.count(n)) nonterminals.insert(n);
  return Grammar(g.start(), std::move(rules), std::move(nonterminals),
                 g.terminals());
}

std::set<SymbolRef> accessible_set(const Grammar& g) {
  require_valid(g);
  std::set<SymbolRef> accessible;
  accessible.insert(SymbolRef(g.start()));
  std::vector<NonterminalId> todo{g.start()};
  while (!todo.empty()) {
    NonterminalId a = todo.back();
    todo.pop_back();
    for (std::size_t i : g.rule_indices_for(a)) {
      for (const SymbolRef& s : g.rules()[i].rhs) {
        if (!accessible.insert(s).second) continue;
        if (s.is_nonterminal()) todo.push_back(s.nonterminal());
      }
    }
  }
  return accessible;
}

Grammar remove_inaccessible(const Grammar& g) {
  std::set<SymbolRef> accessible = accessible_set(g);  // validates

  std::vector<Rule> rules;
  for (const Rule& r : g.rules())
    if (accessible.count(SymbolRef(r.lhs))) rules.push_back(r);

  std::set<NonterminalId> nonterminals;
  for (const NonterminalId& n : g.nonterminals())
    if (accessible.count(SymbolRef(n))) nonterminals.insert(n);
  std::set<TerminalId> terminals;
  for (const TerminalId& t : g.terminals())
    if (accessible.count(SymbolRef(t))) terminals.insert(t);

  return Grammar(g.start(), std::move(rules), std::move(nonterminals),
                 std::move(terminals));
}

Grammar simplify(const Grammar& g) {
  require_valid(g);
  if (!useful_set(g).count(g.start()))
    throw Error(ErrorKind::Precondition,
                "empty language: the start symbol derives no sentence");
  // Unit removal must run after empty removal (deleting nullable symbols can
  // create new unit rules); accessibility last, so that symbols orphaned by
  // the earlier passes are swept out.
  return remove_inaccessible(remove_useless(remove_unit(remove_empty(g))));
}

SimplificationFlags check_predicates(const Grammar& g) {
  require_valid(g);
  SimplificationFlags f{};

  std::size_t empty_rules = 0;
  bool empty_rule_on_start = false;
  bool any_unit = false;
  bool start_in_rhs = false;
  for (const Rule& r : g.rules()) {
    if (r.rhs.empty()) {
      ++empty_rules;
      empty_rule_on_start = r.lhs == g.start();
    }
    if (is_unit_rule(r)) any_unit = true;
    for (const SymbolRef& s : r.rhs)
      if (s.is_nonterminal() && s.nonterminal() == g.start())
        start_in_rhs = true;
  }
  f.has_no_empty_rules = empty_rules == 0;
  f.has_one_empty_rule = empty_rules == 1 && empty_rule_on_start;
  f.has_no_unit_rules = !any_unit;
  f.start_symbol_not_in_rhs = !start_in_rhs;

  std::set<NonterminalId> useful = useful_set(g);
  f.has_no_useless_symbols = true;
  for (const NonterminalId& n : g.nonterminals())
    if (!useful.count(n)) f.has_no_useless_symbols = false;

  std::set<SymbolRef> accessible = accessible_set(g);
  f.has_no_inaccessible_symbols = true;
  for (const NonterminalId& n : g.nonterminals())
    if (!accessible.count(SymbolRef(n))) f.has_no_inaccessible_symbols = false;
  for (const TerminalId& t : g.terminals())
    if (!accessible.count(SymbolRef(t))) f.has_no_inaccessible_symbols = false;

  return f;
}

}  // namespace cfgkit
