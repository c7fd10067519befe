#pragma once

#include <set>
#include <utility>

#include "cfgkit/grammar.hpp"

namespace cfgkit {

using NullableSet = std::set<NonterminalId>;
using UnitPairSet = std::set<std::pair<NonterminalId, NonterminalId>>;

// Nonterminals that derive the empty sentence.
NullableSet nullable_set(const Grammar&);

// Removes epsilon rules. The result has a fresh start symbol; its only
// possible epsilon rule is <new start> -> %empty, present exactly when the
// old start was nullable. The language is preserved, epsilon included.
// Throws ErrorKind::Limit when a rule carries more than
// kMaxNullableOccurrences nullable occurrences.
Grammar remove_empty(const Grammar&);
inline constexpr std::size_t kMaxNullableOccurrences = 16;

// (a, b) such that a derives the single-symbol form [b] through one or more
// unit rules. Reflexive pairs appear only via genuine cycles.
UnitPairSet unit_pairs(const Grammar&);

// Removes rules whose rhs is exactly one nonterminal, preserving the
// language exactly.
Grammar remove_unit(const Grammar&);

// Nonterminals that derive at least one sentence (epsilon counts).
std::set<NonterminalId> useful_set(const Grammar&);

// Keeps only rules built from useful symbols. Requires a non-empty
// language; throws ErrorKind::Precondition otherwise.
Grammar remove_useless(const Grammar&);

// Symbols reachable from the start symbol through rule right-hand sides.
std::set<SymbolRef> accessible_set(const Grammar&);

// Keeps only rules whose lhs is reachable from the start symbol.
Grammar remove_inaccessible(const Grammar&);

// remove_empty, then remove_unit, then remove_useless, then
// remove_inaccessible. Requires a non-empty language.
Grammar simplify(const Grammar&);

struct SimplificationFlags {
  bool has_no_empty_rules;
  bool has_one_empty_rule;  // exactly one, and its lhs is the start symbol
  bool has_no_unit_rules;
  bool has_no_useless_symbols;
  bool has_no_inaccessible_symbols;
  bool start_symbol_not_in_rhs;
};

SimplificationFlags check_predicates(const Grammar&);

}  // namespace cfgkit
