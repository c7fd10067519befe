#pragma once

#include <string>
#include <utility>

#include "cfgkit/grammar.hpp"

namespace cfgkit {

// Text format:
//   # comment until end of line
//   start: <token>              required, first non-comment line
//   nonterminals: <token> ...   optional, declares symbols with no own rules
//   <lhs> -> <sym> ... | ...    one or more alternatives; %empty alone is
//                               the empty right-hand side
// Every token found on a rule's right-hand side that is neither a rule lhs
// nor declared in a nonterminals: line is a terminal.

// Structured nonterminal names flatten to plain tokens:
//   Base(X)          X
//   Lifted1(n)       <n>@1
//   Lifted2(n)       <n>@2
//   FreshStart(k)    S%k
//   Group([s1..sn])  [s1.s2.....sn]
std::string flattened_name(const NonterminalId&);
std::string symbol_token(const SymbolRef&);

std::string render_form(const SententialForm&);  // "" for the empty form
std::string render_sentence(const Sentence&);    // "%empty" for epsilon
std::string render_rule(const Rule&);

// Throws ErrorKind::Syntax with line/column on malformed text and
// ErrorKind::Validation when the parsed grammar breaks an invariant.
Grammar parse_grammar(const std::string& text);

// Like parse_grammar but returns the validation outcome instead of throwing
// on invariant violations. Still throws on syntax errors.
std::pair<Grammar, ValidationReport> parse_grammar_with_report(
    const std::string& text);

// Canonical form: start line, optional nonterminals line (symbols that are
// not any rule's lhs, sorted), then one rule per line sorted by rendered
// text. Deterministic; reparsing yields the same canonical text.
std::string render_grammar(const Grammar&);

}  // namespace cfgkit
