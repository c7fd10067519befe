#pragma once

#include "cfgkit/grammar.hpp"

namespace cfgkit {

// Every rule body is exactly one terminal or exactly two nonterminals.
bool is_cnf(const Grammar&);

// Like is_cnf, except for a single <start> -> %empty rule; the start symbol
// must then not occur in any rhs.
bool is_cnf_with_empty_rule(const Grammar&);

// Chomsky normal form conversion. Simplifies first, then rebuilds the rules
// over Group nonterminals:
//   A -> t                      becomes  Group([A]) -> t
//   A -> x1 x2 ... xk  (k >= 2) becomes  Group([A])        -> Group([x1]) Group([x2..xk])
//                                        Group([xi..xk])   -> Group([xi]) Group([xi+1..xk])
//   Group([t]) -> t  for every terminal t occurring in a rhs of length >= 2
// The start symbol is Group([<simplified start>]); a start epsilon rule is
// added exactly when the source language contains the empty sentence.
// Requires a non-empty language; throws ErrorKind::Precondition otherwise.
Grammar to_cnf(const Grammar&);

}  // namespace cfgkit
