#pragma once

#include "cfgkit/grammar.hpp"

namespace cfgkit {

// Union, concatenation and Kleene star build a fresh grammar around wrapped
// copies of the operands: operand nonterminals are lifted (Lifted1 for the
// first or only operand, Lifted2 for the second), so the minted FreshStart(0)
// can never collide, even when constructions are stacked. Terminal alphabets
// are merged by name.

Grammar grammar_union(const Grammar&, const Grammar&);
Grammar grammar_concat(const Grammar&, const Grammar&);
Grammar grammar_star(const Grammar&);

}  // namespace cfgkit
