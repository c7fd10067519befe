#pragma once

#include <cstddef>

#include "cfgkit/derivation.hpp"
#include "cfgkit/grammar.hpp"

namespace cfgkit {

struct EquivVerdict {
  bool equal = true;
  // Meaningful only when !equal: the length-lexicographically smallest
  // sentence in the symmetric difference, and which grammar produced it.
  Sentence counterexample;
  int side = 0;  // 1 or 2
};

// Compares the exact bounded languages of the two grammars.
EquivVerdict bounded_equiv(const Grammar&, const Grammar&,
                           std::size_t max_len);

// True when the start symbol derives at least one sentence.
bool non_empty(const Grammar&);

// True when the empty sentence is in the language.
bool generates_empty(const Grammar&);

}  // namespace cfgkit
