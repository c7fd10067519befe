#pragma once

#include <random>

#include "cfgkit/grammar.hpp"

namespace testkit {

// Knobs for the generated population. Symbol names come from fixed pools
// (S A B C / a b c), so grammars built from the same shape share alphabets.
struct GrammarShape {
  std::size_t max_nonterminals = 4;
  std::size_t max_terminals = 3;
  std::size_t max_rules = 8;
  std::size_t max_rhs_len = 3;
  bool allow_epsilon_rules = true;
};

cfgkit::Grammar random_grammar(std::mt19937& rng,
                               const GrammarShape& shape = {});

// Retries until the start symbol derives at least one sentence.
cfgkit::Grammar random_nonempty_grammar(std::mt19937& rng,
                                        const GrammarShape& shape = {});

}  // namespace testkit
