#pragma once

#include <cstddef>
#include <vector>

#include "cfgkit/grammar.hpp"

namespace cfgkit {

// One rewriting step: replace the nonterminal at `position` with the body of
// `rule`. Traces carry rules by value so they replay against the grammar
// they were recorded from.
struct TraceStep {
  std::size_t position;
  Rule rule;
};

using DerivationTrace = std::vector<TraceStep>;

// Throws ErrorKind::Step when the position is out of range, the symbol at
// the position is a terminal, the symbol differs from rule.lhs, or the rule
// is not part of the grammar.
SententialForm apply_step(const Grammar&, const SententialForm&,
                          std::size_t position, const Rule&);

// Applies every step in order; rethrows the first failure tagged with its
// step index.
SententialForm replay(const Grammar&, const SententialForm& from,
                      const DerivationTrace&);

// The same steps acting further right, inside a larger form.
DerivationTrace shifted_trace(const DerivationTrace&, std::size_t offset);

// Splits a trace recorded on left ++ right into independent traces on the
// two halves. Steps never cross the boundary, they only move it.
struct SplitTraces {
  DerivationTrace left_trace;
  DerivationTrace right_trace;
  SententialForm left_result;
  SententialForm right_result;
};
SplitTraces split_trace(const Grammar&, const SententialForm& left,
                        const SententialForm& right,
                        const DerivationTrace& combined);

enum class SearchOutcome { Found, NotFound, CapExceeded };

struct SearchResult {
  SearchOutcome outcome;
  DerivationTrace trace;  // meaningful only when outcome == Found
};

// Breadth-first search for a rewriting sequence from `from` to `to` of at
// most max_steps steps. Complete up to the bound unless the number of
// distinct visited forms exceeds visited_cap, which is reported as its own
// outcome instead of being mistaken for absence.
SearchResult derives_within(const Grammar&, const SententialForm& from,
                            const SententialForm& to, std::size_t max_steps,
                            std::size_t visited_cap = 200000);

// Sentences ordered by length, then lexicographically by terminal name.
bool sentence_less(const Sentence&, const Sentence&);

struct LanguageSample {
  std::size_t max_len = 0;
  std::vector<Sentence> sentences;  // sentence_less order, duplicate-free
  bool contains(const Sentence&) const;
};

// Exact bounded language: every sentence of length <= max_len. Internally
// normalizes to Chomsky normal form and decides each candidate string over
// the grammar's terminal alphabet with the CYK table; a start symbol that
// derives no sentence yields the empty sample.
LanguageSample enumerate_language(const Grammar&, std::size_t max_len);

// CYK membership. Requires is_cnf or is_cnf_with_empty_rule; throws
// ErrorKind::Precondition otherwise, naming the offending rule.
bool cyk_member(const Grammar&, const Sentence&);

}  // namespace cfgkit
