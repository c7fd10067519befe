#include "cfgkit/equivalence.hpp"

#include "cfgkit/simplify.hpp"

namespace cfgkit {

EquivVerdict bounded_equiv(const Grammar& g1, const Grammar& g2,
                           std::size_t max_len) {
  LanguageSample s1 = enumerate_language(g1, max_len);
  LanguageSample s2 = enumerate_language(g2, max_len);

  // Both samples are sorted, so the first mismatch while merging is the
  // smallest member of the symmetric difference.
  std::size_t i = 0, j = 0;
  while (i < s1.sentences.size() || j < s2.sentences.size()) {
    if (j == s2.sentences.size() ||
        (i < s1.sentences.size() &&
         sentence_less(s1.sentences[i], s2.sentences[j])))
      return {false, s1.sentences[i], 1};
    if (i == s1.sentences.size() ||
        sentence_less(s2.sentences[j], s1.sentences[i]))
      return {false, s2.sentences[j], 2};
    ++i;
    ++j;
  }
  return {true, {}, 0};
}

bool non_empty(const Grammar& g) {
  return useful_set(g).count(g.start()) > 0;
}

bool generates_empty(const Grammar& g) {
  return nullable_set(g).count(g.start()) > 0;
}

}  // namespace cfgkit
