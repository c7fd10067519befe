#include "cfgkit/derivation.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>

#include "cfgkit/cnf.hpp"
#include "cfgkit/error.hpp"
#include "cfgkit/simplify.hpp"
#include "cfgkit/text.hpp"

namespace cfgkit {

SententialForm apply_step(const Grammar& g, const SententialForm& form,
                          std::size_t position, const Rule& rule) {
  if (position >= form.size())
    throw Error(ErrorKind::Step,
                "position " + std::to_string(position) +
                    " is out of range for a form of length " +
                    std::to_string(form.size()));
  const SymbolRef& at = form[position];
  if (at.is_terminal())
    throw Error(ErrorKind::Step, "symbol at position " +
                                     std::to_string(position) +
                                     " is the terminal " + at.terminal().name());
  if (at.nonterminal() != rule.lhs)
    throw Error(ErrorKind::Step,
                "symbol at position " + std::to_string(position) + " is " +
                    flattened_name(at.nonterminal()) + ", the rule rewrites " +
                    flattened_name(rule.lhs));
  if (!g.has_rule(rule))
    throw Error(ErrorKind::Step,
                "rule " + render_rule(rule) + " is not part of the grammar");

  SententialForm out;
  out.reserve(form.size() - 1 + rule.rhs.size());
  out.insert(out.end(), form.begin(), form.begin() + position);
  out.insert(out.end(), rule.rhs.begin(), rule.rhs.end());
  out.insert(out.end(), form.begin() + position + 1, form.end());
  return out;
}

SententialForm replay(const Grammar& g, const SententialForm& from,
                      const DerivationTrace& trace) {
  SententialForm form = from;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    try {
      form = apply_step(g, form, trace[i].position, trace[i].rule);
    } catch (const Error& e) {
      throw Error(e.kind(),
                  "step " + std::to_string(i) + ": " + e.what());
    }
  }
  return form;
}

DerivationTrace shifted_trace(const DerivationTrace& trace,
                              std::size_t offset) {
  DerivationTrace out = trace;
  for (TraceStep& s : out) s.position += offset;
  return out;
}

SplitTraces split_trace(const Grammar& g, const SententialForm& left,
                        const SententialForm& right,
                        const DerivationTrace& combined) {
  SplitTraces out;
  std::size_t boundary = left.size();
  for (const TraceStep& s : combined) {
    if (s.position < boundary) {
      out.left_trace.push_back(s);
      boundary += s.rule.rhs.size();
      boundary -= 1;  // the rewritten symbol itself
    } else {
      out.right_trace.push_back(TraceStep{s.position - boundary, s.rule});
    }
  }
  out.left_result = replay(g, left, out.left_trace);
  out.right_result = replay(g, right, out.right_trace);
  return out;
}

SearchResult derives_within(const Grammar& g, const SententialForm& from,
                            const SententialForm& to, std::size_t max_steps,
                            std::size_t visited_cap) {
  require_valid(g);

  struct Arrival {
    std::string parent;
    std::size_t position = 0;
    std::size_t rule_index = 0;
  };
  // Keys are canonical renderings, which makes revisits cheap to detect.
  std::unordered_map<std::string, Arrival> visited;

  const std::string source = render_form(from);
  const std::string target = render_form(to);
  visited.emplace(source, Arrival{});
  if (source == target) return {SearchOutcome::Found, {}};

  auto reconstruct = [&](std::string key) {
    DerivationTrace trace;
    while (key != source) {
      const Arrival& a = visited.at(key);
      trace.push_back(TraceStep{a.position, g.rules()[a.rule_index]});
      key = a.parent;
    }
    std::reverse(trace.begin(), trace.end());
    return trace;
  };

  std::vector<SententialForm> frontier{from};
  for (std::size_t depth = 1; depth <= max_steps && !frontier.empty();
       ++depth) {
    std::vector<SententialForm> next;
    for (const SententialForm& form : frontier) {
      const std::string form_key = render_form(form);
      for (std::size_t pos = 0; pos < form.size(); ++pos) {
        if (!form[pos].is_nonterminal()) continue;
        for (std::size_t ri : g.rule_indices_for(form[pos].nonterminal())) {
          const Rule& rule = g.rules()[ri];
          SententialForm rewritten;
          rewritten.reserve(form.size() - 1 + rule.rhs.size());
          rewritten.insert(rewritten.end(), form.begin(), form.begin() + pos);
          rewritten.insert(rewritten.end(), rule.rhs.begin(), rule.rhs.end());
          rewritten.insert(rewritten.end(), form.begin() + pos + 1,
                           form.end());
          std::string key = render_form(rewritten);
          auto [it, inserted] =
              visited.emplace(std::move(key), Arrival{form_key, pos, ri});
          if (!inserted) continue;
          if (it->first == target)
            return {SearchOutcome::Found, reconstruct(it->first)};
          if (visited.size() > visited_cap)
            return {SearchOutcome::CapExceeded, {}};
          next.push_back(std::move(rewritten));
        }
      }
    }
    frontier = std::move(next);
  }
  return {SearchOutcome::NotFound, {}};
}

bool sentence_less(const Sentence& a, const Sentence& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool LanguageSample::contains(const Sentence& s) const {
  return std::binary_search(sentences.begin(), sentences.end(), s,
                            sentence_less);
}

namespace {

bool cnf_shape(const Rule& r) {
  if (r.rhs.size() == 1) return r.rhs[0].is_terminal();
  if (r.rhs.size() == 2)
    return r.rhs[0].is_nonterminal() && r.rhs[1].is_nonterminal();
  return false;
}

// Empty when the grammar is CYK-compatible, otherwise a rule to blame.
std::optional<std::string> cnf_violation(const Grammar& g) {
  if (is_cnf(g) || is_cnf_with_empty_rule(g)) return std::nullopt;
  for (const Rule& r : g.rules())
    if (!cnf_shape(r) && !(r.rhs.empty() && r.lhs == g.start()))
      return render_rule(r);
  for (const Rule& r : g.rules())
    for (const SymbolRef& s : r.rhs)
      if (s.is_nonterminal() && s.nonterminal() == g.start())
        return render_rule(r);
  return g.rules().empty() ? std::optional<std::string>{}
                           : render_rule(g.rules().front());
}

// Dense rule tables plus one bitset row per terminal.
struct CykIndex {
  std::unordered_map<NonterminalId, int> nt_index;
  std::size_t words = 0;
  int start = -1;
  bool start_epsilon = false;
  std::unordered_map<std::string, std::vector<std::uint64_t>> terminal_rows;
  struct BinRule {
    int a, b, c;
  };
  std::vector<BinRule> binary;
};

CykIndex build_cyk_index(const Grammar& g) {
  CykIndex ix;
  auto intern = [&](const NonterminalId& n) {
    auto [it, fresh] = ix.nt_index.emplace(n, ix.nt_index.size());
    (void)fresh;
    return it->second;
  };
  ix.start = intern(g.start());
  for (const Rule& r : g.rules()) {
    int a = intern(r.lhs);
    if (r.rhs.empty()) ix.start_epsilon = true;
    for (const SymbolRef& s : r.rhs)
      if (s.is_nonterminal()) intern(s.nonterminal());
    if (r.rhs.size() == 2)
      ix.binary.push_back({a, intern(r.rhs[0].nonterminal()),
                           intern(r.rhs[1].nonterminal())});
  }
  ix.words = (ix.nt_index.size() + 63) / 64;
  for (const Rule& r : g.rules()) {
    if (r.rhs.size() == 1 && r.rhs[0].is_terminal()) {
      auto& row = ix.terminal_rows[r.rhs[0].terminal().name()];
      row.resize(ix.words, 0);
      int a = ix.nt_index.at(r.lhs);
      row[a / 64] |= std::uint64_t{1} << (a % 64);
    }
  }
  return ix;
}

bool cyk_run(const CykIndex& ix, const Sentence& w) {
  if (w.empty()) return ix.start_epsilon;
  const std::size_t n = w.size();
  const std::size_t words = ix.words;
  // table[(len-1) * n + i] covers w[i .. i+len)
  std::vector<std::uint64_t> table(n * n * words, 0);
  auto cell = [&](std::size_t i, std::size_t len) {
    return table.data() + ((len - 1) * n + i) * words;
  };

  static const std::vector<std::uint64_t> no_producers;
  for (std::size_t i = 0; i < n; ++i) {
    auto it = ix.terminal_rows.find(w[i].name());
    const auto& row = it == ix.terminal_rows.end() ? no_producers : it->second;
    std::copy(row.begin(), row.end(), cell(i, 1));
  }

  auto test = [&](const std::uint64_t* bits, int id) {
    return (bits[id / 64] >> (id % 64)) & 1;
  };
  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      std::uint64_t* out = cell(i, len);
      for (std::size_t split = 1; split < len; ++split) {
        const std::uint64_t* lhs = cell(i, split);
        const std::uint64_t* rhs = cell(i + split, len - split);
        for (const CykIndex::BinRule& r : ix.binary)
          if (test(lhs, r.b) && test(rhs, r.c))
            out[r.a / 64] |= std::uint64_t{1} << (r.a % 64);
      }
    }
  }
  return test(cell(0, n), ix.start);
}

}  // namespace

bool cyk_member(const Grammar& g, const Sentence& w) {
  require_valid(g);
  if (auto bad = cnf_violation(g))
    throw Error(ErrorKind::Precondition,
                "grammar not in CNF (rule " + *bad + ")");
  return cyk_run(build_cyk_index(g), w);
}

LanguageSample enumerate_language(const Grammar& g, std::size_t max_len) {
  require_valid(g);
  LanguageSample sample{max_len, {}};
  if (!useful_set(g).count(g.start())) return sample;  // empty language

  if (nullable_set(g).count(g.start())) sample.sentences.push_back({});

  CykIndex ix = build_cyk_index(to_cnf(g));
  std::vector<TerminalId> alphabet(g.terminals().begin(), g.terminals().end());
  if (alphabet.empty()) return sample;

  // Candidates in length order, lexicographic within a length, so the
  // sample comes out sorted without a separate pass.
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> digits(len, 0);
    while (true) {
      Sentence w;
      w.reserve(len);
      for (std::size_t d : digits) w.push_back(alphabet[d]);
      if (cyk_run(ix, w)) sample.sentences.push_back(std::move(w));

      std::size_t k = len;
      while (k > 0 && digits[k - 1] + 1 == alphabet.size()) digits[--k] = 0;
      if (k == 0) break;
      ++digits[k - 1];
    }
  }
  return sample;
}

}  // namespace cfgkit
