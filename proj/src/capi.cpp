#include "cfgkit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "cfgkit/closure.hpp"
#include "cfgkit/cnf.hpp"
#include "cfgkit/derivation.hpp"
#include "cfgkit/equivalence.hpp"
#include "cfgkit/error.hpp"
#include "cfgkit/simplify.hpp"
#include "cfgkit/text.hpp"

struct cfgkit_grammar {
  cfgkit::Grammar value;
};

namespace {

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** slot, const std::string& message) {
  if (slot) *slot = copy_string(message);
}

cfgkit_status status_of(const cfgkit::Error& e) {
  switch (e.kind()) {
    case cfgkit::ErrorKind::Syntax:
      return CFGKIT_ERR_SYNTAX;
    case cfgkit::ErrorKind::Validation:
      return CFGKIT_ERR_VALIDATION;
    case cfgkit::ErrorKind::Precondition:
      return CFGKIT_ERR_PRECONDITION;
    case cfgkit::ErrorKind::Limit:
      return CFGKIT_ERR_LIMIT;
    case cfgkit::ErrorKind::Step:
      return CFGKIT_ERR_INTERNAL;
  }
  return CFGKIT_ERR_INTERNAL;
}

// Runs the body, translating exceptions to statuses and messages.
template <typename F>
cfgkit_status guarded(char** out_error, F&& body) {
  try {
    return body();
  } catch (const cfgkit::Error& e) {
    set_error(out_error, e.what());
    return status_of(e);
  } catch (const std::bad_alloc&) {
    return CFGKIT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(out_error, e.what());
    return CFGKIT_ERR_INTERNAL;
  }
}

cfgkit_status emit(cfgkit::Grammar g, cfgkit_grammar** out_grammar) {
  *out_grammar = new cfgkit_grammar{std::move(g)};
  return CFGKIT_OK;
}

}  // namespace

void cfgkit_string_free(char* s) { std::free(s); }

void cfgkit_grammar_free(cfgkit_grammar* g) { delete g; }

cfgkit_status cfgkit_parse(const char* text, cfgkit_grammar** out_grammar,
                           char** out_error) {
  if (!text || !out_grammar) return CFGKIT_ERR_ARGUMENT;
  *out_grammar = nullptr;
  return guarded(out_error, [&] {
    return emit(cfgkit::parse_grammar(text), out_grammar);
  });
}

cfgkit_status cfgkit_validate_text(const char* text, int* out_ok,
                                   char** out_report) {
  if (!text || !out_ok) return CFGKIT_ERR_ARGUMENT;
  *out_ok = 0;
  return guarded(out_report, [&] {
    auto [g, report] = cfgkit::parse_grammar_with_report(text);
    *out_ok = report.ok ? 1 : 0;
    if (out_report) {
      std::string lines;
      for (const std::string& v : report.violations) {
        lines += v;
        lines += '\n';
      }
      *out_report = copy_string(lines);
    }
    return CFGKIT_OK;
  });
}

cfgkit_status cfgkit_render(const cfgkit_grammar* g, char** out_text) {
  if (!g || !out_text) return CFGKIT_ERR_ARGUMENT;
  return guarded(nullptr, [&] {
    *out_text = copy_string(cfgkit::render_grammar(g->value));
    return CFGKIT_OK;
  });
}

cfgkit_status cfgkit_union(const cfgkit_grammar* g1, const cfgkit_grammar* g2,
                           cfgkit_grammar** out_grammar, char** out_error) {
  if (!g1 || !g2 || !out_grammar) return CFGKIT_ERR_ARGUMENT;
  *out_grammar = nullptr;
  return guarded(out_error, [&] {
    return emit(cfgkit::grammar_union(g1->value, g2->value), out_grammar);
  });
}

cfgkit_status cfgkit_concat(const cfgkit_grammar* g1, const cfgkit_grammar* g2,
                            cfgkit_grammar** out_grammar, char** out_error) {
  if (!g1 || !g2 || !out_grammar) return CFGKIT_ERR_ARGUMENT;
  *out_grammar = nullptr;
  return guarded(out_error, [&] {
    return emit(cfgkit::grammar_concat(g1->value, g2->value), out_grammar);
  });
}

cfgkit_status cfgkit_star(const cfgkit_grammar* g, cfgkit_grammar** out_grammar,
                          char** out_error) {
  if (!g || !out_grammar) return CFGKIT_ERR_ARGUMENT;
  *out_grammar = nullptr;
  return guarded(out_error, [&] {
    return emit(cfgkit::grammar_star(g->value), out_grammar);
  });
}

cfgkit_status cfgkit_simplify(const cfgkit_grammar* g, const char* pass,
                              cfgkit_grammar** out_grammar, char** out_error) {
  if (!g || !pass || !out_grammar) return CFGKIT_ERR_ARGUMENT;
  *out_grammar = nullptr;
  std::string which = pass;
  return guarded(out_error, [&] {
    if (which == "empty") return emit(cfgkit::remove_empty(g->value), out_grammar);
    if (which == "unit") return emit(cfgkit::remove_unit(g->value), out_grammar);
    if (which == "useless")
      return emit(cfgkit::remove_useless(g->value), out_grammar);
    if (which == "inaccessible")
      return emit(cfgkit::remove_inaccessible(g->value), out_grammar);
    if (which == "all") return emit(cfgkit::simplify(g->value), out_grammar);
    set_error(out_error, "unknown pass '" + which + "'");
    return CFGKIT_ERR_ARGUMENT;
  });
}

cfgkit_status cfgkit_to_cnf(const cfgkit_grammar* g,
                            cfgkit_grammar** out_grammar, char** out_error) {
  if (!g || !out_grammar) return CFGKIT_ERR_ARGUMENT;
  *out_grammar = nullptr;
  return guarded(out_error, [&] {
    return emit(cfgkit::to_cnf(g->value), out_grammar);
  });
}

cfgkit_status cfgkit_check(const cfgkit_grammar* g, char** out_report) {
  if (!g || !out_report) return CFGKIT_ERR_ARGUMENT;
  return guarded(nullptr, [&] {
    cfgkit::SimplificationFlags f = cfgkit::check_predicates(g->value);
    auto line = [](const char* name, bool v) {
      return std::string(name) + ": " + (v ? "true" : "false") + "\n";
    };
    std::string report;
    report += line("has_no_empty_rules", f.has_no_empty_rules);
    report += line("has_one_empty_rule", f.has_one_empty_rule);
    report += line("has_no_unit_rules", f.has_no_unit_rules);
    report += line("has_no_useless_symbols", f.has_no_useless_symbols);
    report += line("has_no_inaccessible_symbols",
                   f.has_no_inaccessible_symbols);
    report += line("start_symbol_not_in_rhs", f.start_symbol_not_in_rhs);
    report += line("is_cnf", cfgkit::is_cnf(g->value));
    report += line("is_cnf_with_empty_rule",
                   cfgkit::is_cnf_with_empty_rule(g->value));
    *out_report = copy_string(report);
    return CFGKIT_OK;
  });
}

cfgkit_status cfgkit_enumerate(const cfgkit_grammar* g, unsigned max_len,
                               char** out_lines, char** out_error) {
  if (!g || !out_lines) return CFGKIT_ERR_ARGUMENT;
  *out_lines = nullptr;
  return guarded(out_error, [&] {
    cfgkit::LanguageSample sample =
        cfgkit::enumerate_language(g->value, max_len);
    std::string lines;
    for (const cfgkit::Sentence& s : sample.sentences) {
      lines += cfgkit::render_sentence(s);
      lines += '\n';
    }
    *out_lines = copy_string(lines);
    return CFGKIT_OK;
  });
}

cfgkit_status cfgkit_member(const cfgkit_grammar* g,
                            const char* const* tokens, size_t count,
                            int* out_member, char** out_error) {
  if (!g || !out_member || (count > 0 && !tokens)) return CFGKIT_ERR_ARGUMENT;
  *out_member = 0;
  return guarded(out_error, [&] {
    cfgkit::Sentence w;
    w.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (!tokens[i]) return CFGKIT_ERR_ARGUMENT;
      w.push_back(cfgkit::TerminalId(tokens[i]));
    }
    const cfgkit::Grammar& value = g->value;
    if (cfgkit::is_cnf(value) || cfgkit::is_cnf_with_empty_rule(value)) {
      *out_member = cfgkit::cyk_member(value, w) ? 1 : 0;
    } else if (!cfgkit::non_empty(value)) {
      *out_member = 0;  // nothing is a member of the empty language
    } else {
      *out_member = cfgkit::cyk_member(cfgkit::to_cnf(value), w) ? 1 : 0;
    }
    return CFGKIT_OK;
  });
}

cfgkit_status cfgkit_equiv(const cfgkit_grammar* g1, const cfgkit_grammar* g2,
                           unsigned max_len, int* out_equal, int* out_side,
                           char** out_counterexample, char** out_error) {
  if (!g1 || !g2 || !out_equal || !out_side) return CFGKIT_ERR_ARGUMENT;
  *out_equal = 0;
  *out_side = 0;
  return guarded(out_error, [&] {
    cfgkit::EquivVerdict verdict =
        cfgkit::bounded_equiv(g1->value, g2->value, max_len);
    *out_equal = verdict.equal ? 1 : 0;
    *out_side = verdict.side;
    if (!verdict.equal && out_counterexample)
      *out_counterexample =
          copy_string(cfgkit::render_sentence(verdict.counterexample));
    return CFGKIT_OK;
  });
}

cfgkit_status cfgkit_non_empty(const cfgkit_grammar* g, int* out) {
  if (!g || !out) return CFGKIT_ERR_ARGUMENT;
  return guarded(nullptr, [&] {
    *out = cfgkit::non_empty(g->value) ? 1 : 0;
    return CFGKIT_OK;
  });
}

cfgkit_status cfgkit_generates_empty(const cfgkit_grammar* g, int* out) {
  if (!g || !out) return CFGKIT_ERR_ARGUMENT;
  return guarded(nullptr, [&] {
    *out = cfgkit::generates_empty(g->value) ? 1 : 0;
    return CFGKIT_OK;
  });
}
