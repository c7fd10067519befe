#include "cfgkit/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cfgkit/error.hpp"

namespace cfgkit {

std::string flattened_name(const NonterminalId& n) {
  switch (n.tag()) {
    case NonterminalId::Tag::Base:
      return n.base_name();
    case NonterminalId::Tag::Lifted1:
      return flattened_name(n.inner()) + "@1";
    case NonterminalId::Tag::Lifted2:
      return flattened_name(n.inner()) + "@2";
    case NonterminalId::Tag::FreshStart:
      return "S%" + std::to_string(n.generation());
    case NonterminalId::Tag::Group: {
      std::string out = "[";
      bool first = true;
      for (const SymbolRef& s : n.group_body()) {
        if (!first) out += '.';
        first = false;
        out += symbol_token(s);
      }
      out += ']';
      return out;
    }
  }
  return {};
}

std::string symbol_token(const SymbolRef& s) {
  return s.is_terminal() ? s.terminal().name() : flattened_name(s.nonterminal());
}

std::string render_form(const SententialForm& form) {
  std::string out;
  for (const SymbolRef& s : form) {
    if (!out.empty()) out += ' ';
    out += symbol_token(s);
  }
  return out;
}

std::string render_sentence(const Sentence& s) {
  if (s.empty()) return "%empty";
  std::string out;
  for (const TerminalId& t : s) {
    if (!out.empty()) out += ' ';
    out += t.name();
  }
  return out;
}

std::string render_rule(const Rule& r) {
  std::string rhs = r.rhs.empty() ? "%empty" : render_form(r.rhs);
  return flattened_name(r.lhs) + " -> " + rhs;
}

namespace {

struct Token {
  std::string text;
  int line;    // 1-based
  int column;  // 1-based
};

// One line of input after comment stripping, split on whitespace.
std::vector<Token> tokenize_line(const std::string& line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t end = line.find('#');
  if (end == std::string::npos) end = line.size();
  while (i < end) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < end && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), line_no, static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

[[noreturn]] void syntax_error(const std::string& message, int line, int col) {
  throw Error(ErrorKind::Syntax,
              "line " + std::to_string(line) + ", column " +
                  std::to_string(col) + ": " + message,
              line, col);
}

struct RawRule {
  Token lhs;
  std::vector<std::vector<Token>> alternatives;  // empty vector = %empty
};

struct ParsedText {
  Token start;
  std::vector<Token> extra_nonterminals;
  std::vector<RawRule> rules;
};

ParsedText parse_lines(const std::string& text) {
  ParsedText out;
  bool saw_start = false;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<Token> toks = tokenize_line(line, line_no);
    if (toks.empty()) continue;

    if (!saw_start) {
      if (toks[0].text != "start:")
        syntax_error("expected 'start: <symbol>' as the first entry",
                     toks[0].line, toks[0].column);
      if (toks.size() != 2)
        syntax_error("'start:' takes exactly one symbol", toks[0].line,
                     toks[0].column);
      if (!valid_token(toks[1].text))
        syntax_error("invalid symbol '" + toks[1].text + "'", toks[1].line,
                     toks[1].column);
      out.start = toks[1];
      saw_start = true;
      continue;
    }

    if (toks[0].text == "start:")
      syntax_error("duplicate 'start:' declaration", toks[0].line,
                   toks[0].column);

    if (toks[0].text == "nonterminals:") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!valid_token(toks[i].text))
          syntax_error("invalid symbol '" + toks[i].text + "'", toks[i].line,
                       toks[i].column);
        out.extra_nonterminals.push_back(toks[i]);
      }
      continue;
    }

    // Rule line: <lhs> -> alt | alt | ...
    if (!valid_token(toks[0].text))
      syntax_error("invalid symbol '" + toks[0].text + "'", toks[0].line,
                   toks[0].column);
    if (toks.size() < 2 || toks[1].text != "->")
      syntax_error("expected '->' after rule left-hand side", toks[0].line,
                   toks[0].column);

    RawRule rule;
    rule.lhs = toks[0];
    std::vector<Token> alt;
    int alt_line = toks[1].line;
    int alt_col = toks[1].column + 3;  // just past "->"
    auto close_alt = [&]() {
      if (alt.empty())
        syntax_error("empty alternative", alt_line, alt_col);
      if (alt.size() == 1 && alt[0].text == "%empty") {
        rule.alternatives.push_back({});
      } else {
        for (const Token& t : alt) {
          if (t.text == "%empty")
            syntax_error("%empty must stand alone in its alternative", t.line,
                         t.column);
          if (!valid_token(t.text))
            syntax_error("invalid symbol '" + t.text + "'", t.line, t.column);
        }
        rule.alternatives.push_back(alt);
      }
      alt.clear();
    };
    for (std::size_t i = 2; i < toks.size(); ++i) {
      if (toks[i].text == "|") {
        close_alt();
        alt_line = toks[i].line;
        alt_col = toks[i].column + 2;
      } else if (toks[i].text == "->") {
        syntax_error("unexpected '->'", toks[i].line, toks[i].column);
      } else {
        alt.push_back(toks[i]);
      }
    }
    close_alt();
    out.rules.push_back(std::move(rule));
  }

  if (!saw_start)
    syntax_error("expected 'start: <symbol>' as the first entry", line_no + 1,
                 1);
  return out;
}

Grammar assemble(const ParsedText& parsed) {
  std::set<std::string> nonterminal_names;
  for (const RawRule& r : parsed.rules) nonterminal_names.insert(r.lhs.text);
  for (const Token& t : parsed.extra_nonterminals)
    nonterminal_names.insert(t.text);

  std::set<NonterminalId> nonterminals;
  for (const std::string& name : nonterminal_names)
    nonterminals.insert(NonterminalId::base(name));

  std::set<TerminalId> terminals;
  std::vector<Rule> rules;
  for (const RawRule& r : parsed.rules) {
    NonterminalId lhs = NonterminalId::base(r.lhs.text);
    for (const std::vector<Token>& alt : r.alternatives) {
      SententialForm rhs;
      rhs.reserve(alt.size());
      for (const Token& t : alt) {
        if (nonterminal_names.count(t.text)) {
          rhs.push_back(SymbolRef(NonterminalId::base(t.text)));
        } else {
          terminals.insert(TerminalId(t.text));
          rhs.push_back(SymbolRef(TerminalId(t.text)));
        }
      }
      rules.push_back(Rule{lhs, std::move(rhs)});
    }
  }

  return Grammar(NonterminalId::base(parsed.start.text), std::move(rules),
                 std::move(nonterminals), std::move(terminals));
}

}  // namespace

std::pair<Grammar, ValidationReport> parse_grammar_with_report(
    const std::string& text) {
  Grammar g = assemble(parse_lines(text));
  ValidationReport report = validate(g);
  return {std::move(g), std::move(report)};
}

Grammar parse_grammar(const std::string& text) {
  Grammar g = assemble(parse_lines(text));
  require_valid(g);
  return g;
}

std::string render_grammar(const Grammar& g) {
  std::string out = "start: " + flattened_name(g.start()) + "\n";

  std::set<NonterminalId> with_rules;
  for (const Rule& r : g.rules()) with_rules.insert(r.lhs);
  std::vector<std::string> extras;
  for (const NonterminalId& n : g.nonterminals())
    if (!with_rules.count(n)) extras.push_back(flattened_name(n));
  std::sort(extras.begin(), extras.end());
  if (!extras.empty()) {
    out += "nonterminals:";
    for (const std::string& e : extras) out += " " + e;
    out += "\n";
  }

  std::vector<std::string> lines;
  lines.reserve(g.rules().size());
  for (const Rule& r : g.rules()) lines.push_back(render_rule(r));
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  for (const std::string& l : lines) out += l + "\n";
  return out;
}

}  // namespace cfgkit
