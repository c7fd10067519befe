// Command line front end; all grammar work goes through the C API.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cfgkit.h"

namespace {

struct Handle {
  cfgkit_grammar* g = nullptr;
  ~Handle() { cfgkit_grammar_free(g); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { cfgkit_string_free(s); }
};

int exit_code_for(cfgkit_status status) {
  switch (status) {
    case CFGKIT_OK:
      return 0;
    case CFGKIT_ERR_PRECONDITION:
    case CFGKIT_ERR_LIMIT:
      return 2;
    default:
      return 1;
  }
}

int fail(cfgkit_status status, const OwnedString& message) {
  std::cerr << "error: " << (message.s ? message.s : "operation failed")
            << "\n";
  return exit_code_for(status);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

// 0 on success, CLI exit code otherwise.
int load(const std::string& path, Handle& h) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return 1;
  }
  OwnedString err;
  cfgkit_status status = cfgkit_parse(text.c_str(), &h.g, &err.s);
  if (status != CFGKIT_OK) return fail(status, err);
  return 0;
}

int print_rendered(const Handle& h) {
  OwnedString text;
  cfgkit_status status = cfgkit_render(h.g, &text.s);
  if (status != CFGKIT_OK) return fail(status, OwnedString{});
  std::cout << text.s;
  return 0;
}

int run_validate(const std::string& path) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return 1;
  }
  int ok = 0;
  OwnedString report;
  cfgkit_status status = cfgkit_validate_text(text.c_str(), &ok, &report.s);
  if (status != CFGKIT_OK) return fail(status, report);
  if (ok) {
    std::cout << "ok\n";
    return 0;
  }
  std::cout << (report.s ? report.s : "");
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"context-free grammar toolkit"};
  app.require_subcommand(1);

  std::string file1, file2;
  std::string pass = "all";
  unsigned max_len = 6;
  std::vector<std::string> tokens;

  CLI::App* cmd_validate =
      app.add_subcommand("validate", "report grammar invariant violations");
  cmd_validate->add_option("grammar", file1, "grammar file")->required();

  CLI::App* cmd_union =
      app.add_subcommand("union", "grammar for the union of two languages");
  cmd_union->add_option("grammar1", file1)->required();
  cmd_union->add_option("grammar2", file2)->required();

  CLI::App* cmd_concat = app.add_subcommand(
      "concat", "grammar for the concatenation of two languages");
  cmd_concat->add_option("grammar1", file1)->required();
  cmd_concat->add_option("grammar2", file2)->required();

  CLI::App* cmd_star =
      app.add_subcommand("star", "grammar for the Kleene star of a language");
  cmd_star->add_option("grammar", file1)->required();

  CLI::App* cmd_simplify =
      app.add_subcommand("simplify", "remove empty/unit rules and dead symbols");
  cmd_simplify->add_option("grammar", file1)->required();
  cmd_simplify
      ->add_option("--pass", pass, "empty|unit|useless|inaccessible|all")
      ->check(CLI::IsMember({"empty", "unit", "useless", "inaccessible",
                             "all"}));

  CLI::App* cmd_cnf =
      app.add_subcommand("cnf", "convert to Chomsky normal form");
  cmd_cnf->add_option("grammar", file1)->required();

  CLI::App* cmd_check =
      app.add_subcommand("check", "print shape predicates of the grammar");
  cmd_check->add_option("grammar", file1)->required();

  CLI::App* cmd_enum =
      app.add_subcommand("enum", "list all sentences up to a length bound");
  cmd_enum->add_option("grammar", file1)->required();
  cmd_enum->add_option("--max-len", max_len, "length bound (default 6)");

  CLI::App* cmd_member =
      app.add_subcommand("member", "test membership of a sentence");
  cmd_member->add_option("grammar", file1)->required();
  cmd_member->add_option("tokens", tokens, "terminal tokens (none = %empty)");

  CLI::App* cmd_equiv = app.add_subcommand(
      "equiv", "compare bounded languages of two grammars");
  cmd_equiv->add_option("grammar1", file1)->required();
  cmd_equiv->add_option("grammar2", file2)->required();
  cmd_equiv->add_option("--max-len", max_len, "length bound (default 6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*cmd_validate) return run_validate(file1);

  if (*cmd_union || *cmd_concat || *cmd_equiv) {
    Handle g1, g2;
    if (int rc = load(file1, g1)) return rc;
    if (int rc = load(file2, g2)) return rc;
    OwnedString err;
    if (*cmd_equiv) {
      int equal = 0, side = 0;
      OwnedString counterexample;
      cfgkit_status status = cfgkit_equiv(g1.g, g2.g, max_len, &equal, &side,
                                          &counterexample.s, &err.s);
      if (status != CFGKIT_OK) return fail(status, err);
      if (equal)
        std::cout << "equal\n";
      else
        std::cout << "counterexample: " << side << " "
                  << (counterexample.s ? counterexample.s : "") << "\n";
      return 0;
    }
    Handle out;
    cfgkit_status status = *cmd_union
                               ? cfgkit_union(g1.g, g2.g, &out.g, &err.s)
                               : cfgkit_concat(g1.g, g2.g, &out.g, &err.s);
    if (status != CFGKIT_OK) return fail(status, err);
    return print_rendered(out);
  }

  Handle g;
  if (int rc = load(file1, g)) return rc;
  OwnedString err;

  if (*cmd_star || *cmd_simplify || *cmd_cnf) {
    Handle out;
    cfgkit_status status =
        *cmd_star ? cfgkit_star(g.g, &out.g, &err.s)
        : *cmd_simplify
            ? cfgkit_simplify(g.g, pass.c_str(), &out.g, &err.s)
            : cfgkit_to_cnf(g.g, &out.g, &err.s);
    if (status != CFGKIT_OK) return fail(status, err);
    return print_rendered(out);
  }

  if (*cmd_check) {
    OwnedString report;
    cfgkit_status status = cfgkit_check(g.g, &report.s);
    if (status != CFGKIT_OK) return fail(status, OwnedString{});
    std::cout << (report.s ? report.s : "");
    return 0;
  }

  if (*cmd_enum) {
    OwnedString lines;
    cfgkit_status status = cfgkit_enumerate(g.g, max_len, &lines.s, &err.s);
    if (status != CFGKIT_OK) return fail(status, err);
    std::cout << (lines.s ? lines.s : "");
    return 0;
  }

  if (*cmd_member) {
    std::vector<const char*> raw;
    raw.reserve(tokens.size());
    for (const std::string& t : tokens) raw.push_back(t.c_str());
    int member = 0;
    cfgkit_status status = cfgkit_member(
        g.g, raw.empty() ? nullptr : raw.data(), raw.size(), &member, &err.s);
    if (status != CFGKIT_OK) return fail(status, err);
    std::cout << (member ? "yes" : "no") << "\n";
    return 0;
  }

  return 1;  // unreachable with require_subcommand(1)
}
