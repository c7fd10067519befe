#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace cfgkit {

// Terminals are opaque tokens identified by name.
class TerminalId {
 public:
  explicit TerminalId(std::string name) : name_(std::move(name)) {}
  const std::string& name() const { return name_; }

  friend bool operator==(const TerminalId&, const TerminalId&) = default;
  friend auto operator<=>(const TerminalId&, const TerminalId&) = default;

 private:
  std::string name_;
};

class SymbolRef;
using SententialForm = std::vector<SymbolRef>;
using Sentence = std::vector<TerminalId>;

// Nonterminal identities form a tree so that grammar transformations can mint
// symbols that are fresh by construction instead of by name mangling:
//   Base(name)        user-written symbol
//   Lifted1(inner)    first operand of a binary construction (or star body)
//   Lifted2(inner)    second operand of a binary construction
//   FreshStart(k)     start symbol minted by a construction
//   Group(form)       stands for a grouped sentential form (CNF conversion)
// Equality, ordering and hashing are structural. Instances are immutable and
// cheap to copy.
class NonterminalId {
 public:
  enum class Tag { Base, Lifted1, Lifted2, FreshStart, Group };

  static NonterminalId base(std::string name);
  static NonterminalId lifted1(NonterminalId inner);
  static NonterminalId lifted2(NonterminalId inner);
  static NonterminalId fresh_start(unsigned generation);
  static NonterminalId group(SententialForm body);  // body must be non-empty

  Tag tag() const;
  const std::string& base_name() const;      // Tag::Base only
  NonterminalId inner() const;               // Tag::Lifted1 / Tag::Lifted2
  unsigned generation() const;               // Tag::FreshStart only
  const SententialForm& group_body() const;  // Tag::Group only

  std::size_t hash() const;
  static int compare(const NonterminalId&, const NonterminalId&);

  friend bool operator==(const NonterminalId& a, const NonterminalId& b);
  friend bool operator!=(const NonterminalId& a, const NonterminalId& b) {
    return !(a == b);
  }
  friend bool operator<(const NonterminalId& a, const NonterminalId& b) {
    return compare(a, b) < 0;
  }

 private:
  struct Node;
  explicit NonterminalId(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// A symbol occurrence in a rule body: either a terminal or a nonterminal.
class SymbolRef {
 public:
  explicit SymbolRef(TerminalId t) : value_(std::move(t)) {}
  explicit SymbolRef(NonterminalId n) : value_(std::move(n)) {}

  bool is_terminal() const { return value_.index() == 0; }
  bool is_nonterminal() const { return value_.index() == 1; }
  const TerminalId& terminal() const { return std::get<TerminalId>(value_); }
  const NonterminalId& nonterminal() const {
    return std::get<NonterminalId>(value_);
  }

  std::size_t hash() const;
  static int compare(const SymbolRef&, const SymbolRef&);

  friend bool operator==(const SymbolRef& a, const SymbolRef& b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const SymbolRef& a, const SymbolRef& b) {
    return compare(a, b) < 0;
  }

 private:
  std::variant<TerminalId, NonterminalId> value_;
};

int compare_forms(const SententialForm&, const SententialForm&);

struct Rule {
  NonterminalId lhs;
  SententialForm rhs;  // empty rhs encodes an epsilon rule

  friend bool operator==(const Rule& a, const Rule& b) {
    return a.lhs == b.lhs && compare_forms(a.rhs, b.rhs) == 0;
  }
  friend bool operator<(const Rule& a, const Rule& b) {
    int c = NonterminalId::compare(a.lhs, b.lhs);
    if (c != 0) return c < 0;
    return compare_forms(a.rhs, b.rhs) < 0;
  }
};

}  // namespace cfgkit

template <>
struct std::hash<cfgkit::TerminalId> {
  std::size_t operator()(const cfgkit::TerminalId& t) const {
    return std::hash<std::string>{}(t.name());
  }
};

template <>
struct std::hash<cfgkit::NonterminalId> {
  std::size_t operator()(const cfgkit::NonterminalId& n) const {
    return n.hash();
  }
};

template <>
struct std::hash<cfgkit::SymbolRef> {
  std::size_t operator()(const cfgkit::SymbolRef& s) const { return s.hash(); }
};

namespace cfgkit {

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// A context-free grammar over structured nonterminals. Rules are kept as a
// duplicate-free list in first-insertion order; canonical ordering is a
// property of the text rendering, not of the value.
class Grammar {
 public:
  Grammar(NonterminalId start, std::vector<Rule> rules,
          std::set<NonterminalId> nonterminals, std::set<TerminalId> terminals);

  const NonterminalId& start() const { return start_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::set<NonterminalId>& nonterminals() const { return nonterminals_; }
  const std::set<TerminalId>& terminals() const { return terminals_; }

  bool has_rule(const Rule&) const;
  // Indices into rules() whose lhs is the given nonterminal.
  const std::vector<std::size_t>& rule_indices_for(const NonterminalId&) const;

 private:
  NonterminalId start_;
  std::vector<Rule> rules_;
  std::set<NonterminalId> nonterminals_;
  std::set<TerminalId> terminals_;
  std::unordered_map<NonterminalId, std::vector<std::size_t>> by_lhs_;
};

// True when the string can stand alone as a symbol token in grammar text.
bool valid_token(const std::string&);

// Total check of all grammar invariants; violations are data, not faults.
ValidationReport validate(const Grammar&);

// Throws ErrorKind::Validation when the grammar breaks an invariant.
void require_valid(const Grammar&);

}  // namespace cfgkit
