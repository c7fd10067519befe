#include "cfgkit/grammar.hpp"

#include <algorithm>
#include <cctype>

#include "cfgkit/error.hpp"
#include "cfgkit/text.hpp"

namespace cfgkit {

struct NonterminalId::Node {
  Tag tag;
  std::size_t cached_hash = 0;
  std::string base_name;              // Tag::Base
  std::shared_ptr<const Node> inner;  // Tag::Lifted1 / Tag::Lifted2
  unsigned fresh_generation = 0;      // Tag::FreshStart
  SententialForm group_body;          // Tag::Group
};

namespace {

std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

NonterminalId NonterminalId::base(std::string name) {
  auto node = std::make_shared<Node>();
  node->tag = Tag::Base;
  node->base_name = std::move(name);
  node->cached_hash =
      hash_mix(static_cast<std::size_t>(Tag::Base) + 1,
               std::hash<std::string>{}(node->base_name));
  return NonterminalId(std::move(node));
}

NonterminalId NonterminalId::lifted1(NonterminalId inner) {
  auto node = std::make_shared<Node>();
  node->tag = Tag::Lifted1;
  node->cached_hash =
      hash_mix(static_cast<std::size_t>(Tag::Lifted1) + 1, inner.hash());
  node->inner = std::move(inner.node_);
  return NonterminalId(std::move(node));
}

NonterminalId NonterminalId::lifted2(NonterminalId inner) {
  auto node = std::make_shared<Node>();
  node->tag = Tag::Lifted2;
  node->cached_hash =
      hash_mix(static_cast<std::size_t>(Tag::Lifted2) + 1, inner.hash());
  node->inner = std::move(inner.node_);
  return NonterminalId(std::move(node));
}

NonterminalId NonterminalId::fresh_start(unsigned generation) {
  auto node = std::make_shared<Node>();
  node->tag = Tag::FreshStart;
  node->fresh_generation = generation;
  node->cached_hash =
      hash_mix(static_cast<std::size_t>(Tag::FreshStart) + 1, generation);
  return NonterminalId(std::move(node));
}

NonterminalId NonterminalId::group(SententialForm body) {
  if (body.empty())
    throw Error(ErrorKind::Validation, "group nonterminal body must be non-empty");
  auto node = std::make_shared<Node>();
  node->tag = Tag::Group;
  std::size_t h = static_cast<std::size_t>(Tag::Group) + 1;
  for (const SymbolRef& s : body) h = hash_mix(h, s.hash());
  node->cached_hash = h;
  node->group_body = std::move(body);
  return NonterminalId(std::move(node));
}

NonterminalId::Tag NonterminalId::tag() const { return node_->tag; }

const std::string& NonterminalId::base_name() const {
  return node_->base_name;
}

NonterminalId NonterminalId::inner() const {
  return NonterminalId(node_->inner);
}

unsigned NonterminalId::generation() const { return node_->fresh_generation; }

const SententialForm& NonterminalId::group_body() const {
  return node_->group_body;
}

std::size_t NonterminalId::hash() const { return node_->cached_hash; }

int NonterminalId::compare(const NonterminalId& a, const NonterminalId& b) {
  if (a.node_ == b.node_) return 0;
  if (a.node_->tag != b.node_->tag)
    return static_cast<int>(a.node_->tag) < static_cast<int>(b.node_->tag) ? -1
                                                                           : 1;
  switch (a.node_->tag) {
    case Tag::Base: {
      int c = a.node_->base_name.compare(b.node_->base_name);
      return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    case Tag::Lifted1:
    case Tag::Lifted2:
      return compare(NonterminalId(a.node_->inner),
                     NonterminalId(b.node_->inner));
    case Tag::FreshStart:
      if (a.node_->fresh_generation != b.node_->fresh_generation)
        return a.node_->fresh_generation < b.node_->fresh_generation ? -1 : 1;
      return 0;
    case Tag::Group:
      return compare_forms(a.node_->group_body, b.node_->group_body);
  }
  return 0;
}

bool operator==(const NonterminalId& a, const NonterminalId& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->cached_hash != b.node_->cached_hash) return false;
  return NonterminalId::compare(a, b) == 0;
}

std::size_t SymbolRef::hash() const {
  if (is_terminal())
    return hash_mix(1, std::hash<TerminalId>{}(terminal()));
  return hash_mix(2, nonterminal().hash());
}

int SymbolRef::compare(const SymbolRef& a, const SymbolRef& b) {
  if (a.value_.index() != b.value_.index())
    return a.value_.index() < b.value_.index() ? -1 : 1;
  if (a.is_terminal()) {
    int c = a.terminal().name().compare(b.terminal().name());
    return c < 0 ? -1 : c > 0 ? 1 : 0;
  }
  return NonterminalId::compare(a.nonterminal(), b.nonterminal());
}

int compare_forms(const SententialForm& a, const SententialForm& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = SymbolRef::compare(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

Grammar::Grammar(NonterminalId start, std::vector<Rule> rules,
                 std::set<NonterminalId> nonterminals,
                 std::set<TerminalId> terminals)
    : start_(std::move(start)),
      nonterminals_(std::move(nonterminals)),
      terminals_(std::move(terminals)) {
  std::set<Rule> seen;
  rules_.reserve(rules.size());
  for (Rule& r : rules) {
    if (!seen.insert(r).second) continue;  // duplicates are dropped silently
    by_lhs_[r.lhs].push_back(rules_.size());
    rules_.push_back(std::move(r));
  }
}

bool Grammar::has_rule(const Rule& rule) const {
  auto it = by_lhs_.find(rule.lhs);
  if (it == by_lhs_.end()) return false;
  for (std::size_t i : it->second)
    if (compare_forms(rules_[i].rhs, rule.rhs) == 0) return true;
  return false;
}

const std::vector<std::size_t>& Grammar::rule_indices_for(
    const NonterminalId& lhs) const {
  static const std::vector<std::size_t> empty;
  auto it = by_lhs_.find(lhs);
  return it == by_lhs_.end() ? empty : it->second;
}

bool valid_token(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == '#' || std::isspace(static_cast<unsigned char>(c))) return false;
  }
  static const char* reserved[] = {"->", "|", "%empty", "start:",
                                   "nonterminals:"};
  for (const char* r : reserved)
    if (s == r) return false;
  return true;
}

ValidationReport validate(const Grammar& g) {
  ValidationReport report;
  auto flag = [&](std::string v) {
    report.ok = false;
    report.violations.push_back(std::move(v));
  };

  for (const TerminalId& t : g.terminals()) {
    if (!valid_token(t.name()))
      flag("invalid terminal name '" + t.name() + "'");
  }
  for (const NonterminalId& n : g.nonterminals()) {
    // Flattening exposes any bad embedded base name as a bad token.
    if (!valid_token(flattened_name(n)))
      flag("invalid nonterminal name '" + flattened_name(n) + "'");
  }

  if (!g.nonterminals().count(g.start()))
    flag("start symbol " + flattened_name(g.start()) +
         " is not a declared nonterminal");

  for (const Rule& r : g.rules()) {
    if (!g.nonterminals().count(r.lhs))
      flag("rule " + render_rule(r) + ": lhs " + flattened_name(r.lhs) +
           " is not a declared nonterminal");
    for (const SymbolRef& s : r.rhs) {
      if (s.is_nonterminal()) {
        if (!g.nonterminals().count(s.nonterminal()))
          flag("rule " + render_rule(r) + ": nonterminal " +
               flattened_name(s.nonterminal()) + " is not declared");
      } else if (!g.terminals().count(s.terminal())) {
        flag("rule " + render_rule(r) + ": terminal " + s.terminal().name() +
             " is not declared");
      }
    }
  }
  return report;
}

void require_valid(const Grammar& g) {
  ValidationReport report = validate(g);
  if (report.ok) return;
  std::string msg = "invalid grammar";
  for (const std::string& v : report.violations) msg += "\n  " + v;
  throw Error(ErrorKind::Validation, msg);
}

}  // namespace cfgkit

