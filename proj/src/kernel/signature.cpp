#include "hitgen/kernel/signature.hpp"

namespace hitgen {

Pattern Pattern::var(std::size_t level) {
  Pattern p;
  p.kind = Kind::var;
  p.level = level;
  return p;
}

Pattern Pattern::inaccessible(Term t) {
  Pattern p;
  p.kind = Kind::dot;
  p.dot = std::move(t);
  return p;
}

Pattern Pattern::con(std::string name, std::vector<PatArg> args) {
  Pattern p;
  p.kind = Kind::con;
  p.name = std::move(name);
  p.args = std::move(args);
  return p;
}

Pattern Pattern::refl() {
  Pattern p;
  p.kind = Kind::refl;
  return p;
}

bool operator==(const Pattern& a, const Pattern& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Pattern::Kind::var: return a.level == b.level;
    case Pattern::Kind::dot: return a.dot == b.dot;
    case Pattern::Kind::con: return a.name == b.name && a.args == b.args;
    case Pattern::Kind::refl: return true;
  }
  return false;
}

bool operator==(const Clause& a, const Clause& b) {
  if (a.tel.size() != b.tel.size()) return false;
  for (std::size_t i = 0; i < a.tel.size(); ++i) {
    if (a.tel[i].binder.vis != b.tel[i].binder.vis || !(a.tel[i].type == b.tel[i].type)) {
      return false;
    }
  }
  return a.patterns == b.patterns && a.rhs == b.rhs;
}

ConstRole role_of(EntryKind kind) {
  switch (kind) {
    case EntryKind::postulate: return ConstRole::postulate;
    case EntryKind::defined: return ConstRole::defined;
    case EntryKind::datatype: return ConstRole::datatype;
    case EntryKind::constructor: return ConstRole::constructor;
  }
  return ConstRole::postulate;
}

const Entry* Signature::find(const std::string& name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : it->second.get();
}

const std::vector<RewriteRule>& Signature::rules_for(const std::string& head) const {
  static const std::vector<RewriteRule> none;
  auto it = rules_.find(head);
  return it == rules_.end() ? none : it->second;
}

std::size_t Signature::rule_count() const {
  std::size_t n = 0;
  for (const auto& [head, rules] : rules_) n += rules.size();
  return n;
}

Signature Signature::with_fuel(std::size_t fuel) const {
  Signature s = *this;
  s.fuel_ = fuel;
  return s;
}

Signature Signature::with_entry(const std::string& name, Entry entry) const {
  Signature s = *this;
  if (!s.entries_.count(name)) s.order_.push_back(name);
  s.entries_[name] = std::make_shared<const Entry>(std::move(entry));
  return s;
}

Signature Signature::with_rule(RewriteRule rule) const {
  Signature s = *this;
  s.rules_[rule.head].push_back(std::move(rule));
  return s;
}

}  // namespace hitgen
