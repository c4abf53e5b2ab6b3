#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hitgen/core/term.hpp"
#include "hitgen/schema/data_decl.hpp"

namespace hitgen {

struct PatArg;

/// Clause and rewrite-rule patterns. Pattern variables refer to the
/// enclosing clause telescope by level (0 = first entry).
struct Pattern {
  enum class Kind { var, dot, con, refl };

  Kind kind = Kind::var;
  std::size_t level = 0;      // var
  Term dot;                   // dot: inaccessible term over the clause telescope
  std::string name;           // con
  std::vector<PatArg> args;   // con: full argument list, parameters included

  static Pattern var(std::size_t level);
  static Pattern inaccessible(Term t);
  static Pattern con(std::string name, std::vector<PatArg> args);
  static Pattern refl();
};

struct PatArg {
  Pattern pat;
  Visibility vis = Visibility::visible;
};

bool operator==(const Pattern& a, const Pattern& b);
inline bool operator==(const PatArg& a, const PatArg& b) {
  return a.vis == b.vis && a.pat == b.pat;
}

/// One defining equation  f ps = rhs  with its pattern-variable telescope.
struct Clause {
  Telescope tel;
  std::vector<PatArg> patterns;
  Term rhs;  // lives in the context `tel`

  friend bool operator==(const Clause& a, const Clause& b);
};

/// lhs ↦ rhs where lhs = head applied to `args`.
struct RewriteRule {
  std::string name;
  std::string head;
  Telescope tel;
  std::vector<PatArg> args;
  Term rhs;
};

enum class EntryKind { postulate, defined, datatype, constructor };

struct Entry {
  EntryKind kind = EntryKind::postulate;
  Term type;
  std::vector<Clause> clauses;
  bool has_definition = false;
  /// Canonical forms: real constructors and postulated HIT points. Matching
  /// a pattern against a different canonical head fails instead of blocking.
  bool canonical = false;
  std::string datatype;                 // constructor / HIT point: owning type
  std::optional<DataDecl> data;         // datatype / HIT type former
  SourceSpan span;
};

ConstRole role_of(EntryKind kind);

inline constexpr std::size_t kDefaultFuel = 100000;

/// Global declaration store. Immutable: every declaration operation returns
/// a new signature sharing the untouched entries with the old one.
class Signature {
 public:
  Signature() = default;

  const Entry* find(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name) != nullptr; }
  const std::vector<std::string>& order() const { return order_; }
  const std::vector<RewriteRule>& rules_for(const std::string& head) const;
  std::size_t rule_count() const;

  std::size_t fuel() const { return fuel_; }
  Signature with_fuel(std::size_t fuel) const;

  /// Low-level insertion without checking (used by the checked operations).
  Signature with_entry(const std::string& name, Entry entry) const;
  Signature with_rule(RewriteRule rule) const;

 private:
  std::map<std::string, std::shared_ptr<const Entry>> entries_;
  std::vector<std::string> order_;
  std::map<std::string, std::vector<RewriteRule>> rules_;
  std::size_t fuel_ = kDefaultFuel;
};

}  // namespace hitgen
