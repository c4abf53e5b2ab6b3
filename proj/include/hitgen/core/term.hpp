#pragma once

// Core language of the kernel: a de Bruijn AST for a small dependent type
// theory with one universe, Π, λ, application, global constants and a
// built-in identity type.

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hitgen/core/error.hpp"

namespace hitgen {

enum class Visibility { visible, hidden };

/// A binding site. The hint is only used for display; "_" marks an
/// anonymous binder.
struct Binder {
  std::string hint = "_";
  Visibility vis = Visibility::visible;

  bool anonymous() const { return hint.empty() || hint == "_"; }
};

enum class ConstRole { datatype, constructor, defined, postulate };

enum class TermKind { var, sort, pi, lam, app, constant, id, refl };

/// Immutable, structurally shared term. A default-constructed Term is the
/// null term; it only appears as the not-yet-inferred type argument of an
/// Id or Refl produced by the parser.
class Term {
 public:
  Term() = default;

  static Term var(std::size_t index);
  static Term sort();
  static Term pi(Binder binder, Term domain, Term codomain);
  static Term lam(Binder binder, Term body);
  static Term app(Term fun, Term arg, Visibility vis = Visibility::visible);
  static Term constant(std::string name, ConstRole role);
  static Term id(Term type, Term lhs, Term rhs);
  static Term refl(Term type, Term point);

  bool is_null() const { return node_ == nullptr; }
  explicit operator bool() const { return node_ != nullptr; }

  TermKind kind() const;
  bool is(TermKind k) const { return node_ && kind() == k; }

  // Var
  std::size_t index() const;
  // Pi / Lam
  const Binder& binder() const;
  const Term& domain() const;    // Pi
  const Term& codomain() const;  // Pi
  const Term& body() const;      // Lam
  // App
  const Term& fun() const;
  const Term& arg() const;
  Visibility visibility() const;
  // Const
  const std::string& name() const;
  ConstRole role() const;
  // Id
  const Term& id_type() const;
  const Term& lhs() const;
  const Term& rhs() const;
  // Refl (refl_type may be null, and so may point for a bare `refl`)
  const Term& refl_type() const;
  const Term& point() const;

  const SourceSpan& span() const;
  Term with_span(SourceSpan span) const;

  /// Alpha-equivalence: binder hints, spans and constant roles are ignored.
  friend bool operator==(const Term& a, const Term& b);

  bool same_node(const Term& other) const { return node_ == other.node_; }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TeleEntry {
  Binder binder;
  Term type;
};

/// Ordered binders; entry k's type lives in the context extended by
/// entries 0..k-1.
using Telescope = std::vector<TeleEntry>;

struct Arg {
  Term term;
  Visibility vis = Visibility::visible;
};

/// A term viewed as a head applied to a list of arguments.
struct Spine {
  Term head;
  std::vector<Arg> args;
};

Spine spine_of(const Term& t);
Term apply(Term head, std::span<const Arg> args);
Term apply(Term head, std::initializer_list<Arg> args);

/// Adds `by` to every free index >= cutoff.
Term shift(const Term& t, long by, std::size_t cutoff = 0);

/// Replaces free index `target` by `replacement` (expressed in the result
/// context) and decrements the free indices above it.
Term subst(const Term& t, std::size_t target, const Term& replacement);

/// Simultaneous substitution of the innermost env.size() free variables:
/// env[0] replaces index 0, env[1] index 1, and so on. Values are expressed
/// in the result context; remaining free indices drop by env.size().
Term instantiate(const Term& t, std::span<const Term> env);

/// Moves t from a context of levels.size() variables into one of `depth`
/// variables in which the variable at level l now sits at level levels[l].
Term rebase(const Term& t, const std::vector<std::size_t>& levels, std::size_t depth);

/// Applies `head` to one variable per telescope entry; the first entry is
/// Var(base_index), the last Var(base_index - size + 1).
Term telescope_apply(Term head, const Telescope& tele, std::size_t base_index);

/// Π over every entry of the telescope, innermost last.
Term pi_over(const Telescope& tele, Term body);
/// λ over every entry of the telescope.
Term lam_over(const Telescope& tele, Term body);

bool occurs_free(const Term& t, std::size_t index);
bool mentions_const(const Term& t, const std::string& name);

/// True when every free index is below `depth` and no null term appears
/// outside the type slot of Id/Refl.
bool is_well_scoped(const Term& t, std::size_t depth);

/// Number of leading Π binders.
std::size_t pi_arity(const Term& t);

/// Strips leading Π binders into a telescope and returns the codomain.
Term split_pi(const Term& t, Telescope& out);

/// Returns a copy where every binder hint is replaced by `new_hint`.
Term rename_binders(const Term& t, const std::string& new_hint);

/// Rebuilds t with every constant replaced by f(constant).
Term map_consts(const Term& t, const std::function<Term(const Term&)>& f);

/// A structural debug rendering with raw de Bruijn indices.
std::string debug_string(const Term& t);

}  // namespace hitgen
