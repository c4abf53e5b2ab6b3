#include "hitgen/core/term.hpp"

#include <algorithm>
#include <sstream>

namespace hitgen {

struct Term::Node {
  TermKind kind;
  std::size_t index = 0;
  Binder binder;
  Visibility vis = Visibility::visible;
  std::string name;
  ConstRole role = ConstRole::postulate;
  Term a, b, c;
  SourceSpan span;
};

namespace {

void expect_kind(bool ok, const char* what) {
  if (!ok) internal_error(std::string("term accessor misuse: ") + what);
}

}  // namespace

Term Term::var(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::var;
  n->index = index;
  return Term(std::move(n));
}

Term Term::sort() {
  static const Term s = [] {
    auto n = std::make_shared<Node>();
    n->kind = TermKind::sort;
    return Term(std::move(n));
  }();
  return s;
}

Term Term::pi(Binder binder, Term domain, Term codomain) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::pi;
  n->binder = std::move(binder);
  n->a = std::move(domain);
  n->b = std::move(codomain);
  return Term(std::move(n));
}

Term Term::lam(Binder binder, Term body) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::lam;
  n->binder = std::move(binder);
  n->a = std::move(body);
  return Term(std::move(n));
}

Term Term::app(Term fun, Term arg, Visibility vis) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::app;
  n->a = std::move(fun);
  n->b = std::move(arg);
  n->vis = vis;
  return Term(std::move(n));
}

Term Term::constant(std::string name, ConstRole role) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::constant;
  n->name = std::move(name);
  n->role = role;
  return Term(std::move(n));
}

Term Term::id(Term type, Term lhs, Term rhs) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::id;
  n->a = std::move(type);
  n->b = std::move(lhs);
  n->c = std::move(rhs);
  return Term(std::move(n));
}

Term Term::refl(Term type, Term point) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::refl;
  n->a = std::move(type);
  n->b = std::move(point);
  return Term(std::move(n));
}

TermKind Term::kind() const {
  expect_kind(node_ != nullptr, "kind of null term");
  return node_->kind;
}

std::size_t Term::index() const {
  expect_kind(is(TermKind::var), "index");
  return node_->index;
}
const Binder& Term::binder() const {
  expect_kind(is(TermKind::pi) || is(TermKind::lam), "binder");
  return node_->binder;
}
const Term& Term::domain() const {
  expect_kind(is(TermKind::pi), "domain");
  return node_->a;
}
const Term& Term::codomain() const {
  expect_kind(is(TermKind::pi), "codomain");
  return node_->b;
}
const Term& Term::body() const {
  expect_kind(is(TermKind::lam), "body");
  return node_->a;
}
const Term& Term::fun() const {
  expect_kind(is(TermKind::app), "fun");
  return node_->a;
}
const Term& Term::arg() const {
  expect_kind(is(TermKind::app), "arg");
  return node_->b;
}
Visibility Term::visibility() const {
  expect_kind(is(TermKind::app), "visibility");
  return node_->vis;
}
const std::string& Term::name() const {
  expect_kind(is(TermKind::constant), "name");
  return node_->name;
}
ConstRole Term::role() const {
  expect_kind(is(TermKind::constant), "role");
  return node_->role;
}
const Term& Term::id_type() const {
  expect_kind(is(TermKind::id), "id_type");
  return node_->a;
}
const Term& Term::lhs() const {
  expect_kind(is(TermKind::id), "lhs");
  return node_->b;
}
const Term& Term::rhs() const {
  expect_kind(is(TermKind::id), "rhs");
  return node_->c;
}
const Term& Term::refl_type() const {
  expect_kind(is(TermKind::refl), "refl_type");
  return node_->a;
}
const Term& Term::point() const {
  expect_kind(is(TermKind::refl), "point");
  return node_->b;
}

const SourceSpan& Term::span() const {
  static const SourceSpan none;
  return node_ ? node_->span : none;
}

Term Term::with_span(SourceSpan span) const {
  if (!node_) return *this;
  auto n = std::make_shared<Node>(*node_);
  n->span = std::move(span);
  return Term(std::move(n));
}

bool operator==(const Term& x, const Term& y) {
  if (x.node_ == y.node_) return true;
  if (!x.node_ || !y.node_) return false;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case TermKind::var: return a.index == b.index;
    case TermKind::sort: return true;
    case TermKind::pi:
      return a.binder.vis == b.binder.vis && a.a == b.a && a.b == b.b;
    case TermKind::lam: return a.binder.vis == b.binder.vis && a.a == b.a;
    case TermKind::app: return a.vis == b.vis && a.a == b.a && a.b == b.b;
    case TermKind::constant: return a.name == b.name;
    case TermKind::id: return a.a == b.a && a.b == b.b && a.c == b.c;
    case TermKind::refl: return a.a == b.a && a.b == b.b;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Traversals

namespace {

// Rebuilds t, replacing each free variable (index >= depth at its
// occurrence) by on_free(index, depth). Unchanged subtrees are shared.
template <typename F>
Term map_free(const Term& t, std::size_t depth, const F& on_free) {
  if (t.is_null()) return t;
  switch (t.kind()) {
    case TermKind::var:
      if (t.index() < depth) return t;
      return on_free(t.index(), depth);
    case TermKind::sort:
    case TermKind::constant:
      return t;
    case TermKind::pi: {
      Term d = map_free(t.domain(), depth, on_free);
      Term c = map_free(t.codomain(), depth + 1, on_free);
      if (d.same_node(t.domain()) && c.same_node(t.codomain())) return t;
      return Term::pi(t.binder(), d, c).with_span(t.span());
    }
    case TermKind::lam: {
      Term b = map_free(t.body(), depth + 1, on_free);
      if (b.same_node(t.body())) return t;
      return Term::lam(t.binder(), b).with_span(t.span());
    }
    case TermKind::app: {
      Term f = map_free(t.fun(), depth, on_free);
      Term a = map_free(t.arg(), depth, on_free);
      if (f.same_node(t.fun()) && a.same_node(t.arg())) return t;
      return Term::app(f, a, t.visibility()).with_span(t.span());
    }
    case TermKind::id: {
      Term ty = map_free(t.id_type(), depth, on_free);
      Term l = map_free(t.lhs(), depth, on_free);
      Term r = map_free(t.rhs(), depth, on_free);
      if (ty.same_node(t.id_type()) && l.same_node(t.lhs()) && r.same_node(t.rhs())) return t;
      return Term::id(ty, l, r).with_span(t.span());
    }
    case TermKind::refl: {
      Term ty = map_free(t.refl_type(), depth, on_free);
      Term p = map_free(t.point(), depth, on_free);
      if (ty.same_node(t.refl_type()) && p.same_node(t.point())) return t;
      return Term::refl(ty, p).with_span(t.span());
    }
  }
  return t;
}

}  // namespace

Term shift(const Term& t, long by, std::size_t cutoff) {
  if (by == 0) return t;
  return map_free(t, cutoff, [&](std::size_t index, std::size_t) {
    long shifted = static_cast<long>(index) + by;
    if (shifted < 0) {
      internal_error("shift moved index " + std::to_string(index) + " below zero");
    }
    return Term::var(static_cast<std::size_t>(shifted));
  });
}

Term subst(const Term& t, std::size_t target, const Term& replacement) {
  return map_free(t, 0, [&](std::size_t index, std::size_t depth) {
    std::size_t free = index - depth;
    if (free == target) return shift(replacement, static_cast<long>(depth), 0);
    if (free > target) return Term::var(index - 1);
    return Term::var(index);
  });
}

Term instantiate(const Term& t, std::span<const Term> env) {
  if (env.empty()) return t;
  return map_free(t, 0, [&](std::size_t index, std::size_t depth) {
    std::size_t free = index - depth;
    if (free < env.size()) return shift(env[free], static_cast<long>(depth), 0);
    return Term::var(index - env.size());
  });
}

Term rebase(const Term& t, const std::vector<std::size_t>& levels, std::size_t depth) {
  std::size_t s = levels.size();
  std::vector<Term> env(s);
  for (std::size_t j = 0; j < s; ++j) {
    std::size_t level = levels[s - 1 - j];
    if (level >= depth) internal_error("rebase: target level outside the context");
    env[j] = Term::var(depth - 1 - level);
  }
  return instantiate(t, env);
}

Spine spine_of(const Term& t) {
  Spine s;
  Term cur = t;
  while (cur.is(TermKind::app)) {
    s.args.push_back({cur.arg(), cur.visibility()});
    cur = cur.fun();
  }
  s.head = cur;
  std::reverse(s.args.begin(), s.args.end());
  return s;
}

Term apply(Term head, std::span<const Arg> args) {
  for (const Arg& a : args) head = Term::app(std::move(head), a.term, a.vis);
  return head;
}

Term apply(Term head, std::initializer_list<Arg> args) {
  return hitgen::apply(std::move(head), std::span<const Arg>(args.begin(), args.size()));
}

Term telescope_apply(Term head, const Telescope& tele, std::size_t base_index) {
  if (!tele.empty() && base_index + 1 < tele.size()) {
    internal_error("telescope_apply: base index too small for telescope");
  }
  for (std::size_t k = 0; k < tele.size(); ++k) {
    head = Term::app(std::move(head), Term::var(base_index - k), tele[k].binder.vis);
  }
  return head;
}

Term pi_over(const Telescope& tele, Term body) {
  for (auto it = tele.rbegin(); it != tele.rend(); ++it) {
    body = Term::pi(it->binder, it->type, std::move(body));
  }
  return body;
}

Term lam_over(const Telescope& tele, Term body) {
  for (auto it = tele.rbegin(); it != tele.rend(); ++it) {
    body = Term::lam(it->binder, std::move(body));
  }
  return body;
}

bool occurs_free(const Term& t, std::size_t index) {
  bool found = false;
  map_free(t, 0, [&](std::size_t i, std::size_t depth) {
    if (i - depth == index) found = true;
    return Term::var(i);
  });
  return found;
}

bool mentions_const(const Term& t, const std::string& name) {
  if (t.is_null()) return false;
  switch (t.kind()) {
    case TermKind::var:
    case TermKind::sort: return false;
    case TermKind::constant: return t.name() == name;
    case TermKind::pi:
      return mentions_const(t.domain(), name) || mentions_const(t.codomain(), name);
    case TermKind::lam: return mentions_const(t.body(), name);
    case TermKind::app: return mentions_const(t.fun(), name) || mentions_const(t.arg(), name);
    case TermKind::id:
      return mentions_const(t.id_type(), name) || mentions_const(t.lhs(), name) ||
             mentions_const(t.rhs(), name);
    case TermKind::refl:
      return mentions_const(t.refl_type(), name) || mentions_const(t.point(), name);
  }
  return false;
}

bool is_well_scoped(const Term& t, std::size_t depth) {
  if (t.is_null()) return false;
  switch (t.kind()) {
    case TermKind::var: return t.index() < depth;
    case TermKind::sort:
    case TermKind::constant: return true;
    case TermKind::pi:
      return is_well_scoped(t.domain(), depth) && is_well_scoped(t.codomain(), depth + 1);
    case TermKind::lam: return is_well_scoped(t.body(), depth + 1);
    case TermKind::app: return is_well_scoped(t.fun(), depth) && is_well_scoped(t.arg(), depth);
    case TermKind::id:
      return (t.id_type().is_null() || is_well_scoped(t.id_type(), depth)) &&
             is_well_scoped(t.lhs(), depth) && is_well_scoped(t.rhs(), depth);
    case TermKind::refl:
      if (t.point().is_null()) return t.refl_type().is_null();
      return (t.refl_type().is_null() || is_well_scoped(t.refl_type(), depth)) &&
             is_well_scoped(t.point(), depth);
  }
  return false;
}

std::size_t pi_arity(const Term& t) {
  std::size_t n = 0;
  for (Term cur = t; cur.is(TermKind::pi); cur = cur.codomain()) ++n;
  return n;
}

Term split_pi(const Term& t, Telescope& out) {
  Term cur = t;
  while (cur.is(TermKind::pi)) {
    out.push_back({cur.binder(), cur.domain()});
    cur = cur.codomain();
  }
  return cur;
}

Term rename_binders(const Term& t, const std::string& new_hint) {
  if (t.is_null()) return t;
  switch (t.kind()) {
    case TermKind::var:
    case TermKind::sort:
    case TermKind::constant: return t;
    case TermKind::pi:
      return Term::pi({new_hint, t.binder().vis}, rename_binders(t.domain(), new_hint),
                      rename_binders(t.codomain(), new_hint));
    case TermKind::lam:
      return Term::lam({new_hint, t.binder().vis}, rename_binders(t.body(), new_hint));
    case TermKind::app:
      return Term::app(rename_binders(t.fun(), new_hint), rename_binders(t.arg(), new_hint),
                       t.visibility());
    case TermKind::id:
      return Term::id(rename_binders(t.id_type(), new_hint), rename_binders(t.lhs(), new_hint),
                      rename_binders(t.rhs(), new_hint));
    case TermKind::refl:
      return Term::refl(rename_binders(t.refl_type(), new_hint),
                        rename_binders(t.point(), new_hint));
  }
  return t;
}

Term map_consts(const Term& t, const std::function<Term(const Term&)>& f) {
  if (t.is_null()) return t;
  switch (t.kind()) {
    case TermKind::var:
    case TermKind::sort: return t;
    case TermKind::constant: return f(t).with_span(t.span());
    case TermKind::pi:
      return Term::pi(t.binder(), map_consts(t.domain(), f), map_consts(t.codomain(), f))
          .with_span(t.span());
    case TermKind::lam: return Term::lam(t.binder(), map_consts(t.body(), f)).with_span(t.span());
    case TermKind::app:
      return Term::app(map_consts(t.fun(), f), map_consts(t.arg(), f), t.visibility())
          .with_span(t.span());
    case TermKind::id:
      return Term::id(map_consts(t.id_type(), f), map_consts(t.lhs(), f), map_consts(t.rhs(), f))
          .with_span(t.span());
    case TermKind::refl:
      return Term::refl(map_consts(t.refl_type(), f), map_consts(t.point(), f))
          .with_span(t.span());
  }
  return t;
}

namespace {

void debug_into(std::ostringstream& out, const Term& t) {
  if (t.is_null()) {
    out << "?";
    return;
  }
  switch (t.kind()) {
    case TermKind::var: out << '#' << t.index(); break;
    case TermKind::sort: out << "Set"; break;
    case TermKind::constant: out << t.name(); break;
    case TermKind::pi:
      out << (t.binder().vis == Visibility::hidden ? "Pi{" : "Pi(") << t.binder().hint << ": ";
      debug_into(out, t.domain());
      out << ") ";
      debug_into(out, t.codomain());
      break;
    case TermKind::lam:
      out << (t.binder().vis == Visibility::hidden ? "Lam{" : "Lam(") << t.binder().hint << ") ";
      debug_into(out, t.body());
      break;
    case TermKind::app:
      out << '(';
      debug_into(out, t.fun());
      out << (t.visibility() == Visibility::hidden ? " {" : " ");
      debug_into(out, t.arg());
      if (t.visibility() == Visibility::hidden) out << '}';
      out << ')';
      break;
    case TermKind::id:
      out << "Id(";
      debug_into(out, t.id_type());
      out << ", ";
      debug_into(out, t.lhs());
      out << ", ";
      debug_into(out, t.rhs());
      out << ')';
      break;
    case TermKind::refl:
      out << "Refl(";
      debug_into(out, t.refl_type());
      out << ", ";
      debug_into(out, t.point());
      out << ')';
      break;
  }
}

}  // namespace

std::string debug_string(const Term& t) {
  std::ostringstream out;
  debug_into(out, t);
  return out.str();
}

}  // namespace hitgen
