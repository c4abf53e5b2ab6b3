#include <set>

#include "hitgen/emit/printer.hpp"
#include "hitgen/kernel/kernel.hpp"
#include "reducer.hpp"

namespace hitgen {

namespace {

class Checker {
 public:
  Checker(const Signature& sig, Telescope ctx) : sig_(sig), ctx_(std::move(ctx)) {}

  // Returns (elaborated term, its type).
  std::pair<Term, Term> infer(const Term& t);
  Term check(const Term& t, const Term& type);
  Term check_type(const Term& t) { return check(t, Term::sort()); }

  Term check_pattern(const Pattern& p, const Term& expected, const Telescope& tel);
  Clause check_clause(const std::string& fun, const Term& fun_type, const Clause& c,
                      std::size_t number);

  void push(const Binder& b, const Term& type) { ctx_.push_back({b, type}); }
  void pop() { ctx_.pop_back(); }

  Term whnf(const Term& t) { return Reducer(sig_).whnf(t); }
  bool conv(const Term& a, const Term& b) { return Reducer(sig_).convertible(a, b); }

  std::string show(const Term& t) const { return print_term(t, ctx_); }

  [[noreturn]] void fail(const Term& at, const std::string& msg) const {
    throw Error(ErrorCode::type, msg, at.span());
  }

 private:
  Term var_type(const Term& v);

  const Signature& sig_;
  Telescope ctx_;
};

Term Checker::var_type(const Term& v) {
  std::size_t i = v.index();
  if (i >= ctx_.size()) {
    throw Error(ErrorCode::unbound_variable, "variable #" + std::to_string(i) + " is not bound",
                v.span());
  }
  return shift(ctx_[ctx_.size() - 1 - i].type, static_cast<long>(i + 1));
}

std::pair<Term, Term> Checker::infer(const Term& t) {
  if (t.is_null()) internal_error("infer on null term");
  switch (t.kind()) {
    case TermKind::var:
      return {t, var_type(t)};
    case TermKind::sort:
      return {t, Term::sort()};
    case TermKind::constant: {
      const Entry* e = sig_.find(t.name());
      if (!e) throw Error(ErrorCode::unknown_name, "unknown name " + t.name(), t.span());
      return {t, e->type};
    }
    case TermKind::pi: {
      Term dom = check_type(t.domain());
      push(t.binder(), dom);
      Term cod = check_type(t.codomain());
      pop();
      return {Term::pi(t.binder(), dom, cod).with_span(t.span()), Term::sort()};
    }
    case TermKind::lam:
      fail(t, "cannot infer the type of an unannotated λ; it needs a known Π type");
    case TermKind::app: {
      if (t.fun().is(TermKind::lam) && t.fun().binder().vis == t.visibility()) {
        // a β-redex: the argument's type annotates the λ
        auto [arg, arg_type] = infer(t.arg());
        push(t.fun().binder(), arg_type);
        auto [body, body_type] = infer(t.fun().body());
        pop();
        return {Term::app(Term::lam(t.fun().binder(), body), arg, t.visibility()).with_span(t.span()),
                subst(body_type, 0, arg)};
      }
      auto [fun, fun_type] = infer(t.fun());
      Term fw = whnf(fun_type);
      if (!fw.is(TermKind::pi)) {
        fail(t, "applying " + show(fun) + " of non-function type " + show(fun_type));
      }
      if (fw.binder().vis != t.visibility()) {
        fail(t, std::string("visibility mismatch applying ") + show(fun) + ": expected " +
                    (fw.binder().vis == Visibility::hidden ? "a hidden" : "a visible") +
                    " argument");
      }
      Term arg = check(t.arg(), fw.domain());
      return {Term::app(fun, arg, t.visibility()).with_span(t.span()),
              subst(fw.codomain(), 0, arg)};
    }
    case TermKind::id: {
      Term type, lhs;
      if (t.id_type().is_null()) {
        std::tie(lhs, type) = infer(t.lhs());
      } else {
        type = check_type(t.id_type());
        lhs = check(t.lhs(), type);
      }
      Term rhs = check(t.rhs(), type);
      return {Term::id(type, lhs, rhs).with_span(t.span()), Term::sort()};
    }
    case TermKind::refl: {
      if (t.point().is_null()) fail(t, "cannot infer the type of a bare refl");
      Term type, point;
      if (t.refl_type().is_null()) {
        std::tie(point, type) = infer(t.point());
      } else {
        type = check_type(t.refl_type());
        point = check(t.point(), type);
      }
      return {Term::refl(type, point).with_span(t.span()), Term::id(type, point, point)};
    }
  }
  internal_error("infer: unknown term kind");
}

Term Checker::check(const Term& t, const Term& type) {
  if (t.is(TermKind::lam)) {
    Term tw = whnf(type);
    if (!tw.is(TermKind::pi)) fail(t, "λ checked against non-function type " + show(type));
    if (tw.binder().vis != t.binder().vis) {
      fail(t, "λ binder visibility does not match the expected type " + show(type));
    }
    push(t.binder(), tw.domain());
    Term body = check(t.body(), tw.codomain());
    pop();
    return Term::lam(t.binder(), body).with_span(t.span());
  }
  if (t.is(TermKind::refl) && t.point().is_null()) {
    Term tw = whnf(type);
    if (!tw.is(TermKind::id)) fail(t, "refl checked against non-identity type " + show(type));
    if (!conv(tw.lhs(), tw.rhs())) {
      fail(t, "refl cannot prove " + show(type) + ": the endpoints differ");
    }
    return Term::refl(tw.id_type(), tw.lhs()).with_span(t.span());
  }
  if (t.is(TermKind::id) && t.id_type().is_null()) {
    // The type slot can come from either side; prefer the lhs.
    auto [elab, ty] = infer(t);
    if (!conv(ty, type)) fail(t, "expected " + show(type) + ", got a type");
    return elab;
  }
  auto [elab, actual] = infer(t);
  if (!conv(actual, type)) {
    fail(t, "type mismatch for " + show(elab) + "\n  expected: " + show(type) +
                "\n  actual:   " + show(actual));
  }
  return elab;
}

// Pattern `p` checked against `expected`; both live in the clause telescope,
// which is the current context. Returns the pattern as a term.
Term Checker::check_pattern(const Pattern& p, const Term& expected, const Telescope& tel) {
  switch (p.kind) {
    case Pattern::Kind::var:
    case Pattern::Kind::dot: {
      Term t = pattern_term(p, tel);
      return check(t, expected);
    }
    case Pattern::Kind::refl: {
      Term ew = whnf(expected);
      if (!ew.is(TermKind::id)) fail(Term(), "refl pattern at non-identity type " + show(expected));
      if (!conv(ew.lhs(), ew.rhs())) {
        fail(Term(), "refl pattern needs equal endpoints in " + show(expected));
      }
      return Term::refl(ew.id_type(), ew.lhs());
    }
    case Pattern::Kind::con: {
      const Entry* e = sig_.find(p.name);
      if (!e) throw Error(ErrorCode::unknown_name, "unknown constructor " + p.name);
      Term head = Term::constant(p.name, role_of(e->kind));
      Term ct = e->type;
      Term term = head;
      for (const PatArg& sub : p.args) {
        Term cw = whnf(ct);
        if (!cw.is(TermKind::pi)) {
          throw Error(ErrorCode::arity_mismatch, "constructor pattern " + p.name +
                                                     " has too many arguments");
        }
        if (cw.binder().vis != sub.vis) fail(Term(), "visibility mismatch in pattern " + p.name);
        Term st = check_pattern(sub.pat, cw.domain(), tel);
        term = Term::app(term, st, sub.vis);
        ct = subst(cw.codomain(), 0, st);
      }
      if (whnf(ct).is(TermKind::pi)) {
        throw Error(ErrorCode::arity_mismatch, "constructor pattern " + p.name +
                                                   " is not fully applied");
      }
      if (!conv(ct, expected)) {
        fail(Term(), "constructor pattern " + show(term) + " has type " + show(ct) +
                         " but " + show(expected) + " was expected");
      }
      return term;
    }
  }
  internal_error("check_pattern: unknown pattern kind");
}

void collect_levels(const Pattern& p, std::vector<int>& seen, bool& linear) {
  switch (p.kind) {
    case Pattern::Kind::var:
      if (p.level >= seen.size() || seen[p.level]++ > 0) linear = false;
      break;
    case Pattern::Kind::con:
      for (const auto& a : p.args) collect_levels(a.pat, seen, linear);
      break;
    default:
      break;
  }
}

Clause Checker::check_clause(const std::string& fun, const Term& fun_type, const Clause& c,
                             std::size_t number) {
  const std::string where = fun + ", clause " + std::to_string(number);
  std::vector<int> seen(c.tel.size(), 0);
  bool linear = true;
  for (const auto& pa : c.patterns) collect_levels(pa.pat, seen, linear);
  for (int n : seen) linear = linear && n == 1;
  if (!linear) {
    throw Error(ErrorCode::pattern_restriction,
                where + ": every pattern variable must occur exactly once");
  }

  Clause out;
  out.patterns = c.patterns;
  try {
    out.tel = check_telescope(sig_, ctx_, c.tel);
    for (const auto& e : out.tel) push(e.binder, e.type);
    Term type = shift(fun_type, static_cast<long>(c.tel.size()));
    for (auto& pa : out.patterns) {
      Term tw = whnf(type);
      if (!tw.is(TermKind::pi)) {
        throw Error(ErrorCode::arity_mismatch, where + ": too many patterns");
      }
      if (tw.binder().vis != pa.vis) fail(Term(), where + ": pattern visibility mismatch");
      Term pt = check_pattern(pa.pat, tw.domain(), out.tel);
      type = subst(tw.codomain(), 0, pt);
    }
    out.rhs = check(c.rhs, type);
    for (std::size_t i = 0; i < out.tel.size(); ++i) pop();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::type && e.message().rfind(fun, 0) != 0) {
      throw Error(e.code(), where + ": " + e.message(), e.span());
    }
    throw;
  }
  return out;
}

Term pattern_as_term(const Pattern& p, std::size_t tel_size) {
  switch (p.kind) {
    case Pattern::Kind::var: return Term::var(tel_size - 1 - p.level);
    case Pattern::Kind::dot: return p.dot;
    case Pattern::Kind::con: {
      Term t = Term::constant(p.name, ConstRole::constructor);
      for (const auto& a : p.args) t = Term::app(t, pattern_as_term(a.pat, tel_size), a.vis);
      return t;
    }
    case Pattern::Kind::refl: return Term::refl(Term(), Term());
  }
  return Term();
}

void check_fresh(const Signature& sig, const std::string& name, const SourceSpan& span) {
  if (sig.contains(name)) {
    throw Error(ErrorCode::duplicate_name, "name " + name + " is already declared", span);
  }
}

Signature declare(const Signature& sig, const std::string& name, const Term& type,
                  const SourceSpan& span, EntryKind kind) {
  check_fresh(sig, name, span);
  Checker ck(sig, {});
  Entry e;
  try {
    e.type = ck.check_type(type);
  } catch (const Error& err) {
    throw err.with_span(span);
  }
  e.kind = kind;
  e.span = span;
  return sig.with_entry(name, std::move(e));
}

}  // namespace

Term pattern_term(const Pattern& p, const Telescope& tel) {
  return pattern_as_term(p, tel.size());
}

Signature declare_postulate(const Signature& sig, const std::string& name, const Term& type,
                            const SourceSpan& span) {
  return declare(sig, name, type, span, EntryKind::postulate);
}

Signature declare_def(const Signature& sig, const std::string& name, const Term& type,
                      const SourceSpan& span) {
  return declare(sig, name, type, span, EntryKind::defined);
}

namespace {

// Constructor skeleton used for duplicate-clause detection: var and dot
// patterns are wildcards.
bool same_skeleton(const Pattern& a, const Pattern& b) {
  bool wild_a = a.kind == Pattern::Kind::var || a.kind == Pattern::Kind::dot;
  bool wild_b = b.kind == Pattern::Kind::var || b.kind == Pattern::Kind::dot;
  if (wild_a || wild_b) return wild_a && wild_b;
  if (a.kind != b.kind) return false;
  if (a.kind == Pattern::Kind::refl) return true;
  if (a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!same_skeleton(a.args[i].pat, b.args[i].pat)) return false;
  }
  return true;
}

bool overlap(const Pattern& a, const Pattern& b) {
  auto wild = [](const Pattern& p) {
    return p.kind == Pattern::Kind::var || p.kind == Pattern::Kind::dot;
  };
  if (wild(a) || wild(b)) return true;
  if (a.kind != b.kind) return false;
  if (a.kind == Pattern::Kind::refl) return true;
  if (a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!overlap(a.args[i].pat, b.args[i].pat)) return false;
  }
  return true;
}

}  // namespace

bool patterns_overlap(const std::vector<PatArg>& a, const std::vector<PatArg>& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!overlap(a[i].pat, b[i].pat)) return false;
  }
  return true;
}

Signature define_fun(const Signature& sig, const std::string& name, std::vector<Clause> clauses) {
  const Entry* e = sig.find(name);
  if (!e) throw Error(ErrorCode::unknown_name, "define_fun: " + name + " was not declared");
  if (e->kind != EntryKind::defined) {
    throw Error(ErrorCode::type, "define_fun: " + name + " is not a declared definition",
                e->span);
  }
  if (e->has_definition) {
    throw Error(ErrorCode::duplicate_name, "define_fun: " + name + " is already defined",
                e->span);
  }
  Entry out = *e;
  out.has_definition = true;
  for (std::size_t k = 0; k < clauses.size(); ++k) {
    if (k > 0 && clauses[k].patterns.size() != clauses[0].patterns.size()) {
      throw Error(ErrorCode::arity_mismatch,
                  name + ": clauses have different numbers of patterns", e->span);
    }
    for (std::size_t j = 0; j < k; ++j) {
      const auto& a = clauses[j].patterns;
      const auto& b = clauses[k].patterns;
      bool dup = a.size() == b.size();
      for (std::size_t i = 0; dup && i < a.size(); ++i) dup = same_skeleton(a[i].pat, b[i].pat);
      if (dup) {
        throw Error(ErrorCode::type, name + ": clause " + std::to_string(k + 1) +
                                         " repeats the patterns of clause " +
                                         std::to_string(j + 1),
                    e->span);
      }
    }
    // Recursive clauses refer to the function itself; check against a
    // signature where it is declared (it already is).
    Checker ck(sig, {});
    out.clauses.push_back(ck.check_clause(name, e->type, clauses[k], k + 1));
  }
  return sig.with_entry(name, std::move(out));
}

Signature add_rewrite_rule(const Signature& sig, RewriteRule rule) {
  const Entry* head = sig.find(rule.head);
  if (!head) throw Error(ErrorCode::unknown_name, "rewrite rule head " + rule.head + " unknown");
  if (head->kind != EntryKind::postulate && head->kind != EntryKind::defined) {
    throw Error(ErrorCode::pattern_restriction,
                "rewrite rule " + rule.name + ": head " + rule.head +
                    " must be a postulate or a defined function");
  }
  for (const auto& pa : rule.args) {
    if (pa.pat.kind == Pattern::Kind::refl) {
      throw Error(ErrorCode::pattern_restriction,
                  "rewrite rule " + rule.name + ": refl patterns are not first-order");
    }
  }
  Clause as_clause{rule.tel, rule.args, rule.rhs};
  Checker ck(sig, {});
  Clause checked = ck.check_clause(rule.name, head->type, as_clause, 1);
  rule.tel = std::move(checked.tel);
  rule.rhs = std::move(checked.rhs);
  return sig.with_rule(std::move(rule));
}

namespace {

Pattern lhs_pattern(const Signature& sig, const Term& t, std::size_t tel_size,
                    std::set<std::size_t>& seen, const std::string& rule) {
  if (t.is(TermKind::var)) {
    std::size_t level = tel_size - 1 - t.index();
    if (!seen.insert(level).second) {
      throw Error(ErrorCode::pattern_restriction,
                  "rewrite rule " + rule + ": left-hand side is non-linear", t.span());
    }
    return Pattern::var(level);
  }
  Spine sp = spine_of(t);
  if (sp.head.is(TermKind::constant)) {
    const Entry* e = sig.find(sp.head.name());
    if (e && (e->canonical || e->kind == EntryKind::postulate)) {
      std::vector<PatArg> args;
      for (const Arg& a : sp.args) {
        args.push_back({lhs_pattern(sig, a.term, tel_size, seen, rule), a.vis});
      }
      return Pattern::con(sp.head.name(), std::move(args));
    }
  }
  throw Error(ErrorCode::pattern_restriction,
              "rewrite rule " + rule +
                  ": left-hand side arguments must be variables or constructor patterns",
              t.span());
}

}  // namespace

Signature add_rewrite(const Signature& sig, const std::string& rule_name) {
  const Entry* e = sig.find(rule_name);
  if (!e) throw Error(ErrorCode::unknown_name, "unknown rewrite rule " + rule_name);
  if (e->kind != EntryKind::postulate) {
    throw Error(ErrorCode::pattern_restriction, rule_name + " is not a postulate", e->span);
  }
  Telescope tel;
  Term body = split_pi(e->type, tel);
  if (!body.is(TermKind::id)) {
    throw Error(ErrorCode::pattern_restriction,
                "the type of " + rule_name + " must end in an identity lhs ≡ rhs", e->span);
  }
  Spine sp = spine_of(body.lhs());
  if (!sp.head.is(TermKind::constant)) {
    throw Error(ErrorCode::pattern_restriction,
                "rewrite rule " + rule_name + ": left-hand side must be headed by a constant",
                e->span);
  }
  std::set<std::size_t> seen;
  RewriteRule rule;
  rule.name = rule_name;
  rule.head = sp.head.name();
  rule.tel = tel;
  for (const Arg& a : sp.args) {
    rule.args.push_back({lhs_pattern(sig, a.term, tel.size(), seen, rule_name), a.vis});
  }
  if (seen.size() != tel.size()) {
    throw Error(ErrorCode::pattern_restriction,
                "rewrite rule " + rule_name + ": every bound variable must occur in the lhs",
                e->span);
  }
  rule.rhs = body.rhs();
  return add_rewrite_rule(sig, std::move(rule));
}

Term infer(const Signature& sig, const Telescope& ctx, const Term& t) {
  return Checker(sig, ctx).infer(t).second;
}

void check(const Signature& sig, const Telescope& ctx, const Term& t, const Term& type) {
  Checker(sig, ctx).check(t, type);
}

Term elaborate(const Signature& sig, const Telescope& ctx, const Term& t, const Term& expected) {
  Checker ck(sig, ctx);
  if (expected.is_null()) return ck.infer(t).first;
  return ck.check(t, expected);
}

Telescope check_telescope(const Signature& sig, const Telescope& ctx, const Telescope& tele) {
  Checker ck(sig, ctx);
  Telescope out;
  for (const auto& e : tele) {
    Term ty = ck.check_type(e.type);
    out.push_back({e.binder, ty});
    ck.push(e.binder, ty);
  }
  return out;
}

// --- source clauses --------------------------------------------------------

namespace {

struct ClauseElaborator {
  const Signature& sig;
  const RawClause& raw;
  std::size_t total;        // number of pattern variables
  Telescope tel;            // types of the variables seen so far

  // `expected` lives in the context of all `total` variables.
  Pattern visit(const Pattern& p, const Term& expected, Term& as_term) {
    switch (p.kind) {
      case Pattern::Kind::var: {
        if (p.level != tel.size()) internal_error("source clause variables out of order");
        Term ty = expected;
        std::size_t later = total - tel.size();
        for (std::size_t i = 0; i < later; ++i) {
          if (occurs_free(ty, i)) {
            throw Error(ErrorCode::type,
                        "cannot determine the type of pattern variable " +
                            raw.vars[p.level].hint + " from the patterns to its left",
                        raw.span);
          }
        }
        tel.push_back({raw.vars[p.level], shift(ty, -static_cast<long>(later))});
        as_term = Term::var(total - 1 - p.level);
        return p;
      }
      case Pattern::Kind::dot:
        as_term = p.dot;
        return p;
      case Pattern::Kind::refl: {
        Term ew = whnf(sig, expected);
        if (!ew.is(TermKind::id)) {
          throw Error(ErrorCode::type, "refl pattern at a non-identity type", raw.span);
        }
        as_term = Term::refl(ew.id_type(), ew.lhs());
        return p;
      }
      case Pattern::Kind::con: {
        const Entry* ce = sig.find(p.name);
        if (!ce || !ce->canonical) {
          throw Error(ErrorCode::type, p.name + " is not a constructor", raw.span);
        }
        const Entry* de = sig.find(ce->datatype);
        std::size_t nparams = de && de->data ? de->data->num_params() : 0;
        Spine ex = spine_of(whnf(sig, expected));
        if (!ex.head.is(TermKind::constant) || ex.head.name() != ce->datatype ||
            ex.args.size() < nparams) {
          throw Error(ErrorCode::type,
                      "constructor pattern " + p.name + " used at a type other than " +
                          ce->datatype,
                      raw.span);
        }
        Pattern out = Pattern::con(p.name, {});
        Term ct = ce->type;
        Term term = Term::constant(p.name, role_of(ce->kind));
        for (std::size_t i = 0; i < nparams; ++i) {
          Term cw = whnf(sig, ct);
          out.args.push_back({Pattern::inaccessible(ex.args[i].term), Visibility::hidden});
          term = Term::app(term, ex.args[i].term, Visibility::hidden);
          ct = subst(cw.codomain(), 0, ex.args[i].term);
        }
        for (const PatArg& sub : p.args) {
          Term cw = whnf(sig, ct);
          if (!cw.is(TermKind::pi)) {
            throw Error(ErrorCode::arity_mismatch,
                        "constructor pattern " + p.name + " has too many arguments", raw.span);
          }
          Term st;
          out.args.push_back({visit(sub.pat, cw.domain(), st), sub.vis});
          term = Term::app(term, st, sub.vis);
          ct = subst(cw.codomain(), 0, st);
        }
        as_term = term;
        return out;
      }
    }
    internal_error("elaborate_clause: unknown pattern kind");
  }
};

}  // namespace

Clause elaborate_clause(const Signature& sig, const std::string& fun, const RawClause& raw) {
  const Entry* e = sig.find(fun);
  if (!e) throw Error(ErrorCode::unknown_name, "clause for undeclared " + fun, raw.span);
  ClauseElaborator el{sig, raw, raw.vars.size(), {}};
  Term type = shift(e->type, static_cast<long>(raw.vars.size()));
  Clause out;
  for (const PatArg& pa : raw.patterns) {
    Term tw = whnf(sig, type);
    if (!tw.is(TermKind::pi)) {
      throw Error(ErrorCode::arity_mismatch, fun + ": too many patterns", raw.span);
    }
    if (tw.binder().vis != pa.vis) {
      throw Error(ErrorCode::type, fun + ": pattern visibility does not match its type",
                  raw.span);
    }
    Term pt;
    out.patterns.push_back({el.visit(pa.pat, tw.domain(), pt), pa.vis});
    type = subst(tw.codomain(), 0, pt);
  }
  if (el.tel.size() != raw.vars.size()) internal_error("elaborate_clause: variables missing");
  out.tel = std::move(el.tel);
  out.rhs = raw.rhs;
  return out;
}

}  // namespace hitgen
