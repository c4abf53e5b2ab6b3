#include <optional>

#include "hitgen/kernel/kernel.hpp"
#include "reducer.hpp"

namespace hitgen {

Reducer::Reducer(const Signature& sig) : sig_(sig), budget_(sig.fuel()) {}

void Reducer::tick() {
  if (++steps_ > budget_) {
    throw Error(ErrorCode::fuel_exhausted,
                "reduction exceeded " + std::to_string(budget_) + " steps");
  }
}

Reducer::Match Reducer::match(const Pattern& p, const Term& arg, std::vector<Term>& vals) {
  switch (p.kind) {
    case Pattern::Kind::var:
      if (p.level >= vals.size()) internal_error("pattern variable level out of range");
      vals[p.level] = arg;
      return Match::yes;
    case Pattern::Kind::dot:
      return Match::yes;
    case Pattern::Kind::refl: {
      Term w = whnf(arg);
      if (w.is(TermKind::refl)) return Match::yes;
      return Match::stuck;
    }
    case Pattern::Kind::con: {
      Term w = whnf(arg);
      Spine sp = spine_of(w);
      if (!sp.head.is(TermKind::constant)) return Match::stuck;
      if (sp.head.name() != p.name) {
        const Entry* e = sig_.find(sp.head.name());
        return e && e->canonical ? Match::no : Match::stuck;
      }
      if (sp.args.size() != p.args.size()) return Match::stuck;
      return match_all(p.args, sp.args, vals);
    }
  }
  return Match::stuck;
}

Reducer::Match Reducer::match_all(const std::vector<PatArg>& pats, const std::vector<Arg>& args,
                                  std::vector<Term>& vals) {
  Match result = Match::yes;
  for (std::size_t i = 0; i < pats.size(); ++i) {
    Match m = match(pats[i].pat, args[i].term, vals);
    if (m == Match::no) return Match::no;
    if (m == Match::stuck) result = Match::stuck;
  }
  return result;
}

namespace {

Term fire(const Term& rhs, const std::vector<Term>& vals, const std::vector<Arg>& args,
          std::size_t used) {
  std::vector<Term> env(vals.rbegin(), vals.rend());
  for (const Term& v : env) {
    if (v.is_null()) internal_error("pattern variable left unbound by matching");
  }
  Term out = instantiate(rhs, env);
  return hitgen::apply(out, std::span<const Arg>(args).subspan(used));
}

}  // namespace

std::optional<Term> Reducer::unfold(const Spine& sp) {
  const std::string& name = sp.head.name();
  const Entry* e = sig_.find(name);
  if (e && e->kind == EntryKind::defined) {
    for (const Clause& c : e->clauses) {
      if (c.patterns.size() > sp.args.size()) break;
      std::vector<Term> vals(c.tel.size());
      Match m = match_all(c.patterns, sp.args, vals);
      if (m == Match::yes) {
        tick();
        return fire(c.rhs, vals, sp.args, c.patterns.size());
      }
      if (m == Match::stuck) break;
    }
  }
  for (const RewriteRule& r : sig_.rules_for(name)) {
    if (r.args.size() > sp.args.size()) continue;
    std::vector<Term> vals(r.tel.size());
    if (match_all(r.args, sp.args, vals) == Match::yes) {
      tick();
      return fire(r.rhs, vals, sp.args, r.args.size());
    }
  }
  return std::nullopt;
}

Term Reducer::whnf(const Term& t) {
  Term cur = t;
  for (;;) {
    if (!cur.is(TermKind::app) && !cur.is(TermKind::constant)) return cur;
    Spine sp = spine_of(cur);
    if (sp.head.is(TermKind::lam) && !sp.args.empty()) {
      tick();
      Term body = subst(sp.head.body(), 0, sp.args.front().term);
      cur = hitgen::apply(body, std::span<const Arg>(sp.args).subspan(1));
      continue;
    }
    if (sp.head.is(TermKind::constant)) {
      if (auto next = unfold(sp)) {
        cur = *next;
        continue;
      }
    }
    return cur;
  }
}

Term Reducer::normalize(const Term& t) {
  if (t.is_null()) return t;
  Term w = whnf(t);
  switch (w.kind()) {
    case TermKind::var:
    case TermKind::sort:
    case TermKind::constant:
      return w;
    case TermKind::pi:
      return Term::pi(w.binder(), normalize(w.domain()), normalize(w.codomain()));
    case TermKind::lam:
      return Term::lam(w.binder(), normalize(w.body()));
    case TermKind::app: {
      Spine sp = spine_of(w);
      Term head = normalize(sp.head);
      for (Arg& a : sp.args) a.term = normalize(a.term);
      return hitgen::apply(head, sp.args);
    }
    case TermKind::id:
      return Term::id(normalize(w.id_type()), normalize(w.lhs()), normalize(w.rhs()));
    case TermKind::refl:
      return Term::refl(normalize(w.refl_type()), normalize(w.point()));
  }
  return w;
}

bool Reducer::convertible(const Term& a, const Term& b) {
  if (a == b) return true;
  return normalize(a) == normalize(b);
}

Term whnf(const Signature& sig, const Term& t) { return Reducer(sig).whnf(t); }

Term normalize(const Signature& sig, const Term& t) { return Reducer(sig).normalize(t); }

bool def_eq(const Signature& sig, const Term& a, const Term& b) {
  return Reducer(sig).convertible(a, b);
}

}  // namespace hitgen
