#include "builder.hpp"

#include <numeric>
#include <set>

namespace hitgen {

namespace {

std::vector<std::size_t> iota_levels(std::size_t n, std::size_t from = 0) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), from);
  return v;
}

std::vector<std::size_t> concat(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

[[noreturn]] void endpoint_error(const std::string& msg) { throw Error(ErrorCode::endpoint, msg); }

}  // namespace

std::string method_name(const std::string& constructor) {
  std::string out = "c";
  for (char ch : constructor) {
    if (ch != '_') out += ch;
  }
  return out;
}

Builder::Builder(const DataDecl& decl, ElimKind kind, std::string elim, bool with_paths)
    : decl_(decl), kind_(kind), elim_(std::move(elim)), with_paths_(with_paths) {
  std::set<std::string> taken{"C", "x"};
  for (const auto& e : decl_.params) taken.insert(e.binder.hint);
  for (const auto& e : decl_.indices) taken.insert(e.binder.hint);
  auto pick = [&](const std::string& ctor) {
    std::string base = method_name(ctor);
    std::string n = base;
    for (int k = 2; taken.count(n); ++k) n = base + std::to_string(k);
    taken.insert(n);
    method_names_.push_back(n);
  };
  for (const auto& c : decl_.points) pick(c.name);
  for (std::size_t j = 0; j < num_paths(); ++j) pick(decl_.paths[j].name);
}

// --- method types ------------------------------------------------------------

Term Builder::point_method_type(std::size_t i) const {
  const ConstructorSig& c = decl_.points[i];
  const bool dep = kind_ == ElimKind::ind;
  PrimedTelescope pt = prime_telescope(decl_, c.args, {dep, motive_level(), np() + 1});
  const std::size_t depth = np() + 1 + pt.entries.size();
  std::vector<std::size_t> src = iota_levels(np());
  for (std::size_t pos : pt.arg_pos) src.push_back(np() + 1 + pos);
  Term cod = var_at(motive_level(), depth);
  if (dep) {
    for (const Term& e : c.index_instantiations) {
      cod = Term::app(cod, rebase(e, src, depth), Visibility::hidden);
    }
    Term con = Term::constant(c.name, ConstRole::constructor);
    for (std::size_t j = 0; j < np(); ++j) {
      con = Term::app(con, var_at(j, depth), Visibility::hidden);
    }
    for (std::size_t k = 0; k < c.args.size(); ++k) {
      con = Term::app(con, var_at(src[np() + k], depth), c.args[k].binder.vis);
    }
    cod = Term::app(cod, con);
  }
  return pi_over(pt.entries, cod);
}

Term Builder::path_method_type(std::size_t j) const {
  const PathSig& p = decl_.paths[j];
  const bool dep = kind_ == ElimKind::ind;
  const std::size_t base = np() + 1 + r();
  PrimedTelescope pt = prime_telescope(decl_, p.args, {dep, motive_level(), base});
  const std::size_t depth = base + pt.entries.size();
  std::vector<std::size_t> src = iota_levels(np());
  for (std::size_t pos : pt.arg_pos) src.push_back(base + pos);
  std::vector<std::size_t> f_levels;
  for (std::size_t i = 0; i < r(); ++i) f_levels.push_back(f_level(i));

  VarHandler on_rec = [&](std::size_t k, const std::vector<Arg>& applied) {
    Term ih = var_at(base + *pt.ih_pos[k], depth);
    return hitgen::apply(ih, applied);
  };
  Term lhs_img, rhs_img;
  try {
    lhs_img = image(p.lhs, src, depth, f_levels, on_rec);
    rhs_img = image(p.rhs, src, depth, f_levels, on_rec);
  } catch (const Error& e) {
    throw Error(ErrorCode::endpoint, "path " + p.name + ": " + e.message(), p.span);
  }
  if (!dep) return pi_over(pt.entries, Term::id(Term(), lhs_img, rhs_img));

  if (p.at_indices.size() != decl_.num_indices()) {
    internal_error("path " + p.name + " has no index information; install the declaration first");
  }
  std::vector<Term> ix;
  for (const Term& e : p.at_indices) ix.push_back(rebase(e, src, depth));
  Term fam = var_at(motive_level(), depth);
  for (const Term& e : ix) fam = Term::app(fam, e, Visibility::hidden);
  Term path = Term::constant(p.name, ConstRole::postulate);
  for (std::size_t a = 0; a < np(); ++a) path = Term::app(path, var_at(a, depth), Visibility::hidden);
  for (std::size_t k = 0; k < p.args.size(); ++k) {
    path = Term::app(path, var_at(src[np() + k], depth), p.args[k].binder.vis);
  }
  Term tr = hitgen::apply(Term::constant("transport", ConstRole::defined),
                          {{decl_.applied_former(depth - 1, ix), Visibility::hidden},
                           {rebase(p.lhs, src, depth), Visibility::hidden},
                           {rebase(p.rhs, src, depth), Visibility::hidden},
                           {fam, Visibility::visible},
                           {path, Visibility::visible},
                           {lhs_img, Visibility::visible}});
  return pi_over(pt.entries, Term::id(Term(), tr, rhs_img));
}

Telescope Builder::method_context() const {
  Telescope tel = decl_.params;
  tel.push_back({Binder{"C"}, motive_type(decl_, kind_ == ElimKind::ind)});
  for (std::size_t i = 0; i < r(); ++i) {
    tel.push_back({Binder{method_names_[i]}, shift(point_method_type(i), static_cast<long>(i))});
  }
  for (std::size_t j = 0; j < num_paths(); ++j) {
    tel.push_back({Binder{method_names_[r() + j]}, shift(path_method_type(j), static_cast<long>(j))});
  }
  return tel;
}

// --- images and right-hand sides --------------------------------------------

Term Builder::image(const Term& t, const std::vector<std::size_t>& src, std::size_t depth,
                    const std::vector<std::size_t>& f_levels, const VarHandler& on_rec) const {
  // `src` covers the parameters and the arguments of the path being imaged;
  // classify those arguments lazily from the path telescope they came from.
  Spine sp = spine_of(t);
  if (sp.head.is(TermKind::var)) {
    const std::size_t s = src.size();
    if (sp.head.index() >= s) internal_error("endpoint variable out of range");
    const std::size_t level = s - 1 - sp.head.index();
    if (level < np()) endpoint_error("a parameter cannot be an endpoint");
    std::vector<Arg> applied;
    for (const Arg& a : sp.args) applied.push_back({rebase(a.term, src, depth), a.vis});
    return on_rec(level - np(), applied);
  }
  if (!sp.head.is(TermKind::constant)) endpoint_error("endpoint is not headed by a constructor");
  std::size_t gi = 0;
  while (gi < r() && decl_.points[gi].name != sp.head.name()) ++gi;
  if (gi == r()) {
    endpoint_error(sp.head.name() + " is not a point constructor of " + decl_.name);
  }
  const ConstructorSig& g = decl_.points[gi];
  if (sp.args.size() != np() + g.args.size()) {
    endpoint_error(g.name + " must be applied to all of its arguments");
  }
  Term out = var_at(f_levels[gi], depth);
  for (std::size_t k = 0; k < g.args.size(); ++k) {
    const Term& a = sp.args[np() + k].term;
    out = Term::app(out, rebase(a, src, depth), g.args[k].binder.vis);
    ArgClass cls = classify_arg(decl_, g.args[k].type, k);
    if (!cls.recursive()) continue;
    if (cls.kind == ArgClass::Kind::rec_higher_order && !a.is(TermKind::var)) {
      endpoint_error("a higher-order recursive argument of " + g.name +
                     " in an endpoint must be a variable");
    }
    out = Term::app(out, image(a, src, depth, f_levels, on_rec));
  }
  return out;
}

Term Builder::elim_call(const std::vector<std::size_t>& mctx, std::size_t depth,
                        const std::vector<Term>& ix, const Term& target) const {
  Term e = Term::constant(elim_, with_paths_ ? ConstRole::postulate : ConstRole::defined);
  for (std::size_t j = 0; j < np(); ++j) e = Term::app(e, var_at(mctx[j], depth));
  for (const Term& i : ix) e = Term::app(e, i, Visibility::hidden);
  e = Term::app(e, target);
  for (std::size_t l = np(); l < methods_end(); ++l) e = Term::app(e, var_at(mctx[l], depth));
  return e;
}

Term Builder::method_rhs(const Term& method, const Telescope& delta,
                         const std::vector<std::size_t>& src,
                         const std::vector<std::size_t>& mctx, std::size_t depth) const {
  Term out = method;
  for (std::size_t k = 0; k < delta.size(); ++k) {
    Term y = var_at(src[np() + k], depth);
    out = Term::app(out, y, delta[k].binder.vis);
    ArgClass cls = classify_arg(decl_, delta[k].type, k);
    if (!cls.recursive()) continue;
    std::vector<std::size_t> inner(src.begin(), src.begin() + static_cast<long>(np() + k));
    Telescope psi;
    for (std::size_t m = 0; m < cls.psi.size(); ++m) {
      psi.push_back({cls.psi[m].binder, rebase(cls.psi[m].type, inner, depth + m)});
      inner.push_back(depth + m);
    }
    const std::size_t db = depth + psi.size();
    std::vector<Term> ix;
    for (const Term& e : cls.index_exprs) ix.push_back(rebase(e, inner, db));
    Term target = var_at(src[np() + k], db);
    if (!psi.empty()) target = telescope_apply(target, psi, psi.size() - 1);
    out = Term::app(out, lam_over(psi, elim_call(mctx, db, ix, target)));
  }
  return out;
}

// --- assembled declarations --------------------------------------------------

Term Builder::elim_type() const {
  const std::size_t m = decl_.num_indices();
  Telescope tel = decl_.params;
  for (auto e : decl_.indices) {
    e.binder.vis = Visibility::hidden;
    tel.push_back(e);
  }
  std::vector<Term> ivars;
  for (std::size_t k = 0; k < m; ++k) ivars.push_back(Term::var(m - 1 - k));
  Binder target{kind_ == ElimKind::ind ? "x" : "_"};
  tel.push_back({target, decl_.applied_former(np() + m - 1, ivars)});
  const std::size_t c_level = np() + m + 1;
  std::vector<std::size_t> pc = concat(iota_levels(np()), {c_level});
  tel.push_back({Binder{"C"}, rebase(motive_type(decl_, kind_ == ElimKind::ind), iota_levels(np()),
                                     c_level)});
  for (std::size_t i = 0; i < r(); ++i) {
    tel.push_back({Binder{method_names_[i]}, rebase(point_method_type(i), pc, c_level + 1 + i)});
  }
  std::vector<std::size_t> pcf = concat(pc, iota_levels(r(), c_level + 1));
  for (std::size_t j = 0; j < num_paths(); ++j) {
    tel.push_back({Binder{method_names_[r() + j]},
                   rebase(path_method_type(j), pcf, c_level + 1 + r() + j)});
  }
  const std::size_t depth = tel.size();
  Term result = var_at(c_level, depth);
  if (kind_ == ElimKind::ind) {
    for (std::size_t k = 0; k < m; ++k) {
      result = Term::app(result, var_at(np() + k, depth), Visibility::hidden);
    }
    result = Term::app(result, var_at(np() + m, depth));
  }
  return pi_over(tel, result);
}

Clause Builder::point_clause(std::size_t i) const {
  const ConstructorSig& c = decl_.points[i];
  const std::size_t nd = c.args.size();
  const std::size_t c_level = np() + nd;
  Clause cl;
  cl.tel = decl_.params;
  for (const auto& e : c.args) cl.tel.push_back(e);
  cl.tel.push_back({Binder{"C"}, rebase(motive_type(decl_, kind_ == ElimKind::ind),
                                        iota_levels(np()), c_level)});
  std::vector<std::size_t> pc = concat(iota_levels(np()), {c_level});
  for (std::size_t i2 = 0; i2 < r(); ++i2) {
    cl.tel.push_back({Binder{method_names_[i2]}, rebase(point_method_type(i2), pc, c_level + 1 + i2)});
  }
  std::vector<std::size_t> pcf = concat(pc, iota_levels(r(), c_level + 1));
  for (std::size_t j = 0; j < num_paths(); ++j) {
    cl.tel.push_back({Binder{method_names_[r() + j]},
                      rebase(path_method_type(j), pcf, c_level + 1 + r() + j)});
  }
  const std::size_t depth = cl.tel.size();
  std::vector<std::size_t> mctx =
      concat(pc, iota_levels(r() + num_paths(), c_level + 1));
  std::vector<std::size_t> src = iota_levels(np() + nd);

  for (std::size_t j = 0; j < np(); ++j) cl.patterns.push_back({Pattern::var(j), Visibility::visible});
  for (const Term& e : c.index_instantiations) {
    cl.patterns.push_back({Pattern::inaccessible(rebase(e, src, depth)), Visibility::hidden});
  }
  std::vector<PatArg> con_args;
  for (std::size_t j = 0; j < np(); ++j) {
    con_args.push_back({Pattern::inaccessible(var_at(j, depth)), Visibility::hidden});
  }
  for (std::size_t k = 0; k < nd; ++k) {
    con_args.push_back({Pattern::var(np() + k), c.args[k].binder.vis});
  }
  cl.patterns.push_back({Pattern::con(c.name, std::move(con_args)), Visibility::visible});
  for (std::size_t l = c_level; l < depth; ++l) {
    cl.patterns.push_back({Pattern::var(l), Visibility::visible});
  }
  cl.rhs = method_rhs(var_at(mctx[f_level(i)], depth), c.args, src, mctx, depth);
  return cl;
}

Term Builder::point_rule_type(std::size_t i) const {
  Clause cl = point_clause(i);
  Term lhs = Term::constant(elim_, with_paths_ ? ConstRole::postulate : ConstRole::defined);
  for (const auto& pa : cl.patterns) lhs = Term::app(lhs, pattern_term(pa.pat, cl.tel), pa.vis);
  return pi_over(cl.tel, Term::id(Term(), lhs, cl.rhs));
}

Term Builder::path_postulate_type(std::size_t j) const {
  const PathSig& p = decl_.paths[j];
  const std::size_t M = methods_end();
  Telescope tel = method_context();
  std::vector<std::size_t> src = iota_levels(np());
  for (std::size_t k = 0; k < p.args.size(); ++k) {
    std::vector<std::size_t> prefix = src;
    tel.push_back({p.args[k].binder, rebase(p.args[k].type, prefix, M + k)});
    src.push_back(M + k);
  }
  const std::size_t depth = tel.size();
  std::vector<std::size_t> mctx = iota_levels(M);
  std::vector<Term> ix;
  if (p.at_indices.size() != decl_.num_indices()) {
    internal_error("path " + p.name + " has no index information; install the declaration first");
  }
  for (const Term& e : p.at_indices) ix.push_back(rebase(e, src, depth));
  std::vector<Term> ix1;
  for (const Term& e : ix) ix1.push_back(shift(e, 1));
  Term fn = Term::lam(Binder{"x"}, elim_call(mctx, depth + 1, ix1, Term::var(0)));
  Term path = Term::constant(p.name, ConstRole::postulate);
  for (std::size_t a = 0; a < np(); ++a) path = Term::app(path, var_at(a, depth), Visibility::hidden);
  for (std::size_t k = 0; k < p.args.size(); ++k) {
    path = Term::app(path, var_at(src[np() + k], depth), p.args[k].binder.vis);
  }
  Term cod = var_at(motive_level(), depth);
  const bool dep = kind_ == ElimKind::ind;
  if (dep) {
    for (const Term& e : ix) cod = Term::app(cod, e, Visibility::hidden);
  }
  Term act = hitgen::apply(Term::constant(dep ? "apd" : "ap", ConstRole::defined),
                           {{decl_.applied_former(depth - 1, ix), Visibility::hidden},
                            {cod, Visibility::hidden},
                            {rebase(p.lhs, src, depth), Visibility::hidden},
                            {rebase(p.rhs, src, depth), Visibility::hidden},
                            {fn, Visibility::visible},
                            {path, Visibility::visible}});
  Term rhs = method_rhs(var_at(k_level(j), depth), p.args, src, mctx, depth);
  return pi_over(tel, Term::id(Term(), act, rhs));
}

Builder::BaseCheck Builder::base_check(std::size_t j, const std::string& base_elim) const {
  const PathSig& p = decl_.paths[j];
  BaseCheck out;
  const std::size_t M = np() + 1 + r();
  out.ctx = decl_.params;
  out.ctx.push_back({Binder{"C"}, motive_type(decl_, kind_ == ElimKind::ind)});
  for (std::size_t i = 0; i < r(); ++i) {
    out.ctx.push_back({Binder{method_names_[i]}, shift(point_method_type(i), static_cast<long>(i))});
  }
  std::vector<std::size_t> src = iota_levels(np());
  for (std::size_t k = 0; k < p.args.size(); ++k) {
    out.ctx.push_back({p.args[k].binder, rebase(p.args[k].type, src, M + k)});
    src.push_back(M + k);
  }
  const std::size_t depth = out.ctx.size();
  std::vector<std::size_t> f_levels;
  for (std::size_t i = 0; i < r(); ++i) f_levels.push_back(np() + 1 + i);

  auto base_call = [&](const std::vector<Term>& ix, const Term& target) {
    Term e = Term::constant(base_elim, ConstRole::postulate);
    for (std::size_t a = 0; a < np(); ++a) e = Term::app(e, var_at(a, depth));
    for (const Term& i : ix) e = Term::app(e, i, Visibility::hidden);
    e = Term::app(e, target);
    for (std::size_t l = np(); l < M; ++l) e = Term::app(e, var_at(l, depth));
    return e;
  };
  VarHandler on_rec = [&](std::size_t k, const std::vector<Arg>& applied) {
    ArgClass cls = classify_arg(decl_, p.args[k].type, k);
    if (cls.kind != ArgClass::Kind::rec_first_order || !applied.empty()) {
      endpoint_error("base-eliminator check supports first-order recursive variables only");
    }
    std::vector<std::size_t> prefix(src.begin(), src.begin() + static_cast<long>(np() + k));
    std::vector<Term> ix;
    for (const Term& e : cls.index_exprs) ix.push_back(rebase(e, prefix, depth));
    return base_call(ix, var_at(src[np() + k], depth));
  };
  PathEndpoints ends = path_endpoints(decl_, p);
  for (const auto& [side, end] : {std::pair{p.lhs, ends.lhs}, std::pair{p.rhs, ends.rhs}}) {
    std::vector<Term> ix;
    for (const Term& e : end.indices) ix.push_back(rebase(e, src, depth));
    out.pairs.push_back({image(side, src, depth, f_levels, on_rec),
                         base_call(ix, rebase(side, src, depth))});
  }
  return out;
}

}  // namespace hitgen
