#include <algorithm>

#include "builder.hpp"
#include "hitgen/gen/generate.hpp"
#include "hitgen/schema/analysis.hpp"

namespace hitgen {

namespace {

Term elab_type(const Signature& sig, const Term& t, const Telescope& ctx = {}) {
  return elaborate(sig, ctx, t, Term::sort());
}

const DataDecl& installed(const Signature& sig, const DataDecl& decl) {
  const Entry* e = sig.find(decl.name);
  if (!e || !e->data) {
    throw Error(ErrorCode::unknown_name, decl.name + " has not been installed", decl.span);
  }
  return *e->data;
}

std::string strip(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c != '_') out += c;
  }
  return out;
}

std::string rule_prefix(ElimKind kind) { return kind == ElimKind::ind ? "iβ" : "β"; }

std::vector<std::string> point_rule_names(const DataDecl& d, ElimKind kind) {
  std::vector<std::string> out;
  for (const auto& c : d.points) out.push_back(rule_prefix(kind) + strip(c.name));
  return out;
}

std::vector<std::string> path_rule_names(const DataDecl& d, ElimKind kind) {
  std::vector<std::string> out;
  for (const auto& p : d.paths) out.push_back(rule_prefix(kind) + strip(p.name));
  return out;
}

// Splits the first n Π binders off t.
Term peel(const Term& t, std::size_t n, Telescope& out) {
  Term cur = t;
  for (std::size_t k = 0; k < n; ++k) {
    if (!cur.is(TermKind::pi)) internal_error("peel: not enough binders");
    out.push_back({cur.binder(), cur.domain()});
    cur = cur.codomain();
  }
  return cur;
}

ElimBundle read_bundle(const Signature& sig, const DataDecl& d, ElimKind kind,
                       const std::string& elim, bool hit) {
  Builder b(d, kind, elim, hit);
  ElimBundle out;
  out.elim_name = elim;
  out.kind = kind;
  out.rewrite_points = hit;
  out.method_names = b.method_names();
  const Entry* e = sig.find(elim);
  if (!e) internal_error("eliminator " + elim + " missing");
  out.elim_type = e->type;
  out.point_rule_names = point_rule_names(d, kind);
  if (!hit) {
    out.point_clauses = e->clauses;
  } else {
    for (const auto& n : out.point_rule_names) {
      for (const RewriteRule& r : sig.rules_for(elim)) {
        if (r.name == n) out.point_clauses.push_back(Clause{r.tel, r.args, r.rhs});
      }
    }
  }
  if (hit) {
    for (const auto& n : path_rule_names(d, kind)) {
      if (const Entry* pe = sig.find(n)) out.path_postulates.push_back({n, pe->type});
    }
  }
  return out;
}

GenResult plain_elim(const Signature& sig, const DataDecl& decl, const std::string& elim,
                     ElimKind kind) {
  const DataDecl& d = installed(sig, decl);
  if (d.is_hit()) {
    throw Error(ErrorCode::type,
                d.name + " has path constructors; use the higher inductive generator", d.span);
  }
  Builder b(d, kind, elim, false);
  Signature out = declare_def(sig, elim, elab_type(sig, b.elim_type()), d.span);
  GenResult r{out, read_bundle(out, d, kind, elim, false)};
  for (std::size_t i = 0; i < d.points.size(); ++i) r.bundle.point_clauses.push_back(b.point_clause(i));
  return r;
}

GenResult plain_beta(const Signature& sig, const DataDecl& decl, const std::string& elim,
                     ElimKind kind) {
  const DataDecl& d = installed(sig, decl);
  Builder b(d, kind, elim, false);
  std::vector<Clause> clauses;
  for (std::size_t i = 0; i < d.points.size(); ++i) clauses.push_back(b.point_clause(i));
  Signature out = define_fun(sig, elim, std::move(clauses));
  return {out, read_bundle(out, d, kind, elim, false)};
}

Signature install_base(const Signature& sig, const DataDecl& d, ElimKind kind,
                       const std::string& base) {
  DataDecl points = d.points_only();
  Builder bb(points, kind, base, true);
  Signature s = declare_postulate(sig, base, elab_type(sig, bb.elim_type()), d.span);
  for (std::size_t i = 0; i < points.points.size(); ++i) {
    Clause cl = bb.point_clause(i);
    s = add_rewrite_rule(s, RewriteRule{base + "." + points.points[i].name, base, cl.tel,
                                        cl.patterns, cl.rhs});
  }
  return s;
}

GenResult hit_elim(const Signature& sig, const DataDecl& decl, const std::string& elim,
                   const std::string& base_elim, ElimKind kind) {
  const DataDecl& d = installed(sig, decl);
  Builder b(d, kind, elim, true);
  Signature out = declare_postulate(sig, elim, elab_type(sig, b.elim_type()), d.span);

  if (d.is_hit()) {
    // The endpoint images must agree with what the points-only eliminator
    // computes on the endpoints.
    Signature scratch = sig.contains(base_elim) ? sig : install_base(sig, d, kind, base_elim);
    for (std::size_t j = 0; j < d.paths.size(); ++j) {
      Builder::BaseCheck bc;
      try {
        bc = b.base_check(j, base_elim);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::endpoint) continue;  // higher-order endpoints: no check
        throw;
      }
      Telescope ctx = check_telescope(scratch, {}, bc.ctx);
      for (const auto& [img, direct] : bc.pairs) {
        Term a = elaborate(scratch, ctx, img);
        Term c = elaborate(scratch, ctx, direct);
        if (!def_eq(scratch, a, c)) {
          internal_error("endpoint image of path " + d.paths[j].name +
                         " disagrees with the points-only eliminator");
        }
      }
    }
  }

  std::vector<std::string> names = point_rule_names(d, kind);
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    out = declare_postulate(out, names[i], elab_type(out, b.point_rule_type(i)), d.points[i].span);
    Clause cl = b.point_clause(i);
    out = add_rewrite_rule(out, RewriteRule{names[i], elim, cl.tel, cl.patterns, cl.rhs});
  }
  return {out, read_bundle(out, d, kind, elim, true)};
}

GenResult hit_paths(const Signature& sig, const DataDecl& decl, const std::string& elim,
                    ElimKind kind) {
  const DataDecl& d = installed(sig, decl);
  Builder b(d, kind, elim, true);
  std::vector<std::string> names = path_rule_names(d, kind);
  Signature out = sig;
  for (std::size_t j = 0; j < d.paths.size(); ++j) {
    out = declare_postulate(out, names[j], elab_type(out, b.path_postulate_type(j)),
                            d.paths[j].span);
  }
  return {out, read_bundle(out, d, kind, elim, true)};
}

}  // namespace

bool same_generated(const ElimBundle& a, const ElimBundle& b) {
  if (!(a.elim_type == b.elim_type)) return false;
  if (a.point_clauses.size() != b.point_clauses.size()) return false;
  for (std::size_t i = 0; i < a.point_clauses.size(); ++i) {
    if (!(a.point_clauses[i] == b.point_clauses[i])) return false;
  }
  if (a.path_postulates.size() != b.path_postulates.size()) return false;
  for (std::size_t j = 0; j < a.path_postulates.size(); ++j) {
    if (a.path_postulates[j].name != b.path_postulates[j].name ||
        !(a.path_postulates[j].type == b.path_postulates[j].type)) {
      return false;
    }
  }
  return true;
}

Signature install_decl(const Signature& sig, const DataDecl& decl) {
  check_positivity(decl);
  const bool hit = decl.is_hit();
  for (const std::string& n : [&] {
         std::vector<std::string> all{decl.name};
         for (const auto& c : decl.points) all.push_back(c.name);
         for (const auto& p : decl.paths) all.push_back(p.name);
         return all;
       }()) {
    if (sig.contains(n)) {
      throw Error(ErrorCode::duplicate_name, "name " + n + " is already declared", decl.span);
    }
  }
  DataDecl d = decl;
  const std::size_t np = d.num_params();
  d.params = check_telescope(sig, {}, d.params);
  d.indices = check_telescope(sig, d.params, d.indices);

  Signature out;
  if (hit) {
    out = declare_postulate(sig, d.name, d.former_type(), d.span);
  } else {
    Entry e;
    e.kind = EntryKind::datatype;
    e.type = elab_type(sig, d.former_type());
    e.span = d.span;
    out = sig.with_entry(d.name, e);
  }
  auto set_data = [&](Signature s) {
    Entry e = *s.find(d.name);
    e.data = d;
    return s.with_entry(d.name, std::move(e));
  };
  out = set_data(out);

  for (auto& c : d.points) {
    Term type;
    try {
      type = elab_type(out, d.constructor_type(c));
    } catch (const Error& e) {
      throw e.with_span(c.span);
    }
    Telescope tele;
    Term cod = peel(type, np + c.args.size(), tele);
    for (std::size_t k = 0; k < c.args.size(); ++k) c.args[k].type = tele[np + k].type;
    Spine sp = spine_of(cod);
    c.index_instantiations.clear();
    for (std::size_t j = np; j < sp.args.size(); ++j) c.index_instantiations.push_back(sp.args[j].term);
    Entry ce;
    ce.kind = hit ? EntryKind::postulate : EntryKind::constructor;
    ce.type = type;
    ce.canonical = true;
    ce.datatype = d.name;
    ce.span = c.span;
    out = out.with_entry(c.name, std::move(ce));
  }
  out = set_data(out);

  for (auto& p : d.paths) {
    Telescope ctx = d.params;
    Telescope args = check_telescope(out, d.params, p.args);
    ctx.insert(ctx.end(), args.begin(), args.end());
    p.args = args;
    p.lhs = elaborate(out, ctx, p.lhs);
    p.rhs = elaborate(out, ctx, p.rhs);
    PathEndpoints ends = path_endpoints(d, p);
    for (std::size_t k = 0; k < ends.lhs.indices.size(); ++k) {
      if (!def_eq(out, ends.lhs.indices[k], ends.rhs.indices[k])) {
        throw Error(ErrorCode::endpoint,
                    "path " + p.name + " relates points at different indices", p.span);
      }
    }
    p.at_indices = ends.lhs.indices;
    out = declare_postulate(out, p.name, d.path_type(p), p.span);
    Entry pe = *out.find(p.name);
    pe.datatype = d.name;
    out = out.with_entry(p.name, std::move(pe));
  }
  return set_data(out);
}

GenResult generate_rec(const Signature& sig, const DataDecl& decl, const std::string& elim) {
  return plain_elim(sig, decl, elim, ElimKind::rec);
}
GenResult generate_beta_rec(const Signature& sig, const DataDecl& decl, const std::string& elim) {
  return plain_beta(sig, decl, elim, ElimKind::rec);
}
GenResult generate_ind(const Signature& sig, const DataDecl& decl, const std::string& elim) {
  return plain_elim(sig, decl, elim, ElimKind::ind);
}
GenResult generate_beta_ind(const Signature& sig, const DataDecl& decl, const std::string& elim) {
  return plain_beta(sig, decl, elim, ElimKind::ind);
}
GenResult generate_rec_hit(const Signature& sig, const DataDecl& decl, const std::string& elim,
                           const std::string& base_elim) {
  return hit_elim(sig, decl, elim, base_elim, ElimKind::rec);
}
GenResult generate_beta_rec_hit_path(const Signature& sig, const DataDecl& decl,
                                     const std::string& elim) {
  return hit_paths(sig, decl, elim, ElimKind::rec);
}
GenResult generate_ind_hit(const Signature& sig, const DataDecl& decl, const std::string& elim,
                           const std::string& base_elim) {
  return hit_elim(sig, decl, elim, base_elim, ElimKind::ind);
}
GenResult generate_beta_ind_hit_path(const Signature& sig, const DataDecl& decl,
                                     const std::string& elim) {
  return hit_paths(sig, decl, elim, ElimKind::ind);
}

Generated generate_all(const Signature& sig, const DataDecl& decl) {
  Signature s = install_decl(sig, decl);
  DataDecl d = installed(s, decl);
  const std::string rec = default_rec_name(d.name);
  const std::string ind = default_ind_name(d.name);
  Generated g;
  if (d.is_hit()) {
    GenResult r = generate_rec_hit(s, d, rec, rec + "-points");
    r = generate_beta_rec_hit_path(r.sig, d, rec);
    GenResult i = generate_ind_hit(r.sig, d, ind, ind + "-points");
    i = generate_beta_ind_hit_path(i.sig, d, ind);
    g = {i.sig, d, r.bundle, i.bundle};
  } else {
    GenResult r = generate_rec(s, d, rec);
    r = generate_beta_rec(r.sig, d, rec);
    GenResult i = generate_ind(r.sig, d, ind);
    i = generate_beta_ind(i.sig, d, ind);
    g = {i.sig, d, r.bundle, i.bundle};
  }
  return g;
}

}  // namespace hitgen
