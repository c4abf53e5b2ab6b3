#include "hitgen/schema/analysis.hpp"

#include <algorithm>

namespace hitgen {

namespace {

[[noreturn]] void positivity(const std::string& msg) { throw Error(ErrorCode::positivity, msg); }

}  // namespace

ArgClass classify_arg(const DataDecl& decl, const Term& arg_type, std::size_t position) {
  ArgClass out;
  const std::size_t np = decl.num_params();
  Telescope psi;
  Term body = split_pi(arg_type, psi);
  Spine sp = spine_of(body);
  if (!sp.head.is(TermKind::constant) || sp.head.name() != decl.name) {
    if (mentions_const(arg_type, decl.name)) {
      positivity(decl.name + " occurs to the left of an arrow or nested inside another type");
    }
    return out;
  }
  for (const auto& e : psi) {
    if (mentions_const(e.type, decl.name)) {
      positivity(decl.name + " occurs to the left of an arrow");
    }
  }
  if (sp.args.size() != np + decl.num_indices()) {
    positivity("recursive occurrence of " + decl.name + " has the wrong number of arguments");
  }
  for (std::size_t j = 0; j < np; ++j) {
    std::size_t expect = position + psi.size() + np - 1 - j;
    if (!(sp.args[j].term == Term::var(expect)) || sp.args[j].vis != Visibility::visible) {
      positivity("recursive occurrence of " + decl.name + " changes its parameters");
    }
  }
  for (std::size_t j = np; j < sp.args.size(); ++j) {
    if (mentions_const(sp.args[j].term, decl.name)) {
      positivity(decl.name + " occurs inside an index of its own recursive occurrence");
    }
    out.index_exprs.push_back(sp.args[j].term);
  }
  out.kind = psi.empty() ? ArgClass::Kind::rec_first_order : ArgClass::Kind::rec_higher_order;
  out.psi = std::move(psi);
  return out;
}

void check_positivity(const DataDecl& decl) {
  auto scan = [&](const std::string& ctor, const Telescope& args, const SourceSpan& span) {
    for (std::size_t k = 0; k < args.size(); ++k) {
      try {
        classify_arg(decl, args[k].type, k);
      } catch (const Error& e) {
        throw Error(ErrorCode::positivity,
                    "constructor " + ctor + ", argument " + std::to_string(k + 1) +
                        (args[k].binder.anonymous() ? "" : " (" + args[k].binder.hint + ")") +
                        ": " + e.message(),
                    span);
      }
    }
  };
  for (const auto& c : decl.points) {
    scan(c.name, c.args, c.span);
    for (const auto& e : c.index_instantiations) {
      if (mentions_const(e, decl.name)) {
        throw Error(ErrorCode::positivity,
                    "constructor " + c.name + ": " + decl.name + " occurs in an index", c.span);
      }
    }
  }
  for (const auto& p : decl.paths) scan(p.name, p.args, p.span);
}

Term motive_type(const DataDecl& decl, bool dependent) {
  if (!dependent) return Term::sort();
  const std::size_t np = decl.num_params();
  const std::size_t m = decl.num_indices();
  Telescope idx = decl.indices;
  for (auto& e : idx) e.binder.vis = Visibility::hidden;
  std::vector<Term> vars;
  for (std::size_t j = 0; j < m; ++j) vars.push_back(Term::var(m - 1 - j));
  Term target = decl.applied_former(np + m - 1, vars);
  return pi_over(idx, Term::pi(Binder{}, target, Term::sort()));
}

PrimedTelescope prime_telescope(const DataDecl& decl, const Telescope& delta,
                                const MotiveSpec& motive) {
  PrimedTelescope out;
  const std::size_t np = decl.num_params();
  std::vector<std::size_t> levels;
  for (std::size_t j = 0; j < np; ++j) levels.push_back(j);
  std::size_t d = motive.context_size;
  for (std::size_t k = 0; k < delta.size(); ++k) {
    ArgClass cls = classify_arg(decl, delta[k].type, k);
    out.entries.push_back({delta[k].binder, rebase(delta[k].type, levels, d)});
    out.arg_pos.push_back(out.entries.size() - 1);
    const std::size_t y_level = d++;
    if (!cls.recursive()) {
      out.ih_pos.push_back(std::nullopt);
    } else {
      std::vector<std::size_t> inner = levels;
      Telescope psi;
      for (std::size_t m = 0; m < cls.psi.size(); ++m) {
        psi.push_back({cls.psi[m].binder, rebase(cls.psi[m].type, inner, d + m)});
        inner.push_back(d + m);
      }
      const std::size_t db = d + psi.size();
      Term body = Term::var(db - 1 - motive.motive_level);
      if (motive.dependent) {
        for (const Term& e : cls.index_exprs) {
          body = Term::app(body, rebase(e, inner, db), Visibility::hidden);
        }
        Term y = Term::var(db - 1 - y_level);
        if (!psi.empty()) y = telescope_apply(y, psi, psi.size() - 1);
        body = Term::app(body, y);
      }
      out.entries.push_back({Binder{}, pi_over(psi, body)});
      out.ih_pos.push_back(out.entries.size() - 1);
      ++d;
    }
    out.classes.push_back(std::move(cls));
    levels.push_back(y_level);
  }
  return out;
}

namespace {

Endpoint endpoint(const DataDecl& decl, const PathSig& p, const Term& side, const char* which) {
  const std::size_t np = decl.num_params();
  Spine sp = spine_of(side);
  auto fail = [&](const std::string& why) -> Endpoint {
    throw Error(ErrorCode::endpoint,
                "path " + p.name + ": " + which + " endpoint " + why, p.span);
  };
  if (!sp.head.is(TermKind::constant)) fail("is not headed by a constructor");
  const ConstructorSig* c = decl.find_point(sp.head.name());
  if (!c) fail("is headed by " + sp.head.name() + ", which is not a point of " + decl.name);
  if (sp.args.size() != np + c->args.size()) {
    fail("must apply " + c->name + " to all of its arguments");
  }
  for (std::size_t j = 0; j < np; ++j) {
    if (!(sp.args[j].term == Term::var(p.args.size() + np - 1 - j))) {
      fail("must pass the parameters of " + decl.name + " unchanged");
    }
  }
  Endpoint e;
  e.head = c;
  e.args.assign(sp.args.begin() + static_cast<long>(np), sp.args.end());
  std::vector<Term> env;
  for (auto it = e.args.rbegin(); it != e.args.rend(); ++it) env.push_back(it->term);
  for (const Term& ix : c->index_instantiations) {
    Term lifted = shift(ix, static_cast<long>(p.args.size()), c->args.size());
    e.indices.push_back(instantiate(lifted, env));
  }
  return e;
}

}  // namespace

PathEndpoints path_endpoints(const DataDecl& decl, const PathSig& p) {
  return {endpoint(decl, p, p.lhs, "left"), endpoint(decl, p, p.rhs, "right")};
}

}  // namespace hitgen
