#include "hitgen/schema/data_decl.hpp"

namespace hitgen {

namespace {

Telescope hidden_copy(const Telescope& tele) {
  Telescope out = tele;
  for (auto& e : out) e.binder.vis = Visibility::hidden;
  return out;
}

}  // namespace

Term DataDecl::applied_former(std::size_t param_base, std::vector<Term> index_terms) const {
  Term t = Term::constant(name, is_hit() ? ConstRole::postulate : ConstRole::datatype);
  t = telescope_apply(t, params, param_base);
  for (auto& i : index_terms) t = Term::app(t, std::move(i), Visibility::visible);
  return t;
}

Term DataDecl::former_type() const {
  Telescope idx = indices;
  for (auto& e : idx) e.binder.vis = Visibility::visible;
  return pi_over(params, pi_over(idx, Term::sort()));
}

Term DataDecl::constructor_type(const ConstructorSig& c) const {
  Term codomain = applied_former(c.args.size() + params.size() - 1, c.index_instantiations);
  return pi_over(hidden_copy(params), pi_over(c.args, codomain));
}

Term DataDecl::path_type(const PathSig& p) const {
  Term type;
  if (p.at_indices.size() == indices.size()) {
    type = applied_former(p.args.size() + params.size() - 1, p.at_indices);
  }
  return pi_over(hidden_copy(params), pi_over(p.args, Term::id(type, p.lhs, p.rhs)));
}

DataDecl DataDecl::points_only() const {
  DataDecl d = *this;
  d.paths.clear();
  return d;
}

const ConstructorSig* DataDecl::find_point(const std::string& n) const {
  for (const auto& c : points) {
    if (c.name == n) return &c;
  }
  return nullptr;
}

std::string default_rec_name(const std::string& type_name) { return "rec" + type_name; }
std::string default_ind_name(const std::string& type_name) { return "ind" + type_name; }

}  // namespace hitgen
