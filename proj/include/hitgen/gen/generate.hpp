#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hitgen/kernel/kernel.hpp"
#include "hitgen/schema/data_decl.hpp"

namespace hitgen {

enum class ElimKind { rec, ind };

struct PathPostulate {
  std::string name;
  Term type;
};

/// Everything generated for one eliminator of one declaration.
struct ElimBundle {
  std::string elim_name;
  ElimKind kind = ElimKind::rec;
  /// Point equations are rewrite rules on a postulated eliminator (HIT
  /// encoding) rather than clauses of a defined one.
  bool rewrite_points = false;
  Term elim_type;
  std::vector<std::string> method_names;
  std::vector<std::string> point_rule_names;
  /// One equation per point constructor, as a clause of elim_name.
  std::vector<Clause> point_clauses;
  std::vector<PathPostulate> path_postulates;

  bool dependent() const { return kind == ElimKind::ind; }
};

/// Same eliminator type, point equations and path postulates up to α.
bool same_generated(const ElimBundle& a, const ElimBundle& b);

struct GenResult {
  Signature sig;
  ElimBundle bundle;
};

/// Adds the type former, points and paths. Plain types become a native
/// datatype with real constructors; HITs become postulates.
Signature install_decl(const Signature& sig, const DataDecl& decl);

/// Inductive types: the eliminator is a defined function whose clauses are
/// added by the generate_beta_* step.
GenResult generate_rec(const Signature& sig, const DataDecl& decl, const std::string& elim);
GenResult generate_beta_rec(const Signature& sig, const DataDecl& decl, const std::string& elim);
GenResult generate_ind(const Signature& sig, const DataDecl& decl, const std::string& elim);
GenResult generate_beta_ind(const Signature& sig, const DataDecl& decl, const std::string& elim);

/// HITs: a postulated eliminator with path methods and point rewrite rules.
/// `base_elim` names the points-only eliminator used to cross-check the
/// endpoint images; it is generated in a scratch signature when missing.
GenResult generate_rec_hit(const Signature& sig, const DataDecl& decl, const std::string& elim,
                           const std::string& base_elim);
GenResult generate_beta_rec_hit_path(const Signature& sig, const DataDecl& decl,
                                     const std::string& elim);
GenResult generate_ind_hit(const Signature& sig, const DataDecl& decl, const std::string& elim,
                           const std::string& base_elim);
GenResult generate_beta_ind_hit_path(const Signature& sig, const DataDecl& decl,
                                     const std::string& elim);

/// install_decl followed by both eliminators, choosing the HIT route when the
/// declaration has paths.
struct Generated {
  Signature sig;
  DataDecl decl;  // as installed (elaborated)
  ElimBundle rec;
  ElimBundle ind;
};
Generated generate_all(const Signature& sig, const DataDecl& decl);

/// "c" followed by the constructor name without underscores.
std::string method_name(const std::string& constructor);

}  // namespace hitgen
