#pragma once

#include <functional>

#include "hitgen/gen/generate.hpp"
#include "hitgen/schema/analysis.hpp"

namespace hitgen {

/// Pure construction of eliminator types, point equations and path
/// postulates for one declaration. Nothing here touches the kernel; the
/// terms still carry unfilled Id types.
///
/// Method types are built in the canonical context [P, C, f₁…f_r, k₁…k_q]
/// and moved into each consumer's context with rebase().
class Builder {
 public:
  Builder(const DataDecl& decl, ElimKind kind, std::string elim, bool with_paths);

  Term elim_type() const;
  Clause point_clause(std::size_t i) const;
  /// Π tel. lhs ≡ rhs for the point rule of constructor i.
  Term point_rule_type(std::size_t i) const;
  Term path_postulate_type(std::size_t j) const;

  /// For path j: pairs (image of an endpoint built with base-eliminator
  /// calls, base eliminator applied to that endpoint), in the context
  /// [P, C, f₁…f_r, Δ_p] described by `ctx`.
  struct BaseCheck {
    Telescope ctx;
    std::vector<std::pair<Term, Term>> pairs;
  };
  BaseCheck base_check(std::size_t j, const std::string& base_elim) const;

  const std::vector<std::string>& method_names() const { return method_names_; }
  std::size_t num_paths() const { return with_paths_ ? decl_.paths.size() : 0; }

 private:
  using VarHandler = std::function<Term(std::size_t arg, const std::vector<Arg>& applied)>;

  // Canonical levels.
  std::size_t np() const { return decl_.num_params(); }
  std::size_t r() const { return decl_.points.size(); }
  std::size_t motive_level() const { return np(); }
  std::size_t f_level(std::size_t i) const { return np() + 1 + i; }
  std::size_t k_level(std::size_t j) const { return np() + 1 + r() + j; }
  std::size_t methods_end() const { return np() + 1 + r() + num_paths(); }

  Term point_method_type(std::size_t i) const;  // in [P, C]
  Term path_method_type(std::size_t j) const;   // in [P, C, f̄]
  /// Canonical context [P, C, f̄, k̄] as a telescope.
  Telescope method_context() const;

  /// elim P̄ {ix} target C f̄ k̄ at `depth`; `method_ctx` maps canonical
  /// levels to the current ones.
  Term elim_call(const std::vector<std::size_t>& method_ctx, std::size_t depth,
                 const std::vector<Term>& ix, const Term& target) const;

  /// RHS(m, Δ): method m applied to the telescope variables, each recursive
  /// one followed by the recursive eliminator call.
  Term method_rhs(const Term& method, const Telescope& delta, const std::vector<std::size_t>& src,
                  const std::vector<std::size_t>& method_ctx, std::size_t depth) const;

  /// Image of an endpoint term (living in `src`) at `depth`.
  Term image(const Term& t, const std::vector<std::size_t>& src, std::size_t depth,
             const std::vector<std::size_t>& f_levels, const VarHandler& on_rec) const;

  Term var_at(std::size_t level, std::size_t depth) const { return Term::var(depth - 1 - level); }

  DataDecl decl_;
  ElimKind kind_;
  std::string elim_;
  bool with_paths_;
  std::vector<std::string> method_names_;
};

}  // namespace hitgen
