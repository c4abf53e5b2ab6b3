#pragma once

#include <string>
#include <vector>

#include "hitgen/core/term.hpp"

namespace hitgen {

/// A point constructor  c : Δ → D a₁ … aₙ e₁ … eₘ.
/// `args` lives in the parameter context; `index_instantiations` live in the
/// parameter context extended by `args`.
struct ConstructorSig {
  std::string name;
  Telescope args;
  std::vector<Term> index_instantiations;
  SourceSpan span;
};

/// A path constructor  p : Δ → lhs ≡ rhs  between point-constructor spines.
/// `lhs`, `rhs` and `at_indices` live in the parameter context extended by
/// `args`. `at_indices` is filled in once the points are installed.
struct PathSig {
  std::string name;
  Telescope args;
  Term lhs;
  Term rhs;
  std::vector<Term> at_indices;
  SourceSpan span;
};

/// A (higher) inductive declaration. Parameters are visible leading
/// arguments of the type former; constructors receive them as hidden
/// leading arguments.
struct DataDecl {
  std::string name;
  Telescope params;
  Telescope indices;
  std::vector<ConstructorSig> points;
  std::vector<PathSig> paths;
  SourceSpan span;
  /// Source lines spanned by the declaration (used for size statistics).
  int source_lines = 0;

  bool is_hit() const { return !paths.empty(); }
  std::size_t num_params() const { return params.size(); }
  std::size_t num_indices() const { return indices.size(); }

  /// Π params. Π indices. Set
  Term former_type() const;
  /// Π {params}. Π Δ. D params e…
  Term constructor_type(const ConstructorSig& c) const;
  /// Π {params}. Π Δ. lhs ≡ rhs  (at D params at_indices when known)
  Term path_type(const PathSig& p) const;

  /// D applied to the parameter variables and the given index terms, in a
  /// context whose parameters start at de Bruijn index `param_base`.
  Term applied_former(std::size_t param_base, std::vector<Term> indices) const;

  /// The same declaration restricted to its point constructors.
  DataDecl points_only() const;

  const ConstructorSig* find_point(const std::string& n) const;
};

/// Default eliminator names: rec<D> and ind<D>.
std::string default_rec_name(const std::string& type_name);
std::string default_ind_name(const std::string& type_name);

}  // namespace hitgen
