#pragma once

#include <optional>
#include <vector>

#include "hitgen/schema/data_decl.hpp"

namespace hitgen {

/// How a constructor argument refers to the type being declared.
struct ArgClass {
  enum class Kind { non_rec, rec_first_order, rec_higher_order };
  Kind kind = Kind::non_rec;
  /// Ψ of a higher-order argument Ψ → D …, in the argument's context.
  Telescope psi;
  /// Index arguments of the recursive occurrence, in the argument's context
  /// extended by Ψ.
  std::vector<Term> index_exprs;

  bool recursive() const { return kind != Kind::non_rec; }
};

/// `arg_type` is the type of entry `position` of a constructor telescope; it
/// lives in the parameters followed by the `position` earlier entries.
ArgClass classify_arg(const DataDecl& decl, const Term& arg_type, std::size_t position);

/// Every point and path argument must be non-recursive, D-headed, or Ψ → D
/// with D absent from Ψ, and recursive occurrences must repeat the
/// parameters unchanged.
void check_positivity(const DataDecl& decl);

/// Where the motive sits in the context the primed telescope is built in.
/// The parameters always occupy levels 0 … n-1 of that context.
struct MotiveSpec {
  bool dependent = false;
  std::size_t motive_level = 0;
  std::size_t context_size = 0;
};

/// Δ′: Δ with an induction-hypothesis entry after every recursive entry.
struct PrimedTelescope {
  Telescope entries;  // in the MotiveSpec context
  std::vector<std::size_t> arg_pos;                // entry index of each Δ entry
  std::vector<std::optional<std::size_t>> ih_pos;  // entry index of its hypothesis
  std::vector<ArgClass> classes;
};

PrimedTelescope prime_telescope(const DataDecl& decl, const Telescope& delta,
                                const MotiveSpec& motive);

/// The motive's type: Set, or Π{indices}. D params indices → Set. Lives in
/// the context of the parameters.
Term motive_type(const DataDecl& decl, bool dependent);

/// An endpoint of a path constructor split into its point constructor and
/// the arguments after the parameters.
struct Endpoint {
  const ConstructorSig* head = nullptr;
  std::vector<Arg> args;
  /// The constructor's index instantiations at these arguments.
  std::vector<Term> indices;
};

struct PathEndpoints {
  Endpoint lhs;
  Endpoint rhs;
};

/// Terms live in the parameters followed by the path's own arguments.
PathEndpoints path_endpoints(const DataDecl& decl, const PathSig& p);

}  // namespace hitgen
