#pragma once

// Declaration effects, reduction and bidirectional type checking.

#include <string>
#include <vector>

#include "hitgen/core/term.hpp"
#include "hitgen/kernel/signature.hpp"

namespace hitgen {

// --- declarations ----------------------------------------------------------

Signature declare_postulate(const Signature& sig, const std::string& name, const Term& type,
                            const SourceSpan& span = {});
Signature declare_def(const Signature& sig, const std::string& name, const Term& type,
                      const SourceSpan& span = {});
/// Checks every clause against the declared type and installs them. Clauses
/// fire in order during reduction.
Signature define_fun(const Signature& sig, const std::string& name, std::vector<Clause> clauses);

/// Turns the postulate `rule_name`, whose type is Π Δ. lhs ≡ rhs, into the
/// rewrite rule lhs ↦ rhs. The lhs must be a head constant applied to
/// distinct variables and constructor-headed patterns.
Signature add_rewrite(const Signature& sig, const std::string& rule_name);
/// Installs a rewrite rule supplied directly as patterns and right-hand side.
Signature add_rewrite_rule(const Signature& sig, RewriteRule rule);

// --- reduction -------------------------------------------------------------

Term whnf(const Signature& sig, const Term& t);
Term normalize(const Signature& sig, const Term& t);
/// normalize(a) and normalize(b) are alpha-equal.
bool def_eq(const Signature& sig, const Term& a, const Term& b);

// --- typing ----------------------------------------------------------------

Term infer(const Signature& sig, const Telescope& ctx, const Term& t);
void check(const Signature& sig, const Telescope& ctx, const Term& t, const Term& type);

/// Checks t (against `expected` when given, else by inference) and returns it
/// with every omitted Id/Refl type argument filled in.
Term elaborate(const Signature& sig, const Telescope& ctx, const Term& t,
               const Term& expected = {});

/// Checks that every entry of the telescope is a type; returns it elaborated.
Telescope check_telescope(const Signature& sig, const Telescope& ctx, const Telescope& tele);

/// A clause as written in source: constructor patterns omit the datatype
/// parameters and the pattern-variable types are unknown. Variables are
/// numbered by order of appearance; dot terms and the rhs live in the
/// context of all variables.
struct RawClause {
  std::vector<Binder> vars;
  std::vector<PatArg> patterns;
  Term rhs;
  SourceSpan span;
};

/// Computes the pattern-variable telescope of a source clause and inserts the
/// parameter patterns of constructor patterns. The result still has to pass
/// define_fun.
Clause elaborate_clause(const Signature& sig, const std::string& fun, const RawClause& raw);

/// Pattern as a term in the clause telescope.
Term pattern_term(const Pattern& p, const Telescope& tel);

/// True when some argument tuple could match both pattern lists.
bool patterns_overlap(const std::vector<PatArg>& a, const std::vector<PatArg>& b);

// --- prelude ---------------------------------------------------------------

/// Source of the compiled-in prelude (J, transport, ap, apd).
const std::string& prelude_source();
/// Parses and type-checks the prelude.
Signature load_prelude();

}  // namespace hitgen
