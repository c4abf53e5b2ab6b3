#pragma once

#include <string>
#include <vector>

#include "hitgen/core/term.hpp"
#include "hitgen/kernel/signature.hpp"

namespace hitgen {

struct PrintConfig {
  std::size_t width = 72;
  bool unicode_arrows = true;
  /// Print hidden arguments in braces and Id/Refl type arguments. Output in
  /// this mode re-parses to an alpha-equivalent term.
  bool show_hidden = false;
  bool agda_header = true;
};

/// Renders t in a context whose variables are named by `ctx` (outermost
/// first). Binder hints are used for bound variables; clashes are resolved
/// with primes.
std::string print_term(const Term& t, const std::vector<std::string>& ctx,
                       const PrintConfig& cfg = {});
std::string print_term(const Term& t, const Telescope& ctx, const PrintConfig& cfg = {});
inline std::string print_term(const Term& t, const PrintConfig& cfg = {}) {
  return print_term(t, std::vector<std::string>{}, cfg);
}

/// Display names for a telescope: hints made unique, anonymous entries named.
std::vector<std::string> telescope_names(const Telescope& tele,
                                         const std::vector<std::string>& outer = {});

/// `f p₁ … pₙ = rhs`; hidden patterns are elided unless cfg.show_hidden.
std::string print_clause(const std::string& fun, const Clause& c, const PrintConfig& cfg = {});

/// `Π Δ. f ps ↦ rhs` as the type of an Agda rewrite postulate.
std::string print_rewrite_type(const RewriteRule& rule, const PrintConfig& cfg = {});

/// Breaks a `name : type` line at top-level arrows so that no line exceeds
/// the configured width. Continuation lines are indented by `indent + 2`.
std::vector<std::string> wrap_declaration(const std::string& line, std::size_t indent,
                                          std::size_t width);

/// Mixfix names such as `_::_` carry an underscore per argument hole.
bool is_infix_name(const std::string& name);
std::string infix_operator(const std::string& name);

}  // namespace hitgen
