#pragma once
// Agda text for generated declarations, in the rewrite-rule encoding.
#include <string>
#include <vector>

#include "hitgen/emit/printer.hpp"
#include "hitgen/gen/generate.hpp"

namespace hitgen {

/// Lines (unindented) declaring the type, its constructors and the given
/// eliminator bundles. HITs become postulates with REWRITE pragmas; plain
/// types become `data` declarations with clause definitions.
std::vector<std::string> emit_decl_lines(const std::vector<ElimBundle>& bundles,
                                         const DataDecl& decl, const PrintConfig& cfg = {});

/// `name : type` followed by its clauses.
std::vector<std::string> emit_definition_lines(const std::string& name, const Term& type,
                                               const std::vector<Clause>& clauses,
                                               const PrintConfig& cfg = {});

/// A postulate block.
std::vector<std::string> emit_postulate_lines(
    const std::vector<std::pair<std::string, Term>>& decls, const PrintConfig& cfg = {});

/// Header, the `_↦_` relation, and `module <name> where` around the given
/// blocks. Blocks are separated by a blank line and indented by two.
std::string emit_agda_text(const std::string& module_name,
                           const std::vector<std::vector<std::string>>& blocks,
                           const PrintConfig& cfg = {});

/// A complete module for one declaration. The module name defaults to the
/// type's name.
std::string emit_agda_module(const std::vector<ElimBundle>& bundles, const DataDecl& decl,
                             const PrintConfig& cfg = {}, const std::string& module_name = {});

/// Contents of the Prelude.agda file that emitted modules import.
const std::string& agda_prelude();

}  // namespace hitgen
