#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "hitgen/core/term.hpp"
#include "hitgen/kernel/kernel.hpp"
#include "hitgen/schema/data_decl.hpp"

namespace hitgen {

struct DataItem {
  DataDecl decl;
};

/// Names introduced by one `postulate` block, in order.
struct PostulateItem {
  struct Decl {
    std::string name;
    Term type;
    SourceSpan span;
  };
  std::vector<Decl> decls;
  SourceSpan span;
};

/// `name : type` followed by its defining clauses.
struct DefinitionItem {
  std::string name;
  Term type;
  std::vector<RawClause> clauses;
  SourceSpan span;
  int source_lines = 0;
};

/// `{-# REWRITE n₁ n₂ … #-}`
struct RewriteItem {
  std::vector<std::string> names;
  SourceSpan span;
};

/// `eval term`
struct EvalItem {
  Term term;
  SourceSpan span;
};

using Item = std::variant<DataItem, PostulateItem, DefinitionItem, RewriteItem, EvalItem>;

struct SurfaceFile {
  std::string path;
  std::vector<Item> items;
};

/// Global names visible to the parser, with the role their constants get.
using Scope = std::map<std::string, ConstRole>;

/// Scope holding every entry of `sig`.
Scope scope_of(const Signature& sig);

/// Parses a whole file. Names must be declared before use; `scope` seeds the
/// global names (normally the prelude). Eliminator names rec<D>/ind<D> enter
/// scope after each data declaration.
SurfaceFile parse_file(const std::string& text, const std::string& path = {},
                       const Scope& scope = {});

/// Parses a single term. `context` names the free variables, outermost first.
Term parse_term(const std::string& text, const std::vector<std::string>& context = {},
                const Scope& scope = {});
Term parse_term(const std::string& text, const Telescope& context, const Scope& scope = {});

}  // namespace hitgen
