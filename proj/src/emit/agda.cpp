#include "hitgen/emit/agda.hpp"

#ifndef HITGEN_VERSION
#define HITGEN_VERSION "0.0.0"
#endif

namespace hitgen {

namespace {

// Strips n leading Π binders, collecting them.
Term drop_binders(const Term& t, std::size_t n, Telescope& out) {
  Term cur = t;
  for (std::size_t i = 0; i < n && cur.is(TermKind::pi); ++i) {
    out.push_back({cur.binder(), cur.domain()});
    cur = cur.codomain();
  }
  return cur;
}

void push_decl(std::vector<std::string>& out, const std::string& line, std::size_t indent,
               const PrintConfig& cfg) {
  for (auto& l : wrap_declaration(line, indent, cfg.width)) out.push_back(std::move(l));
}

std::string param_header(const Telescope& params, std::vector<std::string>& names,
                         const PrintConfig& cfg) {
  std::string out;
  std::vector<std::string> all = telescope_names(params);
  for (std::size_t i = 0; i < params.size(); ++i) {
    out += " (" + all[i] + " : " + print_term(params[i].type, names, cfg) + ")";
    names.push_back(all[i]);
  }
  return out;
}

void emit_bundle(std::vector<std::vector<std::string>>& blocks, const ElimBundle& b,
                 const PrintConfig& cfg) {
  if (!b.rewrite_points) {
    blocks.push_back(emit_definition_lines(b.elim_name, b.elim_type, b.point_clauses, cfg));
    return;
  }
  std::vector<std::string> post{"postulate"};
  push_decl(post, b.elim_name + " : " + print_term(b.elim_type, cfg), 2, cfg);
  for (std::size_t i = 0; i < b.point_clauses.size(); ++i) {
    const Clause& c = b.point_clauses[i];
    RewriteRule r{b.point_rule_names[i], b.elim_name, c.tel, c.patterns, c.rhs};
    push_decl(post, r.name + " : " + print_rewrite_type(r, cfg), 2, cfg);
  }
  blocks.push_back(std::move(post));
  if (!b.point_clauses.empty()) {
    std::vector<std::string> pragmas;
    for (const auto& n : b.point_rule_names) pragmas.push_back("{-# REWRITE " + n + " #-}");
    blocks.push_back(std::move(pragmas));
  }
  if (!b.path_postulates.empty()) {
    std::vector<std::pair<std::string, Term>> ps;
    for (const auto& p : b.path_postulates) ps.push_back({p.name, p.type});
    blocks.push_back(emit_postulate_lines(ps, cfg));
  }
}

std::vector<std::vector<std::string>> decl_blocks(const std::vector<ElimBundle>& bundles,
                                                  const DataDecl& d, const PrintConfig& cfg) {
  std::vector<std::vector<std::string>> blocks;
  if (d.is_hit()) {
    std::vector<std::pair<std::string, Term>> ps{{d.name, d.former_type()}};
    for (const auto& c : d.points) ps.push_back({c.name, d.constructor_type(c)});
    for (const auto& p : d.paths) ps.push_back({p.name, d.path_type(p)});
    blocks.push_back(emit_postulate_lines(ps, cfg));
  } else {
    std::vector<std::string> names;
    std::string head = "data " + d.name + param_header(d.params, names, cfg) + " : " +
                       print_term(pi_over(d.indices, Term::sort()), names, cfg) + " where";
    std::vector<std::string> lines{head};
    for (const auto& c : d.points) {
      Telescope skipped;
      Term t = drop_binders(d.constructor_type(c), d.num_params(), skipped);
      push_decl(lines, c.name + " : " + print_term(t, names, cfg), 2, cfg);
    }
    blocks.push_back(std::move(lines));
  }
  for (const auto& b : bundles) emit_bundle(blocks, b, cfg);
  return blocks;
}

}  // namespace

std::vector<std::string> emit_definition_lines(const std::string& name, const Term& type,
                                               const std::vector<Clause>& clauses,
                                               const PrintConfig& cfg) {
  std::vector<std::string> out;
  push_decl(out, name + " : " + print_term(type, cfg), 0, cfg);
  for (const auto& c : clauses) out.push_back(print_clause(name, c, cfg));
  return out;
}

std::vector<std::string> emit_postulate_lines(
    const std::vector<std::pair<std::string, Term>>& decls, const PrintConfig& cfg) {
  std::vector<std::string> out{"postulate"};
  for (const auto& [n, t] : decls) push_decl(out, n + " : " + print_term(t, cfg), 2, cfg);
  return out;
}

std::vector<std::string> emit_decl_lines(const std::vector<ElimBundle>& bundles,
                                         const DataDecl& decl, const PrintConfig& cfg) {
  std::vector<std::string> out;
  for (const auto& block : decl_blocks(bundles, decl, cfg)) {
    if (!out.empty()) out.emplace_back();
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::string emit_agda_text(const std::string& module_name,
                           const std::vector<std::vector<std::string>>& blocks,
                           const PrintConfig& cfg) {
  std::string out;
  if (cfg.agda_header) {
    out += "-- Generated by hitgen " HITGEN_VERSION ". Do not edit.\n";
    out += "{-# OPTIONS --rewriting #-}\n\n";
    out += "open import Prelude\n\n";
  }
  out += "postulate\n  _↦_ : ∀ {i} {A : Set i} → A → A → Set i\n\n";
  out += "{-# BUILTIN REWRITE _↦_ #-}\n\n";
  out += "module " + module_name + " where\n";
  for (const auto& block : blocks) {
    out += "\n";
    for (const auto& line : block) out += line.empty() ? "\n" : "  " + line + "\n";
  }
  return out;
}

std::string emit_agda_module(const std::vector<ElimBundle>& bundles, const DataDecl& decl,
                             const PrintConfig& cfg, const std::string& module_name) {
  return emit_agda_text(module_name.empty() ? decl.name : module_name,
                        decl_blocks(bundles, decl, cfg), cfg);
}

const std::string& agda_prelude() {
  static const std::string text = R"(-- Generated by hitgen. Operations used by generated modules.
{-# OPTIONS --rewriting #-}

module Prelude where

open import Agda.Builtin.Equality public

transport : {A : Set} {x y : A} → (P : A → Set) → (p : x ≡ y) → P x → P y
transport P refl u = u

ap : {A B : Set} {x y : A} (f : A → B) (p : x ≡ y) → f x ≡ f y
ap f refl = refl

apd : {A : Set} {B : A → Set} {x y : A} → (f : (a : A) → B a) →
      (p : x ≡ y) → transport B p (f x) ≡ f y
apd f refl = refl
)";
  return text;
}

}  // namespace hitgen
