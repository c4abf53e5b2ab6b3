#include "hitgen/driver/driver.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hitgen/emit/agda.hpp"

namespace hitgen {

namespace {

Signature run_definition(const Signature& sig, const DefinitionItem& def) {
  Signature out = declare_def(sig, def.name, def.type, def.span);
  std::vector<Clause> clauses;
  for (const RawClause& rc : def.clauses) clauses.push_back(elaborate_clause(out, def.name, rc));
  return define_fun(out, def.name, std::move(clauses));
}

EvalResult run_eval(const Signature& sig, const Term& t, const SourceSpan& span) {
  EvalResult r;
  r.span = span;
  r.term = elaborate(sig, {}, t);
  r.type = normalize(sig, infer(sig, {}, r.term));
  r.value = normalize(sig, r.term);
  return r;
}

SourceSpan item_span(const Item& it) {
  return std::visit(
      [](const auto& x) -> SourceSpan {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, DataItem>) {
          return x.decl.span;
        } else {
          return x.span;
        }
      },
      it);
}

int nonblank_lines(const std::string& text) {
  int n = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t") != std::string::npos) ++n;
  }
  return n;
}

}  // namespace

FileResult process_text(const std::string& text, const std::string& path,
                        const Signature& base) {
  FileResult r;
  r.path = path;
  r.file = parse_file(text, path, scope_of(base));
  Signature sig = base;
  for (const Item& it : r.file.items) {
    try {
      if (const auto* d = std::get_if<DataItem>(&it)) {
        Generated g = generate_all(sig, d->decl);
        sig = g.sig;
        r.generated.push_back(std::move(g));
      } else if (const auto* p = std::get_if<PostulateItem>(&it)) {
        for (const auto& decl : p->decls) sig = declare_postulate(sig, decl.name, decl.type, decl.span);
      } else if (const auto* def = std::get_if<DefinitionItem>(&it)) {
        sig = run_definition(sig, *def);
      } else if (const auto* rw = std::get_if<RewriteItem>(&it)) {
        for (const auto& n : rw->names) sig = add_rewrite(sig, n);
      } else if (const auto* ev = std::get_if<EvalItem>(&it)) {
        r.evals.push_back(run_eval(sig, ev->term, ev->span));
      }
    } catch (const Error& e) {
      SourceSpan sp = item_span(it);
      if (sp.file.empty()) sp.file = path;
      throw e.with_span(sp);
    }
  }
  r.sig = sig;
  return r;
}

FileResult process_text(const std::string& text, const std::string& path) {
  return process_text(text, path, load_prelude());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot read " + path, SourceSpan{path, 0, 0, 0});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FileResult process_file(const std::string& path, std::size_t fuel) {
  Signature base = load_prelude();
  if (fuel) base = base.with_fuel(fuel);
  return process_text(read_file(path), path, base);
}

EvalResult evaluate(const Signature& sig, const std::string& expr) {
  Term t = parse_term(expr, std::vector<std::string>{}, scope_of(sig));
  return run_eval(sig, t, {});
}

std::string module_name_for(const std::string& path) {
  std::string stem = std::filesystem::path(path).stem().string();
  std::string out;
  for (char c : stem) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ? c : '_';
  if (out.empty()) return "Main";
  if (std::isdigit(static_cast<unsigned char>(out[0]))) out = "M" + out;
  out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

std::string emit_file(const FileResult& r, const PrintConfig& cfg) {
  std::vector<std::vector<std::string>> blocks;
  std::size_t next = 0;
  for (const Item& it : r.file.items) {
    if (std::get_if<DataItem>(&it)) {
      const Generated& g = r.generated.at(next++);
      std::vector<std::string> lines = emit_decl_lines({g.rec, g.ind}, g.decl, cfg);
      // split back into blank-separated blocks
      std::vector<std::string> cur;
      for (auto& l : lines) {
        if (l.empty()) {
          blocks.push_back(std::move(cur));
          cur.clear();
        } else {
          cur.push_back(std::move(l));
        }
      }
      if (!cur.empty()) blocks.push_back(std::move(cur));
    } else if (const auto* p = std::get_if<PostulateItem>(&it)) {
      std::vector<std::pair<std::string, Term>> ps;
      for (const auto& d : p->decls) ps.push_back({d.name, r.sig.find(d.name)->type});
      blocks.push_back(emit_postulate_lines(ps, cfg));
    } else if (const auto* def = std::get_if<DefinitionItem>(&it)) {
      const Entry* e = r.sig.find(def->name);
      blocks.push_back(emit_definition_lines(def->name, e->type, e->clauses, cfg));
    } else if (const auto* rw = std::get_if<RewriteItem>(&it)) {
      std::string s = "{-# REWRITE";
      for (const auto& n : rw->names) s += " " + n;
      blocks.push_back({s + " #-}"});
    }
  }
  return emit_agda_text(module_name_for(r.path), blocks, cfg);
}

std::vector<DeclStats> report_stats(const std::vector<FileResult>& files) {
  std::vector<DeclStats> out;
  for (const auto& f : files) {
    for (const auto& g : f.generated) {
      DeclStats s;
      s.file = f.path;
      s.name = g.decl.name;
      s.input_lines = g.decl.source_lines;
      s.emitted_lines = nonblank_lines(emit_agda_module({g.rec, g.ind}, g.decl));
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace hitgen
