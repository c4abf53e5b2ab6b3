#pragma once
// Whole-file pipeline: parse, install, generate, check, evaluate.
#include <optional>
#include <string>
#include <vector>

#include "hitgen/emit/printer.hpp"
#include "hitgen/gen/generate.hpp"
#include "hitgen/parser/parser.hpp"

namespace hitgen {

struct EvalResult {
  SourceSpan span;
  Term term;   // elaborated
  Term type;
  Term value;  // normal form
};

struct FileResult {
  std::string path;
  SurfaceFile file;
  Signature sig;  // final signature
  std::vector<Generated> generated;
  std::vector<EvalResult> evals;
};

/// Runs every item of the file in order on top of `base`. Throws Error on the
/// first failure.
FileResult process_text(const std::string& text, const std::string& path,
                        const Signature& base);
FileResult process_text(const std::string& text, const std::string& path = {});

/// Reads the file; an unreadable file raises an io Error.
std::string read_file(const std::string& path);
FileResult process_file(const std::string& path, std::size_t fuel = 0);

/// Normalizes `expr` in the file's final signature.
EvalResult evaluate(const Signature& sig, const std::string& expr);

/// Agda module name for a source path: the capitalized file stem with
/// characters Agda rejects replaced.
std::string module_name_for(const std::string& path);

struct DeclStats {
  std::string file;
  std::string name;
  int input_lines = 0;
  int emitted_lines = 0;
  double ratio() const { return input_lines ? double(emitted_lines) / input_lines : 0.0; }
};

/// The whole file as one Agda module: generated declarations, user
/// postulates, definitions and rewrite pragmas in source order.
std::string emit_file(const FileResult& r, const PrintConfig& cfg = {});

/// Per-declaration input vs. emitted line counts, in file order.
std::vector<DeclStats> report_stats(const std::vector<FileResult>& files);

}  // namespace hitgen
