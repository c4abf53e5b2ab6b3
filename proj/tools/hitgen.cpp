// Command-line driver: hitgen <check|gen|emit|eval|stats> [options] FILES...
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hitgen/driver/driver.hpp"
#include "hitgen/emit/agda.hpp"
#include "json.hpp"

using namespace hitgen;

namespace {

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string out_dir;
  std::size_t fuel = 0;
  bool json = false;
  bool show_hidden = false;
  std::size_t width = 72;
  std::string expr;
};

void report(const RunConfig& cfg, const Error& e, const std::string& file) {
  const SourceSpan& sp = e.span();
  std::string f = sp.file.empty() ? file : sp.file;
  if (cfg.json) {
    nlohmann::json j = {{"file", f},
                        {"line", sp.line},
                        {"col", sp.col_start},
                        {"code", std::string(error_code_name(e.code()))},
                        {"message", e.message()}};
    std::cout << j.dump() << "\n";
  } else {
    std::cerr << f << ":" << sp.line << ":" << sp.col_start << ": " << error_code_name(e.code())
              << ": " << e.message() << "\n";
  }
}

void print_lines(const std::vector<std::string>& lines) {
  for (const auto& l : lines) std::cout << l << "\n";
}

int run(const RunConfig& cfg) {
  PrintConfig pc;
  pc.width = cfg.width;
  pc.show_hidden = cfg.show_hidden;
  int status = 0;
  std::vector<FileResult> done;
  for (const auto& path : cfg.inputs) {
    try {
      FileResult r = process_file(path, cfg.fuel);
      if (cfg.command == "gen") {
        for (const auto& g : r.generated) {
          print_lines(emit_decl_lines({g.rec, g.ind}, g.decl, pc));
          std::cout << "\n";
        }
      } else if (cfg.command == "eval") {
        EvalResult v = evaluate(r.sig, cfg.expr);
        std::cout << print_term(v.value, pc) << "\n";
      } else if (cfg.command == "emit") {
        std::filesystem::create_directories(cfg.out_dir);
        auto write = [](const std::filesystem::path& p, const std::string& text) {
          std::ofstream out(p, std::ios::binary);
          out << text;
          if (!out) throw Error(ErrorCode::io, "cannot write " + p.string());
        };
        write(std::filesystem::path(cfg.out_dir) / (module_name_for(path) + ".agda"),
              emit_file(r, pc));
        write(std::filesystem::path(cfg.out_dir) / "Prelude.agda", agda_prelude());
      }
      done.push_back(std::move(r));
    } catch (const Error& e) {
      report(cfg, e, path);
      if (e.code() == ErrorCode::io) return 2;
      status = 1;
    } catch (const std::filesystem::filesystem_error& e) {
      report(cfg, Error(ErrorCode::io, e.what()), path);
      return 2;
    }
  }
  if (cfg.command == "stats") {
    auto rows = report_stats(done);
    int in = 0, out = 0;
    std::printf("%-24s %-12s %6s %8s %7s\n", "file", "decl", "input", "emitted", "ratio");
    for (const auto& s : rows) {
      std::printf("%-24s %-12s %6d %8d %7.2f\n",
                  std::filesystem::path(s.file).filename().string().c_str(), s.name.c_str(),
                  s.input_lines, s.emitted_lines, s.ratio());
      in += s.input_lines;
      out += s.emitted_lines;
    }
    if (!rows.empty()) {
      std::printf("%-24s %-12s %6d %8d %7.2f\n", "total", "", in, out, in ? double(out) / in : 0.0);
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hitgen: eliminators and computation rules for inductive and higher inductive types"};
  app.set_version_flag("--version", HITGEN_VERSION);
  RunConfig cfg;
  if (const char* f = std::getenv("HITGEN_FUEL")) cfg.fuel = std::strtoull(f, nullptr, 10);
  app.add_option("command", cfg.command, "check | gen | emit | eval | stats")
      ->required()
      ->check(CLI::IsMember({"check", "gen", "emit", "eval", "stats"}));
  app.add_option("files", cfg.inputs, "input .hit files");
  app.add_option("--out", cfg.out_dir, "output directory for emit");
  app.add_option("--fuel", cfg.fuel, "reduction step budget (default HITGEN_FUEL or 100000)");
  app.add_flag("--json", cfg.json, "diagnostics as JSON lines on stdout");
  app.add_flag("--show-hidden", cfg.show_hidden, "print hidden arguments");
  app.add_option("--width", cfg.width, "line width");
  app.add_option("-e,--expr", cfg.expr, "expression for eval");
  try {
    app.parse(argc, argv);
    if (cfg.command == "eval" && cfg.expr.empty()) throw CLI::ValidationError("eval needs -e EXPR");
    if (cfg.command == "emit" && cfg.out_dir.empty()) throw CLI::ValidationError("emit needs --out DIR");
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return run(cfg);
}
