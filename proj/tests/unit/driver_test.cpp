#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "hitgen/driver/driver.hpp"

using namespace hitgen;

namespace {

const std::string kFixtures = HITGEN_CORPUS_DIR "/../tests/fixtures";

struct Outcome {
  int status = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  Outcome r;
  std::string cmd = std::string(HITGEN_BIN) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST(Driver, EvalPlus) {
  FileResult r = process_file(HITGEN_CORPUS_DIR "/nat.hit");
  ASSERT_EQ(r.evals.size(), 1u);
  EXPECT_EQ(print_term(r.evals[0].value), "suc (suc (suc (suc (suc zero))))");
  EXPECT_EQ(print_term(r.evals[0].type), "Nat");
}

TEST(Driver, ModuleNames) {
  EXPECT_EQ(module_name_for("corpus/circle.hit"), "Circle");
  EXPECT_EQ(module_name_for("a/my-file.hit"), "My_file");
}

TEST(Driver, FuelLimit) {
  FileResult r = process_file(HITGEN_CORPUS_DIR "/nat.hit");
  Signature tight = r.sig.with_fuel(5);
  try {
    evaluate(tight, "plus 20 20");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::fuel_exhausted);
  }
}

TEST(Driver, ErrorsCarrySpans) {
  try {
    process_text("data D : Set where\n  c : D\n\nf : D → D\nf x = g x\n", "x.hit");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.span().line, 5);
    EXPECT_EQ(e.span().file, "x.hit");
  }
}

TEST(Driver, StatsPerDeclaration) {
  std::vector<FileResult> files{process_file(HITGEN_CORPUS_DIR "/circle.hit"),
                                process_file(HITGEN_CORPUS_DIR "/nat.hit")};
  auto rows = report_stats(files);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].name, "S");
  EXPECT_EQ(rows[0].input_lines, 3);
  EXPECT_GE(rows[0].ratio(), 5.0);
  EXPECT_GE(rows[1].ratio(), 3.0);
  EXPECT_TRUE(report_stats({}).empty());
}

#ifdef HITGEN_BIN
TEST(Cli, EvalPrintsNormalForm) {
  Outcome r = run("eval " HITGEN_CORPUS_DIR "/nat.hit -e \"plus 2 3\"");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "suc (suc (suc (suc (suc zero))))\n");
}

TEST(Cli, EmptyFileChecksSilently) {
  Outcome r = run("check " + kFixtures + "/empty_file.hit");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "");
}

TEST(Cli, GenPrintsCircleEliminators) {
  Outcome r = run("gen " HITGEN_CORPUS_DIR "/circle.hit --width 200");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("recS : S → (C : Set) → (cbase : C) → (cloop : cbase ≡ cbase) → C\n"),
            std::string::npos);
}

TEST(Cli, JsonDiagnostic) {
  Outcome r = run("check --json " + kFixtures + "/bad_positivity.hit");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("\"code\":\"PositivityError\""), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"line\":6"), std::string::npos) << r.out;
}

TEST(Cli, MissingFileIsIoError) {
  EXPECT_EQ(run("check /nonexistent/x.hit").status, 2);
}

TEST(Cli, UsageRules) {
  EXPECT_EQ(run("eval " HITGEN_CORPUS_DIR "/nat.hit").status, 2);
  EXPECT_EQ(run("emit " HITGEN_CORPUS_DIR "/nat.hit").status, 2);
}

TEST(Cli, EmitWritesModuleAndPrelude) {
  auto dir = std::filesystem::temp_directory_path() / "hitgen_emit_test";
  std::filesystem::remove_all(dir);
  Outcome r = run("emit --out " + dir.string() + " " HITGEN_CORPUS_DIR "/circle.hit");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_TRUE(std::filesystem::exists(dir / "Circle.agda"));
  EXPECT_TRUE(std::filesystem::exists(dir / "Prelude.agda"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, FuelFromEnvironment) {
  Outcome r = run("eval " HITGEN_CORPUS_DIR "/nat.hit -e \"plus 30 30\" --fuel 10");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("FuelExhausted"), std::string::npos) << r.out;
  Outcome e = run("eval " HITGEN_CORPUS_DIR "/nat.hit -e \"plus 30 30\"");
  EXPECT_EQ(e.status, 0);
}
#endif
