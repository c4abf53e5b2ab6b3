#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "hitgen/driver/driver.hpp"
#include "hitgen/emit/agda.hpp"

using namespace hitgen;

namespace {

std::string squeeze(const std::string& s) {
  std::istringstream in(s);
  std::string w, out;
  while (in >> w) out += (out.empty() ? "" : " ") + w;
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string circle_module(bool header) {
  FileResult r = process_file(HITGEN_CORPUS_DIR "/circle.hit");
  const Generated& g = r.generated.at(0);
  PrintConfig cfg;
  cfg.agda_header = header;
  return emit_agda_module({g.rec, g.ind}, g.decl, cfg, module_name_for(r.path));
}

}  // namespace

TEST(Emit, CircleMatchesGolden) {
  std::string golden = slurp(HITGEN_GOLDEN_DIR "/circle.agda");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(squeeze(circle_module(false)), squeeze(golden));
}

TEST(Emit, HeaderAndStability) {
  std::string a = circle_module(true);
  EXPECT_EQ(a.rfind("-- Generated by hitgen ", 0), 0u);
  EXPECT_NE(a.find("{-# OPTIONS --rewriting #-}"), std::string::npos);
  EXPECT_NE(a.find("open import Prelude"), std::string::npos);
  EXPECT_EQ(a, circle_module(true));
}

TEST(Emit, CircleDeclarationOrder) {
  std::string m = circle_module(false);
  std::vector<std::string> order{" S :",     " base :", " loop :",          " recS :",
                                 " βbase :", "REWRITE βbase", " βloop :", " indS :",
                                 " iβbase :", "REWRITE iβbase", " iβloop :"};
  std::size_t pos = 0;
  for (const auto& key : order) {
    std::size_t at = m.find(key, pos);
    ASSERT_NE(at, std::string::npos) << key;
    pos = at + key.size();
  }
}

TEST(Emit, NatUsesDataAndClauses) {
  FileResult r = process_file(HITGEN_CORPUS_DIR "/nat.hit");
  std::string text = emit_file(r);
  EXPECT_NE(text.find("data Nat : Set where"), std::string::npos);
  EXPECT_NE(text.find("  recNat zero C czero csuc = czero\n"), std::string::npos);
  EXPECT_EQ(text.find("REWRITE"), text.find("REWRITE _↦_"));
  EXPECT_NE(text.find("  plus m n = recNat m Nat n (λ k r → suc r)\n"), std::string::npos);
}

TEST(Emit, IntervalTwoRewrites) {
  FileResult r = process_file(HITGEN_CORPUS_DIR "/interval.hit");
  std::string text = emit_file(r);
  for (const char* k : {"{-# REWRITE βzero #-}", "{-# REWRITE βone #-}",
                        "{-# REWRITE iβzero #-}", "{-# REWRITE iβone #-}", "βseg :", "iβseg :"}) {
    EXPECT_NE(text.find(k), std::string::npos) << k;
  }
}

TEST(Emit, ZeroPathHitHasNoPathPostulates) {
  ElimBundle b;
  b.elim_name = "recU";
  b.rewrite_points = true;
  b.elim_type = Term::sort();
  DataDecl d;
  d.name = "U";
  std::vector<std::string> lines = emit_decl_lines({b}, d);
  int postulates = 0;
  for (const auto& l : lines) postulates += l == "postulate";
  EXPECT_EQ(postulates, 1);
}

TEST(Emit, LongDeclarationsWrap) {
  PrintConfig cfg;
  cfg.width = 40;
  auto lines = emit_postulate_lines(
      {{"f", parse_term("(A : Set) → (B : Set) → (C : Set) → A → B → C → Set")}}, cfg);
  ASSERT_GT(lines.size(), 2u);
  for (const auto& l : lines) EXPECT_LE(l.size(), 40u) << l;
  EXPECT_EQ(lines[2].rfind("    ", 0), 0u);
}

TEST(Emit, PreludeDefinesOperations) {
  const std::string& p = agda_prelude();
  for (const char* k : {"module Prelude where", "transport :", "ap :", "apd :"}) {
    EXPECT_NE(p.find(k), std::string::npos) << k;
  }
}
