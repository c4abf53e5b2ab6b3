#include <gtest/gtest.h>

#include "hitgen/emit/printer.hpp"
#include "hitgen/parser/lexer.hpp"
#include "hitgen/parser/parser.hpp"
#include "hitgen/schema/analysis.hpp"

using namespace hitgen;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_file(text, "t.hit", scope_of(load_prelude()));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

const DataDecl& first_decl(const SurfaceFile& f) { return std::get<DataItem>(f.items.at(0)).decl; }

}  // namespace

TEST(Lexer, LayoutAndComments) {
  auto toks = lex("data N : Set where -- c\n  z : N\n  {- b -} s : N → N\n", "t");
  std::vector<Tok> kinds;
  for (const auto& t : toks) kinds.push_back(t.kind);
  EXPECT_EQ(std::count(kinds.begin(), kinds.end(), Tok::block_open), 1);
  EXPECT_EQ(std::count(kinds.begin(), kinds.end(), Tok::block_close), 1);
  EXPECT_EQ(toks.back().kind, Tok::eof);
  EXPECT_EQ(toks[1].span.line, 1);
  EXPECT_EQ(toks[1].span.col_start, 6);
}

TEST(Parser, CircleDeclaration) {
  SurfaceFile f = parse_file("data Circle : Set where\n  base : Circle\n  loop : base ≡ base\n");
  const DataDecl& d = first_decl(f);
  EXPECT_EQ(d.name, "Circle");
  ASSERT_EQ(d.points.size(), 1u);
  ASSERT_EQ(d.paths.size(), 1u);
  EXPECT_EQ(print_term(d.paths[0].lhs), "base");
  EXPECT_EQ(d.source_lines, 3);
}

TEST(Parser, AsciiSpellings) {
  Term b = parse_term("(A : Set) → (x : A) → x ≡ x");
  Term c = parse_term("(A : Set) -> (x : A) -> x == x");
  EXPECT_EQ(b, c);
}

TEST(Parser, Numerals) {
  Scope s{{"zero", ConstRole::constructor}, {"suc", ConstRole::constructor}};
  EXPECT_EQ(print_term(parse_term("2", std::vector<std::string>{}, s)), "suc (suc zero)");
  EXPECT_THROW(parse_term("2"), Error);
}

TEST(Parser, Diagnostics) {
  EXPECT_EQ(code_of("data D : Set where\n  c : D\n  c : D\n"), ErrorCode::duplicate_name);
  EXPECT_EQ(code_of("data D : Set where\n  c : E\n"), ErrorCode::scope);
  EXPECT_EQ(code_of("data D : Set where\n  c : Set\n"), ErrorCode::classify);
  EXPECT_EQ(code_of("data D : Set where\n  c : D\n  p : c ≡ ap\n"), ErrorCode::classify);
  EXPECT_EQ(code_of("data D : Set\n"), ErrorCode::syntax);
  EXPECT_EQ(code_of("f : Set → Set\nf x x = x\n"), ErrorCode::pattern_restriction);
  EXPECT_EQ(code_of("data D (A : Set) : Set where\n  c : D Set\n"), ErrorCode::classify);
}

TEST(Parser, IndexedFamilyHints) {
  SurfaceFile f = parse_file(
      "data N : Set where\n  z : N\n  s : N → N\n\n"
      "data V (A : Set) : N → Set where\n  nil : V A z\n  cons : {n : N} → A → V A n → V A (s n)\n");
  const DataDecl& v = std::get<DataItem>(f.items.at(1)).decl;
  ASSERT_EQ(v.indices.size(), 1u);
  EXPECT_EQ(v.indices[0].binder.hint, "n");
  EXPECT_EQ(print_term(v.points[1].index_instantiations.at(0), std::vector<std::string>{"A", "n", "a", "r"}),
            "s n");
}

TEST(Parser, EliminatorNamesEnterScope) {
  SurfaceFile f = parse_file("data B : Set where\n  t : B\n\nnot : B → B\nnot b = recB b B t\n");
  EXPECT_EQ(f.items.size(), 2u);
}

TEST(Schema, PositivityMessage) {
  SurfaceFile f = parse_file(
      "data N : Set where\n  z : N\n\ndata Bad : Set where\n  bad : (Bad → N) → Bad\n");
  try {
    check_positivity(std::get<DataItem>(f.items.at(1)).decl);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::positivity);
    EXPECT_NE(e.message().find("constructor bad, argument 1"), std::string::npos);
  }
}

TEST(Schema, ClassifiesArguments) {
  SurfaceFile f = parse_file(
      "data N : Set where\n  z : N\n\ndata R : Set where\n  l : N → R\n  n : (N → R) → R\n  m : R → R\n");
  const DataDecl& d = std::get<DataItem>(f.items.at(1)).decl;
  EXPECT_EQ(classify_arg(d, d.points[0].args[0].type, 0).kind, ArgClass::Kind::non_rec);
  ArgClass ho = classify_arg(d, d.points[1].args[0].type, 0);
  EXPECT_EQ(ho.kind, ArgClass::Kind::rec_higher_order);
  EXPECT_EQ(ho.psi.size(), 1u);
  EXPECT_EQ(classify_arg(d, d.points[2].args[0].type, 0).kind, ArgClass::Kind::rec_first_order);
}

TEST(Schema, MotiveTypes) {
  SurfaceFile f = parse_file(
      "data N : Set where\n  z : N\n\ndata V (A : Set) : N → Set where\n  nil : V A z\n");
  const DataDecl& v = std::get<DataItem>(f.items.at(1)).decl;
  EXPECT_EQ(print_term(motive_type(v, false), std::vector<std::string>{"A"}), "Set");
  EXPECT_EQ(print_term(motive_type(v, true), std::vector<std::string>{"A"}), "{n : N} → V A n → Set");
}

TEST(Schema, PathEndpoints) {
  SurfaceFile f = parse_file("data I : Set where\n  a : I\n  b : I\n  s : a ≡ b\n");
  const DataDecl& d = first_decl(f);
  PathEndpoints e = path_endpoints(d, d.paths[0]);
  EXPECT_EQ(e.lhs.head->name, "a");
  EXPECT_EQ(e.rhs.head->name, "b");
}
