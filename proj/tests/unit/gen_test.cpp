#include <gtest/gtest.h>

#include "hitgen/driver/driver.hpp"
#include "hitgen/emit/printer.hpp"

using namespace hitgen;

namespace {

const char* kNat = R"(data Nat : Set where
  zero : Nat
  suc : Nat → Nat
)";

const char* kCircle = R"(data S : Set where
  base : S
  loop : base ≡ base
)";

std::string rule_text(const ElimBundle& b, std::size_t i) {
  const Clause& c = b.point_clauses.at(i);
  return print_rewrite_type({b.point_rule_names.at(i), b.elim_name, c.tel, c.patterns, c.rhs});
}

const Generated& last(const FileResult& r) { return r.generated.back(); }

}  // namespace

TEST(Gen, CircleRecursorType) {
  FileResult r = process_text(kCircle);
  EXPECT_EQ(print_term(last(r).rec.elim_type),
            "S → (C : Set) → (cbase : C) → (cloop : cbase ≡ cbase) → C");
  EXPECT_EQ(rule_text(last(r).rec, 0),
            "(C : Set) → (cbase : C) → (cloop : cbase ≡ cbase) → recS base C cbase cloop ↦ cbase");
  ASSERT_EQ(last(r).rec.path_postulates.size(), 1u);
  EXPECT_EQ(last(r).rec.path_postulates[0].name, "βloop");
  EXPECT_EQ(print_term(last(r).rec.path_postulates[0].type),
            "(C : Set) → (cbase : C) → (cloop : cbase ≡ cbase) → "
            "ap (λ x → recS x C cbase cloop) loop ≡ cloop");
}

TEST(Gen, CircleInductionType) {
  FileResult r = process_text(kCircle);
  const ElimBundle& b = last(r).ind;
  EXPECT_EQ(print_term(b.elim_type),
            "(x : S) → (C : S → Set) → (cbase : C base) → "
            "(cloop : transport C loop cbase ≡ cbase) → C x");
  EXPECT_EQ(b.point_rule_names, std::vector<std::string>{"iβbase"});
  EXPECT_EQ(print_term(b.path_postulates.at(0).type),
            "(C : S → Set) → (cbase : C base) → (cloop : transport C loop cbase ≡ cbase) → "
            "apd (λ x → indS x C cbase cloop) loop ≡ cloop");
}

TEST(Gen, NatClauses) {
  FileResult r = process_text(kNat);
  const ElimBundle& rec = last(r).rec;
  EXPECT_FALSE(rec.rewrite_points);
  EXPECT_EQ(print_term(rec.elim_type),
            "Nat → (C : Set) → (czero : C) → (csuc : Nat → C → C) → C");
  ASSERT_EQ(rec.point_clauses.size(), 2u);
  EXPECT_EQ(print_clause("recNat", rec.point_clauses[0]), "recNat zero C czero csuc = czero");
  EXPECT_EQ(print_clause("recNat", rec.point_clauses[1]),
            "recNat (suc x) C czero csuc = csuc x (recNat x C czero csuc)");
  EXPECT_EQ(print_term(last(r).ind.elim_type),
            "(x : Nat) → (C : Nat → Set) → (czero : C zero) → "
            "(csuc : (x : Nat) → C x → C (suc x)) → C x");
}

TEST(Gen, VecHiddenIndex) {
  FileResult r = process_file(HITGEN_CORPUS_DIR "/vec.hit");
  const Generated& g = r.generated.at(1);
  Term expected = parse_term(
      "(A : Set) → {n : Nat} → Vec A n → (C : Set) → (base : C) → "
      "(step : {n : Nat} → (x : A) → (xs : Vec A n) → C → C) → C",
      std::vector<std::string>{}, scope_of(r.sig));
  EXPECT_EQ(g.rec.elim_type, elaborate(r.sig, {}, expected));
  EXPECT_EQ(print_clause("recVec", g.rec.point_clauses[0]), "recVec A [] C c[] c:: = c[]");
  PrintConfig shown;
  shown.show_hidden = true;
  EXPECT_EQ(print_clause("recVec", g.rec.point_clauses[1], shown),
            "recVec A {.(suc n)} (_::_ {.A} {n} x xs) C c[] c:: = "
            "c:: {n} x xs (recVec A {n} xs C c[] c::)");
}

TEST(Gen, IntervalTwoPointRules) {
  FileResult r = process_file(HITGEN_CORPUS_DIR "/interval.hit");
  const ElimBundle& rec = last(r).rec;
  EXPECT_EQ(rec.point_rule_names, (std::vector<std::string>{"βzero", "βone"}));
  ASSERT_EQ(rec.path_postulates.size(), 1u);
  EXPECT_EQ(print_term(rec.path_postulates[0].type),
            "(C : Set) → (czero : C) → (cone : C) → (cseg : czero ≡ cone) → "
            "ap (λ x → recI x C czero cone cseg) seg ≡ cseg");
}

TEST(Gen, RoseHigherOrderMethod) {
  FileResult r = process_file(HITGEN_CORPUS_DIR "/tree.hit");
  const Generated& g = last(r);
  EXPECT_EQ(print_term(g.rec.elim_type),
            "(A : Set) → Rose A → (C : Set) → (cleaf : A → C) → "
            "(cnode : (Nat → Rose A) → (Nat → C) → C) → C");
  EXPECT_EQ(print_clause("recRose", g.rec.point_clauses[1]),
            "recRose A (node x) C cleaf cnode = cnode x (λ x' → recRose A (x x') C cleaf cnode)");
}

TEST(Gen, DegenerateHitMatchesPlain) {
  DataDecl parsed = std::get<DataItem>(parse_file(kNat).items.at(0)).decl;
  Signature sig = install_decl(load_prelude(), parsed);
  const DataDecl& d = *sig.find("Nat")->data;
  GenResult plain = generate_beta_rec(generate_rec(sig, d, "recNat").sig, d, "recNat");
  GenResult hit = generate_rec_hit(sig, d, "recNat", "base");
  EXPECT_TRUE(same_generated(plain.bundle, hit.bundle));
  GenResult iplain = generate_beta_ind(generate_ind(sig, d, "indNat").sig, d, "indNat");
  GenResult ihit = generate_ind_hit(sig, d, "indNat", "base");
  EXPECT_TRUE(same_generated(iplain.bundle, ihit.bundle));
}

TEST(Gen, PointRuleFires) {
  std::string src = std::string(kCircle) +
                    "\npostulate\n  C : Set\n  cb : C\n  cl : cb ≡ cb\n";
  FileResult r = process_text(src);
  EXPECT_EQ(print_term(evaluate(r.sig, "recS base C cb cl").value), "cb");
  EXPECT_EQ(print_term(evaluate(r.sig, "recS (recS base S base loop) C cb cl").value), "cb");
}

TEST(Gen, PositivityRejected) {
  try {
    process_file(HITGEN_CORPUS_DIR "/../tests/fixtures/bad_positivity.hit");
    FAIL() << "accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::positivity);
    EXPECT_NE(e.message().find("constructor bad, argument 1"), std::string::npos) << e.message();
  }
}

TEST(Gen, HeterogeneousPathRejected) {
  std::string src = std::string(kNat) +
                    "\ndata T : Nat → Set where\n  a : T zero\n  b : T (suc zero)\n  p : a ≡ b\n";
  EXPECT_THROW(process_text(src), Error);
}

TEST(Gen, SuspensionParameterisedPath) {
  FileResult r = process_file(HITGEN_CORPUS_DIR "/susp.hit");
  const ElimBundle& ind = last(r).ind;
  EXPECT_EQ(print_term(ind.elim_type),
            "(A : Set) → (x : Susp A) → (C : Susp A → Set) → (cnorth : C north) → "
            "(csouth : C south) → (cmerid : (a : A) → transport C (merid a) cnorth ≡ csouth) → C x");
}

TEST(Gen, NameClash) {
  std::string src = std::string(kNat) + "\npostulate\n  βbase : Nat\n\n" + kCircle;
  try {
    process_text(src);
    FAIL() << "accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::duplicate_name);
  }
}
