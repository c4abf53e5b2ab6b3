#include <gtest/gtest.h>

#include "hitgen/emit/printer.hpp"
#include "hitgen/kernel/kernel.hpp"
#include "hitgen/parser/parser.hpp"

using namespace hitgen;

namespace {

// Nat as a native datatype with plus defined by the two usual clauses.
const char* kNat = R"(data Nat : Set where
  zero : Nat
  suc : Nat → Nat

plus : Nat → Nat → Nat
plus zero b = b
plus (suc n) b = suc (plus n b)
)";

Signature load(const std::string& text, Signature sig = load_prelude()) {
  SurfaceFile f = parse_file(text, "t.hit", scope_of(sig));
  for (const Item& it : f.items) {
    if (auto* d = std::get_if<DataItem>(&it)) {
      const DataDecl& decl = d->decl;
      Entry e;
      e.kind = EntryKind::datatype;
      e.type = decl.former_type();
      e.data = decl;
      sig = sig.with_entry(decl.name, e);
      for (const auto& p : decl.points) {
        Entry ce;
        ce.kind = EntryKind::constructor;
        ce.type = elaborate(sig, {}, decl.constructor_type(p), Term::sort());
        ce.canonical = true;
        ce.datatype = decl.name;
        sig = sig.with_entry(p.name, ce);
      }
    } else if (auto* def = std::get_if<DefinitionItem>(&it)) {
      sig = declare_def(sig, def->name, def->type, def->span);
      std::vector<Clause> cs;
      for (const auto& rc : def->clauses) cs.push_back(elaborate_clause(sig, def->name, rc));
      sig = define_fun(sig, def->name, cs);
    } else if (auto* p = std::get_if<PostulateItem>(&it)) {
      for (const auto& d : p->decls) sig = declare_postulate(sig, d.name, d.type, d.span);
    } else if (auto* r = std::get_if<RewriteItem>(&it)) {
      for (const auto& n : r->names) sig = add_rewrite(sig, n);
    }
  }
  return sig;
}

Term term(const Signature& sig, const std::string& s) { return parse_term(s, std::vector<std::string>{}, scope_of(sig)); }

std::string nf(const Signature& sig, const std::string& s) {
  return print_term(normalize(sig, elaborate(sig, {}, term(sig, s))));
}

}  // namespace

TEST(Prelude, LoadsWithExpectedTypes) {
  Signature sig = load_prelude();
  ASSERT_TRUE(sig.contains("J"));
  EXPECT_EQ(print_term(sig.find("ap")->type),
            "{A : Set} → {B : Set} → {x : A} → {y : A} → (f : A → B) → (p : x ≡ y) → f x ≡ f y");
  EXPECT_EQ(print_term(sig.find("transport")->type),
            "{A : Set} → {x : A} → {y : A} → (P : A → Set) → (p : x ≡ y) → P x → P y");
  EXPECT_EQ(print_term(sig.find("apd")->type),
            "{A : Set} → {B : A → Set} → {x : A} → {y : A} → (f : (a : A) → B a) → "
            "(p : x ≡ y) → transport B p (f x) ≡ f y");
}

TEST(Normalize, PlusTwoThree) {
  Signature sig = load(kNat);
  EXPECT_EQ(nf(sig, "plus 2 3"), "suc (suc (suc (suc (suc zero))))");
  EXPECT_TRUE(def_eq(sig, term(sig, "plus 2 3"), term(sig, "5")));
}

TEST(Normalize, BetaAndTransport) {
  Signature sig = load(kNat);
  EXPECT_EQ(nf(sig, "(λ x → x) zero"), "zero");
  EXPECT_EQ(nf(sig, "transport {Nat} {zero} {zero} (λ _ → Nat) (refl zero) zero"), "zero");
  EXPECT_EQ(nf(sig, "ap {Nat} {Nat} {zero} {zero} suc (refl zero)"), "refl");
  PrintConfig all;
  all.show_hidden = true;
  Term apd = elaborate(sig, {}, term(sig, "apd {Nat} {λ _ → Nat} {zero} {zero} suc (refl zero)"));
  EXPECT_EQ(print_term(normalize(sig, apd), all), "refl {Nat} (suc zero)");
}

TEST(Circle, PostulatesAndRewrite) {
  Signature sig = load(R"(postulate
  S : Set
  base : S
  loop : base ≡ base
  recS : S → (C : Set) → (cbase : C) → (cloop : cbase ≡ cbase) → C
  βbase : (C : Set) → (cbase : C) → (cloop : cbase ≡ cbase) → recS base C cbase cloop ≡ cbase
{-# REWRITE βbase #-}
)");
  EXPECT_EQ(print_term(infer(sig, {}, term(sig, "base"))), "S");
  EXPECT_EQ(print_term(elaborate(sig, {}, term(sig, "loop")).is_null() ? Term() : sig.find("loop")->type),
            "base ≡ base");
  Telescope ctx{{{"C"}, Term::sort()}, {{"cb"}, Term::var(0)}};
  ctx.push_back({{"cl"}, elaborate(sig, ctx, parse_term("cb ≡ cb", ctx, scope_of(sig)), Term::sort())});
  Term lhs = parse_term("recS base C cb cl", ctx, scope_of(sig));
  EXPECT_TRUE(def_eq(sig, lhs, Term::var(1)));
  EXPECT_FALSE(def_eq(sig, term(sig, "loop"), Term::refl(Term(), term(sig, "base"))));
}

TEST(Check, Examples) {
  Signature sig = load(kNat);
  Term nat = term(sig, "Nat");
  EXPECT_NO_THROW(check(sig, {}, term(sig, "λ n → n"), Term::pi(Binder{}, nat, nat)));
  sig = load("postulate\n  S : Set\n", sig);
  try {
    check(sig, {}, term(sig, "zero"), term(sig, "S"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::type);
  }
}

TEST(Rewrite, NonLinearRejected) {
  try {
    load("postulate\n  A : Set\n  f : A → A → A\n  r : (x : A) → f x x ≡ x\n{-# REWRITE r #-}\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::pattern_restriction);
  }
}

TEST(Clauses, NonLinearPatternRejected) {
  try {
    load(std::string(kNat) + "\neqn : Nat → Nat → Nat\neqn x x = x\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::pattern_restriction);
  }
}

TEST(Clauses, ZeroClausesAreStuck) {
  Signature sig = load(std::string(kNat) + "\nhole : Nat → Nat\n");
  EXPECT_EQ(nf(sig, "hole 2"), "hole (suc (suc zero))");
}

TEST(Fuel, Exhaustion) {
  Signature sig = load(std::string(kNat) + "\nloop : Nat → Nat\nloop n = loop (suc n)\n");
  try {
    normalize(sig.with_fuel(1000), term(sig, "loop zero"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::fuel_exhausted);
  }
}
