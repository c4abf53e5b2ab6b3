#include <random>

#include <gtest/gtest.h>

#include "hitgen/core/term.hpp"

using namespace hitgen;

namespace {

Term c(const char* n) { return Term::constant(n, ConstRole::constructor); }
Term v(std::size_t i) { return Term::var(i); }
Term lam(Term body) { return Term::lam(Binder{}, std::move(body)); }

}  // namespace

TEST(Shift, FreeVariable) { EXPECT_EQ(shift(v(0), 1, 0), v(1)); }

TEST(Shift, BoundVariableUntouched) { EXPECT_EQ(shift(lam(v(0)), 5, 0), lam(v(0))); }

TEST(Shift, CutoffMovesUnderBinder) {
  // Var 3 under one binder is free index 2; +2 gives 4, i.e. Var 5 inside.
  EXPECT_EQ(shift(lam(v(3)), 2, 0), lam(v(5)));
}

TEST(Shift, UnderflowIsInternal) {
  try {
    shift(v(0), -1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::internal);
  }
}

TEST(Subst, Examples) {
  EXPECT_EQ(subst(v(0), 0, Term::sort()), Term::sort());
  EXPECT_EQ(subst(Term::app(v(1), v(0)), 0, c("c")), Term::app(v(0), c("c")));
  EXPECT_EQ(subst(lam(v(1)), 0, c("c")), lam(c("c")));
}

TEST(TelescopeApply, Empty) { EXPECT_EQ(telescope_apply(c("c"), {}, 0), c("c")); }

TEST(TelescopeApply, ConsSpine) {
  Telescope tele{{{"n", Visibility::hidden}, Term::constant("Nat", ConstRole::datatype)},
                 {{"x", Visibility::visible}, v(2)},
                 {{"xs", Visibility::visible}, v(3)}};
  Term t = telescope_apply(c("_::_"), tele, 2);
  Term want = apply(c("_::_"), {{v(2), Visibility::hidden}, {v(1)}, {v(0)}});
  EXPECT_EQ(t, want);
  Spine sp = spine_of(t);
  ASSERT_EQ(sp.args.size(), 3u);
  EXPECT_EQ(sp.args[0].vis, Visibility::hidden);
}

TEST(TelescopeApply, Single) {
  Telescope tele{{{"b"}, Term::sort()}};
  EXPECT_EQ(telescope_apply(c("f"), tele, 0), Term::app(c("f"), v(0)));
}

TEST(Equality, HintsIgnored) {
  Term a = Term::lam(Binder{"x"}, v(0));
  Term b = Term::lam(Binder{"y"}, v(0));
  EXPECT_EQ(a, b);
  EXPECT_EQ(rename_binders(Term::pi(Binder{"A"}, Term::sort(), v(0)), "z"),
            Term::pi(Binder{"q"}, Term::sort(), v(0)));
}

TEST(Equality, VisibilityMatters) {
  EXPECT_FALSE(Term::app(c("f"), v(0), Visibility::hidden) == Term::app(c("f"), v(0)));
}

TEST(WellScoped, Detects) {
  EXPECT_TRUE(is_well_scoped(lam(v(0)), 0));
  EXPECT_FALSE(is_well_scoped(lam(v(1)), 0));
  EXPECT_TRUE(is_well_scoped(lam(v(1)), 1));
}

TEST(Instantiate, Simultaneous) {
  // (Var 1) (Var 0) with env [a, b] → b a
  Term t = Term::app(v(1), v(0));
  std::vector<Term> env{c("a"), c("b")};
  EXPECT_EQ(instantiate(t, env), Term::app(c("b"), c("a")));
  // remaining free indices drop by the env size
  EXPECT_EQ(instantiate(v(3), env), v(1));
}
