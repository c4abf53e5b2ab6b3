#pragma once
// Randomized law checks shared by the unit and acceptance binaries.
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "hitgen/driver/driver.hpp"
#include "hitgen/emit/printer.hpp"

namespace hitgen::props {

struct Outcome {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void record(bool ok, const std::function<std::string()>& why) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = why();
  }
};

// --- raw terms ---------------------------------------------------------------

inline const std::vector<std::string>& const_pool() {
  static const std::vector<std::string> pool{"zero", "suc", "plus", "Nat", "f", "_::_"};
  return pool;
}

inline Scope pool_scope() {
  Scope s;
  for (const auto& n : const_pool()) s[n] = ConstRole::postulate;
  return s;
}

class TermGen {
 public:
  explicit TermGen(std::mt19937& rng) : rng_(rng) {}

  Term term(std::size_t depth, int size) {
    int pick = size <= 0 ? roll(3) : roll(9);
    switch (pick) {
      case 0:
        if (depth > 0) return Term::var(roll(static_cast<int>(depth)));
        [[fallthrough]];
      case 1: return Term::sort();
      case 2: return Term::constant(const_pool()[roll(static_cast<int>(const_pool().size()))],
                                    ConstRole::postulate);
      case 3: return Term::pi(binder(), term(depth, size - 1), term(depth + 1, size - 1));
      case 4: return Term::lam(binder(), term(depth + 1, size - 1));
      case 5:
      case 6: {
        // builtins have their own application syntax; never use one as a function
        Term fun = term(depth, size - 1);
        if (spine_of(fun).head.is(TermKind::refl)) fun = Term::constant("f", ConstRole::postulate);
        return Term::app(fun, term(depth, size - 1), vis());
      }
      case 7:
        return Term::id(roll(2) ? term(depth, size - 2) : Term(), term(depth, size - 2),
                        term(depth, size - 2));
      default:
        if (roll(3) == 0) return Term::refl(Term(), Term());
        return Term::refl(term(depth, size - 2), term(depth, size - 2));
    }
  }

  int roll(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

 private:
  Binder binder() {
    static const char* hints[] = {"x", "y", "A", "_", "zero"};
    return Binder{hints[roll(5)], vis()};
  }
  Visibility vis() { return roll(4) == 0 ? Visibility::hidden : Visibility::visible; }

  std::mt19937& rng_;
};

inline Outcome shift_subst_inverse(unsigned seed, int n) {
  std::mt19937 rng(seed);
  TermGen g(rng);
  Outcome out;
  for (int i = 0; i < n; ++i) {
    std::size_t depth = static_cast<std::size_t>(g.roll(4));
    Term t = g.term(depth, 6);
    std::size_t cutoff = static_cast<std::size_t>(g.roll(static_cast<int>(depth) + 1));
    Term back = subst(shift(t, 1, cutoff), cutoff, g.term(0, 2));
    out.record(back == t, [&] { return debug_string(t); });
  }
  return out;
}

inline Outcome print_parse_roundtrip(unsigned seed, int n) {
  std::mt19937 rng(seed);
  TermGen g(rng);
  Outcome out;
  PrintConfig cfg;
  cfg.show_hidden = true;
  Scope scope = pool_scope();
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> ctx;
    std::size_t depth = static_cast<std::size_t>(g.roll(3));
    for (std::size_t k = 0; k < depth; ++k) ctx.push_back("v" + std::to_string(k));
    Term t = g.term(depth, 6);
    std::string text = print_term(t, ctx, cfg);
    bool ok = false;
    std::string err;
    try {
      ok = parse_term(text, ctx, scope) == t;
    } catch (const Error& e) {
      err = e.message();
    }
    out.record(ok, [&] { return text + (err.empty() ? "" : "  [" + err + "]"); });
  }
  return out;
}

// --- closed Nat programs with a native meaning ---------------------------------

struct NatExpr {
  enum class Kind { zero, suc, plus, rec, beta, var } kind;
  std::vector<std::shared_ptr<NatExpr>> kids;
  int var = 0;  // de Bruijn level for Kind::var

  long value(std::vector<long>& env) const {
    switch (kind) {
      case Kind::zero: return 0;
      case Kind::suc: return kids[0]->value(env) + 1;
      case Kind::plus: return kids[0]->value(env) + kids[1]->value(env);
      case Kind::var: return env.at(static_cast<std::size_t>(var));
      case Kind::beta: {
        env.push_back(kids[1]->value(env));
        long v = kids[0]->value(env);
        env.pop_back();
        return v;
      }
      case Kind::rec: {
        long n = kids[0]->value(env);
        long acc = kids[1]->value(env);
        for (long k = 0; k < n; ++k) {
          env.push_back(k);
          env.push_back(acc);
          acc = kids[2]->value(env);
          env.pop_back();
          env.pop_back();
        }
        return acc;
      }
    }
    return 0;
  }
};

class NatGen {
 public:
  explicit NatGen(std::mt19937& rng) : rng_(rng) {}

  std::shared_ptr<NatExpr> expr(int depth, int size) {
    auto e = std::make_shared<NatExpr>();
    int pick = size <= 0 ? roll(2) : roll(7);
    if (pick == 1 && depth == 0) pick = 0;
    switch (pick) {
      case 0: e->kind = NatExpr::Kind::zero; break;
      case 1:
        e->kind = NatExpr::Kind::var;
        e->var = roll(depth);
        break;
      case 2:
      case 3:
        e->kind = NatExpr::Kind::suc;
        e->kids = {expr(depth, size - 1)};
        break;
      case 4:
        e->kind = NatExpr::Kind::plus;
        e->kids = {expr(depth, size - 2), expr(depth, size - 2)};
        break;
      case 5: {
        e->kind = NatExpr::Kind::beta;
        auto body = expr(depth + 1, size - 2);
        auto arg = expr(depth, size - 2);
        e->kids = {body, arg};
        break;
      }
      default: {
        e->kind = NatExpr::Kind::rec;
        auto n = expr(depth, 1);
        auto z = expr(depth, size - 2);
        auto s = expr(depth + 2, size - 3);
        e->kids = {n, z, s};
        break;
      }
    }
    return e;
  }

  int roll(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

 private:
  std::mt19937& rng_;
};

// Variables are named by level: the binder introduced at depth d is v<d>.
inline std::string nat_text(const NatExpr& e, int depth = 0) {
  auto p = [&](const NatExpr& k, int d) { return "(" + nat_text(k, d) + ")"; };
  switch (e.kind) {
    case NatExpr::Kind::zero: return "zero";
    case NatExpr::Kind::suc: return "suc " + p(*e.kids[0], depth);
    case NatExpr::Kind::plus: return "plus " + p(*e.kids[0], depth) + " " + p(*e.kids[1], depth);
    case NatExpr::Kind::var: return "v" + std::to_string(e.var);
    case NatExpr::Kind::beta:
      return "(λ v" + std::to_string(depth) + " → " + nat_text(*e.kids[0], depth + 1) + ") " +
             p(*e.kids[1], depth);
    case NatExpr::Kind::rec:
      return "recNat " + p(*e.kids[0], depth) + " Nat " + p(*e.kids[1], depth) + " (λ v" +
             std::to_string(depth) + " v" + std::to_string(depth + 1) + " → " +
             nat_text(*e.kids[2], depth + 2) + ")";
  }
  return {};
}

inline long nat_value(const Term& t) {
  long n = 0;
  Term cur = t;
  while (cur.is(TermKind::app)) {
    Spine sp = spine_of(cur);
    if (!sp.head.is(TermKind::constant) || sp.head.name() != "suc" || sp.args.size() != 1) return -1;
    ++n;
    cur = sp.args[0].term;
  }
  return cur.is(TermKind::constant) && cur.name() == "zero" ? n : -1;
}

inline const char* nat_source() {
  return "data Nat : Set where\n  zero : Nat\n  suc : Nat → Nat\n\n"
         "plus : Nat → Nat → Nat\nplus m n = recNat m Nat n (λ k r → suc r)\n";
}

inline Outcome normalization_determinism(unsigned seed, int n) {
  std::mt19937 rng(seed);
  NatGen g(rng);
  Signature sig = process_text(nat_source()).sig;
  Outcome out;
  for (int i = 0; i < n; ++i) {
    auto e = g.expr(0, 7);
    std::string text = nat_text(*e);
    std::vector<long> env;
    long expected = e->value(env);
    bool ok = false;
    std::string got;
    try {
      Term t = elaborate(sig, {}, parse_term(text, std::vector<std::string>{}, scope_of(sig)));
      Term a = normalize(sig, t);
      Term b = normalize(sig, t);
      Term c = normalize(sig, a);
      got = print_term(a);
      ok = a == b && a == c && nat_value(a) == expected;
    } catch (const Error& err) {
      got = err.message();
    }
    out.record(ok, [&] { return text + " ⇒ " + got + " (expected " + std::to_string(expected) + ")"; });
  }
  return out;
}

inline Outcome rewrite_non_interference(unsigned seed, int n) {
  std::mt19937 rng(seed);
  NatGen g(rng);
  Signature plain = process_text(nat_source()).sig;
  Signature extended =
      process_text(std::string(nat_source()) +
                   "\ndata S : Set where\n  base : S\n  loop : base ≡ base\n\n"
                   "postulate\n  g : Nat → Nat\n  gβ : g zero ≡ suc zero\n\n"
                   "{-# REWRITE gβ #-}\n")
          .sig;
  Outcome out;
  for (int i = 0; i < n; ++i) {
    std::string text = nat_text(*g.expr(0, 7));
    bool ok = false;
    try {
      Term a = normalize(plain, elaborate(plain, {}, parse_term(text, std::vector<std::string>{}, scope_of(plain))));
      Term b = normalize(extended, elaborate(extended, {}, parse_term(text, std::vector<std::string>{}, scope_of(extended))));
      ok = a == b;
    } catch (const Error&) {
    }
    out.record(ok, [&] { return text; });
  }
  return out;
}

}  // namespace hitgen::props
