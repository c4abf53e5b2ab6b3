#include <variant>

#include "hitgen/kernel/kernel.hpp"
#include "hitgen/parser/parser.hpp"

namespace hitgen {

const std::string& prelude_source() {
  // Hidden arguments are written out: the kernel does no implicit insertion.
  static const std::string src = R"(-- identity eliminator and its derived operations

J : {A : Set} {x : A} (C : (y : A) → x ≡ y → Set) → C x (refl x) → {y : A} (p : x ≡ y) → C y p
J {A} {x} C d {.x} refl = d

transport : {A : Set} {x y : A} → (P : A → Set) → (p : x ≡ y) → P x → P y
transport {A} {x} {y} P p = J {A} {x} (λ y' q → P x → P y') (λ u → u) {y} p

ap : {A B : Set} {x y : A} (f : A → B) (p : x ≡ y) → f x ≡ f y
ap {A} {B} {x} {y} f p = J {A} {x} (λ y' q → f x ≡ f y') (refl (f x)) {y} p

apd : {A : Set} {B : A → Set} {x y : A} → (f : (a : A) → B a) →
      (p : x ≡ y) → transport {A} {x} {y} B p (f x) ≡ f y
apd {A} {B} {x} {y} f p =
  J {A} {x} (λ y' q → transport {A} {x} {y'} B q (f x) ≡ f y') (refl (f x)) {y} p
)";
  return src;
}

Signature load_prelude() {
  static const Signature cached = [] {
    SurfaceFile file = parse_file(prelude_source(), "<prelude>");
    Signature sig;
    for (const Item& item : file.items) {
      const auto* def = std::get_if<DefinitionItem>(&item);
      if (!def) internal_error("prelude may only contain definitions");
      sig = declare_def(sig, def->name, def->type, def->span);
      std::vector<Clause> clauses;
      for (const RawClause& rc : def->clauses) clauses.push_back(elaborate_clause(sig, def->name, rc));
      sig = define_fun(sig, def->name, std::move(clauses));
    }
    return sig;
  }();
  return cached;
}

}  // namespace hitgen
