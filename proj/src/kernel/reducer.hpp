#pragma once

#include <optional>
#include <vector>

#include "hitgen/kernel/signature.hpp"

namespace hitgen {

/// Stateful reduction engine; one instance per top-level request so that the
/// fuel budget covers the whole request.
class Reducer {
 public:
  explicit Reducer(const Signature& sig);

  Term whnf(const Term& t);
  Term normalize(const Term& t);
  bool convertible(const Term& a, const Term& b);

  std::size_t steps() const { return steps_; }

 private:
  enum class Match { yes, no, stuck };

  void tick();
  Match match(const Pattern& p, const Term& arg, std::vector<Term>& vals);
  Match match_all(const std::vector<PatArg>& pats, const std::vector<Arg>& args,
                  std::vector<Term>& vals);
  std::optional<Term> unfold(const Spine& sp);

  const Signature& sig_;
  std::size_t budget_;
  std::size_t steps_ = 0;
};

}  // namespace hitgen
