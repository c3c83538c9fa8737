#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "magmaforge/magma.hpp"

namespace magmaforge {

/// Term over the basic operation symbol f (arity n) and the derived binary
/// symbol a(x, y) = f(x, y, ..., y). Variables are numbered from 0.
class Term {
 public:
  enum class Kind { Var, Op, Derived };

  static Term var(int index);
  static Term op(std::vector<Term> children);
  static Term derived(Term left, Term right);

  Kind kind() const noexcept { return kind_; }
  int variable() const noexcept { return var_; }
  const std::vector<Term>& children() const noexcept { return children_; }

  /// Largest variable index used, or -1.
  int max_variable() const;
  /// Prefix form with variables printed as x1, x2, ...
  std::string to_string() const;

  friend bool operator==(const Term&, const Term&) = default;

 private:
  Kind kind_ = Kind::Var;
  int var_ = 0;
  std::vector<Term> children_;
};

/// Parses `f(x1, f(x2, x3))`, `a(x, y)`; variables x1..x9 (x, y, z, w are
/// shorthands for x1..x4). Throws ParseError.
Term parse_term(std::string_view text);

Element evaluate(const FiniteMagma& a, const Term& t, std::span<const Element> assignment);

struct IdentityResult {
  bool holds = true;
  std::vector<Element> witness;
  Element lhs_value = 0;
  Element rhs_value = 0;
};

/// Exhaustive over all m^vars assignments. A failure reports the assignment
/// with the most distinct values (lexicographically first among those).
IdentityResult check_identity(const FiniteMagma& a, const Term& lhs, const Term& rhs, int vars,
                              const Limits& lim = Limits::standard());

}  // namespace magmaforge
