#pragma once

// Buchberger's algorithm over exact rationals, sized for the small
// zero-dimensional ideals that Jacobian rings of restricted invertible
// polynomials produce.

#include "mfhh/integer.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace mfhh::groebner {

using Exponents = std::vector<int>;

enum class OrderKind { GradedReverseLex, Lex };

/// A monomial order on k variables. `priority` lists variable indices from
/// most to least significant; empty means 0, 1, ..., k-1.
struct MonomialOrder {
  OrderKind kind = OrderKind::GradedReverseLex;
  std::vector<std::size_t> priority;

  static MonomialOrder grevlex(std::vector<std::size_t> priority = {}) {
    return {OrderKind::GradedReverseLex, std::move(priority)};
  }
  static MonomialOrder lex(std::vector<std::size_t> priority = {}) {
    return {OrderKind::Lex, std::move(priority)};
  }

  /// Strict "a < b".
  bool less(const Exponents& a, const Exponents& b) const;
};

struct OrderLess {
  const MonomialOrder* order;
  bool operator()(const Exponents& a, const Exponents& b) const { return order->less(a, b); }
};

/// Sparse polynomial; terms are keyed by exponent vector in the order, so the
/// leading term is the last entry.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, OrderLess>;

  Polynomial(std::size_t nvars, const MonomialOrder& order)
      : nvars_(nvars), terms_(OrderLess{&order}) {}

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  const Exponents& leading_monomial() const { return terms_.rbegin()->first; }
  const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

  void add_term(const Exponents& e, const Rational& c);
  /// this -= c * x^shift * other
  void subtract_multiple(const Rational& c, const Exponents& shift, const Polynomial& other);
  void make_monic();

 private:
  std::size_t nvars_;
  TermMap terms_;
};

bool divides(const Exponents& a, const Exponents& b);

/// Reduced Groebner basis of the ideal generated by `generators`.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> generators,
                                       const MonomialOrder& order);

/// Fully reduced normal form of f modulo a Groebner basis.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

/// Standard monomials of a zero-dimensional ideal given by its Groebner
/// basis, sorted lexicographically on exponent vectors; nullopt when the
/// quotient is infinite-dimensional.
std::optional<std::vector<Exponents>> standard_monomials(const std::vector<Polynomial>& basis,
                                                         std::size_t nvars);

}  // namespace mfhh::groebner
