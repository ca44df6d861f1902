#pragma once

// Restrictions of w to fixed loci and monomial bases of their Jacobian rings.

#include "mfhh/groebner.hpp"
#include "mfhh/poly_core.hpp"
#include "mfhh/symmetry.hpp"

#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

namespace mfhh {

using groebner::Exponents;
using groebner::MonomialOrder;

/// w with every monomial that involves an unfixed variable dropped.
struct RestrictedPolynomial {
  InvertiblePolynomial parent;
  VariableSet fixed = 0;                 // bits 1..nvars
  std::vector<std::size_t> variables;    // 0-based parent indices, ascending
  std::vector<Exponents> terms;          // exponents over `variables`

  bool is_zero() const { return terms.empty(); }
};

/// `fixed` uses bit j for x_j (j >= 1); bit 0 is ignored.
RestrictedPolynomial restrict(const InvertiblePolynomial& p, VariableSet fixed);

struct MonomialBasis {
  std::vector<std::size_t> variables;  // 0-based parent indices
  std::vector<Exponents> monomials;    // over `variables`, sorted

  std::size_t dimension() const { return monomials.size(); }
};

/// Standard monomials of the Jacobian ideal. `order.priority` refers to
/// 0-based parent variable indices; variables absent from the restriction are
/// skipped. Throws Error(NotIsolated) if the quotient is infinite-dimensional.
MonomialBasis monomial_basis(const RestrictedPolynomial& r,
                             const MonomialOrder& order = MonomialOrder::grevlex());

std::size_t milnor_number(const InvertiblePolynomial& p);

/// Checks that `monomials` (over r.variables) project to a basis of the
/// Jacobian ring and returns them as a MonomialBasis; throws
/// Error(NotIsolated) for an infinite quotient and std::invalid_argument
/// when the monomials are not a basis.
MonomialBasis explicit_basis(const RestrictedPolynomial& r, std::vector<Exponents> monomials);

using BasisProvider = std::function<MonomialBasis(const RestrictedPolynomial&)>;

BasisProvider order_provider(MonomialOrder order);

/// Uses the listed bases (keyed by fixed set, bits 1..nvars) where given and
/// falls back to `fallback` elsewhere. Each listed basis is validated.
BasisProvider explicit_provider(std::map<VariableSet, std::vector<Exponents>> bases,
                                MonomialOrder fallback = MonomialOrder::grevlex());

/// Per-polynomial cache of bases keyed by fixed set; safe for concurrent use.
class BasisCache {
 public:
  BasisCache(InvertiblePolynomial p, BasisProvider provider);

  std::shared_ptr<const MonomialBasis> get(VariableSet fixed) const;

 private:
  InvertiblePolynomial p_;
  BasisProvider provider_;
  mutable std::shared_mutex mutex_;
  mutable std::map<VariableSet, std::shared_ptr<const MonomialBasis>> bases_;
};

}  // namespace mfhh
