#pragma once

// The symmetry group Gamma_w, its character lattice Z^{n+2}/R and the
// finite kernel of chi(t) = t_0 t_1 ... t_{n+1}.

#include "mfhh/integer.hpp"
#include "mfhh/lattice.hpp"
#include "mfhh/poly_core.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace mfhh {

/// Subset of {0, 1, ..., n+1} as a bitmask; bit 0 is x0.
using VariableSet = std::uint32_t;

/// An element of ker chi. phases[j-1] is the phase of t_j (j = 1..n+1) as a
/// fraction in [0, 1); t_0 carries minus the sum of the others.
struct GroupElement {
  std::vector<Rational> phases;
  VariableSet fixed = 0;

  bool fixes(int variable) const { return (fixed >> variable) & 1U; }
  bool fixes_x0() const { return fixes(0); }
  /// Number of fixed variables among x1..x_{n+1}.
  int fixed_count() const;
  Rational phase_x0() const;
};

/// Integer points (beta, u) = (beta0, u0) + t*(dbeta, du) solving
/// b + beta*e0 - u*1 in R; dbeta > 0.
struct AffineFamily {
  Integer beta0, u0;
  Integer dbeta, du;
};

class SymmetryContext {
 public:
  /// Throws Error(DegenerateCharacter) if 1 has finite order mod R.
  explicit SymmetryContext(InvertiblePolynomial p);

  const InvertiblePolynomial& polynomial() const { return p_; }
  const WeightSystem& weight_system() const { return weights_; }
  /// Rows r_i = (-1, a_i1 - 1, ..., a_i,n+1 - 1).
  const lattice::IntMatrix& relations() const { return relations_; }
  std::size_t ambient_dim() const { return p_.nvars() + 1; }

  /// |ker chi| = |det A|.
  Integer kernel_order() const { return kernel_.size(); }
  const lattice::FiniteQuotient& kernel_group() const { return kernel_; }

  /// Unique u with b - u*1 in R, if any.
  std::optional<Integer> chi_power(const lattice::IntVector& b) const;

  /// All (beta, u) with b + beta*e0 - u*1 in R, or nullopt when empty.
  std::optional<AffineFamily> beta_family(const lattice::IntVector& b) const;

  /// Streams ker chi in the group's natural enumeration order.
  void for_each_element(const std::function<void(const GroupElement&)>& visit) const;

  GroupElement make_element(std::vector<Rational> phases) const;

 private:
  InvertiblePolynomial p_;
  WeightSystem weights_;
  lattice::IntMatrix relations_;
  lattice::SmithDecomposition<Integer> chi_smith_;    // rows [1; R]
  lattice::SmithDecomposition<Integer> family_smith_; // rows [e0; -1; R]
  AffineFamily homogeneous_{};
  lattice::FiniteQuotient kernel_;
};

SymmetryContext build_context(const InvertiblePolynomial& p);

/// ker chi as a list sorted lexicographically on phases.
std::vector<GroupElement> ker_chi(const SymmetryContext& ctx);

/// Number of elements of ker chi per fixed-variable set.
std::map<VariableSet, std::int64_t> fixed_census(const SymmetryContext& ctx);

/// Convenience: "{0,2,3}" style rendering of a variable set.
std::string format_variable_set(VariableSet s, std::size_t nvars_total);

VariableSet make_variable_set(std::initializer_list<int> vars);

}  // namespace mfhh
