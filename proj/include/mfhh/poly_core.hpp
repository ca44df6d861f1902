#pragma once

// Invertible polynomials: exponent matrix, parsing, Berglund-Hubsch
// transpose and the quasi-homogeneous weight system.

#include "mfhh/errors.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mfhh {

using ExponentMatrix = std::vector<std::vector<std::int64_t>>;

/// A polynomial sum_i prod_j x_j^{a_ij} with square, nonsingular exponent
/// matrix. Row i is the i-th monomial. Immutable after construction.
class InvertiblePolynomial {
 public:
  /// Validates the matrix; throws Error(NotInvertible) unless it is square,
  /// nonnegative, nonsingular, uses every variable and (unless
  /// `allow_nonstandard`) splits into Fermat, chain and loop atoms.
  /// Warnings produced under `allow_nonstandard` are appended to `warnings`.
  explicit InvertiblePolynomial(ExponentMatrix matrix, bool allow_nonstandard = false,
                                std::vector<std::string>* warnings = nullptr);

  std::size_t nvars() const { return matrix_.size(); }
  /// The n of the ambient A^{n+2}: nvars() - 1.
  int n() const { return static_cast<int>(matrix_.size()) - 1; }
  const ExponentMatrix& matrix() const { return matrix_; }
  std::int64_t operator()(std::size_t row, std::size_t col) const { return matrix_[row][col]; }
  const std::vector<std::string>& varnames() const { return varnames_; }

  /// Signed determinant of the exponent matrix.
  std::int64_t determinant() const;

  /// e.g. "x1^3*x2+x2^3*x3+x3^2+x4^2".
  std::string to_string() const;

  friend bool operator==(const InvertiblePolynomial& a, const InvertiblePolynomial& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  ExponentMatrix matrix_;
  std::vector<std::string> varnames_;
};

/// Weights d_1..d_{n+1} and degree h with A*d = h*1, gcd(d, h) = 1;
/// d0 = h - sum(d).
struct WeightSystem {
  std::vector<std::int64_t> d;
  std::int64_t h = 0;
  std::int64_t d0 = 0;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
};

struct ParseOptions {
  bool allow_nonstandard = false;
};

/// Parses the grammar  poly := term ("+" term)*, term := factor ("*" factor)*,
/// factor := var ("^" nat)?, var := "x" nat. Whitespace is ignored.
/// A leading unit coefficient "1*" is accepted; any other coefficient is a
/// CoefficientError.
InvertiblePolynomial parse(std::string_view text, const ParseOptions& options = {},
                           std::vector<std::string>* warnings = nullptr);

InvertiblePolynomial transpose(const InvertiblePolynomial& p);

WeightSystem weights(const InvertiblePolynomial& p);

/// Atom decomposition used by the shape check; exposed for diagnostics.
enum class AtomKind { Fermat, Chain, Loop };

struct Atom {
  AtomKind kind;
  std::vector<std::size_t> variables;  // in chain/loop order, 0-based
};

/// Empty result means the matrix is not of Fermat/chain/loop shape.
std::vector<Atom> atoms(const ExponentMatrix& matrix);

}  // namespace mfhh
