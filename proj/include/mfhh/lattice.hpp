#pragma once

// Exact integer lattice algebra on Eigen dense matrices.
//
// Every routine is templated on the scalar so the same code runs on
// `Integer` (GMP) in production and on `std::int64_t` in small tests.
// Vectors are row vectors and lattices are row spans: x*M = b.

#include "mfhh/integer.hpp"

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace mfhh::lattice {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using IntMatrix = Matrix<Integer>;
using IntVector = RowVector<Integer>;

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& v) {
  return v < 0 ? Scalar(-v) : v;
}

template <typename Scalar>
Matrix<Scalar> identity(Eigen::Index n) {
  Matrix<Scalar> I(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) I(i, j) = Scalar(i == j ? 1 : 0);
  return I;
}

}  // namespace detail

/// U * M * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ... .
template <typename Scalar>
struct SmithDecomposition {
  Matrix<Scalar> U;
  Matrix<Scalar> V;
  Matrix<Scalar> D;
  Eigen::Index rank = 0;

  /// Nonzero diagonal entries, in order.
  std::vector<Scalar> invariant_factors() const {
    std::vector<Scalar> out;
    for (Eigen::Index i = 0; i < rank; ++i) out.push_back(D(i, i));
    return out;
  }
};

/// Smith normal form. Pivot rule: smallest nonzero absolute value in the
/// active block, ties broken by lowest (row, column) in row-major order.
/// The output is fully determined by the input.
template <typename Derived>
SmithDecomposition<typename Derived::Scalar> smith(const Eigen::MatrixBase<Derived>& M) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index rows = M.rows();
  const Eigen::Index cols = M.cols();
  SmithDecomposition<Scalar> out;
  out.D = M;
  out.U = detail::identity<Scalar>(rows);
  out.V = detail::identity<Scalar>(cols);
  auto& D = out.D;
  auto& U = out.U;
  auto& V = out.V;

  const Eigen::Index steps = std::min(rows, cols);
  Eigen::Index t = 0;
  for (; t < steps; ++t) {
    bool exhausted = false;
    while (true) {
      Eigen::Index pi = -1, pj = -1;
      Scalar best(0);
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j) {
          if (D(i, j) == 0) continue;
          Scalar a = detail::abs_value(D(i, j));
          if (pi < 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        exhausted = true;
        break;
      }
      if (pi != t) {
        D.row(t).swap(D.row(pi));
        U.row(t).swap(U.row(pi));
      }
      if (pj != t) {
        D.col(t).swap(D.col(pj));
        V.col(t).swap(V.col(pj));
      }

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        Scalar q = D(i, t) / D(t, t);
        D.row(i) -= q * D.row(t);
        U.row(i) -= q * U.row(t);
        if (D(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        Scalar q = D(t, j) / D(t, t);
        D.col(j) -= q * D.col(t);
        V.col(j) -= q * V.col(t);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and reduce again.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad >= 0) {
        D.row(t) += D.row(bad);
        U.row(t) += U.row(bad);
        continue;
      }
      break;
    }
    if (exhausted) break;
    if (D(t, t) < 0) {
      D.row(t) = -D.row(t);
      U.row(t) = -U.row(t);
    }
  }
  out.rank = t;
  return out;
}

/// Row-style Hermite normal form: U * M == H, H in row echelon form with
/// positive pivots and entries above each pivot reduced into [0, pivot).
template <typename Scalar>
struct HermiteDecomposition {
  Matrix<Scalar> U;
  Matrix<Scalar> H;
  std::vector<Eigen::Index> pivot_columns;
};

template <typename Derived>
HermiteDecomposition<typename Derived::Scalar> hermite(const Eigen::MatrixBase<Derived>& M) {
  using Scalar = typename Derived::Scalar;
  HermiteDecomposition<Scalar> out;
  out.H = M;
  out.U = detail::identity<Scalar>(M.rows());
  auto& H = out.H;
  auto& U = out.U;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < H.cols() && r < H.rows(); ++c) {
    while (true) {
      Eigen::Index p = -1;
      Scalar best(0);
      for (Eigen::Index i = r; i < H.rows(); ++i) {
        if (H(i, c) == 0) continue;
        Scalar a = detail::abs_value(H(i, c));
        if (p < 0 || a < best) {
          best = a;
          p = i;
        }
      }
      if (p < 0) break;
      if (p != r) {
        H.row(r).swap(H.row(p));
        U.row(r).swap(U.row(p));
      }
      bool clean = true;
      for (Eigen::Index i = r + 1; i < H.rows(); ++i) {
        if (H(i, c) == 0) continue;
        Scalar q = H(i, c) / H(r, c);
        H.row(i) -= q * H.row(r);
        U.row(i) -= q * U.row(r);
        if (H(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r >= H.rows() || H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      H.row(r) = -H.row(r);
      U.row(r) = -U.row(r);
    }
    for (Eigen::Index i = 0; i < r; ++i) {
      Scalar q = floor_div<Scalar>(H(i, c), H(r, c));
      if (q == 0) continue;
      H.row(i) -= q * H.row(r);
      U.row(i) -= q * U.row(r);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  return out;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& M) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> A = M;
  const Eigen::Index n = A.rows();
  if (n == 0) return Scalar(1);
  Scalar sign(1), prev(1);
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (A(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && A(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      A.row(k).swap(A.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

/// One solution of x*M = b together with a basis (rows) of {y : y*M = 0}.
template <typename Scalar>
struct Solution {
  RowVector<Scalar> particular;
  Matrix<Scalar> homogeneous;
};

/// Solve x*M = b over the integers from a precomputed Smith form of M.
template <typename Scalar, typename Derived>
std::optional<Solution<Scalar>> solve(const SmithDecomposition<Scalar>& S,
                                      const Eigen::MatrixBase<Derived>& b) {
  // x*M = b  <=>  (x*U^-1) * D = b*V.
  const RowVector<Scalar> c = b * S.V;
  const Eigen::Index rows = S.U.rows();
  RowVector<Scalar> y(rows);
  for (Eigen::Index i = 0; i < rows; ++i) y(i) = Scalar(0);
  for (Eigen::Index j = 0; j < c.size(); ++j) {
    if (j < S.rank) {
      if (c(j) % S.D(j, j) != 0) return std::nullopt;
      y(j) = c(j) / S.D(j, j);
    } else if (c(j) != 0) {
      return std::nullopt;
    }
  }
  Solution<Scalar> sol;
  sol.particular = y * S.U;
  sol.homogeneous = S.U.bottomRows(rows - S.rank);
  return sol;
}

template <typename DerivedM, typename DerivedB>
std::optional<Solution<typename DerivedM::Scalar>> solve(const Eigen::MatrixBase<DerivedM>& M,
                                                         const Eigen::MatrixBase<DerivedB>& b) {
  return solve(smith(M), b);
}

/// True iff v lies in the integer row span of L.
template <typename DerivedL, typename DerivedV>
bool member(const Eigen::MatrixBase<DerivedL>& L, const Eigen::MatrixBase<DerivedV>& v) {
  return solve(L, v).has_value();
}

/// A finite abelian group Z^m / L presented through its character group:
/// the elements are the rational vectors phi mod 1 with <l, phi> in Z for
/// every l in L (torsion part only when L has rank < m). The two groups are
/// isomorphic; this realization is the one needed for diagonal symmetries.
struct FiniteQuotient {
  Eigen::Index ambient_dim = 0;
  Eigen::Index free_rank = 0;
  std::vector<Integer> orders;                   // invariant factors > 1
  std::vector<std::vector<Rational>> generators; // one per order

  Integer size() const {
    Integer s(1);
    for (const auto& o : orders) s *= o;
    return s;
  }

  /// Visits every element once; the callback sees a reduced phase vector.
  void for_each(const std::function<void(const std::vector<Rational>&)>& visit) const {
    std::vector<Integer> digits(orders.size(), Integer(0));
    std::vector<Rational> phase(static_cast<std::size_t>(ambient_dim), Rational(0));
    while (true) {
      visit(phase);
      std::size_t pos = 0;
      for (; pos < orders.size(); ++pos) {
        digits[pos] += 1;
        for (Eigen::Index j = 0; j < ambient_dim; ++j)
          phase[j] = frac(phase[j] + generators[pos][j]);
        if (digits[pos] < orders[pos]) break;
        digits[pos] = 0;
      }
      if (pos == orders.size()) return;
    }
  }

  std::vector<std::vector<Rational>> elements() const {
    std::vector<std::vector<Rational>> out;
    for_each([&](const std::vector<Rational>& e) { out.push_back(e); });
    return out;
  }
};

template <typename Derived>
FiniteQuotient quotient(const Eigen::MatrixBase<Derived>& L) {
  const IntMatrix M = L.template cast<Integer>();
  const auto S = smith(M);
  FiniteQuotient out;
  out.ambient_dim = M.cols();
  out.free_rank = M.cols() - S.rank;
  // L = rowspan(D * V^-1); <rows, phi> integral  <=>  phi = V * (c / d).
  for (Eigen::Index i = 0; i < S.rank; ++i) {
    const Integer d = S.D(i, i);
    if (d == 1) continue;
    std::vector<Rational> gen(static_cast<std::size_t>(M.cols()));
    for (Eigen::Index j = 0; j < M.cols(); ++j) gen[j] = frac(Rational(S.V(j, i), d));
    out.orders.push_back(d);
    out.generators.push_back(std::move(gen));
  }
  return out;
}

}  // namespace mfhh::lattice
