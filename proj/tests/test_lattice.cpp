#include "mfhh/lattice.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace mfhh;
using namespace mfhh::lattice;

namespace {

template <typename S>
S abs_value(const S& v) {
  return v < 0 ? S(-v) : v;
}

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = Integer(v);
    ++i;
  }
  return m;
}

IntVector vec(std::initializer_list<long> v) {
  IntVector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (long x : v) out(i++) = Integer(x);
  return out;
}

IntMatrix random_matrix(std::mt19937& rng, Eigen::Index r, Eigen::Index c, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

template <typename S>
void expect_valid_smith(const Matrix<S>& M, const SmithDecomposition<S>& s) {
  EXPECT_EQ(s.U * M * s.V, s.D);
  EXPECT_EQ(abs_value(determinant(s.U)), S(1));
  EXPECT_EQ(abs_value(determinant(s.V)), S(1));
  for (Eigen::Index i = 0; i < s.D.rows(); ++i)
    for (Eigen::Index j = 0; j < s.D.cols(); ++j)
      if (i != j) EXPECT_EQ(s.D(i, j), S(0));
  for (Eigen::Index i = 0; i < s.rank; ++i) {
    EXPECT_GT(s.D(i, i), S(0));
    if (i + 1 < s.rank) EXPECT_EQ(s.D(i + 1, i + 1) % s.D(i, i), S(0));
  }
  for (Eigen::Index i = s.rank; i < std::min(s.D.rows(), s.D.cols()); ++i) EXPECT_EQ(s.D(i, i), S(0));
}

}  // namespace

TEST(Smith, Examples) {
  const auto I = smith(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(I.D, mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  const auto s = smith(mat({{2, 1}, {0, 3}}));
  EXPECT_EQ(s.invariant_factors(), (std::vector<Integer>{1, 6}));
  const auto d = smith(mat({{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}));
  EXPECT_EQ(d.D, mat({{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}));
  EXPECT_EQ(smith(mat({{2, 4}, {6, 8}})).invariant_factors(), (std::vector<Integer>{2, 4}));
}

TEST(Smith, RandomMatricesSatisfyTheContract) {
  std::mt19937 rng(1);
  for (int t = 0; t < 200; ++t) {
    const auto r = 1 + t % 5, c = 1 + (t / 5) % 5;
    const auto M = random_matrix(rng, r, c, t % 3 == 0 ? 1 : 9);
    expect_valid_smith(M, smith(M));
  }
}

TEST(Smith, TemplatedOnScalar) {
  Matrix<std::int64_t> M(2, 2);
  M << 2, 1, 0, 3;
  const auto s = smith(M);
  expect_valid_smith(M, s);
  EXPECT_EQ(s.D(1, 1), 6);
}

TEST(Smith, Deterministic) {
  std::mt19937 rng(2);
  const auto M = random_matrix(rng, 4, 5, 7);
  const auto a = smith(M), b = smith(M);
  EXPECT_EQ(a.U, b.U);
  EXPECT_EQ(a.V, b.V);
}

TEST(Smith, LargeEntriesStayExact) {
  IntMatrix M(2, 2);
  M << Integer("123456789012345678901234567890"), Integer(7), Integer(3), Integer("98765432109876543210");
  expect_valid_smith(M, smith(M));
}

TEST(Hermite, RowEchelonWithUnimodularTransform) {
  std::mt19937 rng(4);
  for (int t = 0; t < 100; ++t) {
    const auto M = random_matrix(rng, 1 + t % 4, 1 + (t / 4) % 4, 6);
    const auto h = hermite(M);
    EXPECT_EQ(h.U * M, h.H);
    EXPECT_EQ(abs_value(determinant(h.U)), Integer(1));
    for (std::size_t r = 0; r < h.pivot_columns.size(); ++r) {
      const auto c = h.pivot_columns[r];
      const auto ri = static_cast<Eigen::Index>(r);
      EXPECT_GT(h.H(ri, c), 0);
      for (Eigen::Index i = ri + 1; i < h.H.rows(); ++i) EXPECT_EQ(h.H(i, c), 0);
      for (Eigen::Index i = 0; i < ri; ++i) {
        EXPECT_GE(h.H(i, c), 0);
        EXPECT_LT(h.H(i, c), h.H(ri, c));
      }
    }
  }
}

TEST(Determinant, MatchesLaplaceOnSmallCases) {
  EXPECT_EQ(determinant(mat({{3, 1, 0, 0}, {0, 3, 1, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}})), 36);
  EXPECT_EQ(determinant(mat({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(determinant(mat({{1, 2}, {2, 4}})), 0);
}

TEST(Solve, Examples) {
  const auto a = solve(mat({{2}}), vec({4}));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->particular, vec({2}));
  EXPECT_EQ(a->homogeneous.rows(), 0);
  EXPECT_FALSE(solve(mat({{2}}), vec({3})));
  const auto c = solve(mat({{2, 0}, {0, 3}}), vec({2, 3}));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->particular, vec({1, 1}));
}

TEST(Solve, ParticularAndHomogeneousSolutions) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int t = 0; t < 100; ++t) {
    const auto M = random_matrix(rng, 2 + t % 3, 1 + t % 4, 5);
    IntVector x(M.rows());
    for (Eigen::Index i = 0; i < M.rows(); ++i) x(i) = coeff(rng);
    const IntVector b = x * M;
    const auto sol = solve(M, b);
    ASSERT_TRUE(sol);
    EXPECT_EQ(sol->particular * M, b);
    const IntMatrix zero = IntMatrix::Zero(sol->homogeneous.rows(), M.cols());
    EXPECT_EQ(sol->homogeneous * M, zero);
    EXPECT_EQ(sol->homogeneous.rows(), M.rows() - smith(M).rank);
  }
}

TEST(Member, Examples) {
  const auto L = mat({{2, 0}, {0, 2}});
  EXPECT_TRUE(member(L, vec({2, 0})));
  EXPECT_FALSE(member(L, vec({1, 0})));
  EXPECT_TRUE(member(L, vec({0, 0})));
  EXPECT_TRUE(member(mat({{1, 2, 3}}), vec({0, 0, 0})));
}

TEST(Member, AgreesWithBoundedSearch) {
  const auto L = mat({{2, 1}, {0, 3}});
  std::set<std::pair<int, int>> reachable;
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b) reachable.insert({2 * a, a + 3 * b});
  for (int x = -4; x <= 4; ++x)
    for (int y = -4; y <= 4; ++y) EXPECT_EQ(member(L, vec({x, y})), reachable.count({x, y}) == 1);
}

TEST(Quotient, Examples) {
  const auto q = quotient(mat({{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}));
  EXPECT_EQ(q.size(), 16);
  EXPECT_EQ(q.orders, (std::vector<Integer>{2, 2, 2, 2}));
  const auto c = quotient(mat({{2, 1}, {0, 3}}));
  EXPECT_EQ(c.size(), 6);
  EXPECT_EQ(c.orders, (std::vector<Integer>{6}));
  const auto f = quotient(mat({{1, 0}}));
  EXPECT_EQ(f.free_rank, 1);
  EXPECT_EQ(f.size(), 1);
}

TEST(Quotient, EnumerationIsExhaustiveAndDistinct) {
  std::mt19937 rng(6);
  for (int t = 0; t < 60; ++t) {
    const auto n = 1 + t % 4;
    IntMatrix M;
    Integer det(0);
    do {
      M = random_matrix(rng, n, n, 4);
      det = determinant(M);
    } while (det == 0 || abs_value(det) > 10000);
    const auto q = quotient(M);
    EXPECT_EQ(q.size(), abs_value(det));
    std::set<std::vector<Rational>> seen;
    q.for_each([&](const std::vector<Rational>& phi) {
      // <row, phi> must be integral for every row.
      for (Eigen::Index i = 0; i < n; ++i) {
        Rational s(0);
        for (Eigen::Index j = 0; j < n; ++j) s += Rational(M(i, j)) * phi[j];
        EXPECT_EQ(boost::multiprecision::denominator(s), 1);
      }
      for (const auto& x : phi) {
        EXPECT_GE(x, 0);
        EXPECT_LT(x, 1);
      }
      seen.insert(phi);
    });
    EXPECT_EQ(Integer(seen.size()), q.size());
  }
}
