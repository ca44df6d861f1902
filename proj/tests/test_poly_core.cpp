#include "mfhh/poly_core.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace mfhh;

TEST(Parse, FermatQuadric) {
  const auto p = parse("x1^2+x2^2+x3^2+x4^2");
  EXPECT_EQ(p.matrix(), (ExponentMatrix{{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}));
  EXPECT_EQ(p.nvars(), 4u);
  EXPECT_EQ(p.n(), 3);
}

TEST(Parse, LauferRowsInInputOrder) {
  const auto p = parse("x1^3*x2+x2^7*x3+x3^2+x4^2");
  EXPECT_EQ(p.matrix(), (ExponentMatrix{{3, 1, 0, 0}, {0, 7, 1, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}));
  const auto q = parse("x4^2 + x3^2 + x1^3 * x2 + x2^7*x3");
  EXPECT_EQ(q.matrix()[0], (std::vector<std::int64_t>{0, 0, 0, 2}));
}

TEST(Parse, Errors) {
  auto kind_of = [](const std::string& text) {
    try {
      parse(text);
    } catch (const Error& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no error for " << text;
    return ErrorKind::SchemaError;
  };
  EXPECT_EQ(kind_of("x1^2+x1^2"), ErrorKind::NotInvertible);
  EXPECT_EQ(kind_of("x1^2+x2^2+x3"), ErrorKind::NotInvertible);
  EXPECT_EQ(kind_of("x1^2+x3^2"), ErrorKind::NotInvertible);
  EXPECT_EQ(kind_of("x1*x2+x2*x1"), ErrorKind::NotInvertible);
  EXPECT_EQ(kind_of("x1^2*x2^2+x2^3"), ErrorKind::NotInvertible);
  EXPECT_EQ(kind_of("2*x1^2"), ErrorKind::CoefficientError);
  EXPECT_EQ(kind_of("-1*x1^2"), ErrorKind::CoefficientError);
  EXPECT_EQ(kind_of("x1^"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of("y1^2"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of("x0^2"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of("x1^2++x2^2"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of(""), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of("x1^2-x2^2"), ErrorKind::SyntaxError);
}

TEST(Parse, UnitCoefficientAndLargeIndices) {
  EXPECT_EQ(parse("1*x1^2+x2^3").matrix(), (ExponentMatrix{{2, 0}, {0, 3}}));
  std::string text;
  for (int i = 1; i <= 11; ++i) text += (i > 1 ? "+x" : "x") + std::to_string(i) + "^2";
  EXPECT_EQ(parse(text).nvars(), 11u);
}

TEST(Parse, NonstandardShapeIsAWarningOnRequest) {
  const std::string text = "x1^2*x2^2+x1*x2^3";
  EXPECT_THROW(parse(text), Error);
  std::vector<std::string> warnings;
  const auto p = parse(text, ParseOptions{true}, &warnings);
  EXPECT_EQ(p.determinant(), 4);
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(Parse, RoundTripThroughPrinting) {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const InvertiblePolynomial p(oracle::random_invertible(rng, 2 + i % 4));
    EXPECT_EQ(parse(p.to_string()).matrix(), p.matrix());
  }
}

TEST(Transpose, Examples) {
  const auto d = parse("x1^2+x2^2+x3^2+x4^2");
  EXPECT_EQ(transpose(d), d);
  const auto laufer = parse("x1^3*x2+x2^3*x3+x3^2+x4^2");
  EXPECT_EQ(transpose(laufer).matrix(),
            (ExponentMatrix{{3, 0, 0, 0}, {1, 3, 0, 0}, {0, 1, 2, 0}, {0, 0, 0, 2}}));
  EXPECT_EQ(transpose(laufer).to_string(), "x1^3+x1*x2^3+x2*x3^2+x4^2");
}

TEST(Transpose, InvolutionAndDeterminant) {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    const InvertiblePolynomial p(oracle::random_invertible(rng, 2 + i % 4));
    EXPECT_EQ(transpose(transpose(p)), p);
    EXPECT_EQ(transpose(p).determinant(), p.determinant());
    EXPECT_EQ(p.determinant(), oracle::det_int64(p.matrix()));
  }
}

TEST(Weights, Examples) {
  EXPECT_EQ(weights(parse("x1^2+x2^2+x3^2+x4^2")), (WeightSystem{{1, 1, 1, 1}, 2, -2}));
  // Laufer k = 3; the solved weights are (13,3,21,21; 42).
  EXPECT_EQ(weights(parse("x1^3*x2+x2^7*x3+x3^2+x4^2")), (WeightSystem{{13, 3, 21, 21}, 42, -16}));
  EXPECT_EQ(weights(parse("x1^3*x2+x2^3*x3+x3^2+x4^2")), (WeightSystem{{5, 3, 9, 9}, 18, -8}));
}

TEST(Weights, AgreeWithCramerAndAreQuasiHomogeneous) {
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    const InvertiblePolynomial p(oracle::random_invertible(rng, 2 + i % 4, 6));
    const auto ws = weights(p);
    EXPECT_EQ(ws, oracle::cramer_weights(p.matrix()));
    std::int64_t g = ws.h;
    for (std::size_t r = 0; r < p.nvars(); ++r) {
      std::int64_t deg = 0;
      for (std::size_t c = 0; c < p.nvars(); ++c) deg += p(r, c) * ws.d[c];
      EXPECT_EQ(deg, ws.h);
      g = std::gcd(g, ws.d[r]);
    }
    EXPECT_EQ(g, 1);
  }
}

TEST(Atoms, ClassifiesShapes) {
  const auto fermat = atoms({{2, 0}, {0, 3}});
  ASSERT_EQ(fermat.size(), 2u);
  EXPECT_EQ(fermat[0].kind, AtomKind::Fermat);
  const auto chain = atoms({{3, 1, 0}, {0, 2, 1}, {0, 0, 2}});
  ASSERT_EQ(chain.size(), 1u);
  EXPECT_EQ(chain[0].kind, AtomKind::Chain);
  EXPECT_EQ(chain[0].variables, (std::vector<std::size_t>{0, 1, 2}));
  const auto loop = atoms({{2, 1}, {1, 3}});
  ASSERT_EQ(loop.size(), 1u);
  EXPECT_EQ(loop[0].kind, AtomKind::Loop);
  EXPECT_TRUE(atoms({{2, 1, 1}, {0, 2, 0}, {0, 0, 2}}).empty());
}
