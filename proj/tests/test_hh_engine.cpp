#include "mfhh/hh_engine.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace mfhh;

namespace {

const char* kLaufer = "x1^3*x2+x2^3*x3+x3^2+x4^2";

EngineOptions serial() {
  EngineOptions o;
  o.threads = 1;
  return o;
}

}  // namespace

TEST(Table, AddAndQuery) {
  BigradedTable t({-3, 3});
  t.add(-2, 4);
  t.add(-2, 4);
  t.add(-2, 1);
  t.add(3, -1, 5);
  EXPECT_EQ(t.dim(-2), 3);
  EXPECT_EQ(t.dim(-2, 4), 2);
  EXPECT_EQ(t.dim(0), 0);
  EXPECT_EQ(t.weights(-2), (std::vector<std::int64_t>{1, 4, 4}));
  EXPECT_THROW(t.add(4, 0), Error);
  EXPECT_EQ(t.restricted({-2, -2}).cells().size(), 2u);
  BigradedTable u({-3, 3});
  u.add(3, -1);
  t.merge(u);
  EXPECT_EQ(t.dim(3), 6);
}

TEST(Window, Validation) {
  EXPECT_THROW(validate_window({3, 2}), Error);
  EXPECT_NO_THROW(validate_window({2, 2}));
}

TEST(Contributions, UnitOfTheRing) {
  const auto p = parse(kLaufer);
  Engine engine(p, serial());
  const auto identity = ker_chi(engine.context()).front();
  ASSERT_EQ(identity.fixed_count(), 4);
  const auto cs = engine.contributions_for(identity, {0, 0});
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].monomial.kind, MonomialKind::A);
  EXPECT_EQ(cs[0].monomial.beta, 0);
  EXPECT_EQ(cs[0].u, 0);
  EXPECT_EQ(cs[0].monomial.to_string(), "1");
}

TEST(Contributions, LauferExamples) {
  const auto p = parse(kLaufer);
  auto options = serial();
  options.basis = order_provider(MonomialOrder::lex({2, 0, 1, 3}));
  Engine engine(p, options);
  const auto elements = ker_chi(engine.context());

  const auto identity = elements.front();
  bool found = false;
  for (const auto& c : engine.contributions_for(identity, {-4, -4}))
    if (c.monomial.to_string() == "x0^6*x2^4") {
      found = true;
      EXPECT_EQ(c.monomial.kind, MonomialKind::A);
      EXPECT_EQ(c.u, -2);
      EXPECT_EQ(c.weight, 6);
    }
  EXPECT_TRUE(found);

  for (const auto& g : elements) {
    if (g.fixed != 0) continue;
    const auto cs = engine.contributions_for(g, {-20, 10});
    ASSERT_EQ(cs.size(), 1u);
    EXPECT_EQ(cs[0].monomial.kind, MonomialKind::C);
    EXPECT_EQ(cs[0].u, -1);
    EXPECT_EQ(cs[0].degree, 3);
    EXPECT_EQ(cs[0].weight, -1);
    EXPECT_EQ(cs[0].monomial.to_string(), "x0^v*x1^v*x2^v*x3^v*x4^v");
  }
}

TEST(Contributions, LauferDegreeThreeListing) {
  std::map<std::pair<char, std::string>, int> rows;
  for (const auto& c : list_contributions(parse(kLaufer), {3, 3}))
    ++rows[{to_char(c.monomial.kind), c.monomial.to_string()}];
  EXPECT_EQ(rows[(std::pair<char, std::string>{'C', "x0^v*x1^v*x2^v*x3^v*x4^v"})], 8);
  EXPECT_EQ(rows[(std::pair<char, std::string>{'B', "x0^v*x1^v*x2^v*x3^v*x4^v"})], 1);
  EXPECT_EQ(rows[(std::pair<char, std::string>{'C', "x0^v*x1^v*x2^2*x4^v"})], 2);
  int total = 0;
  for (const auto& [k, n] : rows) total += n;
  EXPECT_EQ(total, 11);
}

TEST(Contributions, ListingIsSortedAndDeterministic) {
  const auto p = parse(kLaufer);
  const auto a = list_contributions(p, {-6, 3}, serial());
  EngineOptions par;
  par.threads = 4;
  const auto b = list_contributions(p, {-6, 3}, par);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].degree, b[i].degree);
    EXPECT_EQ(a[i].monomial.b, b[i].monomial.b);
    EXPECT_EQ(a[i].gamma.phases, b[i].gamma.phases);
    if (i) EXPECT_LE(a[i - 1].degree, a[i].degree);
  }
  std::int64_t units = 0;
  for (const auto& c : a)
    if (c.degree == 0 && c.u == 0 && c.monomial.kind == MonomialKind::A && c.monomial.to_string() == "1") ++units;
  EXPECT_EQ(units, 1);
}

TEST(ComputeTable, Quadric) {
  const auto t = compute_table(parse("x1^2+x2^2+x3^2+x4^2"), {-12, 4});
  EXPECT_EQ(t.dim(3), 1);
  EXPECT_EQ(t.dim(2), 0);
  EXPECT_EQ(t.dim(4), 0);
  for (std::int64_t d = -12; d <= 1; ++d) EXPECT_EQ(t.dim(d), 1) << d;
  for (std::int64_t d = -12; d <= 4; ++d) EXPECT_TRUE(t.complete(d));
}

TEST(ComputeTable, Ca1EvenCase) {
  const auto t = compute_table(parse("x1^2+x2^2+x3^2+x4^3"), {-12, 4});
  EXPECT_EQ(t.dim(3), 2);
  const std::set<std::int64_t> nonzero{1, 0, -5, -6, -9, -10};
  for (std::int64_t d = -12; d < 2; ++d) EXPECT_EQ(t.dim(d), nonzero.count(d) ? 1 : 0) << d;
}

TEST(ComputeTable, Laufer) {
  const auto t = compute_table(parse(kLaufer), {-12, 4});
  EXPECT_EQ(t.dim(3), 11);
  for (std::int64_t d = -12; d <= 1; ++d) EXPECT_EQ(t.dim(d), 1) << d;
  EXPECT_EQ(t.weights(-4), (std::vector<std::int64_t>{6}));
}

TEST(ComputeTable, BrieskornPhamDegreeNIsTheMilnorNumber) {
  for (const char* text : {"x1^2+x2^2+x3^2+x4^2", "x1^2+x2^3+x3^3+x4^4", "x1^3+x2^3+x3^3+x4^3", "x1^2+x2^2+x3^5+x4^7"}) {
    const auto p = parse(text);
    std::int64_t mu = 1;
    for (std::size_t i = 0; i < p.nvars(); ++i) mu *= p(i, i) - 1;
    const auto t = compute_table(p, {3, 3});
    EXPECT_EQ(t.dim(3, -1), mu) << text;
    EXPECT_EQ(milnor_number(p), std::size_t(mu));
  }
}

TEST(ComputeTable, MatchesBruteForceOracle) {
  std::mt19937 rng(53);
  int checked = 0;
  for (int t = 0; t < 200 && checked < 12; ++t) {
    const auto a = oracle::random_invertible(rng, 3 + t % 2, 4);
    const auto ws = oracle::cramer_weights(a);
    if (ws.d0 == 0 || std::abs(oracle::det_int64(a)) > 200) continue;
    const InvertiblePolynomial p(a);
    const auto ctx = build_context(p);
    const Window w{-10, 6};
    BigradedTable mine;
    try {
      mine = compute_table(p, w, serial());
    } catch (const Error& e) {
      continue;
    }
    ++checked;
    EXPECT_EQ(mine.cells(), oracle::brute_table(p, w, ctx).cells()) << p.to_string();
  }
  EXPECT_GE(checked, 8);
}

TEST(ComputeTable, NonterminatingFamily) {
  // h = 3 and d0 = 0: every x0-power has the same degree.
  const auto p = parse("x1^3+x2^3+x3^3");
  EXPECT_EQ(weights(p).d0, 0);
  try {
    compute_table(p, {-4, 4});
    ADD_FAILURE() << "expected NonterminatingFamily";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonterminatingFamily);
  }
}

TEST(Hh2, VanishesOnTheQuadric) {
  EXPECT_TRUE(hh2_vanishes(parse("x1^2+x2^2+x3^2+x4^2")));
  EXPECT_TRUE(hh2_vanishes(parse(kLaufer)));
}

TEST(Threads, EnvironmentCapsTheWorkerCount) {
  ::setenv("HH_THREADS", "2", 1);
  EXPECT_EQ(resolve_threads(8), 2u);
  EXPECT_EQ(resolve_threads(1), 1u);
  ::unsetenv("HH_THREADS");
  EXPECT_EQ(resolve_threads(3), 3u);
  EXPECT_GE(resolve_threads(0), 1u);
}
