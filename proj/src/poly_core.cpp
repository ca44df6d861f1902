#include "mfhh/poly_core.hpp"

#include "mfhh/integer.hpp"
#include "mfhh/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace mfhh {

namespace {

lattice::Matrix<std::int64_t> to_eigen(const ExponentMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  lattice::Matrix<std::int64_t> out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m[i][j];
  return out;
}

std::int64_t exact_det(const ExponentMatrix& m) {
  lattice::IntMatrix big = to_eigen(m).cast<Integer>();
  return to_int64(lattice::determinant(big));
}

}  // namespace

std::vector<Atom> atoms(const ExponentMatrix& matrix) {
  const std::size_t n = matrix.size();
  // Each row is x_main^a (a >= 2) times at most one other variable to the
  // first power; `main` must be a bijection and the pointer graph must have
  // in-degree <= 1, which leaves disjoint chains and cycles.
  std::vector<std::size_t> main_of_row(n);
  std::vector<long> pointer(n, -1);  // indexed by main variable
  std::vector<int> seen_main(n, 0), in_degree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    long main = -1, other = -1;
    for (std::size_t j = 0; j < n; ++j) {
      const auto a = matrix[i][j];
      if (a == 0) continue;
      if (a >= 2) {
        if (main >= 0) return {};
        main = static_cast<long>(j);
      } else {
        if (other >= 0) return {};
        other = static_cast<long>(j);
      }
    }
    if (main < 0) return {};
    main_of_row[i] = static_cast<std::size_t>(main);
    if (seen_main[main]++) return {};
    pointer[main] = other;
    if (other >= 0 && ++in_degree[other] > 1) return {};
  }

  std::vector<Atom> out;
  std::vector<bool> used(n, false);
  // Chains start at variables nobody points to.
  for (std::size_t v = 0; v < n; ++v) {
    if (in_degree[v] != 0 || used[v]) continue;
    Atom atom{pointer[v] < 0 ? AtomKind::Fermat : AtomKind::Chain, {}};
    long cur = static_cast<long>(v);
    while (cur >= 0 && !used[cur]) {
      used[cur] = true;
      atom.variables.push_back(static_cast<std::size_t>(cur));
      cur = pointer[cur];
    }
    out.push_back(std::move(atom));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (used[v]) continue;
    Atom atom{AtomKind::Loop, {}};
    long cur = static_cast<long>(v);
    while (!used[cur]) {
      used[cur] = true;
      atom.variables.push_back(static_cast<std::size_t>(cur));
      cur = pointer[cur];
    }
    out.push_back(std::move(atom));
  }
  return out;
}

InvertiblePolynomial::InvertiblePolynomial(ExponentMatrix matrix, bool allow_nonstandard,
                                           std::vector<std::string>* warnings)
    : matrix_(std::move(matrix)) {
  const std::size_t n = matrix_.size();
  if (n == 0) throw Error(ErrorKind::NotInvertible, "empty polynomial");
  for (const auto& row : matrix_) {
    if (row.size() != n)
      throw Error(ErrorKind::NotInvertible, "exponent matrix is not square");
    for (auto a : row)
      if (a < 0) throw Error(ErrorKind::NotInvertible, "negative exponent");
  }
  for (std::size_t j = 0; j < n; ++j) {
    bool occurs = false;
    for (std::size_t i = 0; i < n; ++i) occurs = occurs || matrix_[i][j] > 0;
    if (!occurs)
      throw Error(ErrorKind::NotInvertible, "variable x" + std::to_string(j + 1) + " does not occur");
  }
  std::set<std::vector<std::int64_t>> distinct(matrix_.begin(), matrix_.end());
  if (distinct.size() != n) throw Error(ErrorKind::NotInvertible, "repeated monomial");
  if (exact_det(matrix_) == 0) throw Error(ErrorKind::NotInvertible, "exponent matrix is singular");
  if (atoms(matrix_).empty()) {
    if (!allow_nonstandard)
      throw Error(ErrorKind::NotInvertible, "not a sum of Fermat, chain and loop atoms");
    if (warnings) warnings->push_back("polynomial is not of Fermat/chain/loop shape");
  }
  for (std::size_t j = 0; j < n; ++j) varnames_.push_back("x" + std::to_string(j + 1));
}

std::int64_t InvertiblePolynomial::determinant() const { return exact_det(matrix_); }

std::string InvertiblePolynomial::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    if (i) os << '+';
    bool first = true;
    for (std::size_t j = 0; j < matrix_.size(); ++j) {
      const auto a = matrix_[i][j];
      if (a == 0) continue;
      if (!first) os << '*';
      first = false;
      os << varnames_[j];
      if (a != 1) os << '^' << a;
    }
  }
  return os.str();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
  }

  std::vector<std::map<std::int64_t, std::int64_t>> parse_poly() {
    std::vector<std::map<std::int64_t, std::int64_t>> terms;
    if (text_.empty()) fail("empty input");
    terms.push_back(parse_term());
    while (pos_ < text_.size()) {
      expect('+');
      terms.push_back(parse_term());
    }
    return terms;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError, msg + " at offset " + std::to_string(pos_));
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::int64_t parse_nat() {
    if (!peek_digit() || text_[pos_] == '0') fail("expected a positive integer");
    std::int64_t v = 0;
    while (peek_digit()) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1'000'000'000) fail("integer too large");
    }
    return v;
  }

  std::map<std::int64_t, std::int64_t> parse_term() {
    std::map<std::int64_t, std::int64_t> term;
    if (peek_digit() || (pos_ < text_.size() && text_[pos_] == '-')) {
      // A coefficient: only a literal unit is tolerated.
      const std::size_t start = pos_;
      if (text_[pos_] == '-') ++pos_;
      while (peek_digit()) ++pos_;
      const std::string coeff = text_.substr(start, pos_ - start);
      if (coeff != "1")
        throw Error(ErrorKind::CoefficientError, "coefficient " + coeff + " is not 1");
      if (pos_ >= text_.size() || text_[pos_] != '*') fail("constant terms are not allowed");
      ++pos_;
    }
    parse_factor(term);
    while (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      parse_factor(term);
    }
    return term;
  }

  void parse_factor(std::map<std::int64_t, std::int64_t>& term) {
    expect('x');
    const std::int64_t index = parse_nat();
    std::int64_t exponent = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      exponent = parse_nat();
    }
    term[index] += exponent;
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

InvertiblePolynomial parse(std::string_view text, const ParseOptions& options,
                           std::vector<std::string>* warnings) {
  const auto terms = Parser(text).parse_poly();
  std::int64_t nvars = 0;
  for (const auto& t : terms)
    for (const auto& [index, e] : t) nvars = std::max(nvars, index);
  if (static_cast<std::size_t>(nvars) != terms.size())
    throw Error(ErrorKind::NotInvertible, std::to_string(terms.size()) + " monomials in " +
                                              std::to_string(nvars) + " variables");
  ExponentMatrix m(terms.size(), std::vector<std::int64_t>(terms.size(), 0));
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (const auto& [index, e] : terms[i]) m[i][index - 1] = e;
  return InvertiblePolynomial(std::move(m), options.allow_nonstandard, warnings);
}

InvertiblePolynomial transpose(const InvertiblePolynomial& p) {
  const std::size_t n = p.nvars();
  ExponentMatrix t(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = p(i, j);
  return InvertiblePolynomial(std::move(t), true);
}

WeightSystem weights(const InvertiblePolynomial& p) {
  const std::size_t n = p.nvars();
  // Gauss-Jordan over Q on [A | 1].
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(p(i, j));
    aug[i][n] = Rational(1);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && aug[r][c] == 0) ++r;
    if (r == n) throw Error(ErrorKind::NoPositiveSolution, "singular exponent matrix");
    std::swap(aug[r], aug[c]);
    const Rational pivot = aug[c][c];
    for (auto& v : aug[c]) v /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      const Rational f = aug[i][c];
      for (std::size_t j = c; j <= n; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  // d_i / h = aug[i][n]; clear denominators.
  Integer h(1);
  for (std::size_t i = 0; i < n; ++i) {
    const Integer den = boost::multiprecision::denominator(aug[i][n]);
    h = h / boost::multiprecision::gcd(h, den) * den;
  }
  WeightSystem ws;
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational scaled = aug[i][n] * Rational(h);
    const Integer di = boost::multiprecision::numerator(scaled);
    if (di <= 0) throw Error(ErrorKind::NoPositiveSolution, "weight system is not positive");
    ws.d.push_back(to_int64(di));
    sum += ws.d.back();
  }
  ws.h = to_int64(h);
  // Clearing the lcm of denominators already yields gcd(d, h) == 1.
  ws.d0 = ws.h - sum;
  return ws;
}

}  // namespace mfhh
