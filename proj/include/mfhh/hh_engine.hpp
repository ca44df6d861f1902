#pragma once

// Hochschild cohomology of mf(A^{n+2}, Gamma_w, w) as a sum of
// one-dimensional contributions (gamma, m), bigraded by degree and the total
// x0-exponent b0.

#include "mfhh/jacobian.hpp"
#include "mfhh/symmetry.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mfhh {

enum class MonomialKind { A, B, C };

char to_char(MonomialKind kind);

/// b[j] is the total exponent of x_j; dual markers count as -1.
struct GammaMonomial {
  MonomialKind kind = MonomialKind::A;
  std::vector<std::int64_t> b;
  Exponents jac_monomial;  // over the fixed variables of gamma
  std::int64_t beta = 0;   // kinds A and B only

  /// e.g. "x0^4*x1*x2^3" or "x0^v*x1^v*x2^2*x4^v"; "1" for the unit.
  std::string to_string() const;
};

struct Contribution {
  GroupElement gamma;
  GammaMonomial monomial;
  std::int64_t u = 0;
  std::int64_t degree = 0;
  std::int64_t weight = 0;  // b0
};

struct Window {
  std::int64_t dmin = 0;
  std::int64_t dmax = 0;

  bool contains(std::int64_t d) const { return dmin <= d && d <= dmax; }
  friend bool operator==(const Window&, const Window&) = default;
};

class BigradedTable {
 public:
  using Cell = std::pair<std::int64_t, std::int64_t>;  // (degree, weight)

  BigradedTable() = default;
  explicit BigradedTable(Window window);

  const Window& window() const { return window_; }
  const std::map<Cell, std::int64_t>& cells() const { return cells_; }

  /// Adds `dim` to cell (d, q); d must lie in the window.
  void add(std::int64_t d, std::int64_t q, std::int64_t dim = 1);
  void merge(const BigradedTable& other);

  std::int64_t dim(std::int64_t d) const;
  std::int64_t dim(std::int64_t d, std::int64_t q) const;
  /// Weights in degree d with multiplicity, ascending.
  std::vector<std::int64_t> weights(std::int64_t d) const;

  /// True when every contribution in degree d was provably enumerated.
  bool complete(std::int64_t d) const;
  void set_complete(bool value);

  BigradedTable restricted(Window w) const;

  friend bool operator==(const BigradedTable&, const BigradedTable&) = default;

 private:
  Window window_;
  std::map<Cell, std::int64_t> cells_;
  std::vector<bool> complete_;
};

struct EngineOptions {
  /// Jacobian bases; defaults to degrevlex standard monomials.
  BasisProvider basis;
  /// 0 means: HH_THREADS if set, otherwise hardware concurrency.
  unsigned threads = 0;
};

/// Worker count after applying HH_THREADS.
unsigned resolve_threads(unsigned requested);

class Engine {
 public:
  explicit Engine(const InvertiblePolynomial& p, EngineOptions options = {});

  const SymmetryContext& context() const { return ctx_; }

  /// All (gamma, m) with chi(m) = chi^u and degree inside the window.
  /// Throws Error(NonterminatingFamily) when a whole A/B family stays at
  /// one in-window degree.
  std::vector<Contribution> contributions_for(const GroupElement& gamma, Window window) const;

  BigradedTable compute_table(Window window) const;

  /// Sorted by (degree, kind, phases, b).
  std::vector<Contribution> list_contributions(Window window) const;

 private:
  SymmetryContext ctx_;
  BasisCache cache_;
  unsigned threads_;
};

void validate_window(Window window);

BigradedTable compute_table(const InvertiblePolynomial& p, Window window, EngineOptions options = {});
std::vector<Contribution> list_contributions(const InvertiblePolynomial& p, Window window,
                                             EngineOptions options = {});
bool hh2_vanishes(const InvertiblePolynomial& p, EngineOptions options = {});

}  // namespace mfhh
