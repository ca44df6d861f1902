#include "mfhh/jacobian.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>
#include <utility>

namespace mfhh {

namespace {

MonomialOrder localize(const MonomialOrder& order, const std::vector<std::size_t>& variables) {
  MonomialOrder local{order.kind, {}};
  if (order.priority.empty()) return local;
  for (std::size_t v : order.priority) {
    auto it = std::find(variables.begin(), variables.end(), v);
    if (it != variables.end()) local.priority.push_back(static_cast<std::size_t>(it - variables.begin()));
  }
  // Restricted variables missing from the priority list go last.
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (std::find(local.priority.begin(), local.priority.end(), i) == local.priority.end())
      local.priority.push_back(i);
  return local;
}

std::vector<groebner::Polynomial> jacobian_ideal(const RestrictedPolynomial& r, const MonomialOrder& order) {
  const std::size_t k = r.variables.size();
  std::vector<groebner::Polynomial> gens;
  for (std::size_t v = 0; v < k; ++v) {
    groebner::Polynomial d(k, order);
    for (const auto& t : r.terms) {
      if (t[v] == 0) continue;
      Exponents e = t;
      e[v] -= 1;
      d.add_term(e, Rational(t[v]));
    }
    gens.push_back(std::move(d));
  }
  return gens;
}

struct Reduced {
  std::vector<groebner::Polynomial> basis;
  std::vector<Exponents> standard;
};

Reduced reduce_ideal(const RestrictedPolynomial& r, const MonomialOrder& local) {
  Reduced out;
  out.basis = groebner::groebner_basis(jacobian_ideal(r, local), local);
  auto standard = groebner::standard_monomials(out.basis, r.variables.size());
  if (!standard)
    throw Error(ErrorKind::NotIsolated,
                "Jacobian ring of the restriction of " + r.parent.to_string() + " to " +
                    format_variable_set(r.fixed, r.parent.nvars() + 1) + " is infinite-dimensional");
  out.standard = std::move(*standard);
  return out;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

RestrictedPolynomial restrict(const InvertiblePolynomial& p, VariableSet fixed) {
  RestrictedPolynomial r{p, 0, {}, {}};
  for (std::size_t j = 0; j < p.nvars(); ++j)
    if ((fixed >> (j + 1)) & 1U) {
      r.fixed |= VariableSet{1} << (j + 1);
      r.variables.push_back(j);
    }
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    bool survives = true;
    for (std::size_t j = 0; j < p.nvars() && survives; ++j)
      if (p(i, j) > 0 && !((r.fixed >> (j + 1)) & 1U)) survives = false;
    if (!survives) continue;
    Exponents e;
    for (std::size_t v : r.variables) e.push_back(static_cast<int>(p(i, v)));
    r.terms.push_back(std::move(e));
  }
  return r;
}

MonomialBasis monomial_basis(const RestrictedPolynomial& r, const MonomialOrder& order) {
  MonomialBasis basis{r.variables, {}};
  if (r.variables.empty()) {
    basis.monomials.push_back({});
    return basis;
  }
  const MonomialOrder local = localize(order, r.variables);
  basis.monomials = reduce_ideal(r, local).standard;
  return basis;
}

std::size_t milnor_number(const InvertiblePolynomial& p) {
  VariableSet all = 0;
  for (std::size_t j = 1; j <= p.nvars(); ++j) all |= VariableSet{1} << j;
  return monomial_basis(restrict(p, all)).dimension();
}

MonomialBasis explicit_basis(const RestrictedPolynomial& r, std::vector<Exponents> monomials) {
  std::sort(monomials.begin(), monomials.end());
  if (std::adjacent_find(monomials.begin(), monomials.end()) != monomials.end())
    throw std::invalid_argument("explicit basis has repeated monomials");
  for (const auto& m : monomials)
    if (m.size() != r.variables.size() || std::any_of(m.begin(), m.end(), [](int e) { return e < 0; }))
      throw std::invalid_argument("explicit basis monomial has the wrong shape");
  MonomialBasis basis{r.variables, monomials};
  if (r.variables.empty()) {
    if (monomials != std::vector<Exponents>{Exponents{}})
      throw std::invalid_argument("the only basis of the ground field is {1}");
    return basis;
  }
  const MonomialOrder local = MonomialOrder::grevlex();
  const Reduced red = reduce_ideal(r, local);
  if (monomials.size() != red.standard.size())
    throw std::invalid_argument("explicit basis has " + std::to_string(monomials.size()) +
                                " elements, Jacobian ring has dimension " +
                                std::to_string(red.standard.size()));
  std::map<Exponents, std::size_t> column;
  for (std::size_t i = 0; i < red.standard.size(); ++i) column[red.standard[i]] = i;
  std::vector<std::vector<Rational>> rows;
  for (const auto& m : monomials) {
    groebner::Polynomial f(r.variables.size(), local);
    f.add_term(m, Rational(1));
    const auto nf = groebner::normal_form(f, red.basis);
    std::vector<Rational> row(red.standard.size(), Rational(0));
    for (const auto& [e, c] : nf.terms()) row[column.at(e)] = c;
    rows.push_back(std::move(row));
  }
  if (rational_rank(std::move(rows)) != monomials.size())
    throw std::invalid_argument("explicit basis is linearly dependent in the Jacobian ring");
  return basis;
}

BasisProvider order_provider(MonomialOrder order) {
  return [order = std::move(order)](const RestrictedPolynomial& r) { return monomial_basis(r, order); };
}

BasisProvider explicit_provider(std::map<VariableSet, std::vector<Exponents>> bases, MonomialOrder fallback) {
  return [bases = std::move(bases), fallback = std::move(fallback)](const RestrictedPolynomial& r) {
    auto it = bases.find(r.fixed);
    if (it == bases.end()) return monomial_basis(r, fallback);
    return explicit_basis(r, it->second);
  };
}

BasisCache::BasisCache(InvertiblePolynomial p, BasisProvider provider)
    : p_(std::move(p)), provider_(std::move(provider)) {}

std::shared_ptr<const MonomialBasis> BasisCache::get(VariableSet fixed) const {
  fixed &= ~VariableSet{1};
  {
    std::shared_lock lock(mutex_);
    auto it = bases_.find(fixed);
    if (it != bases_.end()) return it->second;
  }
  auto basis = std::make_shared<const MonomialBasis>(provider_(restrict(p_, fixed)));
  std::unique_lock lock(mutex_);
  return bases_.try_emplace(fixed, std::move(basis)).first->second;
}

}  // namespace mfhh
