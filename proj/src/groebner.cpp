#include "mfhh/groebner.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace mfhh::groebner {

namespace {

int variable_at(const MonomialOrder& order, std::size_t rank) {
  return order.priority.empty() ? static_cast<int>(rank) : static_cast<int>(order.priority[rank]);
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exponents difference(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

// Reduces f by `basis` until no term is divisible by a leading monomial.
Polynomial reduce(Polynomial f, const std::vector<Polynomial>& basis) {
  Polynomial rest(f.nvars(), *f.terms().key_comp().order);
  while (!f.is_zero()) {
    const Exponents lm = f.leading_monomial();
    const Rational lc = f.leading_coefficient();
    bool reduced = false;
    for (const auto& g : basis) {
      if (!divides(g.leading_monomial(), lm)) continue;
      f.subtract_multiple(lc / g.leading_coefficient(), difference(lm, g.leading_monomial()), g);
      reduced = true;
      break;
    }
    if (!reduced) {
      rest.add_term(lm, lc);
      f.add_term(lm, -lc);
    }
  }
  return rest;
}

}  // namespace

bool MonomialOrder::less(const Exponents& a, const Exponents& b) const {
  const std::size_t n = a.size();
  if (kind == OrderKind::GradedReverseLex) {
    long da = 0, db = 0;
    for (std::size_t i = 0; i < n; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db;
    // Ties: the monomial with the larger exponent in the least significant
    // differing variable is smaller.
    for (std::size_t r = n; r-- > 0;) {
      const int v = variable_at(*this, r);
      if (a[v] != b[v]) return a[v] > b[v];
    }
    return false;
  }
  for (std::size_t r = 0; r < n; ++r) {
    const int v = variable_at(*this, r);
    if (a[v] != b[v]) return a[v] < b[v];
  }
  return false;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::subtract_multiple(const Rational& c, const Exponents& shift, const Polynomial& other) {
  Exponents e(nvars_);
  for (const auto& [mono, coeff] : other.terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) e[i] = mono[i] + shift[i];
    add_term(e, -c * coeff);
  }
}

void Polynomial::make_monic() {
  if (is_zero()) return;
  const Rational lc = leading_coefficient();
  for (auto& [mono, coeff] : terms_) coeff /= lc;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  return reduce(f, basis);
}

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> generators, const MonomialOrder& order) {
  std::vector<Polynomial> G;
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    g.make_monic();
    G.push_back(std::move(g));
  }
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    const Exponents& li = G[i].leading_monomial();
    const Exponents& lj = G[j].leading_monomial();
    if (coprime(li, lj)) continue;
    const Exponents l = lcm(li, lj);
    Polynomial s(G[i].nvars(), order);
    s.subtract_multiple(Rational(-1), difference(l, li), G[i]);
    s.subtract_multiple(Rational(1), difference(l, lj), G[j]);
    Polynomial r = reduce(std::move(s), G);
    if (r.is_zero()) continue;
    r.make_monic();
    G.push_back(std::move(r));
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
  }

  // Minimalize, then interreduce.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || !divides(G[j].leading_monomial(), G[i].leading_monomial())) continue;
      // Equal leading monomials: keep the earliest.
      redundant = G[j].leading_monomial() != G[i].leading_monomial() || j < i;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial tail(minimal[i].nvars(), order);
    const Exponents lm = minimal[i].leading_monomial();
    Polynomial rest = minimal[i];
    rest.add_term(lm, -rest.leading_coefficient());
    tail = reduce(std::move(rest), others);
    tail.add_term(lm, Rational(1));
    reduced.push_back(std::move(tail));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_monomial(), b.leading_monomial());
  });
  return reduced;
}

std::optional<std::vector<Exponents>> standard_monomials(const std::vector<Polynomial>& basis,
                                                         std::size_t nvars) {
  if (nvars == 0) return std::vector<Exponents>{Exponents{}};
  for (const auto& g : basis)
    if (g.leading_monomial() == Exponents(nvars, 0)) return std::vector<Exponents>{};

  // Zero-dimensional iff every variable has a pure power among the leading
  // monomials; those powers bound the staircase.
  std::vector<int> bound(nvars, -1);
  for (const auto& g : basis) {
    const auto& lm = g.leading_monomial();
    int support = -1, count = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (lm[i] > 0) {
        support = static_cast<int>(i);
        ++count;
      }
    if (count == 1 && (bound[support] < 0 || lm[support] < bound[support]))
      bound[support] = lm[support];
  }
  for (int b : bound)
    if (b < 0) return std::nullopt;

  std::vector<Exponents> out;
  Exponents e(nvars, 0);
  while (true) {
    bool standard = true;
    for (const auto& g : basis)
      if (divides(g.leading_monomial(), e)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(e);
    std::size_t pos = nvars;
    while (pos-- > 0) {
      if (++e[pos] < bound[pos]) break;
      e[pos] = 0;
      if (pos == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
  }
}

}  // namespace mfhh::groebner
