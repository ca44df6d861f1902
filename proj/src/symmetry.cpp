#include "mfhh/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace mfhh {

int GroupElement::fixed_count() const {
  return std::popcount(fixed & ~VariableSet{1});
}

Rational GroupElement::phase_x0() const {
  Rational s(0);
  for (const auto& p : phases) s += p;
  return frac(-s);
}

SymmetryContext::SymmetryContext(InvertiblePolynomial p)
    : p_(std::move(p)), weights_(weights(p_)) {
  const auto N = static_cast<Eigen::Index>(p_.nvars());
  relations_.resize(N, N + 1);
  for (Eigen::Index i = 0; i < N; ++i) {
    relations_(i, 0) = -1;
    for (Eigen::Index j = 0; j < N; ++j) relations_(i, j + 1) = Integer(p_(i, j) - 1);
  }

  lattice::IntMatrix with_one(N + 1, N + 1);
  for (Eigen::Index j = 0; j <= N; ++j) with_one(0, j) = 1;
  with_one.bottomRows(N) = relations_;
  chi_smith_ = lattice::smith(with_one);
  if (chi_smith_.rank != N + 1)
    throw Error(ErrorKind::DegenerateCharacter, "the character chi has finite order");

  lattice::IntMatrix family(N + 2, N + 1);
  for (Eigen::Index j = 0; j <= N; ++j) {
    family(0, j) = j == 0 ? 1 : 0;
    family(1, j) = -1;
  }
  family.bottomRows(N) = relations_;
  family_smith_ = lattice::smith(family);
  // Exactly one homogeneous direction since [1; R] has full rank.
  const lattice::IntVector hom = family_smith_.U.bottomRows(1);
  homogeneous_.dbeta = hom(0);
  homogeneous_.du = hom(1);
  if (homogeneous_.dbeta < 0) {
    homogeneous_.dbeta = -homogeneous_.dbeta;
    homogeneous_.du = -homogeneous_.du;
  }

  lattice::IntMatrix A(N, N);
  for (Eigen::Index i = 0; i < N; ++i)
    for (Eigen::Index j = 0; j < N; ++j) A(i, j) = Integer(p_(i, j));
  kernel_ = lattice::quotient(A);
}

std::optional<Integer> SymmetryContext::chi_power(const lattice::IntVector& b) const {
  auto sol = lattice::solve(chi_smith_, b);
  if (!sol) return std::nullopt;
  return sol->particular(0);
}

std::optional<AffineFamily> SymmetryContext::beta_family(const lattice::IntVector& b) const {
  const lattice::IntVector rhs = -b;
  auto sol = lattice::solve(family_smith_, rhs);
  if (!sol) return std::nullopt;
  AffineFamily fam = homogeneous_;
  fam.beta0 = sol->particular(0);
  fam.u0 = sol->particular(1);
  // Normalize so that 0 <= beta0 < dbeta.
  const Integer shift = floor_div(fam.beta0, fam.dbeta);
  fam.beta0 -= shift * fam.dbeta;
  fam.u0 -= shift * fam.du;
  return fam;
}

GroupElement SymmetryContext::make_element(std::vector<Rational> phases) const {
  GroupElement g;
  g.phases = std::move(phases);
  for (std::size_t j = 0; j < g.phases.size(); ++j)
    if (g.phases[j] == 0) g.fixed |= VariableSet{1} << (j + 1);
  if (g.phase_x0() == 0) g.fixed |= 1;
  return g;
}

void SymmetryContext::for_each_element(const std::function<void(const GroupElement&)>& visit) const {
  kernel_.for_each([&](const std::vector<Rational>& phases) { visit(make_element(phases)); });
}

SymmetryContext build_context(const InvertiblePolynomial& p) { return SymmetryContext(p); }

std::vector<GroupElement> ker_chi(const SymmetryContext& ctx) {
  std::vector<GroupElement> out;
  ctx.for_each_element([&](const GroupElement& g) { out.push_back(g); });
  std::sort(out.begin(), out.end(),
            [](const GroupElement& a, const GroupElement& b) { return a.phases < b.phases; });
  return out;
}

std::map<VariableSet, std::int64_t> fixed_census(const SymmetryContext& ctx) {
  std::map<VariableSet, std::int64_t> census;
  ctx.for_each_element([&](const GroupElement& g) { ++census[g.fixed]; });
  return census;
}

std::string format_variable_set(VariableSet s, std::size_t nvars_total) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t v = 0; v < nvars_total; ++v) {
    if (!((s >> v) & 1U)) continue;
    if (!first) os << ',';
    first = false;
    os << v;
  }
  os << '}';
  return os.str();
}

VariableSet make_variable_set(std::initializer_list<int> vars) {
  VariableSet s = 0;
  for (int v : vars) s |= VariableSet{1} << v;
  return s;
}

}  // namespace mfhh
