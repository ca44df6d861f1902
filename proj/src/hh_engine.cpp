#include "mfhh/hh_engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <sstream>
#include <thread>
#include <tuple>

namespace mfhh {

char to_char(MonomialKind kind) {
  switch (kind) {
    case MonomialKind::A: return 'A';
    case MonomialKind::B: return 'B';
    case MonomialKind::C: return 'C';
  }
  return '?';
}

std::string GammaMonomial::to_string() const {
  std::vector<std::string> factors;
  auto power = [](std::size_t j, std::int64_t e) {
    std::string s = "x" + std::to_string(j);
    if (e != 1) s += "^" + std::to_string(e);
    return s;
  };
  if (kind == MonomialKind::A) {
    if (beta > 0) factors.push_back(power(0, beta));
  } else if (kind == MonomialKind::B) {
    if (beta > 0) factors.push_back(power(0, beta));
    factors.push_back("x0^v");
  } else {
    factors.push_back("x0^v");
  }
  for (std::size_t j = 1; j < b.size(); ++j) {
    if (b[j] < 0)
      factors.push_back("x" + std::to_string(j) + "^v");
    else if (b[j] > 0)
      factors.push_back(power(j, b[j]));
  }
  if (factors.empty()) return "1";
  std::string out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out += "*" + factors[i];
  return out;
}

BigradedTable::BigradedTable(Window window) : window_(window) {
  validate_window(window);
  complete_.assign(static_cast<std::size_t>(window.dmax - window.dmin + 1), true);
}

void BigradedTable::add(std::int64_t d, std::int64_t q, std::int64_t dim) {
  if (!window_.contains(d)) throw Error(ErrorKind::WindowMismatch, "degree outside the table window");
  if (dim == 0) return;
  auto& cell = cells_[{d, q}];
  cell += dim;
  if (cell == 0) cells_.erase({d, q});
}

void BigradedTable::merge(const BigradedTable& other) {
  if (!(other.window_ == window_)) throw Error(ErrorKind::WindowMismatch, "cannot merge tables on different windows");
  for (const auto& [cell, dim] : other.cells_) add(cell.first, cell.second, dim);
  for (std::size_t i = 0; i < complete_.size(); ++i) complete_[i] = complete_[i] && other.complete_[i];
}

std::int64_t BigradedTable::dim(std::int64_t d) const {
  std::int64_t total = 0;
  for (auto it = cells_.lower_bound({d, INT64_MIN}); it != cells_.end() && it->first.first == d; ++it)
    total += it->second;
  return total;
}

std::int64_t BigradedTable::dim(std::int64_t d, std::int64_t q) const {
  auto it = cells_.find({d, q});
  return it == cells_.end() ? 0 : it->second;
}

std::vector<std::int64_t> BigradedTable::weights(std::int64_t d) const {
  std::vector<std::int64_t> out;
  for (auto it = cells_.lower_bound({d, INT64_MIN}); it != cells_.end() && it->first.first == d; ++it)
    out.insert(out.end(), static_cast<std::size_t>(it->second), it->first.second);
  return out;
}

bool BigradedTable::complete(std::int64_t d) const {
  return window_.contains(d) && complete_[static_cast<std::size_t>(d - window_.dmin)];
}

void BigradedTable::set_complete(bool value) { complete_.assign(complete_.size(), value); }

BigradedTable BigradedTable::restricted(Window w) const {
  validate_window(w);
  if (w.dmin < window_.dmin || w.dmax > window_.dmax)
    throw Error(ErrorKind::WindowMismatch, "restriction window is not contained in the table window");
  BigradedTable out(w);
  for (const auto& [cell, dim] : cells_)
    if (w.contains(cell.first)) out.cells_[cell] = dim;
  for (std::int64_t d = w.dmin; d <= w.dmax; ++d)
    out.complete_[static_cast<std::size_t>(d - w.dmin)] = complete(d);
  return out;
}

void validate_window(Window window) {
  if (window.dmin > window.dmax)
    throw Error(ErrorKind::WindowMismatch,
                "empty window [" + std::to_string(window.dmin) + ", " + std::to_string(window.dmax) + "]");
}

unsigned resolve_threads(unsigned requested) {
  unsigned threads = requested ? requested : std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HH_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) threads = std::min(threads, static_cast<unsigned>(cap));
  }
  return threads;
}

Engine::Engine(const InvertiblePolynomial& p, EngineOptions options)
    : ctx_(p),
      cache_(p, options.basis ? std::move(options.basis) : order_provider(MonomialOrder::grevlex())),
      threads_(resolve_threads(options.threads)) {}

std::vector<Contribution> Engine::contributions_for(const GroupElement& gamma, Window window) const {
  validate_window(window);
  const auto& p = ctx_.polynomial();
  const std::size_t N = p.nvars();
  const std::int64_t n = p.n();
  const std::int64_t k = gamma.fixed_count();
  const auto basis = cache_.get(gamma.fixed);

  std::vector<Contribution> out;
  auto emit = [&](MonomialKind kind, const lattice::IntVector& b, const Exponents& jac, std::int64_t beta,
                  std::int64_t u, std::int64_t degree) {
    Contribution c;
    c.gamma = gamma;
    c.monomial.kind = kind;
    c.monomial.b.resize(N + 1);
    for (std::size_t j = 0; j <= N; ++j) c.monomial.b[j] = to_int64(b(static_cast<Eigen::Index>(j)));
    c.monomial.jac_monomial = jac;
    c.monomial.beta = beta;
    c.u = u;
    c.degree = degree;
    c.weight = c.monomial.b[0];
    out.push_back(std::move(c));
  };

  for (const auto& jac : basis->monomials) {
    lattice::IntVector b(static_cast<Eigen::Index>(N + 1));
    b(0) = 0;
    for (std::size_t j = 1; j <= N; ++j) b(static_cast<Eigen::Index>(j)) = -1;
    for (std::size_t i = 0; i < basis->variables.size(); ++i)
      b(static_cast<Eigen::Index>(basis->variables[i] + 1)) = jac[i];

    if (!gamma.fixes_x0()) {
      b(0) = -1;
      if (auto u = ctx_.chi_power(b)) {
        const std::int64_t degree = 2 * to_int64(*u) + n - k + 2;
        if (window.contains(degree)) emit(MonomialKind::C, b, jac, 0, to_int64(*u), degree);
      }
      continue;
    }

    for (MonomialKind kind : {MonomialKind::A, MonomialKind::B}) {
      const std::int64_t b0 = kind == MonomialKind::A ? 0 : -1;
      const std::int64_t shift = kind == MonomialKind::A ? n - k + 1 : n - k + 2;
      b(0) = b0;
      const auto fam = ctx_.beta_family(b);
      if (!fam) continue;
      // degree(t) = 2*(u0 + t*du) + shift, beta(t) = beta0 + t*dbeta with t >= 0.
      const Integer base = 2 * fam->u0 + shift;
      const Integer slope = 2 * fam->du;
      if (slope == 0) {
        if (base >= window.dmin && base <= window.dmax)
          throw Error(ErrorKind::NonterminatingFamily,
                      "infinitely many contributions in degree " + base.str() + " (d0 = 0)");
        continue;
      }
      const Integer lo = Integer(window.dmin) - base;
      const Integer hi = Integer(window.dmax) - base;
      Integer tlo = slope > 0 ? ceil_div(lo, slope) : ceil_div(hi, slope);
      const Integer thi = slope > 0 ? floor_div(hi, slope) : floor_div(lo, slope);
      if (tlo < 0) tlo = 0;
      for (Integer t = tlo; t <= thi; ++t) {
        const Integer beta = fam->beta0 + t * fam->dbeta;
        const Integer u = fam->u0 + t * fam->du;
        lattice::IntVector bt = b;
        bt(0) = beta + b0;
        emit(kind, bt, jac, to_int64(beta), to_int64(u), to_int64(2 * u + shift));
      }
    }
  }
  return out;
}

BigradedTable Engine::compute_table(Window window) const {
  validate_window(window);
  const auto elements = ker_chi(ctx_);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads_, elements.size()));
  std::vector<BigradedTable> partial(workers, BigradedTable(window));
  std::vector<std::exception_ptr> errors(workers);

  auto work = [&](std::size_t w) {
    try {
      for (std::size_t i = w; i < elements.size(); i += workers)
        for (const auto& c : contributions_for(elements[i], window)) partial[w].add(c.degree, c.weight);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  BigradedTable table(window);
  for (const auto& part : partial) table.merge(part);
  return table;
}

std::vector<Contribution> Engine::list_contributions(Window window) const {
  std::vector<Contribution> out;
  for (const auto& g : ker_chi(ctx_)) {
    auto part = contributions_for(g, window);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::stable_sort(out.begin(), out.end(), [](const Contribution& a, const Contribution& b) {
    return std::tie(a.degree, a.monomial.kind, a.gamma.phases, a.monomial.b) <
           std::tie(b.degree, b.monomial.kind, b.gamma.phases, b.monomial.b);
  });
  return out;
}

BigradedTable compute_table(const InvertiblePolynomial& p, Window window, EngineOptions options) {
  return Engine(p, std::move(options)).compute_table(window);
}

std::vector<Contribution> list_contributions(const InvertiblePolynomial& p, Window window,
                                             EngineOptions options) {
  return Engine(p, std::move(options)).list_contributions(window);
}

bool hh2_vanishes(const InvertiblePolynomial& p, EngineOptions options) {
  return compute_table(p, {2, 2}, std::move(options)).dim(2) == 0;
}

}  // namespace mfhh
