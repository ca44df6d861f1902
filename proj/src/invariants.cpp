#include "mfhh/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace mfhh {

namespace {

std::vector<std::int64_t> scan_order(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (int parity : {0, 1})
    for (std::int64_t d = hi; d >= lo; --d)
      if (((d % 2) + 2) % 2 == parity) out.push_back(d);
  return out;
}

bool has_nonzero(const std::vector<std::int64_t>& w) {
  return std::any_of(w.begin(), w.end(), [](std::int64_t q) { return q != 0; });
}

std::size_t count_zero(const std::vector<std::int64_t>& w) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), 0));
}

bool matches(const std::vector<std::int64_t>& left, const std::vector<std::int64_t>& right, const Rational& c) {
  if (left.size() != right.size()) return false;
  std::vector<Rational> mapped, target;
  for (auto q : left) mapped.push_back(c * q);
  for (auto q : right) target.emplace_back(q);
  std::sort(mapped.begin(), mapped.end());
  std::sort(target.begin(), target.end());
  return mapped == target;
}

// Ratio right/left at the first position where both are nonzero.
std::optional<Rational> paired_ratio(const std::vector<std::int64_t>& left, std::vector<std::int64_t> right,
                                     bool reversed) {
  if (left.size() != right.size()) return std::nullopt;
  if (reversed) std::reverse(right.begin(), right.end());
  for (std::size_t i = 0; i < left.size(); ++i)
    if (left[i] != 0 && right[i] != 0) {
      const Rational c = Rational(right[i]) / left[i];
      if ((c > 0) == reversed) return std::nullopt;
      return c;
    }
  return std::nullopt;
}

}  // namespace

const char* to_string(ScaleVerdict::Outcome outcome) {
  switch (outcome) {
    case ScaleVerdict::Outcome::Equivalent: return "Equivalent";
    case ScaleVerdict::Outcome::Distinguished: return "Distinguished";
    case ScaleVerdict::Outcome::InconclusiveWindow: return "InconclusiveWindow";
  }
  return "?";
}

ScaleVerdict scale_compare(const BigradedTable& t1, const BigradedTable& t2) {
  const std::int64_t lo = std::max(t1.window().dmin, t2.window().dmin);
  const std::int64_t hi = std::min(t1.window().dmax, t2.window().dmax);
  if (lo > hi) throw Error(ErrorKind::WindowMismatch, "tables have disjoint windows");

  ScaleVerdict v;
  v.window = {lo, std::min<std::int64_t>(hi, -1)};
  if (v.window.dmin > v.window.dmax) return v;
  const auto order = scan_order(v.window.dmin, v.window.dmax);
  bool any1 = false, any2 = false;
  for (auto d : order) {
    any1 = any1 || t1.dim(d) > 0;
    any2 = any2 || t2.dim(d) > 0;
  }
  if (!any1 || !any2) return v;

  std::vector<Rational> candidates;
  std::optional<std::int64_t> informative;
  for (auto d : order) {
    const auto wl = t1.weights(d), wr = t2.weights(d);
    if (!has_nonzero(wl) || !has_nonzero(wr)) continue;
    informative = d;
    for (bool reversed : {false, true})
      if (auto c = paired_ratio(wl, wr, reversed)) candidates.push_back(*c);
    break;
  }
  if (!informative) candidates.push_back(Rational(1));

  std::optional<std::int64_t> witness;
  std::size_t latest = 0;
  for (const auto& c : candidates) {
    std::size_t i = 0;
    while (i < order.size() && matches(t1.weights(order[i]), t2.weights(order[i]), c)) ++i;
    if (i == order.size()) {
      v.outcome = ScaleVerdict::Outcome::Equivalent;
      v.c = c;
      return v;
    }
    if (!witness || i > latest) {
      witness = order[i];
      latest = i;
    }
  }
  if (!witness) {
    // No admissible scale at all: report the first degree that no c can
    // match, else the degree that produced no candidate.
    for (auto d : order) {
      const auto wl = t1.weights(d), wr = t2.weights(d);
      if (wl.size() != wr.size() || count_zero(wl) != count_zero(wr)) {
        witness = d;
        break;
      }
    }
    if (!witness) witness = informative;
  }
  v.outcome = ScaleVerdict::Outcome::Distinguished;
  v.witness_degree = *witness;
  v.witness_left = t1.weights(*witness);
  v.witness_right = t2.weights(*witness);
  return v;
}

BigradedTable rescale(const BigradedTable& t, const Rational& c) {
  if (c == 0) throw std::invalid_argument("scale factor must be nonzero");
  BigradedTable out(t.window());
  for (const auto& [cell, dim] : t.cells()) {
    const Rational q = c * cell.second;
    if (boost::multiprecision::denominator(q) != 1)
      throw std::invalid_argument("rescaled weight is not an integer");
    out.add(cell.first, to_int64(boost::multiprecision::numerator(q)), dim);
  }
  return out;
}

SmallResVerdict small_res_probe(const BigradedTable& t) {
  if (t.window().dmin > -1 || t.window().dmax < -1)
    throw Error(ErrorKind::WindowMismatch, "the probe needs a window containing degree -1");
  SmallResVerdict v;
  v.window = {t.window().dmin, -1};
  v.rank = t.dim(-1);
  for (std::int64_t d = v.window.dmax; d >= v.window.dmin; --d)
    if (t.dim(d) != v.rank) v.witnesses.push_back(d);
  v.constant = v.witnesses.empty();
  return v;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::bp_cA: return "bp_cA";
    case Family::can_cA: return "can_cA";
    case Family::bp_cD4: return "bp_cD4";
    case Family::laufer: return "laufer";
    case Family::bp_cE6: return "bp_cE6";
    case Family::bp_cE8: return "bp_cE8";
  }
  return "?";
}

Family family_from_string(const std::string& name) {
  for (Family f : {Family::bp_cA, Family::can_cA, Family::bp_cD4, Family::laufer, Family::bp_cE6, Family::bp_cE8})
    if (to_string(f) == name) return f;
  throw Error(ErrorKind::UnknownFamily, "unknown family '" + name + "'");
}

InvertiblePolynomial family_polynomial(Family f, int l, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  auto diag = [](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return InvertiblePolynomial({{a, 0, 0, 0}, {0, b, 0, 0}, {0, 0, c, 0}, {0, 0, 0, d}});
  };
  switch (f) {
    case Family::bp_cA:
      if (l < 1) throw std::invalid_argument("bp_cA needs l >= 1");
      return diag(2, 2, l + 1, static_cast<std::int64_t>(k) * (l + 1));
    case Family::can_cA:
      if (l < 2) throw std::invalid_argument("can_cA needs l >= 2");
      return InvertiblePolynomial({{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, l, 1}, {0, 0, 1, k * (l - 1) + 1}});
    case Family::bp_cD4: return diag(2, 3, 3, 6 * k);
    case Family::laufer:
      return InvertiblePolynomial({{3, 1, 0, 0}, {0, 2 * k + 1, 1, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}});
    case Family::bp_cE6: return diag(2, 3, 4, 12 * k);
    case Family::bp_cE8: return diag(2, 3, 5, 30 * k);
  }
  throw Error(ErrorKind::UnknownFamily, "unknown family");
}

std::int64_t expected_hh3(Family f, int l, int k) {
  switch (f) {
    case Family::bp_cA: return static_cast<std::int64_t>(l) * (k * (l + 1) - 1);
    case Family::can_cA: return static_cast<std::int64_t>(k * l + 1) * (l - 1);
    case Family::bp_cD4: return 24 * k - 4;
    case Family::laufer: return 6 * k + 5;
    case Family::bp_cE6: return 72 * k - 6;
    case Family::bp_cE8: return 240 * k - 8;
  }
  return 0;
}

std::int64_t expected_negative_rank(Family f, int l, int) {
  switch (f) {
    case Family::bp_cA:
    case Family::can_cA: return l;
    case Family::bp_cD4: return 4;
    case Family::laufer: return 1;
    case Family::bp_cE6: return 6;
    case Family::bp_cE8: return 8;
  }
  return 0;
}

GoldenReport golden_check(Family f, int l, int k, EngineOptions options) {
  GoldenReport r;
  r.family = f;
  r.l = l;
  r.k = k;
  r.conditional = f == Family::laufer;
  const auto p = family_polynomial(f, l, k);
  r.polynomial = p.to_string();
  r.window = {-4 * (k + 1), 8};
  const auto table = compute_table(p, r.window, std::move(options));

  auto expect = [&](std::int64_t d, std::int64_t want) {
    const auto got = table.dim(d);
    if (got != want)
      r.mismatches.push_back("dim HH^" + std::to_string(d) + ": expected " + std::to_string(want) + ", got " +
                             std::to_string(got));
  };
  expect(3, expected_hh3(f, l, k));
  for (std::int64_t d = r.window.dmin; d <= 1; ++d) expect(d, expected_negative_rank(f, l, k));
  expect(2, 0);
  for (std::int64_t d = 4; d <= 8; ++d) expect(d, 0);
  r.hh2_vanishes = table.dim(2) == 0;
  r.passed = r.mismatches.empty();
  return r;
}

}  // namespace mfhh
