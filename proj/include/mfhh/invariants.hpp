#pragma once

// Contact invariants read off bigraded tables: scale equivalence, the
// small-resolution rank probe and closed-form checks for the golden families.

#include "mfhh/hh_engine.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mfhh {

struct ScaleVerdict {
  enum class Outcome { Equivalent, Distinguished, InconclusiveWindow };

  Outcome outcome = Outcome::InconclusiveWindow;
  Window window;  // the compared degrees: common window intersected with d < 0
  Rational c{1};  // Equivalent only
  // Distinguished only:
  std::int64_t witness_degree = 0;
  std::vector<std::int64_t> witness_left, witness_right;
};

const char* to_string(ScaleVerdict::Outcome outcome);

/// Decides whether dim V^{d,q} = dim W^{d,cq} for some rational c != 0 on the
/// negative part of the common window. Degrees are scanned even first, then
/// odd, each descending. Throws Error(WindowMismatch) when the windows do not
/// overlap.
ScaleVerdict scale_compare(const BigradedTable& t1, const BigradedTable& t2);

/// Multiplies every weight by c; throws std::invalid_argument if some
/// weight leaves the integers.
BigradedTable rescale(const BigradedTable& t, const Rational& c);

struct SmallResVerdict {
  bool constant = false;
  std::int64_t rank = 0;                 // dim in degree -1
  std::vector<std::int64_t> witnesses;   // degrees whose dim differs from rank
  Window window;
};

/// Requires the table window to contain [dmin, -1] for some dmin <= -1.
SmallResVerdict small_res_probe(const BigradedTable& t);

enum class Family { bp_cA, can_cA, bp_cD4, laufer, bp_cE6, bp_cE8 };

std::string to_string(Family f);
/// Throws Error(UnknownFamily).
Family family_from_string(const std::string& name);

/// The polynomial whose HH computes SH of the family member's Milnor fibre
/// (the Berglund-Hubsch transpose of the singularity). Throws
/// std::invalid_argument for parameters outside the family.
InvertiblePolynomial family_polynomial(Family f, int l, int k);

/// Closed forms: dim HH^3 and the constant rank in degrees <= 1.
std::int64_t expected_hh3(Family f, int l, int k);
std::int64_t expected_negative_rank(Family f, int l, int k);

struct GoldenReport {
  Family family;
  int l = 0, k = 0;
  std::string polynomial;
  Window window;
  bool passed = true;
  bool hh2_vanishes = true;
  bool conditional = false;  // Laufer outputs rely on an unproven mirror statement
  std::vector<std::string> mismatches;
};

/// Checks HH^3, the constant rank on [-4(k+1), 1], HH^2 = 0 and HH^4..8 = 0.
GoldenReport golden_check(Family f, int l, int k, EngineOptions options = {});

}  // namespace mfhh
