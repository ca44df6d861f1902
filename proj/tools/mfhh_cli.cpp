#include "mfhh/document.hpp"
#include "mfhh/invariants.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace mfhh;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kEngineError = 3;
constexpr int kInconclusive = 4;

bool is_laufer(const ExponentMatrix& m) {
  if (m.size() != 4) return false;
  const auto c = m[1][1];
  return c >= 3 && c % 2 == 1 && m == ExponentMatrix{{3, 1, 0, 0}, {0, c, 1, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}};
}

const char* conditional_note = "note: conditional on mirror symmetry for this family\n";

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SchemaError, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

InvertiblePolynomial parse_input(const std::string& text, bool allow_nonstandard) {
  std::vector<std::string> warnings;
  auto p = parse(text, ParseOptions{allow_nonstandard}, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology tables of invertible polynomials"};
  app.require_subcommand(1);

  std::string poly;
  std::int64_t dmin = 0, dmax = 0;
  std::string format = "pretty";
  bool monomials = false, allow_nonstandard = false;
  auto* table = app.add_subcommand("table", "bigraded HH table of a polynomial");
  table->add_option("--poly", poly, "polynomial, e.g. x1^3*x2+x2^3*x3+x3^2+x4^2")->required();
  table->add_option("--dmin", dmin, "lowest degree")->required();
  table->add_option("--dmax", dmax, "highest degree")->required();
  table->add_option("--format", format, "pretty, json or csv")
      ->check(CLI::IsMember({"pretty", "json", "csv"}));
  table->add_flag("--monomials", monomials, "list every contribution");
  table->add_flag("--allow-nonstandard", allow_nonstandard, "accept non Fermat/chain/loop shapes");

  std::string left, right;
  auto* compare = app.add_subcommand("compare", "scale-equivalence of two JSON tables");
  compare->add_option("a", left, "first table document")->required();
  compare->add_option("b", right, "second table document")->required();

  auto* probe = app.add_subcommand("probe-small-res", "constant-rank test in negative degrees");
  probe->add_option("--poly", poly, "polynomial")->required();
  probe->add_option("--dmin", dmin, "lowest degree")->required();
  probe->add_flag("--allow-nonstandard", allow_nonstandard, "accept non Fermat/chain/loop shapes");

  std::string family;
  int l = 1, k = 1;
  auto* golden = app.add_subcommand("golden", "check a family against its closed forms");
  golden->add_option("--family", family, "bp_cA, can_cA, bp_cD4, laufer, bp_cE6 or bp_cE8")->required();
  golden->add_option("--l", l, "family parameter l");
  golden->add_option("--k", k, "family parameter k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*table) {
      const auto p = parse_input(poly, allow_nonstandard);
      const auto doc = make_document(p, {dmin, dmax}, monomials);
      if (format == "json")
        std::cout << to_json(doc);
      else if (format == "csv")
        std::cout << to_csv(doc.table);
      else
        std::cout << to_pretty(doc);
      return kOk;
    }
    if (*compare) {
      const auto a = document_from_json(read_file(left));
      const auto b = document_from_json(read_file(right));
      ScaleVerdict v;
      try {
        v = scale_compare(a.table, b.table);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::WindowMismatch) throw;
        std::cout << "InconclusiveWindow (" << e.what() << ")\n";
        return kInconclusive;
      }
      std::cout << format_verdict(v);
      if (is_laufer(a.poly) || is_laufer(b.poly)) std::cout << conditional_note;
      switch (v.outcome) {
        case ScaleVerdict::Outcome::Equivalent: return kOk;
        case ScaleVerdict::Outcome::Distinguished: return kNegative;
        case ScaleVerdict::Outcome::InconclusiveWindow: return kInconclusive;
      }
    }
    if (*probe) {
      const auto p = parse_input(poly, allow_nonstandard);
      if (dmin > -1) throw Error(ErrorKind::WindowMismatch, "--dmin must be negative");
      const auto v = small_res_probe(compute_table(p, {dmin, -1}));
      std::cout << format_verdict(v);
      if (is_laufer(p.matrix())) std::cout << conditional_note;
      return v.constant ? kOk : kNegative;
    }
    if (*golden) {
      const auto f = family_from_string(family);
      GoldenReport r;
      try {
        r = golden_check(f, l, k);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
      }
      std::cout << format_report(r);
      return r.passed ? kOk : kNegative;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::WindowMismatch) return kInputError;
    return e.is_input_error() ? kInputError : kEngineError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kEngineError;
  }
  return kOk;
}
