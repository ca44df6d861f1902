#pragma once

// The "v1" table document: JSON, CSV and pretty renderings.

#include "mfhh/hh_engine.hpp"
#include "mfhh/invariants.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mfhh {

inline constexpr const char* kSchemaVersion = "v1";
inline constexpr const char* kToolVersion = "mfhh 1.0.0";

struct ContributionRecord {
  std::string gamma;     // phases, e.g. "[0,1/2,1/3,0]"
  std::string fixed;     // e.g. "{0,2,3}"
  std::string monomial;  // GammaMonomial::to_string
  char kind = 'A';
  std::vector<std::int64_t> b;
  std::int64_t u = 0, degree = 0, weight = 0;

  friend bool operator==(const ContributionRecord&, const ContributionRecord&) = default;
};

ContributionRecord to_record(const Contribution& c, std::size_t nvars);

struct TableDocument {
  ExponentMatrix poly;
  ExponentMatrix transpose;
  WeightSystem weights;
  std::int64_t ker_chi_order = 0;
  bool hh2_vanishes = true;
  BigradedTable table;
  std::optional<std::vector<ContributionRecord>> contributions;
  std::string tool_version = kToolVersion;

  friend bool operator==(const TableDocument&, const TableDocument&) = default;
};

/// Runs the engine and fills every field.
TableDocument make_document(const InvertiblePolynomial& p, Window window, bool with_contributions,
                            EngineOptions options = {});

/// Key-sorted, two-space indented JSON.
std::string to_json(const TableDocument& doc);
/// Throws Error(SchemaError) on malformed input.
TableDocument document_from_json(const std::string& text);

/// "degree,weight,dim" followed by one row per nonzero cell.
std::string to_csv(const BigradedTable& table);

/// Degree rows (descending), weight columns.
std::string to_pretty(const TableDocument& doc);

std::string format_verdict(const ScaleVerdict& v);
std::string format_verdict(const SmallResVerdict& v);
std::string format_report(const GoldenReport& r);

}  // namespace mfhh
