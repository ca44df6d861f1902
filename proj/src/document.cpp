#include "mfhh/document.hpp"

#include <json.hpp>

#include <iomanip>
#include <set>
#include <sstream>

namespace mfhh {

namespace {

using nlohmann::json;

json poly_json(const ExponentMatrix& m) { return json{{"vars", m.size()}, {"rows", m}}; }

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorKind::SchemaError, what); }

std::string phases_string(const GroupElement& g) {
  std::string s = "[";
  for (std::size_t i = 0; i < g.phases.size(); ++i) {
    if (i) s += ',';
    s += g.phases[i].str();
  }
  return s + "]";
}

ExponentMatrix poly_from_json(const json& j) {
  const auto vars = j.at("vars").get<std::size_t>();
  auto rows = j.at("rows").get<ExponentMatrix>();
  if (rows.size() != vars) schema_error("poly.rows does not have poly.vars rows");
  return rows;
}

}  // namespace

ContributionRecord to_record(const Contribution& c, std::size_t nvars) {
  ContributionRecord r;
  r.gamma = phases_string(c.gamma);
  r.fixed = format_variable_set(c.gamma.fixed, nvars + 1);
  r.monomial = c.monomial.to_string();
  r.kind = to_char(c.monomial.kind);
  r.b = c.monomial.b;
  r.u = c.u;
  r.degree = c.degree;
  r.weight = c.weight;
  return r;
}

TableDocument make_document(const InvertiblePolynomial& p, Window window, bool with_contributions,
                            EngineOptions options) {
  const Engine engine(p, std::move(options));
  TableDocument doc;
  doc.poly = p.matrix();
  doc.transpose = transpose(p).matrix();
  doc.weights = engine.context().weight_system();
  doc.ker_chi_order = to_int64(engine.context().kernel_order());
  doc.table = engine.compute_table(window);
  doc.hh2_vanishes = window.contains(2) ? doc.table.dim(2) == 0 : engine.compute_table({2, 2}).dim(2) == 0;
  if (with_contributions) {
    std::vector<ContributionRecord> records;
    for (const auto& c : engine.list_contributions(window)) records.push_back(to_record(c, p.nvars()));
    doc.contributions = std::move(records);
  }
  return doc;
}

std::string to_json(const TableDocument& doc) {
  json j;
  j["schema"] = kSchemaVersion;
  j["poly"] = poly_json(doc.poly);
  j["transpose"] = poly_json(doc.transpose);
  j["weights"] = {{"d", doc.weights.d}, {"h", doc.weights.h}, {"d0", doc.weights.d0}};
  j["ker_chi_order"] = doc.ker_chi_order;
  j["hh2_vanishes"] = doc.hh2_vanishes;
  j["window"] = {doc.table.window().dmin, doc.table.window().dmax};
  json cells = json::array();
  for (const auto& [cell, dim] : doc.table.cells())
    cells.push_back({{"d", cell.first}, {"q", cell.second}, {"dim", dim}});
  j["cells"] = std::move(cells);
  if (doc.contributions) {
    json list = json::array();
    for (const auto& r : *doc.contributions)
      list.push_back({{"gamma", r.gamma},
                      {"fixed", r.fixed},
                      {"monomial", r.monomial},
                      {"kind", std::string(1, r.kind)},
                      {"b", r.b},
                      {"u", r.u},
                      {"degree", r.degree},
                      {"weight", r.weight}});
    j["contributions"] = std::move(list);
  }
  j["tool_version"] = doc.tool_version;
  return j.dump(2) + "\n";
}

TableDocument document_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    schema_error(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (j.at("schema").get<std::string>() != kSchemaVersion)
      schema_error("unsupported schema '" + j.at("schema").get<std::string>() + "'");
    TableDocument doc;
    doc.poly = poly_from_json(j.at("poly"));
    doc.transpose = poly_from_json(j.at("transpose"));
    const auto& w = j.at("weights");
    doc.weights.d = w.at("d").get<std::vector<std::int64_t>>();
    doc.weights.h = w.at("h").get<std::int64_t>();
    doc.weights.d0 = w.at("d0").get<std::int64_t>();
    doc.ker_chi_order = j.at("ker_chi_order").get<std::int64_t>();
    doc.hh2_vanishes = j.at("hh2_vanishes").get<bool>();
    const auto window = j.at("window").get<std::vector<std::int64_t>>();
    if (window.size() != 2) schema_error("window must have two entries");
    try {
      doc.table = BigradedTable({window[0], window[1]});
      for (const auto& c : j.at("cells")) {
        const auto dim = c.at("dim").get<std::int64_t>();
        if (dim <= 0) schema_error("cell dimensions must be positive");
        if (doc.table.dim(c.at("d").get<std::int64_t>(), c.at("q").get<std::int64_t>()) != 0)
          schema_error("repeated cell");
        doc.table.add(c.at("d").get<std::int64_t>(), c.at("q").get<std::int64_t>(), dim);
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SchemaError) throw;
      schema_error(e.what());
    }
    if (j.contains("contributions")) {
      std::vector<ContributionRecord> records;
      for (const auto& c : j.at("contributions")) {
        ContributionRecord r;
        r.gamma = c.at("gamma").get<std::string>();
        r.fixed = c.at("fixed").get<std::string>();
        r.monomial = c.at("monomial").get<std::string>();
        const auto kind = c.at("kind").get<std::string>();
        if (kind != "A" && kind != "B" && kind != "C") schema_error("bad contribution kind '" + kind + "'");
        r.kind = kind[0];
        r.b = c.at("b").get<std::vector<std::int64_t>>();
        r.u = c.at("u").get<std::int64_t>();
        r.degree = c.at("degree").get<std::int64_t>();
        r.weight = c.at("weight").get<std::int64_t>();
        records.push_back(std::move(r));
      }
      doc.contributions = std::move(records);
    }
    doc.tool_version = j.at("tool_version").get<std::string>();
    return doc;
  } catch (const json::exception& e) {
    schema_error(e.what());
  }
}

std::string to_csv(const BigradedTable& table) {
  std::ostringstream os;
  os << "degree,weight,dim\n";
  for (const auto& [cell, dim] : table.cells()) os << cell.first << ',' << cell.second << ',' << dim << '\n';
  return os.str();
}

std::string to_pretty(const TableDocument& doc) {
  std::ostringstream os;
  const InvertiblePolynomial p(doc.poly, true);
  const InvertiblePolynomial t(doc.transpose, true);
  os << "w          " << p.to_string() << '\n';
  os << "transpose  " << t.to_string() << '\n';
  os << "weights    (";
  for (std::size_t i = 0; i < doc.weights.d.size(); ++i) os << (i ? "," : "") << doc.weights.d[i];
  os << "; " << doc.weights.h << ")  d0 = " << doc.weights.d0 << '\n';
  os << "|ker chi|  " << doc.ker_chi_order << '\n';
  os << "HH^2 = 0   " << (doc.hh2_vanishes ? "yes" : "no") << '\n';
  const auto& w = doc.table.window();
  os << "window     [" << w.dmin << ", " << w.dmax << "]\n\n";

  std::set<std::int64_t> qs;
  for (const auto& [cell, dim] : doc.table.cells()) qs.insert(cell.second);
  const int width = 5;
  os << std::setw(6) << "d \\ q";
  for (auto q : qs) os << std::setw(width) << q;
  os << std::setw(width + 2) << "dim" << '\n';
  for (std::int64_t d = w.dmax; d >= w.dmin; --d) {
    os << std::setw(6) << d;
    for (auto q : qs) {
      const auto v = doc.table.dim(d, q);
      if (v)
        os << std::setw(width) << v;
      else
        os << std::setw(width) << '.';
    }
    os << std::setw(width + 2) << doc.table.dim(d) << '\n';
  }
  if (doc.contributions) {
    os << "\ncontributions\n";
    for (const auto& r : *doc.contributions)
      os << "  HH^" << r.degree << "  " << r.kind << "  " << r.monomial << "  u=" << r.u << "  gamma=" << r.gamma
         << " fixes " << r.fixed << '\n';
  }
  return os.str();
}

std::string format_verdict(const ScaleVerdict& v) {
  std::ostringstream os;
  os << to_string(v.outcome);
  auto list = [&](const std::vector<std::int64_t>& ws) {
    os << '{';
    for (std::size_t i = 0; i < ws.size(); ++i) os << (i ? "," : "") << ws[i];
    os << '}';
  };
  switch (v.outcome) {
    case ScaleVerdict::Outcome::Equivalent: os << " c=" << v.c.str(); break;
    case ScaleVerdict::Outcome::Distinguished:
      os << " d=" << v.witness_degree << " weights ";
      list(v.witness_left);
      os << " vs ";
      list(v.witness_right);
      break;
    case ScaleVerdict::Outcome::InconclusiveWindow: break;
  }
  os << " on degrees [" << v.window.dmin << ", " << v.window.dmax << "]\n";
  return os.str();
}

std::string format_verdict(const SmallResVerdict& v) {
  std::ostringstream os;
  if (v.constant) {
    os << "ConstantRank r=" << v.rank;
  } else {
    os << "NonConstant rank(-1)=" << v.rank << " differs at d=";
    for (std::size_t i = 0; i < v.witnesses.size(); ++i) os << (i ? "," : "") << v.witnesses[i];
  }
  os << " on degrees [" << v.window.dmin << ", " << v.window.dmax << "]\n";
  os << "note: tests the symplectic-cohomology criterion only, not the existence of a small resolution\n";
  return os.str();
}

std::string format_report(const GoldenReport& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "MISMATCH") << ' ' << to_string(r.family) << " l=" << r.l << " k=" << r.k << "  "
     << r.polynomial << "  window [" << r.window.dmin << ", " << r.window.dmax << "]\n";
  os << "HH^2 = 0: " << (r.hh2_vanishes ? "yes" : "no") << '\n';
  for (const auto& m : r.mismatches) os << "  " << m << '\n';
  if (r.conditional) os << "note: conditional on mirror symmetry for this family\n";
  return os.str();
}

}  // namespace mfhh
