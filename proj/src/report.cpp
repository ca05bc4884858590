#include "eqc/report.hpp"

#include <algorithm>
#include <sstream>

namespace eqc {

namespace {

using Row = std::pair<std::string, std::vector<std::string>>;

// Left-justified row labels, right-justified cells sharing one column width.
std::string align(const std::vector<Row>& rows) {
  std::size_t label_w = 0, cell_w = 1;
  for (const auto& [label, cells] : rows) {
    label_w = std::max(label_w, label.size());
    for (const auto& c : cells) cell_w = std::max(cell_w, c.size());
  }
  std::ostringstream out;
  for (const auto& [label, cells] : rows) {
    std::string line = label + std::string(label_w - label.size(), ' ');
    for (const auto& c : cells) line += ' ' + std::string(cell_w - c.size() + 1, ' ') + c;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::vector<std::string> cells(const HilbertTable& t) {
  std::vector<std::string> out;
  for (long long v : t.dims) out.push_back(std::to_string(v));
  return out;
}

std::vector<std::string> degree_cells(int max_degree) {
  std::vector<std::string> out;
  for (int d = 0; d <= max_degree; ++d) out.push_back(std::to_string(d));
  return out;
}

Json dims_json(const HilbertTable& t) { return Json(t.dims); }

}  // namespace

Json hilbert_to_json(const HilbertTable& t, const std::string& label) {
  return {{"label", label}, {"max_degree", t.max_degree()}, {"dims", dims_json(t)}, {"checksum", t.checksum()}};
}

Json cohomology_to_json(const CohomologyReport& r, const std::string& label) {
  Json out = hilbert_to_json(r.table, label);
  if (!r.representatives.empty()) {
    Json reps = Json::array();
    for (int d = 0; d < static_cast<int>(r.representatives.size()); ++d) {
      Json classes = Json::array();
      for (const auto& x : r.representatives[d]) classes.push_back(element_to_json(x));
      reps.push_back({{"degree", d}, {"classes", classes}});
    }
    out["representatives"] = reps;
  }
  return out;
}

Json report_to_json(const VerificationReport& r) {
  Json degrees = Json::array();
  for (const auto& v : r.degrees)
    degrees.push_back({{"degree", v.degree}, {"a", v.a}, {"b", v.b}, {"match", v.match}});
  Json checks = Json::array();
  for (const auto& c : r.cross_checks)
    checks.push_back({{"name", c.name}, {"got", dims_json(c.got)}, {"expected", dims_json(c.expected)},
                      {"match", c.match}});
  return {{"check", r.check},
          {"subject", r.subject},
          {"cutoff", r.cutoff},
          {"pass", r.pass},
          {"a", {{"label", r.label_a}, {"dims", dims_json(r.a)}}},
          {"b", {{"label", r.label_b}, {"dims", dims_json(r.b)}}},
          {"degrees", degrees},
          {"cross_checks", checks},
          {"notes", r.notes}};
}

Json batch_to_json(const std::vector<VerificationReport>& reports) {
  Json list = Json::array();
  std::size_t passed = 0;
  for (const auto& r : reports) {
    list.push_back(report_to_json(r));
    passed += r.pass ? 1 : 0;
  }
  return {{"pass", passed == reports.size()},
          {"total", reports.size()},
          {"passed", passed},
          {"reports", list}};
}

std::string hilbert_to_text(const HilbertTable& t, const std::string& label) {
  std::ostringstream out;
  if (!label.empty()) out << label << '\n';
  out << align({{"degree", degree_cells(t.max_degree())}, {"dim", cells(t)}});
  out << "checksum " << t.checksum() << '\n';
  return out.str();
}

std::string cohomology_to_text(const CohomologyReport& r, const std::string& label) {
  std::ostringstream out;
  out << hilbert_to_text(r.table, label);
  for (int d = 0; d < static_cast<int>(r.representatives.size()); ++d)
    for (const auto& x : r.representatives[d]) out << "H^" << d << ": " << x.to_string() << '\n';
  return out.str();
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << r.check << ' ' << r.subject << " D=" << r.cutoff << ' ' << (r.pass ? "PASS" : "FAIL") << '\n';
  std::vector<std::string> match;
  for (const auto& v : r.degrees) match.push_back(v.match ? "=" : "X");
  out << align({{"degree", degree_cells(r.cutoff)}, {r.label_a, cells(r.a)}, {r.label_b, cells(r.b)},
                {"match", match}});
  out << "checksum " << r.a.checksum() << " vs " << r.b.checksum() << '\n';
  for (const auto& c : r.cross_checks) {
    out << "cross-check " << c.name << ": " << (c.match ? "PASS" : "FAIL") << '\n';
    if (!c.match) out << "  got      " << to_string(c.got) << "\n  expected " << to_string(c.expected) << '\n';
  }
  for (const auto& n : r.notes) out << "note: " << n << '\n';
  return out.str();
}

std::string batch_to_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& r : reports) {
    out << report_to_text(r) << '\n';
    passed += r.pass ? 1 : 0;
  }
  out << passed << '/' << reports.size() << " checks passed\n";
  return out.str();
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.pass; });
}

}  // namespace eqc
