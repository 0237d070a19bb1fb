#include "torusq/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace torusq {

namespace {

using Json = nlohmann::ordered_json;

Json matrix_json(const Matrix& m, int conductor) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string(conductor));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json build(const QuotientReport& r) {
  const int n = r.conductor;
  Json j;
  j["conductor"] = n;
  j["group"] = {{"order", r.group_order}, {"classes", r.class_count}, {"primitive", r.primitive}};
  j["representation"] = {{"degree", r.degree},
                         {"faithful", r.faithful},
                         {"decomposition", r.decomposition},
                         {"constituent_indicators", r.constituent_indicators}};
  j["h10"] = r.h10;
  j["h20"] = r.h20;
  j["symplectic_class"] = to_string(r.symplectic_class);
  j["homogeneous_decomplexification"] = r.homogeneous_decomplexification;
  Json witnesses = Json::array();
  for (std::size_t i = 0; i < r.eigenvalue_one.failing_classes.size(); ++i) {
    witnesses.push_back({{"class", r.eigenvalue_one.failing_classes[i]}, {"order", r.eigenvalue_one.failing_orders[i]}});
  }
  j["eigenvalue_one"] = {{"all", r.eigenvalue_one.all}, {"failing", std::move(witnesses)}};
  j["verdict"] = std::string(to_string(r.verdict));
  j["verdict_summary"] = std::string(summary(r.verdict));
  if (r.invariant_form) {
    j["invariant_form"] = {{"degenerate", r.invariant_form_degenerate},
                           {"matrix", matrix_json(r.invariant_form->matrix(), n)}};
  } else {
    j["invariant_form"] = nullptr;
  }
  if (r.supplied_form) {
    j["supplied_form"] = {{"preserved", r.supplied_form->preserved}, {"degenerate", r.supplied_form->degenerate}};
  } else {
    j["supplied_form"] = nullptr;
  }
  if (r.lattice_preserved) {
    j["lattice"] = {{"omega", r.lattice_omega->to_string(n)}, {"preserved", *r.lattice_preserved}};
  } else {
    j["lattice"] = nullptr;
  }
  if (r.fibration) {
    j["fibration"] = {{"v1", matrix_json(r.fibration->v1, n)}, {"v2", matrix_json(r.fibration->v2, n)}};
  } else {
    j["fibration"] = nullptr;
  }
  return j;
}

bool is_scalar_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
}

std::string scalar(const Json& j) {
  if (j.is_null()) return "none";
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string inline_array(const Json& j) {
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) s += ", ";
    s += scalar(j[i]);
  }
  return s + "]";
}

void render(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) render(value, path.empty() ? key : path + "." + key, out);
    return;
  }
  if (j.is_array() && !is_scalar_array(j)) {
    if (j.empty()) {
      out << path << ": []\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string item = path + "[" + std::to_string(i) + "]";
      if (is_scalar_array(j[i])) {
        out << item << ": " << inline_array(j[i]) << "\n";
      } else {
        render(j[i], item, out);
      }
    }
    return;
  }
  out << path << ": " << (j.is_array() ? inline_array(j) : scalar(j)) << "\n";
}

Json build_table(const CharacterTable& t) {
  const FiniteGroup& g = t.group();
  const int n = std::lcm(g.conductor(), t.conductor());
  Json classes = Json::array();
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    classes.push_back({{"size", g.class_size(c)}, {"order", g.element_order(g.class_representative(c))}});
  }
  Json rows = Json::array();
  for (const auto& chi : t.irreducibles()) {
    Json values = Json::array();
    for (const auto& v : chi.values()) values.push_back(v.to_string(n));
    rows.push_back({{"degree", chi.integer_degree()}, {"indicator", frobenius_schur(chi)}, {"values", values}});
  }
  Json j;
  j["conductor"] = n;
  j["order"] = g.order();
  j["prime"] = t.prime();
  j["classes"] = std::move(classes);
  j["irreducibles"] = std::move(rows);
  return j;
}

}  // namespace

std::string report_json(const QuotientReport& report, int indent) { return build(report).dump(indent); }

std::string report_text(const QuotientReport& report) {
  std::ostringstream out;
  render(build(report), "", out);
  return out.str();
}

std::string table_json(const CharacterTable& table, int indent) { return build_table(table).dump(indent); }

std::string table_text(const CharacterTable& table) {
  const Json j = build_table(table);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"", "ind"};
  std::vector<std::string> sizes{"size", ""};
  std::vector<std::string> orders{"order", ""};
  for (std::size_t c = 0; c < j["classes"].size(); ++c) {
    header.push_back("c" + std::to_string(c));
    sizes.push_back(j["classes"][c]["size"].dump());
    orders.push_back(j["classes"][c]["order"].dump());
  }
  cells.push_back(header);
  cells.push_back(sizes);
  cells.push_back(orders);
  for (std::size_t i = 0; i < j["irreducibles"].size(); ++i) {
    const auto& row = j["irreducibles"][i];
    std::vector<std::string> line{"X." + std::to_string(i + 1), row["indicator"].dump()};
    for (const auto& v : row["values"]) line.push_back(v.get<std::string>());
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  std::ostringstream out;
  out << "order " << j["order"].dump() << ", " << (header.size() - 2) << " classes, z = E(" << j["conductor"].dump()
      << ")\n";
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << (c ? "  " : "") << line[c] << std::string(width[c] - line[c].size(), ' ');
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace torusq
