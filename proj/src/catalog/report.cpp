#include "strata/catalog/report.hpp"

#include <algorithm>
#include <sstream>

namespace strata::catalog {

using strata::to_string;

using nlohmann::ordered_json;

std::optional<Format> parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "markdown") return Format::markdown;
  if (name == "csv") return Format::csv;
  return std::nullopt;
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string opt(const std::optional<std::string>& s) { return s ? *s : "-"; }

}  // namespace

std::string Table::markdown() const {
  std::ostringstream out;
  out << '|';
  for (const auto& h : header) out << ' ' << md_cell(h) << " |";
  out << "\n|";
  for (std::size_t k = 0; k < header.size(); ++k) out << "---|";
  out << '\n';
  for (const auto& row : rows) {
    out << '|';
    for (const auto& c : row) out << ' ' << md_cell(c) << " |";
    out << '\n';
  }
  return out.str();
}

std::string Table::csv() const {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "," : "") << csv_cell(cells[k]);
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out.str();
}

std::string Table::text() const {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t k = 0; k < header.size(); ++k) width[k] = header[k].size();
  for (const auto& row : rows)
    for (std::size_t k = 0; k < row.size() && k < width.size(); ++k) width[k] = std::max(width[k], row[k].size());
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      s += cells[k];
      if (k + 1 < cells.size()) s += std::string(width[k] - cells[k].size() + 2, ' ');
    }
    out << s << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out.str();
}

std::string render_table(const Table& table, Format format, const std::string& json_kind) {
  switch (format) {
    case Format::markdown:
      return table.markdown();
    case Format::csv:
      return table.csv();
    case Format::text:
      return table.text();
    case Format::json: {
      ordered_json j;
      j["schema_version"] = kSchemaVersion;
      j["kind"] = json_kind;
      ordered_json rows = ordered_json::array();
      for (const auto& row : table.rows) {
        ordered_json r;
        for (std::size_t k = 0; k < table.header.size(); ++k) r[table.header[k]] = row[k];
        rows.push_back(r);
      }
      j["rows"] = rows;
      return j.dump(2) + "\n";
    }
  }
  return {};
}

ordered_json claims_json(const ClaimRun& run) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "claims";
  ordered_json claims = ordered_json::array();
  for (const auto& r : run.results) {
    ordered_json c;
    c["id"] = r.claim.id;
    c["status"] = r.pass ? "pass" : "fail";
    c["description"] = r.claim.description;
    c["anchor"] = r.claim.anchor;
    c["operation"] = r.claim.operation;
    c["expected"] = r.claim.expected;
    c["observed"] = r.observed;
    c["details"] = r.details;
    if (!r.error.empty()) c["error"] = r.error;
    claims.push_back(c);
  }
  j["claims"] = claims;
  j["summary"] = {{"total", run.results.size()},
                  {"passed", run.passed()},
                  {"failed", run.results.size() - run.passed()}};
  return j;
}

std::string render_claims(const ClaimRun& run, Format format) {
  if (format == Format::json) return claims_json(run).dump(2) + "\n";
  if (format == Format::text) {
    std::ostringstream out;
    for (const auto& r : run.results) {
      out << (r.pass ? "PASS " : "FAIL ") << r.claim.id << ": " << r.claim.description << '\n'
          << "     anchor: " << r.claim.anchor << '\n'
          << "     observed: " << r.observed << " (expected " << r.claim.expected << ")\n";
      if (!r.error.empty()) out << "     error: " << r.error << '\n';
    }
    out << run.passed() << '/' << run.results.size() << " claims pass\n";
    return out.str();
  }
  Table t{{"id", "status", "description", "anchor", "expected", "observed"}, {}};
  for (const auto& r : run.results)
    t.rows.push_back({r.claim.id, r.pass ? "pass" : "fail", r.claim.description, r.claim.anchor,
                      r.claim.expected, r.error.empty() ? r.observed : r.observed + " (" + r.error + ")"});
  return render_table(t, format, "claims");
}

ordered_json catalog_json(const std::vector<StratumRecord>& records) {
  auto checks = dimension_consistency(records);
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "catalog";
  ordered_json rows = ordered_json::array();
  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto& r = records[k];
    auto maybe = [](const std::optional<std::string>& s) { return s ? ordered_json(*s) : ordered_json(nullptr); };
    ordered_json o;
    o["name"] = r.name;
    o["partition"] = r.partition;
    o["record_kind"] = to_string(r.kind);
    o["hyperelliptic"] = r.hyperelliptic;
    o["dim_H"] = r.dim_H;
    o["dim_PH"] = r.dim_PH;
    o["kodaira_type"] = maybe(r.kodaira_type);
    o["ambient_root_type"] = maybe(r.ambient_root_type);
    o["boundary_subsystem_type"] = maybe(r.boundary_subsystem_type);
    o["model"] = r.model.text();
    o["model_dimension"] = checks[k].model_dimension;
    o["dimension_consistent"] = checks[k].ok;
    o["fundamental_group_ref"] = maybe(r.fundamental_group_ref);
    o["notes"] = r.notes;
    o["anchors"] = r.anchors;
    rows.push_back(o);
  }
  j["records"] = rows;
  return j;
}

std::string render_catalog(const std::vector<StratumRecord>& records, Format format) {
  if (format == Format::json) return catalog_json(records).dump(2) + "\n";
  auto checks = dimension_consistency(records);
  Table t{{"stratum", "kind", "Kodaira type", "root system", "boundary", "dim H", "dim PH", "model",
           "model dim", "consistent", "group"},
          {}};
  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto& r = records[k];
    t.rows.push_back({r.name, to_string(r.kind), opt(r.kodaira_type), opt(r.ambient_root_type),
                      opt(r.boundary_subsystem_type), std::to_string(r.dim_H), std::to_string(r.dim_PH),
                      r.model.text(), std::to_string(checks[k].model_dimension), checks[k].ok ? "yes" : "no",
                      r.fundamental_group_ref ? *r.fundamental_group_ref : "not emitted"});
  }
  return render_table(t, format, "catalog");
}

Table exceptional_table(const delpezzo::LabeledDictionary& dict, const delpezzo::EpsilonCharacter& eps) {
  Table t{{"index", "l", "e1", "e2", "e3", "e4", "e5", "e6", "e7", "class", "sign", "pair", "partner", "epsilon"},
          {}};
  for (std::size_t i = 0; i < dict.size(); ++i) {
    const auto& v = dict.classes()[i];
    const auto& label = dict.labels()[i];
    std::vector<std::string> row{std::to_string(i)};
    for (std::size_t k = 0; k < v.size(); ++k) row.push_back(to_string(v[k]));
    row.push_back(v.expression());
    row.push_back(std::string(1, label.sign));
    row.push_back("{b" + std::to_string(label.first) + ",b" + std::to_string(label.second) + "}");
    row.push_back(std::to_string(dict.partner_index(i)));
    row.push_back(eps(v) > 0 ? "+1" : "-1");
    t.rows.push_back(std::move(row));
  }
  return t;
}

ordered_json exceptional_json(const delpezzo::LabeledDictionary& dict, const delpezzo::EpsilonCharacter& eps) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "exceptional";
  j["basis"] = {"l", "e1", "e2", "e3", "e4", "e5", "e6", "e7"};
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < dict.size(); ++i) {
    const auto& v = dict.classes()[i];
    const auto& label = dict.labels()[i];
    std::vector<long> coords;
    for (std::size_t k = 0; k < v.size(); ++k) coords.push_back(to_integer(v[k]).convert_to<long>());
    rows.push_back({{"index", i},
                    {"coords", coords},
                    {"class", v.expression()},
                    {"sign", std::string(1, label.sign)},
                    {"pair", {label.first, label.second}},
                    {"partner", dict.partner_index(i)},
                    {"epsilon", eps(v)}});
  }
  j["classes"] = rows;
  return j;
}

std::string render_exceptional(Format format) {
  auto dict = delpezzo::label_exceptionals(delpezzo::build_picard());
  auto eps = delpezzo::epsilon_character(dict);
  if (format == Format::json) return exceptional_json(dict, eps).dump(2) + "\n";
  return render_table(exceptional_table(dict, eps), format, "exceptional");
}

}  // namespace strata::catalog
