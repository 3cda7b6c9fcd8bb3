#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "strata/catalog/catalog.hpp"
#include "strata/catalog/claims.hpp"
#include "strata/delpezzo/picard.hpp"

namespace strata::catalog {

constexpr int kSchemaVersion = 1;

enum class Format { text, json, markdown, csv };

std::optional<Format> parse_format(const std::string& name);

// Rows of a report: a header and string cells, rendered uniformly.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string markdown() const;
  std::string csv() const;
  std::string text() const;  // space-aligned columns
};

nlohmann::ordered_json claims_json(const ClaimRun& run);
std::string render_claims(const ClaimRun& run, Format format);

nlohmann::ordered_json catalog_json(const std::vector<StratumRecord>& records);
std::string render_catalog(const std::vector<StratumRecord>& records, Format format);

// The 56 labelled exceptional classes: index, coordinates on (l, e1..e7),
// expression, sign, pair, partner index, epsilon.
Table exceptional_table(const delpezzo::LabeledDictionary& dict,
                        const delpezzo::EpsilonCharacter& eps);
nlohmann::ordered_json exceptional_json(const delpezzo::LabeledDictionary& dict,
                                        const delpezzo::EpsilonCharacter& eps);
std::string render_exceptional(Format format);

std::string render_table(const Table& table, Format format, const std::string& json_kind);

}  // namespace strata::catalog
