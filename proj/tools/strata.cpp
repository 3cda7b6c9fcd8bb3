#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "strata/artin/presentation.hpp"
#include "strata/catalog/catalog.hpp"
#include "strata/catalog/claims.hpp"
#include "strata/catalog/report.hpp"
#include "strata/coxeter/affine.hpp"
#include "strata/degeneration/central_fiber.hpp"

namespace {

using namespace strata;
using catalog::Format;
using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kClaimFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  std::string cache_dir;
  bool no_cache = false;
};

Format table_format(const Globals& g) {
  auto f = catalog::parse_format(g.format);
  if (!f) throw UsageError("--format " + g.format + " is only valid for 'present'");
  return *f;
}

std::filesystem::path default_cache_dir() {
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "strata";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "strata";
  return std::filesystem::temp_directory_path() / "strata-cache";
}

int cmd_verify(const Globals& g, const std::vector<std::string>& ids) {
  auto format = table_format(g);
  std::optional<lattice::OrbitCache> cache;
  if (!g.no_cache) {
    std::filesystem::path dir = g.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(g.cache_dir);
    std::filesystem::create_directories(dir);
    cache.emplace(dir);
  }
  catalog::ClaimRun run;
  try {
    run = catalog::run_claims(ids, {.cache = cache ? &*cache : nullptr});
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  std::cout << catalog::render_claims(run, format);
  return run.ok() ? kOk : kClaimFailure;
}

int cmd_present(const Globals& g, const std::string& ref) {
  artin::GroupPresentation p;
  try {
    p = catalog::presentation_for(ref);
  } catch (const Error& e) {
    std::string known;
    for (const auto& r : catalog::presentation_refs()) known += (known.empty() ? "" : ", ") + r;
    throw UsageError(std::string(e.what()) + " (known: " + known + ")");
  }
  if (g.format == "json") {
    ordered_json j;
    j["schema_version"] = catalog::kSchemaVersion;
    j.update(p.to_json());
    std::cout << j.dump(2) << '\n';
  } else if (g.format == "text") {
    std::cout << p.to_text();
  } else if (g.format == "gap-style") {
    std::cout << p.to_gap_style();
  } else {
    throw UsageError("'present' supports --format json, text or gap-style");
  }
  return kOk;
}

coxeter::AffineRealization affine_or_usage(const std::string& type) {
  try {
    return coxeter::build_affine(type);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

int cmd_quasi_special(const Globals& g, const std::string& type) {
  auto format = table_format(g);
  auto real = affine_or_usage(type);
  catalog::Table t{{"vertex", "subdiagram", "quasi_special", "g"}, {}};
  for (const auto& q : coxeter::quasi_special_report(real))
    t.rows.push_back({std::to_string(q.vertex), q.subdiagram, q.g ? "yes" : "no",
                      q.g ? coxeter::to_string(*q.g) : "-"});
  std::cout << catalog::render_table(t, format, "quasi_special");
  return kOk;
}

int cmd_translation(const Globals& g, const std::string& type, int i, int j) {
  auto format = table_format(g);
  auto real = affine_or_usage(type);
  for (int v : {i, j})
    if (!real.diagram().contains(v)) throw UsageError("vertex " + std::to_string(v) + " is not in " + real.name());
  if (!coxeter::quasi_special(real, i) || !coxeter::quasi_special(real, j))
    throw UsageError("both vertices must be quasi-special");
  auto t = coxeter::translation_of_pair(real, i, j);
  std::vector<std::string> coords;
  for (const auto& c : t) coords.push_back(to_string(c));
  if (format == Format::json) {
    ordered_json out;
    out["schema_version"] = catalog::kSchemaVersion;
    out["kind"] = "translation";
    out["type"] = real.name();
    out["i"] = i;
    out["j"] = j;
    out["coordinates"] = "simple roots";
    out["translation"] = coords;
    std::cout << out.dump(2) << '\n';
  } else {
    catalog::Table tab{{"type", "i", "j", "translation"}, {{real.name(), std::to_string(i), std::to_string(j),
                                                            to_string(t)}}};
    std::cout << catalog::render_table(tab, format, "translation");
  }
  return kOk;
}

int cmd_degeneration(const Globals& g) {
  auto format = table_format(g);
  auto dict = delpezzo::label_exceptionals(delpezzo::build_picard());
  auto eps = delpezzo::epsilon_character(dict);
  auto inter = degeneration::verify_limit_intersections();
  auto map = degeneration::verify_limit_map(dict);
  auto spec = degeneration::lemma_specialize(dict, eps);
  auto perm = degeneration::permutation_weyl_iso(dict, eps);
  bool rays = degeneration::check_ray_constants();
  auto yes = [](bool b) { return std::string(b ? "ok" : "FAIL"); };
  catalog::Table t{{"check", "value", "status"}, {}};
  t.rows.push_back({"limit intersections", std::to_string(inter.pairs_checked) + " pairs", yes(inter.ok())});
  t.rows.push_back({"limit map labels", "56 classes", yes(map.labels_match)});
  t.rows.push_back({"limit map intersections", "56x56", yes(map.intersections_preserved)});
  t.rows.push_back({"roots specializing", std::to_string(spec.specializing) + "/" + std::to_string(spec.roots),
                    yes(spec.matches_epsilon && spec.matches_shape)});
  t.rows.push_back({"S(B) image order", std::to_string(perm.image_order), yes(perm.injective && perm.all_isometries)});
  t.rows.push_back({"transpositions are reflections", "", yes(perm.transpositions_are_reflections)});
  t.rows.push_back({"iota = -1 on roots", "", yes(perm.iota_is_minus_one_on_roots)});
  t.rows.push_back({"ray constants", "", yes(rays)});
  std::cout << catalog::render_table(t, format, "degeneration");
  bool ok = inter.ok() && map.labels_match && map.intersections_preserved && spec.matches_epsilon &&
            spec.matches_shape && perm.injective && perm.all_isometries && perm.transpositions_are_reflections &&
            perm.iota_is_minus_one_on_roots && rays;
  return ok ? kOk : kClaimFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-3 strata of abelian differentials: catalog, checks and presentations"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format: text, json, markdown, csv (present: json, text, gap-style)")
      ->check(CLI::IsMember({"text", "json", "markdown", "csv", "gap-style"}));
  app.add_option("--cache-dir", g.cache_dir, "Orbit cache directory")->envname("STRATA_CACHE");
  app.add_flag("--no-cache", g.no_cache, "Do not read or write the orbit cache");

  int status = kOk;

  auto* table = app.add_subcommand("table", "Catalog of genus-3 strata with dimension checks");
  table->callback([&] { status = (std::cout << catalog::render_catalog(catalog::catalog(), table_format(g)), kOk); });

  std::vector<std::string> claim_ids;
  auto* verify = app.add_subcommand("verify", "Run the claim registry");
  verify->add_option("--claim", claim_ids, "Claim id (repeatable)");
  verify->callback([&] { status = cmd_verify(g, claim_ids); });

  auto* exceptional = app.add_subcommand("exceptional", "Labelled exceptional classes of Pic");
  exceptional->callback([&] { status = (std::cout << catalog::render_exceptional(table_format(g)), kOk); });

  std::string ref;
  auto* present = app.add_subcommand("present", "Emit a group presentation");
  present->add_option("stratum", ref, "2,1^2 | 2,2 | 2,2/terminal | artin/E6 | artin/E7 | braid/7 | braid/8")
      ->required();
  present->callback([&] { status = cmd_present(g, ref); });

  auto* cox = app.add_subcommand("coxeter", "Affine Coxeter queries");
  cox->require_subcommand(1);
  std::string qs_type;
  auto* qs = cox->add_subcommand("quasi-special", "Quasi-special vertices of E6~ or E7~");
  qs->add_option("type", qs_type, "E6~ or E7~")->required();
  qs->callback([&] { status = cmd_quasi_special(g, qs_type); });
  std::string tr_type;
  int tr_i = 0, tr_j = 0;
  auto* tr = cox->add_subcommand("translation", "Translation s_j s_i for quasi-special i, j");
  tr->add_option("type", tr_type, "E6~ or E7~")->required();
  tr->add_option("i", tr_i)->required();
  tr->add_option("j", tr_j)->required();
  tr->callback([&] { status = cmd_translation(g, tr_type, tr_i, tr_j); });

  auto* degen = app.add_subcommand("degeneration", "Central fiber checks");
  degen->require_subcommand(1);
  auto* dverify = degen->add_subcommand("verify", "Run the central fiber checks");
  dverify->callback([&] { status = cmd_degeneration(g); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kClaimFailure;
  }
  return status;
}
