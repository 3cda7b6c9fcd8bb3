#include "strata/artin/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace strata::artin {

using nlohmann::ordered_json;

ArtinWord ArtinWord::positive(const std::vector<int>& gens) {
  ArtinWord w;
  for (int g : gens)
    w.letters.push_back({g, 1});
  return w;
}

ArtinWord ArtinWord::inverse() const {
  ArtinWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.push_back({it->gen, -it->exp});
  return w;
}

ArtinWord ArtinWord::operator*(const ArtinWord& other) const {
  ArtinWord w = *this;
  w.letters.insert(w.letters.end(), other.letters.begin(), other.letters.end());
  return w;
}

bool ArtinWord::is_positive() const {
  return std::all_of(letters.begin(), letters.end(), [](const Letter& l) { return l.exp == 1; });
}

std::string ArtinWord::str(const std::vector<std::string>& names) const {
  if (letters.empty())
    return "1";
  std::string s;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const auto& l = letters[k];
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= names.size())
      fail("word refers to undeclared generator " + std::to_string(l.gen));
    if (k)
      s += '*';
    s += names[static_cast<std::size_t>(l.gen)];
    if (l.exp == -1)
      s += "^-1";
  }
  return s;
}

std::size_t GroupPresentation::count(const std::string& kind) const {
  return static_cast<std::size_t>(std::count_if(
      relators.begin(), relators.end(), [&](const Relator& r) { return r.kind == kind; }));
}

namespace {

Permutation compose_perm(const Permutation& after, const Permutation& first) {
  Permutation out(first.size());
  for (std::size_t k = 0; k < first.size(); ++k)
    out[k] = after[static_cast<std::size_t>(first[k])];
  return out;
}

void validate(const GroupPresentation& p) {
  for (const auto& r : p.relators)
    for (const auto& l : r.word.letters) {
      if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= p.generators.size())
        fail("presentation " + p.name + ": relator uses an undeclared generator");
      if (l.exp != 1 && l.exp != -1)
        fail("presentation " + p.name + ": exponents must be +1 or -1");
    }
  if (p.semidirect)
    for (const auto& g : p.semidirect->elements) {
      std::vector<int> sorted = g;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t k = 0; k < sorted.size(); ++k)
        if (sorted[k] != static_cast<int>(k) || g.size() > p.generators.size())
          fail("presentation " + p.name + ": semidirect element is not a permutation of generators");
    }
}

}  // namespace

GroupPresentation GroupPresentation::flattened() const {
  if (!semidirect)
    return *this;
  GroupPresentation out = *this;
  out.semidirect.reset();
  const auto& els = semidirect->elements;
  std::map<Permutation, int> gen_of;  // identity maps to -1 (empty word)
  for (std::size_t m = 0; m < els.size(); ++m) {
    if (m == 0) {
      gen_of[els[m]] = -1;
      continue;
    }
    gen_of[els[m]] = static_cast<int>(out.generators.size());
    out.generators.push_back("u" + std::to_string(m));
  }
  auto word_of = [&](const Permutation& g) {
    auto it = gen_of.find(g);
    if (it == gen_of.end())
      fail("semidirect elements are not closed under composition");
    return it->second < 0 ? ArtinWord{} : ArtinWord::single(it->second);
  };
  for (std::size_t a = 1; a < els.size(); ++a)
    for (std::size_t b = 1; b < els.size(); ++b) {
      auto w = word_of(els[a]) * word_of(els[b]) * word_of(compose_perm(els[a], els[b])).inverse();
      out.relators.push_back({w, "group", "u" + std::to_string(a) + " u" + std::to_string(b)});
    }
  for (std::size_t a = 1; a < els.size(); ++a)
    for (std::size_t k = 0; k < els[a].size(); ++k) {
      auto u = word_of(els[a]);
      auto w = u * ArtinWord::single(static_cast<int>(k)) * u.inverse() *
               ArtinWord::single(els[a][k], -1);
      out.relators.push_back({w, "action", "u" + std::to_string(a) + " acts on " +
                                               generators[k]});
    }
  return out;
}

ordered_json GroupPresentation::to_json() const {
  ordered_json j;
  j["name"] = name;
  j["generators"] = generators;
  ordered_json rels = ordered_json::array();
  ordered_json kinds = ordered_json::array();
  ordered_json notes = ordered_json::array();
  for (const auto& r : relators) {
    ordered_json w = ordered_json::array();
    for (const auto& l : r.word.letters)
      w.push_back({l.gen, l.exp});
    rels.push_back(w);
    kinds.push_back(r.kind);
    notes.push_back(r.note);
  }
  j["relators"] = rels;
  j["relator_kinds"] = kinds;
  j["relator_notes"] = notes;
  if (semidirect) {
    j["semidirect"] = {{"group", semidirect->group_name}, {"elements", semidirect->elements}};
  } else {
    j["semidirect"] = nullptr;
  }
  if (context) {
    ordered_json pairs = ordered_json::array();
    for (auto [a, b] : context->quasi_special_pairs)
      pairs.push_back({a, b});
    j["context"] = {{"affine_type", context->affine_type}, {"quasi_special_pairs", pairs}};
  } else {
    j["context"] = nullptr;
  }
  return j;
}

GroupPresentation GroupPresentation::from_json(const ordered_json& j) {
  GroupPresentation p;
  try {
    p.name = j.at("name").get<std::string>();
    p.generators = j.at("generators").get<std::vector<std::string>>();
    const auto& rels = j.at("relators");
    const auto& kinds = j.at("relator_kinds");
    const auto& notes = j.at("relator_notes");
    if (rels.size() != kinds.size() || rels.size() != notes.size())
      fail("relator arrays differ in length");
    for (std::size_t r = 0; r < rels.size(); ++r) {
      Relator rel;
      for (const auto& l : rels[r])
        rel.word.letters.push_back({l.at(0).get<int>(), l.at(1).get<int>()});
      rel.kind = kinds[r].get<std::string>();
      rel.note = notes[r].get<std::string>();
      p.relators.push_back(std::move(rel));
    }
    if (!j.at("semidirect").is_null())
      p.semidirect = SemidirectData{j["semidirect"].at("group").get<std::string>(),
                                    j["semidirect"].at("elements").get<std::vector<Permutation>>()};
    if (!j.at("context").is_null()) {
      AffineContext c;
      c.affine_type = j["context"].at("affine_type").get<std::string>();
      for (const auto& pr : j["context"].at("quasi_special_pairs"))
        c.quasi_special_pairs.emplace_back(pr.at(0).get<int>(), pr.at(1).get<int>());
      p.context = c;
    }
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("malformed presentation JSON: ") + e.what());
  }
  validate(p);
  return p;
}

std::string GroupPresentation::to_text() const {
  std::ostringstream out;
  out << "presentation " << name << "\n";
  out << "generators (" << generators.size() << "):";
  for (const auto& g : generators)
    out << ' ' << g;
  out << "\nrelators (" << relators.size() << "):\n";
  for (const auto& r : relators) {
    out << "  [" << r.kind << "] " << r.word.str(generators);
    if (!r.note.empty())
      out << "    -- " << r.note;
    out << '\n';
  }
  if (semidirect) {
    out << "semidirect product with " << semidirect->group_name << " ("
        << semidirect->elements.size() << " elements acting on generator indices):\n";
    for (const auto& g : semidirect->elements)
      out << "  " << coxeter::to_string(g) << '\n';
  }
  return out.str();
}

std::string GroupPresentation::to_gap_style() const {
  auto flat = flattened();
  std::ostringstream out;
  out << "# " << name << "\n< ";
  for (std::size_t k = 0; k < flat.generators.size(); ++k)
    out << (k ? ", " : "") << flat.generators[k];
  out << " |\n";
  for (std::size_t r = 0; r < flat.relators.size(); ++r)
    out << "  " << flat.relators[r].word.str(flat.generators)
        << (r + 1 < flat.relators.size() ? ",\n" : "\n");
  out << ">\n";
  return out.str();
}

GroupPresentation artin_presentation(const CoxeterDiagram& diagram, const std::string& name) {
  GroupPresentation p;
  p.name = name;
  if (p.name.empty()) {
    try {
      p.name = "Art(" + diagram.type_label() + ")";
    } catch (const Error&) {
      p.name = "Art(" + std::to_string(diagram.size()) + "-vertex diagram)";
    }
  }
  const auto& vs = diagram.vertices();
  for (std::size_t k = 0; k < vs.size(); ++k)
    if (vs[k] != static_cast<int>(k))
      fail("artin_presentation expects vertices numbered 0..n-1");
  for (int v : vs)
    p.generators.push_back("t" + std::to_string(v));
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      auto ta = ArtinWord::single(vs[a]);
      auto tb = ArtinWord::single(vs[b]);
      std::string pair = p.generators[a] + "," + p.generators[b];
      if (diagram.adjacent(vs[a], vs[b]))
        p.relators.push_back({ta * tb * ta * tb.inverse() * ta.inverse() * tb.inverse(), "braid",
                              pair});
      else
        p.relators.push_back({ta * tb * ta.inverse() * tb.inverse(), "commutation", pair});
    }
  return p;
}

GarsideData garside_word(const AffineRealization& real, const std::vector<int>& parabolic) {
  auto w = coxeter::longest_element(real, parabolic);
  GarsideData g{w.type, parabolic, ArtinWord::positive(w.word), w.word.size()};
  std::sort(g.parabolic.begin(), g.parabolic.end());
  return g;
}

GarsideData garside_word_at(const AffineRealization& real, int i) {
  std::vector<int> rest;
  for (int v : real.diagram().vertices())
    if (v != i)
      rest.push_back(v);
  return garside_word(real, rest);
}

AffineIsometry coxeter_image(const ArtinWord& word, const AffineRealization& real) {
  std::vector<int> gens;
  for (const auto& l : word.letters)
    gens.push_back(l.gen);  // s_k is an involution, so exponents do not matter
  return coxeter::word_image(real, gens);
}

namespace {

// Relator Delta_{Gamma_j} Delta_{Gamma_i}^-1 with a note naming the types.
Relator garside_relator(const AffineRealization& real, int j, int i) {
  auto dj = garside_word_at(real, j);
  auto di = garside_word_at(real, i);
  return {dj.word * di.word.inverse(), "garside",
          "Delta(" + dj.type + " at t" + std::to_string(j) + ") = Delta(" + di.type + " at t" +
              std::to_string(i) + ")"};
}

std::vector<int> neighbors(const CoxeterDiagram& d, int v) {
  std::vector<int> out;
  for (int w : d.vertices())
    if (d.adjacent(v, w))
      out.push_back(w);
  return out;
}

GroupPresentation presentation_2_1_1() {
  auto real = coxeter::build_affine("E7~");
  auto report = coxeter::quasi_special_report(real);
  int i = -1, j = -1;
  for (const auto& e : report) {
    if (e.subdiagram == "E7" && e.g && i < 0)
      i = e.vertex;
    if (e.subdiagram == "A7" && e.g) {
      if (j >= 0)
        fail("more than one vertex with an A7 subdiagram");
      j = e.vertex;
    }
  }
  if (i < 0 || j < 0)
    fail("quasi-special vertices for E7~ not found");
  const auto& auts = real.automorphisms();
  if (auts.size() != 2)
    fail("expected a diagram automorphism group of order 2");
  const auto& sigma = auts[1];

  auto p = artin_presentation(real.diagram(), "PH(2,1^2)");
  auto x = garside_word_at(real, j).word.inverse() * garside_word_at(real, i).word;
  std::string xs = "x = Delta(A7)^-1 Delta(E7)";
  p.relators.push_back({x * x, "order", xs + "; x^2"});
  for (int k : real.diagram().vertices())
    p.relators.push_back({x * ArtinWord::single(k) * x.inverse() *
                              ArtinWord::single(sigma[static_cast<std::size_t>(k)], -1),
                          "conjugation",
                          xs + "; x t" + std::to_string(k) + " x^-1 = t" +
                              std::to_string(sigma[static_cast<std::size_t>(k)])});
  p.context = AffineContext{real.name(), {{i, j}}};
  return p;
}

GroupPresentation presentation_2_2(bool every_terminal) {
  auto real = coxeter::build_affine("E6~");
  auto p = artin_presentation(real.diagram(), every_terminal ? "PH(2,2) terminal-vertex form"
                                                             : "PH(2,2)");
  p.semidirect = SemidirectData{"Aut(E6~)", real.automorphisms()};
  AffineContext ctx{real.name(), {}};
  for (int t : real.diagram().vertices()) {
    auto nb = neighbors(real.diagram(), t);
    if (nb.size() != 1)
      continue;
    ctx.quasi_special_pairs.emplace_back(t, nb.front());
    p.relators.push_back(garside_relator(real, nb.front(), t));
    if (!every_terminal)
      break;
  }
  p.context = ctx;
  return p;
}

AffineIsometry image_of(const ArtinWord& w, const std::vector<AffineIsometry>& gens,
                        std::size_t n) {
  AffineIsometry out = AffineIsometry::identity(n);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const auto& g = gens.at(static_cast<std::size_t>(it->gen));
    out = out.then(it->exp == 1 ? g : g.inverse());
  }
  return out;
}

}  // namespace

std::vector<std::string> presentation_keys() { return {"2,1^2", "2,2", "2,2/terminal"}; }

GroupPresentation stratum_presentation(const std::string& key) {
  GroupPresentation p;
  if (key == "2,1^2")
    p = presentation_2_1_1();
  else if (key == "2,2")
    p = presentation_2_2(false);
  else if (key == "2,2/terminal")
    p = presentation_2_2(true);
  else
    fail("no presentation for stratum '" + key + "' (expected 2,1^2, 2,2 or 2,2/terminal)");
  validate(p);
  return p;
}

bool VerificationReport::ok() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CoxeterCheck& c) { return c.ok; });
}

std::size_t VerificationReport::count(const std::string& label) const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [&](const CoxeterCheck& c) { return c.label == label; }));
}

std::vector<std::string> VerificationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.ok)
      out.push_back("(" + c.label + ") " + c.subject);
  return out;
}

VerificationReport verify_in_coxeter(const GroupPresentation& presentation,
                                     const AffineRealization& real) {
  if (!presentation.context || presentation.context->affine_type != real.name())
    fail("presentation is not attached to the affine type " + real.name());
  auto flat = presentation.flattened();
  std::size_t n = real.rank();
  std::size_t nv = real.diagram().size();

  std::vector<AffineIsometry> gens;
  for (std::size_t k = 0; k < nv; ++k)
    gens.push_back(real.reflection(static_cast<int>(k)));
  if (presentation.semidirect)
    for (std::size_t m = 1; m < presentation.semidirect->elements.size(); ++m)
      gens.push_back(real.extension(presentation.semidirect->elements[m]));
  if (gens.size() != flat.generators.size())
    fail("presentation generators do not match the affine diagram");

  VerificationReport rep;
  auto id = AffineIsometry::identity(n);

  std::set<int> vertices_used;
  for (auto [i, j] : presentation.context->quasi_special_pairs) {
    vertices_used.insert(i);
    vertices_used.insert(j);
  }
  std::map<int, AffineIsometry> delta_g;  // image of Delta_i g_i
  for (int v : vertices_used) {
    auto g = coxeter::quasi_special(real, v);
    std::string subj = "vertex " + std::to_string(v);
    if (!g) {
      rep.checks.push_back({"a", subj + " is not quasi-special", false});
      continue;
    }
    auto delta = coxeter_image(garside_word_at(real, v).word, real);
    auto ext = real.extension(*g);
    auto s = coxeter::opposition(real, v);
    // Delta_v g_v: g_v applied first.
    bool ok = ext.then(delta) == s && delta.then(ext) == s;
    rep.checks.push_back({"a", subj + ": Delta g = g Delta = opposition", ok});
    delta_g.emplace(v, ext.then(delta));
  }
  for (auto [i, j] : presentation.context->quasi_special_pairs) {
    std::string subj = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
    if (!delta_g.count(i) || !delta_g.count(j)) {
      rep.checks.push_back({"b", subj + " has a non-quasi-special vertex", false});
      continue;
    }
    auto loop = delta_g.at(i).inverse().then(delta_g.at(j));
    Vector expected = Rational(2) * (real.vertex(j) - real.vertex(i));
    rep.checks.push_back({"b", subj + ": translation by 2(v_j - v_i)",
                          loop.is_translation() && loop.translation == expected});
  }
  for (const auto& r : flat.relators) {
    auto img = image_of(r.word, gens, n);
    std::string subj = r.kind + " " + r.word.str(flat.generators);
    if (r.kind == "braid" || r.kind == "commutation" || r.kind == "group" || r.kind == "action")
      rep.checks.push_back({"c", subj, img == id});
    else
      rep.checks.push_back({"d", subj, img.linear == id.linear});
  }
  return rep;
}

std::string ExtensionDescriptor::text() const {
  return "extension of " + quotient + " by " + kernel;
}

GroupPresentation braid_presentation(int strands) {
  if (strands < 1)
    fail("a braid group needs at least one strand");
  std::vector<int> vs;
  std::set<std::pair<int, int>> es;
  for (int k = 0; k + 1 < strands; ++k) {
    vs.push_back(k);
    if (k > 0)
      es.insert({k - 1, k});
  }
  auto p = artin_presentation(CoxeterDiagram(vs, es), "B_" + std::to_string(strands));
  for (std::size_t k = 0; k < p.generators.size(); ++k)
    p.generators[k] = "s" + std::to_string(k + 1);
  for (auto& r : p.relators) {
    std::string pair;
    for (const auto& l : r.word.letters) {
      auto name = p.generators[static_cast<std::size_t>(l.gen)];
      if (pair.find(name) == std::string::npos)
        pair += (pair.empty() ? "" : ",") + name;
    }
    r.note = pair;
  }
  return p;
}

HyperellipticGroup hyperelliptic_group_data(int genus, const std::string& key) {
  if (genus < 2)
    fail("hyperelliptic group data needs genus >= 2");
  std::string g = std::to_string(genus);
  if (key == "2g-2")
    return {braid_presentation(2 * genus + 1),
            {"B_" + std::to_string(2 * genus + 1), "mu_" + std::to_string(2 * genus - 1)}};
  if (key == "g-1,g-1")
    return {braid_presentation(2 * genus + 2),
            {"B_" + std::to_string(2 * genus + 2), "S_2 x mu_" + g}};
  fail("unknown hyperelliptic stratum key '" + key + "' (expected 2g-2 or g-1,g-1)");
}

TorusWeights torus_action(int genus, const std::string& key) {
  if (key == "2g-2")
    return {2, 2, 2 * genus + 1};
  if (key == "g-1,g-1")
    return {1, 1, genus + 1};
  fail("unknown hyperelliptic stratum key '" + key + "' (expected 2g-2 or g-1,g-1)");
}

int torus_weight_check(int genus, const std::string& key) {
  auto a = torus_action(genus, key);
  int weight = a.z - a.w;  // phi = w^-1 dz
  int expected = key == "2g-2" ? 1 - 2 * genus : -genus;
  if (weight != expected)
    fail("torus weight " + std::to_string(weight) + " differs from " + std::to_string(expected));
  return weight;
}

}  // namespace strata::artin
