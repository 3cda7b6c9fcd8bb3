#include "strata/catalog/catalog.hpp"

#include <set>
#include <tuple>

#include "strata/lattice/cartan.hpp"

namespace strata::catalog {

namespace {

int rank_of(const std::string& type) {
  return static_cast<int>(lattice::cartan_matrix(type).size());
}

int parts_of(const std::string& partition) {
  // "2,1^2" -> 3, "1^4" -> 4, "4" -> 1
  int parts = 0;
  std::size_t pos = 0;
  while (pos < partition.size()) {
    std::size_t comma = partition.find(',', pos);
    std::string term = partition.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t caret = term.find('^');
    parts += caret == std::string::npos ? 1 : std::stoi(term.substr(caret + 1));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return parts;
}

StratumRecord stratum(std::string partition, std::string kodaira, std::string ambient,
                      ModelDescriptor model) {
  StratumRecord r;
  r.name = "PH(" + partition + ")";
  r.partition = std::move(partition);
  r.kind = RecordKind::stratum;
  r.parts = parts_of(r.partition);
  r.dim_H = 2 * kGenus + r.parts - 1;
  r.dim_PH = r.dim_H - 1;
  r.kodaira_type = std::move(kodaira);
  r.ambient_root_type = std::move(ambient);
  if (!model.boundary_type.empty()) r.boundary_subsystem_type = model.boundary_type;
  r.model = std::move(model);
  return r;
}

// Hyperelliptic genus-3 curves with supp D a union of two involution orbits.
// The quotient P^1 carries 2g + 2 branch points and the images of the two
// orbits; each orbit that is not a Weierstrass point adds a modulus.
StratumRecord gerbe(std::string partition, int free_orbits, ModelDescriptor base) {
  StratumRecord r;
  r.name = "PH(" + partition + ")_hyp";
  r.partition = std::move(partition);
  r.kind = RecordKind::hyperelliptic_gerbe;
  r.hyperelliptic = true;
  r.parts = parts_of(r.partition);
  r.dim_PH = (2 * kGenus - 1) + free_orbits;
  r.dim_H = r.dim_PH + 1;
  r.ambient_root_type = base.root_type;
  r.model = std::move(base);
  r.notes.push_back("Z/2-gerbe over the model, from the hyperelliptic involution");
  return r;
}

}  // namespace

std::string ModelDescriptor::text() const {
  switch (kind) {
    case ModelKind::additive:
      return "S(" + root_type + ",C)";
    case ModelKind::multiplicative:
      return (boundary_type.empty() ? "S(" : "S_(" + boundary_type + ")(") + root_type + ",Cx)";
    case ModelKind::elliptic:
      return "S_(" + boundary_type + ")(" + root_type + ",C11bar)";
    case ModelKind::torus_component:
      return "W(" + root_type + ")\\Hom(Q(" + root_type + "),Cx)^o";
    case ModelKind::pointed_branch:
      return "M_{0," + std::to_string(2 * kGenus + 2) + "}/S_" + std::to_string(2 * kGenus + 1);
    case ModelKind::paired_branch:
      return "R_" + std::to_string(2 * kGenus + 2) + "/(S_" + std::to_string(2 * kGenus + 2) +
             " x S_2 x Gm)";
  }
  return {};
}

int ModelDescriptor::dimension() const {
  switch (kind) {
    case ModelKind::additive:
      return rank_of(root_type) - 1;
    case ModelKind::multiplicative:
    case ModelKind::torus_component:
      return rank_of(root_type);
    case ModelKind::elliptic:
      return rank_of(root_type) + 1;
    case ModelKind::pointed_branch:
      // 2g + 2 points on P^1 modulo PGL2
      return 2 * kGenus + 2 - 3;
    case ModelKind::paired_branch:
      // {rho in C^{2g+2} : sum = 0} modulo scaling
      return 2 * kGenus + 1 - 1;
  }
  return 0;
}

std::string to_string(RecordKind k) {
  switch (k) {
    case RecordKind::stratum:
      return "stratum";
    case RecordKind::hyperelliptic_stratum:
      return "hyperelliptic_stratum";
    case RecordKind::hyperelliptic_gerbe:
      return "hyperelliptic_gerbe";
  }
  return {};
}

std::vector<StratumRecord> catalog() {
  using K = ModelKind;
  std::vector<StratumRecord> out;

  auto r14 = stratum("1^4", "smooth", "E7", {K::elliptic, "E7", "A7"});
  r14.notes.push_back("complement of the hyperelliptic locus is S(E7, C11/M11)");
  r14.notes.push_back("fundamental group not emitted: no presentation is derived for the open stratum");
  r14.anchors = {"Kodaira type smooth, root system E7", "PH(1^4) = S_(A7)(E7,C11bar)"};
  out.push_back(r14);

  auto r211 = stratum("2,1^2", "I1 (mult)", "E7", {K::multiplicative, "E7", "A6"});
  r211.fundamental_group_ref = "2,1^2";
  r211.notes.push_back("complement of the hyperelliptic locus is S(E7,Cx)");
  r211.anchors = {"Kodaira type I1, root system E7", "PH(2,1^2) = S_(A6)(E7,Cx)"};
  out.push_back(r211);

  auto r22 = stratum("2^2", "I2 (mult)", "E6", {K::multiplicative, "E6", "A5"});
  r22.fundamental_group_ref = "2,2";
  r22.notes.push_back("complement of the hyperelliptic locus is S(E6,Cx)");
  r22.notes.push_back("variant with one relator per terminal vertex: 2,2/terminal");
  r22.anchors = {"Kodaira type I2, root system E6", "PH(2,2) = S_(A5)(E6,Cx)"};
  out.push_back(r22);

  auto r31 = stratum("3,1", "II (add)", "E7", {K::additive, "E7", ""});
  r31.fundamental_group_ref = "artin/E7";
  r31.notes.push_back("orbifold group is Art(E7) modulo its infinite cyclic center");
  r31.notes.push_back(
      "suspected transposition: a corollary statement pairs PH(3,1) with type E6; stored pairing "
      "follows the isomorphism PH(3,1) = S(E7,C) and rank arithmetic");
  r31.anchors = {"Kodaira type II, root system E7", "PH(3,1) = S(E7,C)"};
  out.push_back(r31);

  auto r4 = stratum("4", "III (add)", "E6", {K::additive, "E6", ""});
  r4.fundamental_group_ref = "artin/E6";
  r4.notes.push_back("orbifold group is Art(E6) modulo its infinite cyclic center");
  r4.notes.push_back(
      "suspected transposition: a corollary statement pairs PH(4) with type E7; stored pairing "
      "follows the isomorphism PH(4) = S(E6,C) and rank arithmetic");
  r4.anchors = {"Kodaira type III, root system E6", "PH(4) = S(E6,C)"};
  out.push_back(r4);

  for (const auto& [partition, model, ref, group] :
       {std::tuple{"4", ModelDescriptor{K::pointed_branch, "", ""}, "braid/7", "extension of mu_5 by B_7"},
        std::tuple{"2,2", ModelDescriptor{K::paired_branch, "", ""}, "braid/8",
                   "extension of S_2 x mu_3 by B_8"}}) {
    StratumRecord r;
    r.name = std::string("PH^hyp(") + partition + ")";
    r.partition = partition;
    r.kind = RecordKind::hyperelliptic_stratum;
    r.hyperelliptic = true;
    r.parts = parts_of(partition);
    r.dim_H = 2 * kGenus + r.parts - 1;
    r.dim_PH = r.dim_H - 1;
    r.model = model;
    r.fundamental_group_ref = ref;
    r.notes.push_back(std::string("H^hyp is a classifying space for an ") + group);
    r.anchors = {std::string("PH^hyp(") + partition + ") = " + model.text()};
    out.push_back(r);
  }

  auto g14 = gerbe("1^4", 2, {K::multiplicative, "A7", ""});
  g14.anchors = {"PH(1^4)_hyp -> S(A7,Cx)"};
  out.push_back(g14);

  auto g211 = gerbe("2,1^2", 1, {K::torus_component, "A6", ""});
  g211.notes.push_back("the base is a double cover of S(A6,Cx)");
  g211.anchors = {"PH(2,1^2)_hyp -> W(A6)\\Hom(Q(A6),Cx)^o"};
  out.push_back(g211);

  auto g22 = gerbe("2,2", 0, {K::multiplicative, "A5", ""});
  g22.notes.push_back(
      "suspected slip: the isomorphism for PH(2,2) names the gerbe base S(E6,Cx); stored base "
      "S(A5,Cx) has the dimension of the locus, S(E6,Cx) does not");
  g22.anchors = {"PH(2,2)_hyp -> S(A5,Cx)", "PH(2,2) = S_(A5)(E6,Cx) extends a gerbe over S(E6,Cx)"};
  out.push_back(g22);

  return out;
}

std::vector<DimensionCheck> dimension_consistency(const std::vector<StratumRecord>& records) {
  std::vector<DimensionCheck> out;
  for (const auto& r : records) {
    DimensionCheck c;
    c.name = r.name;
    c.dim_PH = r.dim_PH;
    c.expected_dim_PH = r.kind == RecordKind::hyperelliptic_gerbe ? r.dim_PH : 2 * kGenus + r.parts - 2;
    c.model = r.model.text();
    c.model_dimension = r.model.dimension();
    c.ok = c.dim_PH == c.expected_dim_PH && c.model_dimension == c.dim_PH && r.dim_H == r.dim_PH + 1;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::string> presentation_refs() {
  auto refs = artin::presentation_keys();
  for (const char* r : {"artin/E6", "artin/E7", "braid/7", "braid/8"}) refs.emplace_back(r);
  return refs;
}

artin::GroupPresentation finite_artin_presentation(const std::string& type) {
  auto cartan = lattice::cartan_matrix(type);
  std::vector<int> vertices;
  std::set<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < cartan.size(); ++i) {
    vertices.push_back(static_cast<int>(i));
    for (std::size_t j = i + 1; j < cartan.size(); ++j)
      if (cartan[i][j] != 0) edges.emplace(static_cast<int>(i), static_cast<int>(j));
  }
  auto p = artin::artin_presentation(coxeter::CoxeterDiagram(vertices, edges), "Art(" + type + ")");
  for (std::size_t i = 0; i < p.generators.size(); ++i) p.generators[i] = "t" + std::to_string(i + 1);
  for (auto& r : p.relators) {
    const auto& l = r.word.letters;
    r.note = p.generators[l[0].gen] + "," + p.generators[l[1].gen];
  }
  return p;
}

artin::GroupPresentation presentation_for(const std::string& ref) {
  if (ref.starts_with("artin/")) {
    auto type = ref.substr(6);
    if (type == "E6" || type == "E7") return finite_artin_presentation(type);
  } else if (ref.starts_with("braid/")) {
    auto strands = ref.substr(6);
    if (strands == "7" || strands == "8") return artin::braid_presentation(std::stoi(strands));
  } else {
    for (const auto& key : artin::presentation_keys())
      if (key == ref) return artin::stratum_presentation(ref);
  }
  fail("unknown presentation '" + ref + "'");
}

}  // namespace strata::catalog
