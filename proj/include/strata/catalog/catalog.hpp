#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strata/artin/presentation.hpp"

namespace strata::catalog {

constexpr int kGenus = 3;

enum class ModelKind {
  additive,          // S(R, C)
  multiplicative,    // S(R, Cx), optionally with a boundary subsystem S_(R0)(R, Cx)
  elliptic,          // S_(R0)(R, C11bar)
  torus_component,   // W(R)\Hom(Q(R), Cx)^o
  pointed_branch,    // M_{0,2g+2}/S_{2g+1}
  paired_branch,     // R_{2g+2}/(S_{2g+2} x S_2 x Gm)
};

struct ModelDescriptor {
  ModelKind kind = ModelKind::additive;
  std::string root_type;      // empty for the branch-point models
  std::string boundary_type;  // subscript subsystem, if any

  std::string text() const;
  // rank - 1 for S(R,C); rank for S(R,Cx) and the torus component; rank + 1
  // for the elliptic model; 2g - 1 and 2g for the two branch-point models.
  int dimension() const;
};

enum class RecordKind { stratum, hyperelliptic_stratum, hyperelliptic_gerbe };
std::string to_string(RecordKind k);

struct StratumRecord {
  std::string name;       // "PH(2,1^2)", "PH^hyp(4)", "PH(1^4)_hyp"
  std::string partition;  // "2,1^2"
  RecordKind kind = RecordKind::stratum;
  bool hyperelliptic = false;
  int parts = 0;
  int dim_H = 0;
  int dim_PH = 0;
  std::optional<std::string> kodaira_type;
  std::optional<std::string> ambient_root_type;
  std::optional<std::string> boundary_subsystem_type;
  ModelDescriptor model;
  std::optional<std::string> fundamental_group_ref;
  std::vector<std::string> notes;
  std::vector<std::string> anchors;
};

// Five nonhyperelliptic strata, the two hyperelliptic strata and the three
// hyperelliptic gerbe loci, in that order.
std::vector<StratumRecord> catalog();

struct DimensionCheck {
  std::string name;
  int dim_PH = 0;
  int expected_dim_PH = 0;  // from 2g + n - 2, or from the branch-point count for gerbe loci
  std::string model;
  int model_dimension = 0;
  bool ok = false;
};

std::vector<DimensionCheck> dimension_consistency(const std::vector<StratumRecord>& records);

// References usable as fundamental_group_ref: the stratum presentations plus
// "artin/E6", "artin/E7", "braid/7", "braid/8".
std::vector<std::string> presentation_refs();
artin::GroupPresentation presentation_for(const std::string& ref);

// Artin presentation of a finite ADE type on Bourbaki-numbered generators.
artin::GroupPresentation finite_artin_presentation(const std::string& type);

}  // namespace strata::catalog
