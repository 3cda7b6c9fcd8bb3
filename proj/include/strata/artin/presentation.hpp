#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "strata/coxeter/affine.hpp"

namespace strata::artin {

using coxeter::AffineIsometry;
using coxeter::AffineRealization;
using coxeter::CoxeterDiagram;
using coxeter::Permutation;

struct Letter {
  int gen = 0;
  int exp = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

struct ArtinWord {
  std::vector<Letter> letters;

  static ArtinWord positive(const std::vector<int>& gens);
  static ArtinWord single(int gen, int exp = 1) { return {{{gen, exp}}}; }
  ArtinWord inverse() const;
  ArtinWord operator*(const ArtinWord& other) const;
  std::size_t length() const { return letters.size(); }
  bool is_positive() const;
  // "t0*t1^-1" style; "1" for the empty word.
  std::string str(const std::vector<std::string>& names) const;

  friend bool operator==(const ArtinWord&, const ArtinWord&) = default;
};

struct Relator {
  ArtinWord word;
  std::string kind;  // braid, commutation, order, conjugation, garside, group
  std::string note;

  friend bool operator==(const Relator&, const Relator&) = default;
};

// Semidirect product with a group of diagram automorphisms acting on the
// first `acted_on` generators by permutation of their indices.
struct SemidirectData {
  std::string group_name;
  std::vector<Permutation> elements;  // identity first

  friend bool operator==(const SemidirectData&, const SemidirectData&) = default;
};

// Where the generators live: t_k is the affine reflection s_k of this type.
struct AffineContext {
  std::string affine_type;           // "E6~" or "E7~"
  std::vector<std::pair<int, int>> quasi_special_pairs;  // (i, j) used by the relators

  friend bool operator==(const AffineContext&, const AffineContext&) = default;
};

struct GroupPresentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<Relator> relators;
  std::optional<SemidirectData> semidirect;
  std::optional<AffineContext> context;

  std::size_t count(const std::string& kind) const;

  // Semidirect data replaced by generators u<k> for the non-identity
  // automorphisms, multiplication relators and conjugation relators.
  GroupPresentation flattened() const;

  nlohmann::ordered_json to_json() const;
  static GroupPresentation from_json(const nlohmann::ordered_json& j);
  std::string to_text() const;
  std::string to_gap_style() const;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

// Generators t_v for each vertex v (indexed by vertex number), one braid
// relator per edge and one commutator per non-edge.
GroupPresentation artin_presentation(const CoxeterDiagram& diagram, const std::string& name = "");

struct GarsideData {
  std::string type;
  std::vector<int> parabolic;
  ArtinWord word;
  std::size_t length = 0;
};

GarsideData garside_word(const AffineRealization& real, const std::vector<int>& parabolic);
// Parabolic on all vertices except i.
GarsideData garside_word_at(const AffineRealization& real, int i);

// t_k -> s_k; generator indices beyond the diagram must be resolved by the caller.
AffineIsometry coxeter_image(const ArtinWord& word, const AffineRealization& real);

// Keys "2,1^2" and "2,2"; "2,2/terminal" is the three-relator variant.
GroupPresentation stratum_presentation(const std::string& key);
std::vector<std::string> presentation_keys();

struct CoxeterCheck {
  std::string label;  // "a", "b", "c" or "d"
  std::string subject;
  bool ok = false;
};

struct VerificationReport {
  std::vector<CoxeterCheck> checks;

  bool ok() const;
  std::size_t count(const std::string& label) const;
  std::vector<std::string> failures() const;
};

// Necessary conditions in the affine Weyl group:
//  (a) Delta_i and the extension of g_i compose (either order) to the point
//      reflection at v_i, for each quasi-special vertex used;
//  (b) (Delta_j g_j)(Delta_i g_i)^-1 is the translation by 2(v_j - v_i);
//  (c) braid, commutation and semidirect relators map to the identity;
//  (d) the remaining relators map to the identity modulo translations.
VerificationReport verify_in_coxeter(const GroupPresentation& presentation,
                                     const AffineRealization& real);

struct ExtensionDescriptor {
  std::string kernel;
  std::string quotient;
  std::string text() const;  // "extension of <quotient> by <kernel>"
};

struct HyperellipticGroup {
  GroupPresentation braid_group;
  ExtensionDescriptor extension;
};

// Artin presentation of the braid group on the given number of strands.
GroupPresentation braid_presentation(int strands);

// Keys "2g-2" and "g-1,g-1".
HyperellipticGroup hyperelliptic_group_data(int genus, const std::string& key);

struct TorusWeights {
  int rho = 0;
  int z = 0;
  int w = 0;
};

TorusWeights torus_action(int genus, const std::string& key);
// Weight of w^-1 dz from the action weights; fails unless it equals the
// exponent 1 - 2g (key "2g-2") or -g (key "g-1,g-1").
int torus_weight_check(int genus, const std::string& key);

}  // namespace strata::artin
