#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strata/lattice/cartan.hpp"
#include "strata/lattice/subsystems.hpp"

namespace strata::delpezzo {

using lattice::LatticePtr;
using lattice::LatticeVector;
using lattice::RootSystemData;
using lattice::SignCharacter;

// Pic of a degree-2 del Pezzo surface: basis (l, e1..e7), gram diag(1,-1,..,-1).
struct PicardLattice {
  LatticePtr base;
  LatticeVector K;  // 3l - e1 - ... - e7

  LatticeVector l() const { return LatticeVector::basis(base, 0); }
  LatticeVector e(std::size_t i) const;  // 1 <= i <= 7
};

PicardLattice build_picard();

struct ExceptionalClass {
  LatticeVector vec;
};

// All E with E.E = -1 and E.K = 1, in lexicographic order.
std::vector<ExceptionalClass> enumerate_exceptionals(const PicardLattice& pic);

// Index pairs {i, partner(i)} with partner = K - E, i < partner.
std::vector<std::pair<std::size_t, std::size_t>> partner_pairs(
    const PicardLattice& pic, const std::vector<ExceptionalClass>& classes);

// Roots orthogonal to K, with the system certified as E7.
RootSystemData root_system_of_X(const PicardLattice& pic);

// Every root is E - E' with E, E' exceptional and E.E' = 0.
bool roots_are_disjoint_differences(const PicardLattice& pic, const RootSystemData& roots);

// Sign and 2-element subset {b_first, b_second} of B = {b0..b7}.
struct BLabel {
  char sign = '+';
  int first = 0;
  int second = 1;

  BLabel() = default;
  BLabel(char sign, int a, int b);

  BLabel flipped() const { return BLabel(sign == '+' ? '-' : '+', first, second); }
  bool disjoint_from(const BLabel& o) const;
  bool meets_in_one(const BLabel& o) const;
  std::string str() const;  // "E-{b0,b3}"

  friend auto operator<=>(const BLabel&, const BLabel&) = default;
};

class LabeledDictionary {
 public:
  LabeledDictionary(PicardLattice pic, std::vector<LatticeVector> classes,
                    std::vector<BLabel> labels);

  const PicardLattice& picard() const { return pic_; }
  std::size_t size() const { return classes_.size(); }
  const std::vector<LatticeVector>& classes() const { return classes_; }
  const std::vector<BLabel>& labels() const { return labels_; }

  const BLabel& label_of(const LatticeVector& v) const;
  const LatticeVector& class_of(const BLabel& b) const;
  std::optional<std::size_t> index_of(const LatticeVector& v) const;
  std::size_t index_of(const BLabel& b) const;
  std::size_t partner_index(std::size_t i) const;

 private:
  PicardLattice pic_;
  std::vector<LatticeVector> classes_;
  std::vector<BLabel> labels_;
  std::map<Vector, std::size_t> by_vector_;
  std::map<BLabel, std::size_t> by_label_;
};

// The fixed dictionary e_i = E-{b0,bi}, K - e_i = E+{b0,bi},
// l - e_i - e_j = E+{bi,bj}, K - (l - e_i - e_j) = E-{bi,bj}. Verifies that
// it is a bijection onto the exceptional classes and that E -> K - E flips
// the sign and keeps the pair.
LabeledDictionary label_exceptionals(const PicardLattice& pic);

struct EpsilonCharacter {
  SignCharacter chi;   // values on (l, e1..e7)
  std::size_t constraint_rank = 0;  // rank mod 2 of the exceptional classes
  bool unique = false;

  int operator()(const LatticeVector& v) const;
};

// Solves the 56 conditions chi(E) = sign(E) over GF(2). Fails if inconsistent.
EpsilonCharacter epsilon_character(const LabeledDictionary& dict);

struct KernelReport {
  RootSystemData system;
  std::size_t differences_of_e = 0;     // roots e_i - e_j
  std::size_t k_minus_l_plus_e = 0;     // roots +-(K - l + e_i)
  std::vector<LatticeVector> stated_basis;
  lattice::BasisCheck stated_basis_check;
  lattice::LatticeIndex index_in_e7;
};

KernelReport kernel_roots_report(const PicardLattice& pic, const EpsilonCharacter& eps);

// Same-sign differences E - E' of disjoint members of a labelled family.
std::vector<LatticeVector> same_sign_disjoint_differences(const LabeledDictionary& dict,
                                                          const std::vector<BLabel>& family);

struct StratumSubsystems {
  std::string key;
  RootSystemData ambient;
  std::vector<LatticeVector> ambient_basis;
  lattice::BasisCheck ambient_basis_check;
  std::vector<LatticeVector> components;  // exceptional classes orthogonal to the ambient system
  std::optional<RootSystemData> boundary;
  std::vector<LatticeVector> boundary_basis;
  lattice::BasisCheck boundary_basis_check;
};

// Keys: "1^4", "2,1^2", "2^2", "3,1", "4".
StratumSubsystems stratum_subsystems(const std::string& key);
std::vector<std::string> stratum_keys();

}  // namespace strata::delpezzo
