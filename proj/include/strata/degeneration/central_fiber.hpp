#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strata/delpezzo/picard.hpp"

namespace strata::degeneration {

using delpezzo::BLabel;
using lattice::LatticeVector;

// Rational combination of the 16 classes R_b^s, b in 0..7, s in {+,-}.
class CentralFiberClass {
 public:
  static constexpr std::size_t kGenerators = 16;

  CentralFiberClass() { coeffs_.fill(Rational(0)); }
  static CentralFiberClass generator(int b, char sign);

  const Rational& coeff(int b, char sign) const { return coeffs_[slot(b, sign)]; }
  const std::array<Rational, kGenerators>& coeffs() const { return coeffs_; }
  std::string str() const;  // "R+0 + R+1 - 2*R-3"

  friend CentralFiberClass operator+(const CentralFiberClass& a, const CentralFiberClass& b);
  friend CentralFiberClass operator-(const CentralFiberClass& a, const CentralFiberClass& b);
  friend CentralFiberClass operator*(const Rational& s, const CentralFiberClass& a);
  friend bool operator==(const CentralFiberClass&, const CentralFiberClass&) = default;

  static std::size_t slot(int b, char sign);

 private:
  std::array<Rational, kGenerators> coeffs_;
};

// (R_b^s)^2 = -3/4, R_b^+ . R_b^- = 1, R_b^+ . R_b'^- = 0, R_b^s . R_b'^s = 1/4.
Rational central_pairing(const CentralFiberClass& x, const CentralFiberClass& y);

// x and y pair identically with every generator (the form has a radical).
bool numerically_equal(const CentralFiberClass& x, const CentralFiberClass& y);

struct LimitClass {
  BLabel label;
  CentralFiberClass cls;  // R^s_b + R^s_b'
};

// Fails unless the class has square -1 and R^s_b - R^s_b' has square -2.
LimitClass limit_class(const BLabel& label);

std::vector<BLabel> all_labels();  // the 56 labels in label order

struct LimitIntersectionReport {
  std::size_t pairs_checked = 0;
  std::size_t rule_i = 0;    // pairs meeting in one point
  std::size_t rule_ii = 0;   // disjoint pairs
  std::size_t rule_iii = 0;  // same pair, opposite signs
  std::map<std::string, std::size_t> off_diagonal_values;  // value -> count
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Exhaustive check of the three limit intersection rules over all label pairs.
LimitIntersectionReport verify_limit_intersections();

// Q-linear map Pic -> central fiber classes with e_i -> E-{b0,bi} and
// l -> E+{b1,b2} + E-{b0,b1} + E-{b0,b2}.
class LimitMap {
 public:
  explicit LimitMap(const delpezzo::PicardLattice& pic);
  CentralFiberClass operator()(const LatticeVector& v) const;

 private:
  std::vector<CentralFiberClass> images_;
};

struct LimitMapReport {
  bool labels_match = false;          // image of each class equals its limit class numerically
  bool intersections_preserved = false;  // all 56 x 56 pairings agree
  std::vector<std::string> failures;
};

LimitMapReport verify_limit_map(const delpezzo::LabeledDictionary& dict);

enum class RootShape { same_sign_singleton, opposite_sign_disjoint };
std::string to_string(RootShape s);

struct RootShapeResult {
  RootShape shape;
  BLabel minuend;     // alpha = class(minuend) - class(subtrahend)
  BLabel subtrahend;
  int epsilon = 0;
  std::size_t decompositions = 0;  // number of disjoint decompositions, all of this shape
};

// Fails if alpha has no disjoint decomposition, if decompositions disagree in
// shape, or if the shape is not determined by epsilon.
RootShapeResult root_shape(const LatticeVector& alpha, const delpezzo::LabeledDictionary& dict,
                           const delpezzo::EpsilonCharacter& eps);

struct SpecializeReport {
  std::size_t roots = 0;
  std::size_t specializing = 0;      // limit is R^s_b - R^s_b'
  std::size_t not_specializing = 0;
  bool matches_epsilon = false;      // specializing <=> epsilon = +1
  bool matches_shape = false;        // specializing <=> same-sign singleton
};

SpecializeReport lemma_specialize(const delpezzo::LabeledDictionary& dict,
                                  const delpezzo::EpsilonCharacter& eps);

// The isometry of Pic induced by a permutation of B (sigma[b] = image of b).
lattice::IsometryElement permutation_isometry(const delpezzo::LabeledDictionary& dict,
                                              const std::array<int, 8>& sigma);

struct PermutationIsoReport {
  bool identity_ok = false;
  bool all_isometries = false;           // every generator image preserves the form and labels
  bool transpositions_are_reflections = false;  // (b_i b_j) -> s_alpha with eps(alpha) = +1
  std::size_t group_order = 0;           // distinct permutations of B reached
  std::size_t image_order = 0;           // distinct isometries reached
  bool inside_kernel_weyl_group = false;
  bool injective = false;
  bool iota_is_minus_one_on_roots = false;
};

PermutationIsoReport permutation_weyl_iso(const delpezzo::LabeledDictionary& dict,
                                          const delpezzo::EpsilonCharacter& eps);

// Facts about the ray components of the central fiber, recorded as constants.
struct RayConstants {
  Rational ray_square{1, 4};
  Rational curve_dot_ray{2};
  Rational generator_multiple{4};  // pic is generated by the class of 4R
};

// 4R . R = 1 is integral and C . R = 2.
bool check_ray_constants(const RayConstants& c = {});

}  // namespace strata::degeneration
