#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "strata/lattice/lattice.hpp"

namespace strata::lattice {

// Every integer x with (x - center)^T form (x - center) <= bound, for a
// positive definite form. Fails when the form is not positive definite.
void for_each_short_vector(const Matrix& form, const Vector& center, const Rational& bound,
                           const std::function<void(const Vector&)>& visit);

// Z-basis of { v in Z^rank : v . w = 0 }.
std::vector<LatticeVector> orthogonal_complement_basis(const LatticeVector& w);

struct LevelCondition {
  LatticeVector against;
  Rational value;
};

// All integer vectors v with v.v = square (and v.against = value when given),
// sorted lexicographically. Rejects searches whose region is not bounded,
// i.e. the form restricted to the searched hyperplane is not negative definite.
std::vector<LatticeVector> enumerate_vectors(const LatticePtr& lattice, const Rational& square,
                                             const std::optional<LevelCondition>& level = {});

// Vectors of square -2, orthogonal to the given vector when present.
std::vector<LatticeVector> enumerate_roots(const LatticePtr& lattice,
                                           const std::optional<LatticeVector>& orthogonal_to = {});

}  // namespace strata::lattice
