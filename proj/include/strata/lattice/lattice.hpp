#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "strata/core/matrix.hpp"
#include "strata/core/rational.hpp"

namespace strata::lattice {

// Z^rank with a symmetric rational bilinear form.
class BilinearLattice {
 public:
  BilinearLattice(Matrix gram, std::vector<std::string> basis_labels);

  std::size_t rank() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }

  Rational pair(const Vector& u, const Vector& v) const;

  // Canonical text of the gram matrix, used for cache keys.
  std::string fingerprint() const;

 private:
  Matrix gram_;
  std::vector<std::string> labels_;
};

using LatticePtr = std::shared_ptr<const BilinearLattice>;

LatticePtr make_lattice(Matrix gram, std::vector<std::string> basis_labels);

class LatticeVector {
 public:
  LatticeVector(LatticePtr ambient, Vector coords);

  static LatticeVector zero(const LatticePtr& ambient);
  static LatticeVector basis(const LatticePtr& ambient, std::size_t i);

  const Vector& coords() const { return coords_; }
  const LatticePtr& ambient() const { return ambient_; }
  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  Rational dot(const LatticeVector& other) const;
  Rational square() const { return dot(*this); }
  bool is_integral() const { return strata::is_integral(coords_); }
  bool is_zero() const { return strata::is_zero(coords_); }

  // "l - e1 - e2" style expression over the basis labels.
  std::string expression() const;

  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a);
  friend LatticeVector operator*(const Rational& s, const LatticeVector& a);

  // Equality and ordering compare coordinates only (lexicographic).
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ < b.coords_;
  }

 private:
  LatticePtr ambient_;
  Vector coords_;
};

// Linear map v -> matrix * v in the ambient basis.
class IsometryElement {
 public:
  explicit IsometryElement(Matrix matrix);

  static IsometryElement identity(std::size_t rank);
  // s_alpha(u) = u + (u . alpha) alpha.
  static IsometryElement reflection(const LatticeVector& alpha);

  const Matrix& matrix() const { return matrix_; }
  LatticeVector apply(const LatticeVector& v) const;
  IsometryElement compose(const IsometryElement& after) const;  // after o this

  bool preserves_form(const BilinearLattice& lattice) const;

  friend bool operator==(const IsometryElement& a, const IsometryElement& b) = default;

 private:
  Matrix matrix_;
};

std::vector<IsometryElement> reflections(const std::vector<LatticeVector>& roots);

}  // namespace strata::lattice
