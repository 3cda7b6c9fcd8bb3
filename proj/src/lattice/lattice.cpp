#include "strata/lattice/lattice.hpp"

#include <set>

namespace strata::lattice {

BilinearLattice::BilinearLattice(Matrix gram, std::vector<std::string> basis_labels)
    : gram_(std::move(gram)), labels_(std::move(basis_labels)) {
  if (gram_.rows() == 0)
    fail("lattice rank must be positive");
  if (!gram_.is_symmetric())
    fail("gram matrix is not symmetric");
  if (labels_.size() != gram_.rows())
    fail("basis label count does not match rank");
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size())
    fail("basis labels are not distinct");
}

Rational BilinearLattice::pair(const Vector& u, const Vector& v) const {
  if (u.size() != rank() || v.size() != rank())
    fail("pairing vectors of the wrong length");
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (u[i] == 0)
      continue;
    for (std::size_t j = 0; j < rank(); ++j)
      if (v[j] != 0 && gram_(i, j) != 0)
        s += u[i] * gram_(i, j) * v[j];
  }
  return s;
}

std::string BilinearLattice::fingerprint() const {
  return "gram" + to_string(gram_);
}

LatticePtr make_lattice(Matrix gram, std::vector<std::string> basis_labels) {
  return std::make_shared<const BilinearLattice>(std::move(gram), std::move(basis_labels));
}

LatticeVector::LatticeVector(LatticePtr ambient, Vector coords)
    : ambient_(std::move(ambient)), coords_(std::move(coords)) {
  if (!ambient_)
    fail("lattice vector without ambient lattice");
  if (coords_.size() != ambient_->rank())
    fail("lattice vector length does not match ambient rank");
}

LatticeVector LatticeVector::zero(const LatticePtr& ambient) {
  return LatticeVector(ambient, zero_vector(ambient->rank()));
}

LatticeVector LatticeVector::basis(const LatticePtr& ambient, std::size_t i) {
  return LatticeVector(ambient, unit_vector(ambient->rank(), i));
}

Rational LatticeVector::dot(const LatticeVector& other) const {
  return ambient_->pair(coords_, other.coords_);
}

std::string LatticeVector::expression() const {
  std::string out;
  const auto& labels = ambient_->basis_labels();
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Rational& c = coords_[i];
    if (c == 0)
      continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1)
      out += mag.str() + (strata::is_integral(mag) ? "" : "*");
    out += labels[i];
  }
  return out.empty() ? "0" : out;
}

using strata::operator+;
using strata::operator-;
using strata::operator*;

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  return LatticeVector(a.ambient_, a.coords_ + b.coords_);
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  return LatticeVector(a.ambient_, a.coords_ - b.coords_);
}

LatticeVector operator-(const LatticeVector& a) {
  return LatticeVector(a.ambient_, -a.coords_);
}

LatticeVector operator*(const Rational& s, const LatticeVector& a) {
  return LatticeVector(a.ambient_, s * a.coords_);
}

IsometryElement::IsometryElement(Matrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square())
    fail("isometry matrix must be square");
}

IsometryElement IsometryElement::identity(std::size_t rank) {
  return IsometryElement(Matrix::identity(rank));
}

IsometryElement IsometryElement::reflection(const LatticeVector& alpha) {
  const auto& gram = alpha.ambient()->gram();
  Vector g_alpha = gram * alpha.coords();  // column j holds e_j . alpha
  std::size_t n = alpha.size();
  Matrix m = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) += alpha[i] * g_alpha[j];
  return IsometryElement(std::move(m));
}

LatticeVector IsometryElement::apply(const LatticeVector& v) const {
  return LatticeVector(v.ambient(), matrix_ * v.coords());
}

IsometryElement IsometryElement::compose(const IsometryElement& after) const {
  return IsometryElement(after.matrix_ * matrix_);
}

bool IsometryElement::preserves_form(const BilinearLattice& lattice) const {
  if (matrix_.rows() != lattice.rank())
    return false;
  return matrix_.transpose() * lattice.gram() * matrix_ == lattice.gram();
}

std::vector<IsometryElement> reflections(const std::vector<LatticeVector>& roots) {
  std::vector<IsometryElement> out;
  out.reserve(roots.size());
  for (const auto& r : roots)
    out.push_back(IsometryElement::reflection(r));
  return out;
}

}  // namespace strata::lattice
