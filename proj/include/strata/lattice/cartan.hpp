#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strata/lattice/lattice.hpp"

namespace strata::lattice {

using CartanMatrix = std::vector<std::vector<int>>;

struct DynkinComponent {
  char family = 'A';  // 'A', 'D' or 'E'
  int rank = 0;
  std::vector<std::size_t> nodes;  // indices into the classified matrix
};

struct DynkinType {
  std::string label;  // e.g. "E7", "A5+A1"; "trivial" for rank 0
  std::vector<DynkinComponent> components;
};

// Components are listed E before D before A, larger rank first. Fails on
// anything that is not a sum of simply laced A/D/E diagrams.
DynkinType classify_cartan(const CartanMatrix& cartan);

// Bourbaki-numbered Cartan matrix of an ADE label such as "E7" or "A5+A1".
CartanMatrix cartan_matrix(std::string_view label);

std::size_t positive_root_count(std::string_view label);
Integer weyl_group_order(std::string_view label);

// Q(R) with gram = -Cartan (so roots have square -2), basis labels a1..an.
LatticePtr root_lattice(std::string_view label);

class RootSystemData {
 public:
  RootSystemData(LatticePtr ambient, std::vector<LatticeVector> roots,
                 std::vector<LatticeVector> simple_roots, std::string type_label);

  const LatticePtr& ambient() const { return ambient_; }
  const std::vector<LatticeVector>& roots() const { return roots_; }
  const std::vector<LatticeVector>& simple_roots() const { return simple_; }
  const std::string& type_label() const { return type_; }
  std::size_t rank() const { return simple_.size(); }

  std::optional<std::size_t> index_of(const LatticeVector& v) const;
  bool contains(const LatticeVector& v) const { return index_of(v).has_value(); }

  // Coefficients of v in the simple roots; nullopt when v is outside their span.
  std::optional<Vector> simple_coordinates(const LatticeVector& v) const;
  // Integer coefficients; fails when v is not in the root lattice.
  std::vector<Integer> root_lattice_coordinates(const LatticeVector& v) const;

  std::vector<IsometryElement> simple_reflections() const;

  // Vector u in the span with u . alpha_j = delta_{jk}.
  LatticeVector fundamental_coweight(std::size_t k) const;

  CartanMatrix cartan() const;

 private:
  LatticePtr ambient_;
  std::vector<LatticeVector> roots_;
  std::vector<LatticeVector> simple_;
  std::string type_;
  std::map<Vector, std::size_t> index_;
  Matrix simple_gram_inverse_;
};

struct CartanResult {
  std::string type_label;
  std::vector<LatticeVector> basis;
};

// Root basis from a fixed generic functional (prime weights, lexicographic
// tie-break) and the ADE type of its Cartan matrix.
CartanResult cartan_type(const std::vector<LatticeVector>& roots);

// Validates closure (negation, reflections) and extracts type and basis.
RootSystemData make_root_system(std::vector<LatticeVector> roots);

// Reflection closure of a proposed basis; fails if it is not a root basis of
// the root system it generates.
RootSystemData root_system_from_basis(const std::vector<LatticeVector>& basis);

struct BasisCheck {
  bool ok = false;
  std::string reason;
};

// Basis members are roots, independent, rank-complete, and every root is a
// sign-coherent integer combination of them.
BasisCheck check_root_basis(const std::vector<LatticeVector>& basis,
                            const std::vector<LatticeVector>& roots);

CartanMatrix cartan_of_basis(const std::vector<LatticeVector>& basis);

}  // namespace strata::lattice
