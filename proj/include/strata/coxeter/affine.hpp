#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "strata/lattice/cartan.hpp"

namespace strata::coxeter {

using Permutation = std::vector<int>;  // g[k] = image of vertex k

// Simply laced Coxeter diagram; absent edges mean m = 2, edges mean m = 3.
class CoxeterDiagram {
 public:
  CoxeterDiagram(std::vector<int> vertices, std::set<std::pair<int, int>> edges);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::set<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int a, int b) const;
  bool contains(int v) const;
  std::size_t size() const { return vertices_.size(); }

  // Diagram on a subset of the vertices.
  CoxeterDiagram induced(const std::vector<int>& subset) const;
  // Without vertex i and its edges.
  CoxeterDiagram removing(int i) const;

  lattice::CartanMatrix cartan() const;
  bool is_connected() const;
  // ADE label of a finite-type diagram; fails otherwise.
  std::string type_label() const;

  // All vertex permutations preserving the edge set, identity first.
  std::vector<Permutation> automorphisms() const;

 private:
  std::vector<int> vertices_;
  std::set<std::pair<int, int>> edges_;
};

// x -> linear * x + translation.
struct AffineIsometry {
  Matrix linear;
  Vector translation;

  static AffineIsometry identity(std::size_t n);
  Vector apply(const Vector& x) const;
  AffineIsometry then(const AffineIsometry& after) const;  // after o this
  AffineIsometry inverse() const;
  bool is_translation() const;

  friend bool operator==(const AffineIsometry&, const AffineIsometry&) = default;
};

// Product f1 o f2 o ... o fk (fk applied first).
AffineIsometry compose_all(const std::vector<AffineIsometry>& maps);

// Affine Weyl group of E6 or E7 acting on Q^n, points written in
// simple-root coordinates. The Euclidean form is the Cartan matrix, so
// <alpha_i, alpha_i> = 2 (the lattice convention alpha.alpha = -2 with the
// sign reversed). Vertex 0 is the affine node; vertex k >= 1 is Bourbaki node k.
// The fundamental alcove is { x : <x, alpha_k> >= 0, <x, highest> <= 1 }.
class AffineRealization {
 public:
  explicit AffineRealization(const std::string& finite_type);

  const std::string& name() const { return name_; }
  const std::string& finite_type() const { return finite_; }
  std::size_t rank() const { return n_; }
  const lattice::RootSystemData& finite_system() const { return system_; }
  const Matrix& form() const { return form_; }
  const Vector& highest_root() const { return highest_; }
  const CoxeterDiagram& diagram() const { return diagram_; }
  const std::vector<Permutation>& automorphisms() const { return automorphisms_; }

  Rational pair(const Vector& x, const Vector& y) const;
  // a_0 = 1 - <x, highest>, a_k = <x, alpha_k>; the alcove is where all are >= 0.
  Rational wall_value(int k, const Vector& x) const;
  const Vector& vertex(int k) const;
  Vector barycenter() const;
  bool in_alcove(const Vector& x) const;

  const AffineIsometry& reflection(int k) const;

  // Unique affine map sending v_k to v_{g[k]}.
  AffineIsometry extension(const Permutation& g) const;

 private:
  std::string name_;
  std::string finite_;
  std::size_t n_ = 0;
  lattice::RootSystemData system_;
  Matrix form_;
  Vector highest_;
  std::vector<Vector> vertices_;
  std::vector<AffineIsometry> reflections_;
  CoxeterDiagram diagram_;
  std::vector<Permutation> automorphisms_;
};

// "E6~" or "E7~" (the trailing ~ is optional).
AffineRealization build_affine(const std::string& type);

std::string subdiagram_type(const AffineRealization& real, int i);

struct LongestElement {
  std::string type;
  std::vector<int> word;  // reduced word, leftmost letter applied last
  AffineIsometry image;
};

// Longest element of the parabolic on the given vertices, found by walking a
// generic alcove point across the walls of the parabolic, lowest vertex first.
LongestElement longest_element(const AffineRealization& real, const std::vector<int>& parabolic);
// Parabolic on all vertices except i.
LongestElement longest_element_at(const AffineRealization& real, int i);

// Image of the word t_{w0} t_{w1} ... in the affine group.
AffineIsometry word_image(const AffineRealization& real, const std::vector<int>& word);

// Point reflection at v_i.
AffineIsometry opposition(const AffineRealization& real, int i);

// If s_i o w_i permutes the alcove vertices by a diagram automorphism, that
// automorphism.
std::optional<Permutation> quasi_special(const AffineRealization& real, int i);

struct QuasiSpecialEntry {
  int vertex = 0;
  std::string subdiagram;
  std::optional<Permutation> g;
};

std::vector<QuasiSpecialEntry> quasi_special_report(const AffineRealization& real);

// s_j o s_i, asserted to be the translation by 2(v_j - v_i); returns that vector.
Vector translation_of_pair(const AffineRealization& real, int i, int j);

// Realization self-checks.
bool reflections_are_involutions(const AffineRealization& real);
bool coxeter_relations_hold(const AffineRealization& real);
bool vertices_satisfy_equations(const AffineRealization& real);
// Generators of the parabolic at v_i fix v_i; s_i moves it.
bool stabilizer_is_parabolic(const AffineRealization& real, int i);
// Number of affine reflection hyperplanes separating the alcove from its
// image, i.e. the length of g in the affine Weyl group.
std::size_t affine_length(const AffineRealization& real, const AffineIsometry& g);

std::string to_string(const Permutation& g);

}  // namespace strata::coxeter
