#include "strata/coxeter/affine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "strata/lattice/enumerate.hpp"

namespace strata::coxeter {

namespace {

std::pair<int, int> edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::string normalize_type(const std::string& type) {
  std::string t = type;
  if (!t.empty() && t.back() == '~')
    t.pop_back();
  if (t != "E6" && t != "E7")
    fail("unsupported affine type '" + type + "' (expected E6~ or E7~)");
  return t;
}

lattice::RootSystemData bourbaki_system(const std::string& finite) {
  auto lat = lattice::root_lattice(finite);
  std::vector<lattice::LatticeVector> basis;
  for (std::size_t i = 0; i < lat->rank(); ++i)
    basis.push_back(lattice::LatticeVector::basis(lat, i));
  return lattice::root_system_from_basis(basis);
}

// Cartan matrix as the Euclidean form; lattice gram is its negative.
Matrix euclidean_form(const lattice::RootSystemData& sys) {
  return Rational(-1) * sys.ambient()->gram();
}

Vector highest_root_of(const lattice::RootSystemData& sys) {
  const Vector* best = nullptr;
  Rational best_height = 0;
  for (const auto& r : sys.roots()) {
    Rational h = std::accumulate(r.coords().begin(), r.coords().end(), Rational(0));
    if (!best || h > best_height) {
      best = &r.coords();
      best_height = h;
    }
  }
  return *best;
}

CoxeterDiagram affine_diagram(const Matrix& form, const Vector& highest) {
  std::size_t n = form.rows();
  std::vector<int> vs(n + 1);
  std::iota(vs.begin(), vs.end(), 0);
  std::set<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (form(a, b) != 0)
        edges.insert(edge(static_cast<int>(a + 1), static_cast<int>(b + 1)));
  // alpha_0 = -highest; it is joined to k when <alpha_0, alpha_k> = -1.
  Vector ch = form * highest;
  for (std::size_t k = 0; k < n; ++k)
    if (ch[k] != 0) {
      if (ch[k] != 1)
        fail("affine node is not simply laced");
      edges.insert(edge(0, static_cast<int>(k + 1)));
    }
  return CoxeterDiagram(vs, edges);
}

}  // namespace

CoxeterDiagram::CoxeterDiagram(std::vector<int> vertices, std::set<std::pair<int, int>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    fail("diagram has repeated vertices");
  for (const auto& [a, b] : edges_)
    if (a >= b || !contains(a) || !contains(b))
      fail("diagram edge refers to unknown vertices");
}

bool CoxeterDiagram::adjacent(int a, int b) const { return edges_.count(edge(a, b)) > 0; }

bool CoxeterDiagram::contains(int v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

CoxeterDiagram CoxeterDiagram::induced(const std::vector<int>& subset) const {
  for (int v : subset)
    if (!contains(v))
      fail("induced diagram: unknown vertex " + std::to_string(v));
  std::set<std::pair<int, int>> es;
  for (const auto& e : edges_)
    if (std::count(subset.begin(), subset.end(), e.first) &&
        std::count(subset.begin(), subset.end(), e.second))
      es.insert(e);
  return CoxeterDiagram(subset, es);
}

CoxeterDiagram CoxeterDiagram::removing(int i) const {
  if (!contains(i))
    fail("diagram has no vertex " + std::to_string(i));
  std::vector<int> rest;
  for (int v : vertices_)
    if (v != i)
      rest.push_back(v);
  return induced(rest);
}

lattice::CartanMatrix CoxeterDiagram::cartan() const {
  std::size_t n = vertices_.size();
  lattice::CartanMatrix c(n, std::vector<int>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      c[a][b] = a == b ? 2 : (adjacent(vertices_[a], vertices_[b]) ? -1 : 0);
  return c;
}

bool CoxeterDiagram::is_connected() const {
  if (vertices_.empty())
    return true;
  std::set<int> seen{vertices_.front()};
  std::deque<int> q{vertices_.front()};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : vertices_)
      if (adjacent(v, w) && seen.insert(w).second)
        q.push_back(w);
  }
  return seen.size() == vertices_.size();
}

std::string CoxeterDiagram::type_label() const {
  if (vertices_.empty())
    return "trivial";
  return lattice::classify_cartan(cartan()).label;
}

std::vector<Permutation> CoxeterDiagram::automorphisms() const {
  // Permutations are indexed by vertex value; vertices are 0..n-1 in practice.
  int top = vertices_.empty() ? 0 : vertices_.back() + 1;
  std::vector<int> order = vertices_;
  std::vector<Permutation> out;
  do {
    Permutation g(static_cast<std::size_t>(top));
    std::iota(g.begin(), g.end(), 0);
    for (std::size_t k = 0; k < vertices_.size(); ++k)
      g[static_cast<std::size_t>(vertices_[k])] = order[k];
    bool ok = true;
    for (const auto& [a, b] : edges_)
      if (!adjacent(g[static_cast<std::size_t>(a)], g[static_cast<std::size_t>(b)])) {
        ok = false;
        break;
      }
    if (ok)
      out.push_back(std::move(g));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

AffineIsometry AffineIsometry::identity(std::size_t n) {
  return {Matrix::identity(n), zero_vector(n)};
}

Vector AffineIsometry::apply(const Vector& x) const { return linear * x + translation; }

AffineIsometry AffineIsometry::then(const AffineIsometry& after) const {
  return {after.linear * linear, after.linear * translation + after.translation};
}

AffineIsometry AffineIsometry::inverse() const {
  Matrix inv = strata::inverse(linear);
  return {inv, -(inv * translation)};
}

bool AffineIsometry::is_translation() const { return linear == Matrix::identity(linear.rows()); }

AffineIsometry compose_all(const std::vector<AffineIsometry>& maps) {
  if (maps.empty())
    fail("compose_all needs at least one map");
  AffineIsometry out = AffineIsometry::identity(maps.front().linear.rows());
  for (auto it = maps.rbegin(); it != maps.rend(); ++it)
    out = out.then(*it);
  return out;
}

AffineRealization::AffineRealization(const std::string& finite_type)
    : name_(normalize_type(finite_type) + "~"),
      finite_(normalize_type(finite_type)),
      system_(bourbaki_system(finite_)),
      form_(euclidean_form(system_)),
      highest_(highest_root_of(system_)),
      diagram_(affine_diagram(form_, highest_)) {
  n_ = form_.rows();

  // v_0 = 0; v_k solves <v_k, alpha_j> = 0 for j != k and <v_k, highest> = 1.
  vertices_.push_back(zero_vector(n_));
  for (std::size_t k = 1; k <= n_; ++k) {
    Matrix a(n_, n_);
    Vector b(n_);
    Vector hf = form_ * highest_;
    for (std::size_t j = 0; j < n_; ++j) {
      bool is_k = j + 1 == k;
      for (std::size_t c = 0; c < n_; ++c)
        a(j, c) = is_k ? hf[c] : form_(j, c);
      b[j] = is_k ? Rational(1) : Rational(0);
    }
    auto v = solve_unique(a, b);
    if (!v)
      fail("alcove vertex equations have no solution");
    vertices_.push_back(*v);
  }

  // s_k(x) = x - <x, alpha_k> alpha_k;  s_0(x) = x - (<x, highest> - 1) highest.
  auto linear_reflection = [&](const Vector& root) {
    Vector f = form_ * root;
    Matrix m = Matrix::identity(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c)
        m(r, c) -= root[r] * f[c];
    return m;
  };
  reflections_.push_back({linear_reflection(highest_), highest_});
  for (std::size_t k = 0; k < n_; ++k)
    reflections_.push_back({linear_reflection(unit_vector(n_, k)), zero_vector(n_)});

  automorphisms_ = diagram_.automorphisms();
}

Rational AffineRealization::pair(const Vector& x, const Vector& y) const {
  Vector fy = form_ * y;
  Rational s = 0;
  for (std::size_t i = 0; i < n_; ++i)
    s += x[i] * fy[i];
  return s;
}

Rational AffineRealization::wall_value(int k, const Vector& x) const {
  if (k == 0)
    return 1 - pair(x, highest_);
  if (k < 0 || static_cast<std::size_t>(k) > n_)
    fail("no wall " + std::to_string(k));
  return pair(x, unit_vector(n_, static_cast<std::size_t>(k - 1)));
}

const Vector& AffineRealization::vertex(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) > n_)
    fail("no vertex " + std::to_string(k));
  return vertices_[static_cast<std::size_t>(k)];
}

Vector AffineRealization::barycenter() const {
  Vector s = zero_vector(n_);
  for (const auto& v : vertices_)
    s = s + v;
  return Rational(1, static_cast<long>(n_ + 1)) * s;
}

bool AffineRealization::in_alcove(const Vector& x) const {
  for (int k = 0; k <= static_cast<int>(n_); ++k)
    if (wall_value(k, x) < 0)
      return false;
  return true;
}

const AffineIsometry& AffineRealization::reflection(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) > n_)
    fail("no generator " + std::to_string(k));
  return reflections_[static_cast<std::size_t>(k)];
}

AffineIsometry AffineRealization::extension(const Permutation& g) const {
  if (g.size() != n_ + 1)
    fail("vertex permutation has the wrong size");
  const Vector& t = vertex(g[0]);
  std::vector<Vector> from, to;
  for (std::size_t k = 1; k <= n_; ++k) {
    from.push_back(vertices_[k] - vertices_[0]);
    to.push_back(vertex(g[k]) - t);
  }
  Matrix lin = Matrix::from_columns(to) * inverse(Matrix::from_columns(from));
  return {lin, t - lin * vertices_[0]};
}

AffineRealization build_affine(const std::string& type) { return AffineRealization(type); }

std::string subdiagram_type(const AffineRealization& real, int i) {
  return real.diagram().removing(i).type_label();
}

AffineIsometry word_image(const AffineRealization& real, const std::vector<int>& word) {
  AffineIsometry out = AffineIsometry::identity(real.rank());
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = out.then(real.reflection(*it));
  return out;
}

LongestElement longest_element(const AffineRealization& real, const std::vector<int>& parabolic) {
  auto sub = real.diagram().induced(parabolic);
  if (sub.size() == real.diagram().size())
    fail("longest element requested for the full affine diagram (infinite type)");
  LongestElement out{sub.type_label(), {}, AffineIsometry::identity(real.rank())};
  Vector y = real.barycenter();
  std::size_t bound = lattice::positive_root_count(out.type) + 1;
  for (;;) {
    auto it = std::find_if(sub.vertices().begin(), sub.vertices().end(),
                           [&](int j) { return real.wall_value(j, y) > 0; });
    if (it == sub.vertices().end())
      break;
    y = real.reflection(*it).apply(y);
    out.word.push_back(*it);
    if (out.word.size() > bound)
      fail("descent walk did not terminate (parabolic is not of finite type)");
  }
  out.image = word_image(real, out.word);
  return out;
}

LongestElement longest_element_at(const AffineRealization& real, int i) {
  std::vector<int> rest;
  for (int v : real.diagram().vertices())
    if (v != i)
      rest.push_back(v);
  if (rest.size() == real.diagram().size())
    fail("no vertex " + std::to_string(i));
  return longest_element(real, rest);
}

AffineIsometry opposition(const AffineRealization& real, int i) {
  return {Rational(-1) * Matrix::identity(real.rank()), Rational(2) * real.vertex(i)};
}

std::optional<Permutation> quasi_special(const AffineRealization& real, int i) {
  auto w = longest_element_at(real, i);
  auto h = w.image.then(opposition(real, i));
  Permutation g;
  for (int k = 0; k <= static_cast<int>(real.rank()); ++k) {
    auto img = h.apply(real.vertex(k));
    int found = -1;
    for (int m = 0; m <= static_cast<int>(real.rank()); ++m)
      if (real.vertex(m) == img)
        found = m;
    if (found < 0)
      return std::nullopt;
    g.push_back(found);
  }
  const auto& auts = real.automorphisms();
  if (std::find(auts.begin(), auts.end(), g) == auts.end())
    return std::nullopt;
  return g;
}

std::vector<QuasiSpecialEntry> quasi_special_report(const AffineRealization& real) {
  std::vector<QuasiSpecialEntry> out;
  for (int v : real.diagram().vertices())
    out.push_back({v, subdiagram_type(real, v), quasi_special(real, v)});
  return out;
}

Vector translation_of_pair(const AffineRealization& real, int i, int j) {
  auto t = opposition(real, i).then(opposition(real, j));
  Vector expected = Rational(2) * (real.vertex(j) - real.vertex(i));
  if (!t.is_translation() || t.translation != expected)
    fail("s_j s_i is not the translation by 2(v_j - v_i)");
  return expected;
}

bool reflections_are_involutions(const AffineRealization& real) {
  auto id = AffineIsometry::identity(real.rank());
  for (int k : real.diagram().vertices()) {
    const auto& s = real.reflection(k);
    if (!(s.then(s) == id))
      return false;
    // The linear part preserves the form.
    if (!(s.linear.transpose() * real.form() * s.linear == real.form()))
      return false;
  }
  return true;
}

bool coxeter_relations_hold(const AffineRealization& real) {
  auto id = AffineIsometry::identity(real.rank());
  for (int a : real.diagram().vertices())
    for (int b : real.diagram().vertices()) {
      if (a >= b)
        continue;
      int m = real.diagram().adjacent(a, b) ? 3 : 2;
      auto st = real.reflection(b).then(real.reflection(a));
      AffineIsometry p = id;
      for (int r = 1; r <= m; ++r) {
        p = p.then(st);
        if ((p == id) != (r == m))
          return false;
      }
    }
  return true;
}

bool vertices_satisfy_equations(const AffineRealization& real) {
  int n = static_cast<int>(real.rank());
  if (!is_zero(real.vertex(0)))
    return false;
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= n; ++j) {
      Rational w = real.wall_value(j, real.vertex(k));
      // v_k lies on every wall except its own opposite wall.
      if ((j == k) ? w <= 0 : w != 0)
        return false;
    }
  std::vector<Vector> diffs;
  for (int k = 1; k <= n; ++k)
    diffs.push_back(real.vertex(k) - real.vertex(0));
  return rank_of(diffs) == real.rank();
}

bool stabilizer_is_parabolic(const AffineRealization& real, int i) {
  for (int k : real.diagram().vertices()) {
    bool fixes = real.reflection(k).apply(real.vertex(i)) == real.vertex(i);
    if (fixes != (k != i))
      return false;
  }
  return true;
}

std::size_t affine_length(const AffineRealization& real, const AffineIsometry& g) {
  Vector p = real.barycenter();
  Vector q = g.apply(p);
  std::size_t count = 0;
  for (const auto& r : real.finite_system().roots()) {
    if (std::any_of(r.coords().begin(), r.coords().end(), [](const Rational& c) { return c < 0; }))
      continue;
    Rational a = real.pair(p, r.coords()), b = real.pair(q, r.coords());
    if (is_integral(a) || is_integral(b))
      fail("affine_length: point on a reflection hyperplane");
    Integer fa = floor_of(a), fb = floor_of(b);
    Integer d = fa > fb ? Integer(fa - fb) : Integer(fb - fa);
    count += d.convert_to<std::size_t>();
  }
  return count;
}

std::string to_string(const Permutation& g) {
  std::string s = "(";
  for (std::size_t k = 0; k < g.size(); ++k)
    s += (k ? " " : "") + std::to_string(g[k]);
  return s + ")";
}

}  // namespace strata::coxeter
