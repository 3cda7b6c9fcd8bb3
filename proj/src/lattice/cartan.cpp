#include "strata/lattice/cartan.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace strata::lattice {

namespace {

struct ParsedComponent {
  char family;
  int rank;
};

std::vector<ParsedComponent> parse_label(std::string_view label) {
  std::vector<ParsedComponent> out;
  if (label == "trivial")
    return out;
  std::size_t pos = 0;
  while (pos <= label.size()) {
    std::size_t plus = label.find('+', pos);
    std::string_view part = label.substr(pos, plus == std::string_view::npos ? label.npos : plus - pos);
    if (part.size() < 2 || (part[0] != 'A' && part[0] != 'D' && part[0] != 'E'))
      fail("unknown root system label '" + std::string(label) + "'");
    int rank = 0;
    for (char c : part.substr(1)) {
      if (c < '0' || c > '9')
        fail("unknown root system label '" + std::string(label) + "'");
      rank = rank * 10 + (c - '0');
    }
    char fam = part[0];
    if (rank < 1 || (fam == 'D' && rank < 4) || (fam == 'E' && (rank < 6 || rank > 8)))
      fail("unsupported root system '" + std::string(part) + "'");
    out.push_back({fam, rank});
    if (plus == std::string_view::npos)
      break;
    pos = plus + 1;
  }
  return out;
}

int family_order(char f) { return f == 'E' ? 0 : f == 'D' ? 1 : 2; }

std::string component_label(char family, int rank) {
  return std::string(1, family) + std::to_string(rank);
}

std::vector<Integer> first_primes(std::size_t n) {
  std::vector<Integer> primes;
  for (long candidate = 2; primes.size() < n; ++candidate) {
    bool prime = true;
    for (const auto& p : primes)
      if (candidate % p.convert_to<long>() == 0) {
        prime = false;
        break;
      }
    if (prime)
      primes.emplace_back(candidate);
  }
  return primes;
}

bool lex_positive(const Vector& v) {
  for (const auto& x : v)
    if (x != 0)
      return x > 0;
  return false;
}

}  // namespace

DynkinType classify_cartan(const CartanMatrix& cartan) {
  std::size_t n = cartan.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan[i].size() != n)
      fail("Cartan matrix is not square");
    if (cartan[i][i] != 2)
      fail("Cartan matrix diagonal entry is not 2");
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && ((cartan[i][j] != 0 && cartan[i][j] != -1) || cartan[i][j] != cartan[j][i]))
        fail("Cartan matrix is not of simply laced ADE type");
  }

  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && cartan[i][j] == -1)
        adj[i].push_back(j);

  std::vector<bool> seen(n, false);
  DynkinType type;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s])
      continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (auto w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    std::size_t edges = 0;
    std::vector<std::size_t> branch;
    for (auto v : comp) {
      edges += adj[v].size();
      if (adj[v].size() > 3)
        fail("Dynkin diagram has a node of degree > 3");
      if (adj[v].size() == 3)
        branch.push_back(v);
    }
    edges /= 2;
    if (edges + 1 != comp.size())
      fail("Dynkin diagram contains a cycle (not of finite type)");
    if (branch.size() > 1)
      fail("Dynkin diagram has more than one branch node");

    DynkinComponent dc;
    dc.rank = static_cast<int>(comp.size());
    // Walk from `from` away from `prev`, collecting the arm.
    auto walk = [&](std::size_t from, std::size_t prev) {
      std::vector<std::size_t> arm{from};
      while (true) {
        std::size_t cur = arm.back();
        std::size_t next = n;
        for (auto w : adj[cur])
          if (w != prev)
            next = w;
        if (next == n)
          break;
        prev = cur;
        arm.push_back(next);
      }
      return arm;
    };

    if (branch.empty()) {
      dc.family = 'A';
      std::size_t start = comp.front();
      for (auto v : comp)
        if (adj[v].size() <= 1) {
          start = v;
          break;
        }
      dc.nodes = comp.size() == 1 ? comp : walk(start, n);
    } else {
      std::size_t b = branch.front();
      std::vector<std::vector<std::size_t>> arms;
      for (auto w : adj[b])
        arms.push_back(walk(w, b));
      std::stable_sort(arms.begin(), arms.end(),
                       [](const auto& x, const auto& y) { return x.size() < y.size(); });
      std::size_t p = arms[0].size(), q = arms[1].size(), r = arms[2].size();
      if (p == 1 && q == 1) {
        dc.family = 'D';
        // Bourbaki: long arm from its far end, branch, then the two short arms.
        dc.nodes.assign(arms[2].rbegin(), arms[2].rend());
        dc.nodes.push_back(b);
        dc.nodes.push_back(arms[0][0]);
        dc.nodes.push_back(arms[1][0]);
      } else if (p == 1 && q == 2 && r >= 2 && r <= 4) {
        dc.family = 'E';
        // Bourbaki: 1 = far end of the length-2 arm, 2 = the short arm, 3, 4 = branch, 5.. long arm.
        dc.nodes = {arms[1][1], arms[0][0], arms[1][0], b};
        dc.nodes.insert(dc.nodes.end(), arms[2].begin(), arms[2].end());
      } else {
        fail("Dynkin diagram is not of ADE type");
      }
    }
    type.components.push_back(std::move(dc));
  }

  std::stable_sort(type.components.begin(), type.components.end(),
                   [](const DynkinComponent& a, const DynkinComponent& b) {
                     if (family_order(a.family) != family_order(b.family))
                       return family_order(a.family) < family_order(b.family);
                     return a.rank > b.rank;
                   });
  for (const auto& c : type.components) {
    if (!type.label.empty())
      type.label += "+";
    type.label += component_label(c.family, c.rank);
  }
  if (type.label.empty())
    type.label = "trivial";
  return type;
}

CartanMatrix cartan_matrix(std::string_view label) {
  auto parts = parse_label(label);
  std::size_t n = 0;
  for (const auto& p : parts)
    n += static_cast<std::size_t>(p.rank);
  CartanMatrix m(n, std::vector<int>(n, 0));
  std::size_t off = 0;
  for (const auto& p : parts) {
    auto r = static_cast<std::size_t>(p.rank);
    auto link = [&](std::size_t a, std::size_t b) {  // 1-based within the block
      m[off + a - 1][off + b - 1] = -1;
      m[off + b - 1][off + a - 1] = -1;
    };
    for (std::size_t i = 0; i < r; ++i)
      m[off + i][off + i] = 2;
    if (p.family == 'A') {
      for (std::size_t i = 1; i < r; ++i)
        link(i, i + 1);
    } else if (p.family == 'D') {
      for (std::size_t i = 1; i + 1 < r; ++i)
        link(i, i + 1);
      link(r - 2, r);
    } else {
      link(1, 3);
      link(2, 4);
      for (std::size_t i = 3; i < r; ++i)
        link(i, i + 1);
    }
    off += r;
  }
  return m;
}

std::size_t positive_root_count(std::string_view label) {
  std::size_t total = 0;
  for (const auto& p : parse_label(label)) {
    auto n = static_cast<std::size_t>(p.rank);
    if (p.family == 'A')
      total += n * (n + 1) / 2;
    else if (p.family == 'D')
      total += n * (n - 1);
    else
      total += n == 6 ? 36 : n == 7 ? 63 : 120;
  }
  return total;
}

Integer weyl_group_order(std::string_view label) {
  Integer total = 1;
  for (const auto& p : parse_label(label)) {
    Integer fact = 1;
    if (p.family == 'A') {
      for (int k = 2; k <= p.rank + 1; ++k)
        fact *= k;
    } else if (p.family == 'D') {
      for (int k = 2; k <= p.rank; ++k)
        fact *= k;
      fact <<= (p.rank - 1);
    } else {
      fact = p.rank == 6 ? Integer(51840) : p.rank == 7 ? Integer(2903040) : Integer(696729600);
    }
    total *= fact;
  }
  return total;
}

LatticePtr root_lattice(std::string_view label) {
  auto c = cartan_matrix(label);
  std::size_t n = c.size();
  if (n == 0)
    fail("root lattice of the trivial system");
  Matrix gram(n, n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("a" + std::to_string(i + 1));
    for (std::size_t j = 0; j < n; ++j)
      gram(i, j) = -c[i][j];
  }
  return make_lattice(std::move(gram), std::move(labels));
}

RootSystemData::RootSystemData(LatticePtr ambient, std::vector<LatticeVector> roots,
                               std::vector<LatticeVector> simple_roots, std::string type_label)
    : ambient_(std::move(ambient)),
      roots_(std::move(roots)),
      simple_(std::move(simple_roots)),
      type_(std::move(type_label)) {
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (!index_.emplace(roots_[i].coords(), i).second)
      fail("duplicate root in root system");
  if (!simple_.empty()) {
    Matrix g(simple_.size(), simple_.size());
    for (std::size_t i = 0; i < simple_.size(); ++i)
      for (std::size_t j = 0; j < simple_.size(); ++j)
        g(i, j) = simple_[i].dot(simple_[j]);
    simple_gram_inverse_ = inverse(g);
  }
}

std::optional<std::size_t> RootSystemData::index_of(const LatticeVector& v) const {
  auto it = index_.find(v.coords());
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::optional<Vector> RootSystemData::simple_coordinates(const LatticeVector& v) const {
  std::size_t r = simple_.size();
  Vector rhs(r);
  for (std::size_t i = 0; i < r; ++i)
    rhs[i] = simple_[i].dot(v);
  Vector c = r ? simple_gram_inverse_ * rhs : Vector{};
  Vector back = zero_vector(ambient_->rank());
  for (std::size_t i = 0; i < r; ++i)
    back = back + c[i] * simple_[i].coords();
  if (back != v.coords())
    return std::nullopt;
  return c;
}

std::vector<Integer> RootSystemData::root_lattice_coordinates(const LatticeVector& v) const {
  auto c = simple_coordinates(v);
  if (!c)
    fail("vector " + v.expression() + " is outside the span of the root system");
  std::vector<Integer> out;
  for (const auto& x : *c) {
    if (!is_integral(x))
      fail("vector " + v.expression() + " is outside the root lattice");
    out.push_back(to_integer(x));
  }
  return out;
}

std::vector<IsometryElement> RootSystemData::simple_reflections() const {
  return reflections(simple_);
}

LatticeVector RootSystemData::fundamental_coweight(std::size_t k) const {
  if (k >= simple_.size())
    fail("fundamental coweight index out of range");
  Vector c = simple_gram_inverse_ * unit_vector(simple_.size(), k);
  Vector u = zero_vector(ambient_->rank());
  for (std::size_t i = 0; i < simple_.size(); ++i)
    u = u + c[i] * simple_[i].coords();
  return LatticeVector(ambient_, u);
}

CartanMatrix RootSystemData::cartan() const { return cartan_of_basis(simple_); }

CartanMatrix cartan_of_basis(const std::vector<LatticeVector>& basis) {
  std::size_t r = basis.size();
  CartanMatrix c(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      // Simply laced with alpha.alpha = -2: a_ij = -alpha_i.alpha_j.
      Rational x = -basis[i].dot(basis[j]);
      if (!is_integral(x))
        fail("non-integral Cartan entry");
      c[i][j] = to_integer(x).convert_to<int>();
    }
  return c;
}

CartanResult cartan_type(const std::vector<LatticeVector>& roots) {
  if (roots.empty())
    return {"trivial", {}};
  const auto& lat = roots.front().ambient();
  std::set<Vector> all;
  for (const auto& r : roots) {
    if (r.square() != -2)
      fail("cartan_type: vector " + r.expression() + " is not a root");
    all.insert(r.coords());
  }
  for (const auto& r : roots)
    if (!all.count((-r).coords()))
      fail("cartan_type: root set is not closed under negation");

  auto primes = first_primes(lat->rank());
  auto positive = [&](const Vector& v) {
    Rational f = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      f += Rational(primes[i]) * v[i];
    return f != 0 ? f > 0 : lex_positive(v);
  };

  std::set<Vector> pos;
  for (const auto& v : all)
    if (positive(v))
      pos.insert(v);

  std::vector<LatticeVector> basis;
  for (const auto& a : pos) {
    bool decomposable = false;
    for (const auto& b : pos)
      if (b != a && pos.count(a - b)) {
        decomposable = true;
        break;
      }
    if (!decomposable)
      basis.emplace_back(lat, a);
  }

  std::vector<Vector> span;
  for (const auto& r : roots)
    span.push_back(r.coords());
  if (basis.size() != rank_of(span))
    fail("cartan_type: extracted basis size does not match the rank (input is not a root system)");

  auto type = classify_cartan(cartan_of_basis(basis));
  return {type.label, basis};
}

RootSystemData make_root_system(std::vector<LatticeVector> roots) {
  if (roots.empty())
    fail("make_root_system: empty root set");
  std::sort(roots.begin(), roots.end());
  if (std::adjacent_find(roots.begin(), roots.end()) != roots.end())
    fail("make_root_system: duplicate roots");
  std::set<Vector> all;
  for (const auto& r : roots)
    all.insert(r.coords());
  for (const auto& a : roots) {
    if (a.square() != -2)
      fail("make_root_system: " + a.expression() + " does not have square -2");
    for (const auto& b : roots) {
      // s_a(b) = b + (b.a) a
      Rational p = b.dot(a);
      if (p != 0 && !all.count((b + p * a).coords()))
        fail("make_root_system: not closed under reflections");
    }
  }
  auto ct = cartan_type(roots);
  auto lat = roots.front().ambient();
  return RootSystemData(lat, std::move(roots), std::move(ct.basis), ct.type_label);
}

RootSystemData root_system_from_basis(const std::vector<LatticeVector>& basis) {
  if (basis.empty())
    fail("root_system_from_basis: empty basis");
  auto gens = reflections(basis);
  std::set<Vector> seen;
  std::deque<LatticeVector> queue;
  for (const auto& b : basis)
    if (seen.insert(b.coords()).second)
      queue.push_back(b);
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      auto w = g.apply(v);
      if (seen.insert(w.coords()).second)
        queue.push_back(w);
    }
  }
  std::vector<LatticeVector> roots;
  for (const auto& v : seen)
    roots.emplace_back(basis.front().ambient(), v);
  auto check = check_root_basis(basis, roots);
  if (!check.ok)
    fail("root_system_from_basis: " + check.reason);
  auto label = classify_cartan(cartan_of_basis(basis)).label;
  if (label != cartan_type(roots).type_label)
    fail("root_system_from_basis: basis type disagrees with the generated system");
  return RootSystemData(basis.front().ambient(), std::move(roots), basis, label);
}

BasisCheck check_root_basis(const std::vector<LatticeVector>& basis,
                            const std::vector<LatticeVector>& roots) {
  std::set<Vector> all;
  std::vector<Vector> span;
  for (const auto& r : roots) {
    all.insert(r.coords());
    span.push_back(r.coords());
  }
  std::vector<Vector> bvec;
  for (const auto& b : basis) {
    if (!all.count(b.coords()))
      return {false, b.expression() + " is not in the root set"};
    bvec.push_back(b.coords());
  }
  if (rank_of(bvec) != basis.size())
    return {false, "basis is linearly dependent"};
  if (basis.size() != rank_of(span))
    return {false, "basis size differs from the rank of the root system"};
  for (const auto& r : roots) {
    auto c = coordinates_in(bvec, r.coords());
    if (!c)
      return {false, r.expression() + " is outside the span of the basis"};
    bool nonneg = true, nonpos = true;
    for (const auto& x : *c) {
      if (!is_integral(x))
        return {false, r.expression() + " has non-integral coefficients"};
      nonneg = nonneg && x >= 0;
      nonpos = nonpos && x <= 0;
    }
    if (!nonneg && !nonpos)
      return {false, r.expression() + " has mixed-sign coefficients"};
  }
  return {true, ""};
}

}  // namespace strata::lattice
