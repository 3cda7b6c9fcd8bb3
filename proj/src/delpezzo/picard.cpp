#include "strata/delpezzo/picard.hpp"

#include <algorithm>
#include <set>

#include "strata/lattice/enumerate.hpp"

namespace strata::delpezzo {

using lattice::BasisCheck;
using lattice::cartan_type;
using lattice::check_root_basis;
using lattice::enumerate_roots;
using lattice::root_system_from_basis;

namespace {

std::set<Vector> coord_set(const std::vector<LatticeVector>& vs) {
  std::set<Vector> out;
  for (const auto& v : vs)
    out.insert(v.coords());
  return out;
}

// Basis of the system generated by `basis`, which must reproduce exactly `roots`.
RootSystemData certified_system(const std::vector<LatticeVector>& basis,
                                const std::vector<LatticeVector>& roots,
                                const std::string& what) {
  auto sys = root_system_from_basis(basis);
  if (coord_set(sys.roots()) != coord_set(roots))
    fail(what + ": the stated basis generates a different root set");
  return sys;
}

}  // namespace

LatticeVector PicardLattice::e(std::size_t i) const {
  if (i < 1 || i > 7)
    fail("e_i is defined for 1 <= i <= 7");
  return LatticeVector::basis(base, i);
}

PicardLattice build_picard() {
  Vector d(8, Rational(-1));
  d[0] = 1;
  auto base = lattice::make_lattice(Matrix::diagonal(d),
                                    {"l", "e1", "e2", "e3", "e4", "e5", "e6", "e7"});
  Vector k(8, Rational(-1));
  k[0] = 3;
  return PicardLattice{base, LatticeVector(base, k)};
}

std::vector<ExceptionalClass> enumerate_exceptionals(const PicardLattice& pic) {
  auto vs = lattice::enumerate_vectors(pic.base, Rational(-1),
                                       lattice::LevelCondition{pic.K, Rational(1)});
  std::vector<ExceptionalClass> out;
  for (auto& v : vs)
    out.push_back({std::move(v)});
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> partner_pairs(
    const PicardLattice& pic, const std::vector<ExceptionalClass>& classes) {
  std::map<Vector, std::size_t> pos;
  for (std::size_t i = 0; i < classes.size(); ++i)
    pos[classes[i].vec.coords()] = i;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto it = pos.find((pic.K - classes[i].vec).coords());
    if (it == pos.end())
      fail("K - E is not exceptional for E = " + classes[i].vec.expression());
    if (it->second == i)
      fail("partner involution has a fixed point");
    if (i < it->second)
      out.emplace_back(i, it->second);
  }
  return out;
}

RootSystemData root_system_of_X(const PicardLattice& pic) {
  auto sys = lattice::make_root_system(enumerate_roots(pic.base, pic.K));
  if (sys.type_label() != "E7")
    fail("root system of X has type " + sys.type_label());
  return sys;
}

bool roots_are_disjoint_differences(const PicardLattice& pic, const RootSystemData& roots) {
  auto ex = enumerate_exceptionals(pic);
  std::set<Vector> diffs;
  for (const auto& a : ex)
    for (const auto& b : ex)
      if (a.vec.dot(b.vec) == 0)
        diffs.insert((a.vec - b.vec).coords());
  return std::all_of(roots.roots().begin(), roots.roots().end(),
                     [&](const LatticeVector& r) { return diffs.count(r.coords()) > 0; });
}

BLabel::BLabel(char s, int a, int b) : sign(s), first(std::min(a, b)), second(std::max(a, b)) {
  if (s != '+' && s != '-')
    fail("label sign must be + or -");
  if (a == b || first < 0 || second > 7)
    fail("label pair must be two distinct elements of b0..b7");
}

bool BLabel::disjoint_from(const BLabel& o) const {
  return first != o.first && first != o.second && second != o.first && second != o.second;
}

bool BLabel::meets_in_one(const BLabel& o) const {
  int common = (first == o.first || first == o.second) + (second == o.first || second == o.second);
  return common == 1;
}

std::string BLabel::str() const {
  return std::string("E") + sign + "{b" + std::to_string(first) + ",b" + std::to_string(second) +
         "}";
}

LabeledDictionary::LabeledDictionary(PicardLattice pic, std::vector<LatticeVector> classes,
                                     std::vector<BLabel> labels)
    : pic_(std::move(pic)), classes_(std::move(classes)), labels_(std::move(labels)) {
  if (classes_.size() != labels_.size())
    fail("dictionary: class and label counts differ");
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (!by_vector_.emplace(classes_[i].coords(), i).second)
      fail("dictionary: class " + classes_[i].expression() + " labelled twice");
    if (!by_label_.emplace(labels_[i], i).second)
      fail("dictionary: label " + labels_[i].str() + " used twice");
  }
}

std::optional<std::size_t> LabeledDictionary::index_of(const LatticeVector& v) const {
  auto it = by_vector_.find(v.coords());
  if (it == by_vector_.end())
    return std::nullopt;
  return it->second;
}

std::size_t LabeledDictionary::index_of(const BLabel& b) const {
  auto it = by_label_.find(b);
  if (it == by_label_.end())
    fail("dictionary: no class with label " + b.str());
  return it->second;
}

const BLabel& LabeledDictionary::label_of(const LatticeVector& v) const {
  auto i = index_of(v);
  if (!i)
    fail("dictionary: " + v.expression() + " is not a labelled class");
  return labels_[*i];
}

const LatticeVector& LabeledDictionary::class_of(const BLabel& b) const {
  return classes_[index_of(b)];
}

std::size_t LabeledDictionary::partner_index(std::size_t i) const {
  auto j = index_of(pic_.K - classes_.at(i));
  if (!j)
    fail("dictionary: partner of " + classes_[i].expression() + " is unlabelled");
  return *j;
}

LabeledDictionary label_exceptionals(const PicardLattice& pic) {
  std::vector<LatticeVector> classes;
  std::vector<BLabel> labels;
  for (int i = 1; i <= 7; ++i) {
    classes.push_back(pic.e(i));
    labels.emplace_back('-', 0, i);
    classes.push_back(pic.K - pic.e(i));
    labels.emplace_back('+', 0, i);
  }
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) {
      auto line = pic.l() - pic.e(i) - pic.e(j);
      classes.push_back(line);
      labels.emplace_back('+', i, j);
      classes.push_back(pic.K - line);
      labels.emplace_back('-', i, j);
    }

  // Order the dictionary like the enumerated classes, and insist they agree.
  auto ex = enumerate_exceptionals(pic);
  std::map<Vector, std::size_t> given;
  for (std::size_t i = 0; i < classes.size(); ++i)
    given[classes[i].coords()] = i;
  if (given.size() != classes.size() || ex.size() != classes.size())
    fail("dictionary does not have one label per exceptional class");
  std::vector<LatticeVector> ordered;
  std::vector<BLabel> ordered_labels;
  for (const auto& e : ex) {
    auto it = given.find(e.vec.coords());
    if (it == given.end())
      fail("exceptional class " + e.vec.expression() + " has no label");
    ordered.push_back(classes[it->second]);
    ordered_labels.push_back(labels[it->second]);
  }

  LabeledDictionary dict(pic, std::move(ordered), std::move(ordered_labels));
  for (std::size_t i = 0; i < dict.size(); ++i)
    if (dict.labels()[dict.partner_index(i)] != dict.labels()[i].flipped())
      fail("partner involution does not flip the label of " + dict.labels()[i].str());
  return dict;
}

int EpsilonCharacter::operator()(const LatticeVector& v) const {
  std::vector<Integer> c;
  for (const auto& x : v.coords())
    c.push_back(to_integer(x));
  return chi.evaluate(c);
}

EpsilonCharacter epsilon_character(const LabeledDictionary& dict) {
  // Row = coordinates mod 2 of a class, plus the target bit (1 for sign -).
  constexpr std::size_t n = 8;
  std::vector<std::uint32_t> rows;
  for (std::size_t i = 0; i < dict.size(); ++i) {
    std::uint32_t r = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (boost::multiprecision::bit_test(boost::multiprecision::abs(to_integer(dict.classes()[i][k])), 0))
        r |= 1u << k;
    if (dict.labels()[i].sign == '-')
      r |= 1u << n;
    rows.push_back(r);
  }
  std::vector<std::size_t> pivot_of(n, rows.size());
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = rank;
    while (p < rows.size() && !((rows[p] >> col) & 1u))
      ++p;
    if (p == rows.size())
      continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && ((rows[r] >> col) & 1u))
        rows[r] ^= rows[rank];
    pivot_of[col] = rank++;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rows[r] != 0)
      fail("the sign labels are not the values of a character");

  EpsilonCharacter eps;
  eps.constraint_rank = rank;
  eps.unique = rank == n;
  eps.chi.values_on_basis.assign(n, 1);
  for (std::size_t col = 0; col < n; ++col)
    if (pivot_of[col] < rows.size() && ((rows[pivot_of[col]] >> n) & 1u))
      eps.chi.values_on_basis[col] = -1;
  for (std::size_t i = 0; i < dict.size(); ++i)
    if (eps(dict.classes()[i]) != (dict.labels()[i].sign == '+' ? 1 : -1))
      fail("epsilon disagrees with the label of " + dict.classes()[i].expression());
  return eps;
}

KernelReport kernel_roots_report(const PicardLattice& pic, const EpsilonCharacter& eps) {
  auto e7 = root_system_of_X(pic);
  std::vector<LatticeVector> ker;
  for (const auto& r : e7.roots())
    if (eps(r) == 1)
      ker.push_back(r);

  std::vector<LatticeVector> basis;
  LatticeVector first = -2 * pic.l();
  for (std::size_t i = 2; i <= 7; ++i)
    first = first + pic.e(i);
  basis.push_back(first);
  for (std::size_t i = 1; i < 7; ++i)
    basis.push_back(pic.e(i) - pic.e(i + 1));

  auto check = check_root_basis(basis, ker);
  auto sys = check.ok ? certified_system(basis, ker, "kernel of epsilon")
                      : lattice::make_root_system(ker);

  KernelReport rep{sys, 0, 0, basis, check, {}};
  std::set<Vector> e_diffs, k_family;
  for (std::size_t i = 1; i <= 7; ++i) {
    for (std::size_t j = 1; j <= 7; ++j)
      if (i != j)
        e_diffs.insert((pic.e(i) - pic.e(j)).coords());
    auto v = pic.K - pic.l() + pic.e(i);
    k_family.insert(v.coords());
    k_family.insert((-v).coords());
  }
  for (const auto& r : ker) {
    rep.differences_of_e += e_diffs.count(r.coords());
    rep.k_minus_l_plus_e += k_family.count(r.coords());
  }
  rep.index_in_e7 = lattice::sublattice_index(sys.simple_roots(), e7.simple_roots());
  return rep;
}

std::vector<LatticeVector> same_sign_disjoint_differences(const LabeledDictionary& dict,
                                                          const std::vector<BLabel>& family) {
  std::set<LatticeVector> out;
  for (const auto& a : family)
    for (const auto& b : family) {
      if (a.sign != b.sign)
        continue;
      const auto& u = dict.class_of(a);
      const auto& v = dict.class_of(b);
      if (u.dot(v) == 0)
        out.insert(u - v);
    }
  return {out.begin(), out.end()};
}

std::vector<std::string> stratum_keys() { return {"1^4", "2,1^2", "2^2", "3,1", "4"}; }

StratumSubsystems stratum_subsystems(const std::string& key) {
  auto pic = build_picard();
  auto dict = label_exceptionals(pic);
  auto e7 = root_system_of_X(pic);

  auto chain = [&](std::size_t from, std::size_t to) {
    std::vector<LatticeVector> b;
    for (std::size_t i = from; i < to; ++i)
      b.push_back(pic.e(i) - pic.e(i + 1));
    return b;
  };
  auto family = [&](int max_index) {
    std::vector<BLabel> f;
    for (char s : {'+', '-'})
      for (int i = 1; i <= max_index; ++i)
        for (int j = i + 1; j <= max_index; ++j)
          f.emplace_back(s, i, j);
    return f;
  };
  auto orthogonal_exceptionals = [&](const std::vector<LatticeVector>& basis) {
    std::vector<LatticeVector> out;
    for (const auto& c : dict.classes())
      if (std::all_of(basis.begin(), basis.end(),
                      [&](const LatticeVector& b) { return b.dot(c) == 0; }))
        out.push_back(c);
    return out;
  };

  if (key == "1^4" || key == "3,1" || key == "2,1^2") {
    StratumSubsystems s{key, e7, e7.simple_roots(), {true, ""}, {}, std::nullopt, {}, {}};
    if (key == "1^4") {
      auto rep = kernel_roots_report(pic, epsilon_character(dict));
      s.boundary = rep.system;
      s.boundary_basis = rep.stated_basis;
      s.boundary_basis_check = rep.stated_basis_check;
    } else if (key == "2,1^2") {
      auto roots = same_sign_disjoint_differences(dict, family(7));
      s.boundary_basis = chain(1, 7);
      s.boundary_basis_check = check_root_basis(s.boundary_basis, roots);
      s.boundary = s.boundary_basis_check.ok
                       ? certified_system(s.boundary_basis, roots, "stratum 2,1^2")
                       : lattice::make_root_system(roots);
    }
    return s;
  }
  if (key == "2^2" || key == "4") {
    std::vector<LatticeVector> basis{pic.l() - pic.e(1) - pic.e(2) - pic.e(3)};
    for (auto& v : chain(1, 6))
      basis.push_back(v);
    auto components = orthogonal_exceptionals(basis);
    if (components.size() != 2 || components[0] + components[1] != pic.K)
      fail("the E6 basis does not single out one partner pair");
    auto roots = enumerate_roots(pic.base, pic.K);
    std::vector<LatticeVector> perp;
    for (const auto& r : roots)
      if (r.dot(components[0]) == 0)
        perp.push_back(r);
    auto check = check_root_basis(basis, perp);
    auto sys = check.ok ? certified_system(basis, perp, "stratum " + key)
                        : lattice::make_root_system(perp);
    StratumSubsystems s{key, sys, basis, check, components, std::nullopt, {}, {}};
    if (key == "2^2") {
      auto sub = same_sign_disjoint_differences(dict, family(6));
      s.boundary_basis = chain(1, 6);
      s.boundary_basis_check = check_root_basis(s.boundary_basis, sub);
      s.boundary = s.boundary_basis_check.ok
                       ? certified_system(s.boundary_basis, sub, "stratum 2^2")
                       : lattice::make_root_system(sub);
    }
    return s;
  }
  fail("unknown stratum key '" + key + "' (expected one of 1^4, 2,1^2, 2^2, 3,1, 4)");
}

}  // namespace strata::delpezzo
