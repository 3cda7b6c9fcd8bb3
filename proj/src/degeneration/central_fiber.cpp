#include "strata/degeneration/central_fiber.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace strata::degeneration {

using delpezzo::EpsilonCharacter;
using delpezzo::LabeledDictionary;
using delpezzo::PicardLattice;

std::size_t CentralFiberClass::slot(int b, char sign) {
  if (b < 0 || b > 7 || (sign != '+' && sign != '-'))
    fail("central fiber generator out of range");
  return static_cast<std::size_t>(2 * b + (sign == '-'));
}

CentralFiberClass CentralFiberClass::generator(int b, char sign) {
  CentralFiberClass c;
  c.coeffs_[slot(b, sign)] = 1;
  return c;
}

std::string CentralFiberClass::str() const {
  std::string out;
  for (std::size_t k = 0; k < kGenerators; ++k) {
    const auto& c = coeffs_[k];
    if (c == 0)
      continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (mag != 1)
      out += mag.str() + "*";
    out += std::string("R") + (k % 2 ? '-' : '+') + std::to_string(k / 2);
  }
  return out.empty() ? "0" : out;
}

CentralFiberClass operator+(const CentralFiberClass& a, const CentralFiberClass& b) {
  CentralFiberClass c;
  for (std::size_t k = 0; k < CentralFiberClass::kGenerators; ++k)
    c.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return c;
}

CentralFiberClass operator-(const CentralFiberClass& a, const CentralFiberClass& b) {
  return a + Rational(-1) * b;
}

CentralFiberClass operator*(const Rational& s, const CentralFiberClass& a) {
  CentralFiberClass c;
  for (std::size_t k = 0; k < CentralFiberClass::kGenerators; ++k)
    c.coeffs_[k] = s * a.coeffs_[k];
  return c;
}

namespace {

Rational generator_pairing(std::size_t p, std::size_t q) {
  bool same_point = p / 2 == q / 2;
  bool same_sign = p % 2 == q % 2;
  if (same_point)
    return same_sign ? Rational(-3, 4) : Rational(1);
  return same_sign ? Rational(1, 4) : Rational(0);
}

CentralFiberClass limit_of(const BLabel& l) {
  return CentralFiberClass::generator(l.first, l.sign) +
         CentralFiberClass::generator(l.second, l.sign);
}

}  // namespace

Rational central_pairing(const CentralFiberClass& x, const CentralFiberClass& y) {
  Rational sum = 0;
  for (std::size_t p = 0; p < CentralFiberClass::kGenerators; ++p) {
    if (x.coeffs()[p] == 0)
      continue;
    for (std::size_t q = 0; q < CentralFiberClass::kGenerators; ++q)
      if (y.coeffs()[q] != 0)
        sum += x.coeffs()[p] * y.coeffs()[q] * generator_pairing(p, q);
  }
  return sum;
}

bool numerically_equal(const CentralFiberClass& x, const CentralFiberClass& y) {
  auto d = x - y;
  for (int b = 0; b < 8; ++b)
    for (char s : {'+', '-'})
      if (central_pairing(d, CentralFiberClass::generator(b, s)) != 0)
        return false;
  return true;
}

LimitClass limit_class(const BLabel& label) {
  LimitClass lc{label, limit_of(label)};
  if (central_pairing(lc.cls, lc.cls) != -1)
    fail("limit class of " + label.str() + " does not have square -1");
  auto diff = CentralFiberClass::generator(label.first, label.sign) -
              CentralFiberClass::generator(label.second, label.sign);
  if (central_pairing(diff, diff) != -2)
    fail("difference of rays for " + label.str() + " does not have square -2");
  return lc;
}

std::vector<BLabel> all_labels() {
  std::vector<BLabel> out;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (char s : {'+', '-'})
        out.emplace_back(s, a, b);
  std::sort(out.begin(), out.end());
  return out;
}

LimitIntersectionReport verify_limit_intersections() {
  LimitIntersectionReport rep;
  auto labels = all_labels();
  std::vector<LimitClass> limits;
  for (const auto& l : labels)
    limits.push_back(limit_class(l));
  for (const auto& x : limits)
    for (const auto& y : limits) {
      ++rep.pairs_checked;
      if (x.label == y.label)
        continue;
      Rational v = central_pairing(x.cls, y.cls);
      ++rep.off_diagonal_values[v.str()];
      bool same = x.label.sign == y.label.sign;
      std::optional<Rational> expected;
      if (x.label.meets_in_one(y.label)) {
        ++rep.rule_i;
        expected = same ? 0 : 1;
      } else if (x.label.disjoint_from(y.label)) {
        ++rep.rule_ii;
        expected = same ? 1 : 0;
      } else {
        ++rep.rule_iii;
        expected = 2;
      }
      if (v != *expected)
        rep.failures.push_back(x.label.str() + " . " + y.label.str() + " = " + v.str() +
                               ", expected " + expected->str());
    }
  for (const auto& [value, count] : rep.off_diagonal_values)
    if (value != "0" && value != "1" && value != "2")
      rep.failures.push_back("off-diagonal value " + value + " outside {0,1,2}");
  return rep;
}

LimitMap::LimitMap(const PicardLattice&) {
  images_.push_back(limit_of(BLabel('+', 1, 2)) + limit_of(BLabel('-', 0, 1)) +
                    limit_of(BLabel('-', 0, 2)));
  for (int i = 1; i <= 7; ++i)
    images_.push_back(limit_of(BLabel('-', 0, i)));
}

CentralFiberClass LimitMap::operator()(const LatticeVector& v) const {
  if (v.size() != images_.size())
    fail("limit map applied to a vector of the wrong rank");
  CentralFiberClass out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0)
      out = out + v[i] * images_[i];
  return out;
}

LimitMapReport verify_limit_map(const LabeledDictionary& dict) {
  LimitMapReport rep;
  LimitMap map(dict.picard());
  std::vector<CentralFiberClass> images;
  rep.labels_match = true;
  for (std::size_t i = 0; i < dict.size(); ++i) {
    images.push_back(map(dict.classes()[i]));
    if (!numerically_equal(images.back(), limit_of(dict.labels()[i]))) {
      rep.labels_match = false;
      rep.failures.push_back("image of " + dict.classes()[i].expression() + " is not " +
                             dict.labels()[i].str());
    }
  }
  rep.intersections_preserved = true;
  for (std::size_t i = 0; i < dict.size(); ++i)
    for (std::size_t j = 0; j < dict.size(); ++j)
      if (central_pairing(images[i], images[j]) != dict.classes()[i].dot(dict.classes()[j])) {
        rep.intersections_preserved = false;
        rep.failures.push_back("pairing of " + dict.labels()[i].str() + " and " +
                               dict.labels()[j].str() + " changes in the limit");
      }
  return rep;
}

std::string to_string(RootShape s) {
  return s == RootShape::same_sign_singleton ? "same-sign-singleton" : "opposite-sign-disjoint";
}

RootShapeResult root_shape(const LatticeVector& alpha, const LabeledDictionary& dict,
                           const EpsilonCharacter& eps) {
  if (alpha.square() != -2 || alpha.dot(dict.picard().K) != 0)
    fail(alpha.expression() + " is not a root");
  std::optional<RootShapeResult> res;
  for (std::size_t i = 0; i < dict.size(); ++i) {
    auto j = dict.index_of(dict.classes()[i] - alpha);
    if (!j || dict.classes()[i].dot(dict.classes()[*j]) != 0)
      continue;
    const auto& a = dict.labels()[i];
    const auto& b = dict.labels()[*j];
    RootShape shape;
    if (a.sign == b.sign && a.meets_in_one(b))
      shape = RootShape::same_sign_singleton;
    else if (a.sign != b.sign && a.disjoint_from(b))
      shape = RootShape::opposite_sign_disjoint;
    else
      fail("decomposition " + a.str() + " - " + b.str() + " of " + alpha.expression() +
           " has neither shape");
    if (!res)
      res = RootShapeResult{shape, a, b, eps(alpha), 0};
    else if (res->shape != shape)
      fail("decompositions of " + alpha.expression() + " disagree in shape");
    ++res->decompositions;
  }
  if (!res)
    fail(alpha.expression() + " is not a difference of disjoint exceptional classes");
  if ((res->shape == RootShape::same_sign_singleton) != (res->epsilon == 1))
    fail("shape of " + alpha.expression() + " is not determined by epsilon");
  return *res;
}

SpecializeReport lemma_specialize(const LabeledDictionary& dict, const EpsilonCharacter& eps) {
  SpecializeReport rep;
  auto e7 = delpezzo::root_system_of_X(dict.picard());
  LimitMap map(dict.picard());
  std::vector<CentralFiberClass> ray_differences;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      if (a != b)
        for (char s : {'+', '-'})
          ray_differences.push_back(CentralFiberClass::generator(a, s) -
                                    CentralFiberClass::generator(b, s));
  rep.matches_epsilon = true;
  rep.matches_shape = true;
  for (const auto& alpha : e7.roots()) {
    ++rep.roots;
    auto image = map(alpha);
    bool spec = std::any_of(ray_differences.begin(), ray_differences.end(),
                            [&](const CentralFiberClass& d) { return numerically_equal(image, d); });
    (spec ? rep.specializing : rep.not_specializing)++;
    if (spec != (eps(alpha) == 1))
      rep.matches_epsilon = false;
    if (spec != (root_shape(alpha, dict, eps).shape == RootShape::same_sign_singleton))
      rep.matches_shape = false;
  }
  return rep;
}

lattice::IsometryElement permutation_isometry(const LabeledDictionary& dict,
                                              const std::array<int, 8>& sigma) {
  std::array<bool, 8> hit{};
  for (int s : sigma) {
    if (s < 0 || s > 7 || hit[static_cast<std::size_t>(s)])
      fail("not a permutation of B");
    hit[static_cast<std::size_t>(s)] = true;
  }
  auto moved = [&](const BLabel& l) {
    return dict.class_of(BLabel(l.sign, sigma[static_cast<std::size_t>(l.first)],
                                sigma[static_cast<std::size_t>(l.second)]));
  };
  std::vector<Vector> cols;
  cols.push_back(
      (moved(BLabel('+', 1, 2)) + moved(BLabel('-', 0, 1)) + moved(BLabel('-', 0, 2))).coords());
  for (int i = 1; i <= 7; ++i)
    cols.push_back(moved(BLabel('-', 0, i)).coords());
  lattice::IsometryElement g(Matrix::from_columns(cols));
  if (!g.preserves_form(*dict.picard().base))
    fail("permutation of B does not induce an isometry");
  for (std::size_t i = 0; i < dict.size(); ++i)
    if (!(g.apply(dict.classes()[i]) == moved(dict.labels()[i])))
      fail("induced isometry disagrees with the label action on " + dict.labels()[i].str());
  return g;
}

PermutationIsoReport permutation_weyl_iso(const LabeledDictionary& dict,
                                          const EpsilonCharacter& eps) {
  PermutationIsoReport rep;
  const auto& pic = dict.picard();
  std::array<int, 8> id{0, 1, 2, 3, 4, 5, 6, 7};
  rep.identity_ok = permutation_isometry(dict, id) == lattice::IsometryElement::identity(8);

  // Transpositions (b_a b_b) against reflections in kernel roots.
  auto e7 = delpezzo::root_system_of_X(pic);
  rep.transpositions_are_reflections = true;
  rep.all_isometries = true;
  std::vector<std::vector<std::size_t>> generator_perms;  // on the 56 classes
  std::vector<std::array<int, 8>> generator_sigmas;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) {
      auto sigma = id;
      std::swap(sigma[static_cast<std::size_t>(a)], sigma[static_cast<std::size_t>(b)]);
      lattice::IsometryElement g = lattice::IsometryElement::identity(8);
      try {
        g = permutation_isometry(dict, sigma);
      } catch (const Error&) {
        rep.all_isometries = false;
        continue;
      }
      // The reflection vector: the unique root alpha with g = s_alpha.
      bool found = false;
      for (const auto& r : e7.roots())
        if (eps(r) == 1 && lattice::IsometryElement::reflection(r) == g) {
          found = true;
          break;
        }
      rep.transpositions_are_reflections = rep.transpositions_are_reflections && found;
      if (b == a + 1) {
        std::vector<std::size_t> perm;
        for (const auto& c : dict.classes())
          perm.push_back(*dict.index_of(g.apply(c)));
        generator_perms.push_back(std::move(perm));
        generator_sigmas.push_back(sigma);
      }
    }
  rep.inside_kernel_weyl_group = rep.transpositions_are_reflections;

  // Closure of the adjacent transpositions, tracked on B and on the classes.
  using Perm8 = std::array<int, 8>;
  std::set<Perm8> sigmas{id};
  std::vector<std::size_t> start(dict.size());
  for (std::size_t i = 0; i < start.size(); ++i)
    start[i] = i;
  std::set<std::vector<std::size_t>> images{start};
  std::set<std::pair<Perm8, std::vector<std::size_t>>> graph{{id, start}};
  std::deque<std::pair<Perm8, std::vector<std::size_t>>> queue{{id, start}};
  while (!queue.empty()) {
    auto [s, p] = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < generator_perms.size(); ++k) {
      Perm8 s2;
      for (std::size_t b = 0; b < 8; ++b)
        s2[b] = generator_sigmas[k][static_cast<std::size_t>(s[b])];
      std::vector<std::size_t> p2(p.size());
      for (std::size_t i = 0; i < p.size(); ++i)
        p2[i] = generator_perms[k][p[i]];
      if (graph.emplace(s2, p2).second) {
        sigmas.insert(s2);
        images.insert(p2);
        queue.emplace_back(s2, std::move(p2));
      }
    }
  }
  rep.group_order = sigmas.size();
  rep.image_order = images.size();
  rep.injective = graph.size() == sigmas.size() && images.size() == sigmas.size();

  // iota swaps the signs of all labels: v -> (v.K) K - v.
  Matrix m(8, 8);
  for (std::size_t c = 0; c < 8; ++c) {
    auto ec = LatticeVector::basis(pic.base, c);
    auto img = ec.dot(pic.K) * pic.K - ec;
    for (std::size_t r = 0; r < 8; ++r)
      m(r, c) = img[r];
  }
  lattice::IsometryElement iota(m);
  bool ok = iota.preserves_form(*pic.base);
  for (std::size_t i = 0; i < dict.size() && ok; ++i)
    ok = dict.label_of(iota.apply(dict.classes()[i])) == dict.labels()[i].flipped();
  for (const auto& r : e7.roots())
    ok = ok && iota.apply(r) == -r;
  rep.iota_is_minus_one_on_roots = ok;
  return rep;
}

bool check_ray_constants(const RayConstants& c) {
  Rational m = c.generator_multiple * c.ray_square;
  bool smallest = true;
  for (Integer k = 1; k < to_integer(c.generator_multiple); ++k)
    smallest = smallest && !is_integral(Rational(k) * c.ray_square);
  return m == 1 && smallest && c.curve_dot_ray == 2 && c.ray_square == Rational(1, 4);
}

}  // namespace strata::degeneration
