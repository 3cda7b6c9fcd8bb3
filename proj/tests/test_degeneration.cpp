#include "doctest.h"

#include <random>

#include "strata/degeneration/central_fiber.hpp"

using namespace strata;
using namespace strata::degeneration;
using delpezzo::build_picard;
using delpezzo::epsilon_character;
using delpezzo::label_exceptionals;

namespace {

CentralFiberClass R(int b, char s) { return CentralFiberClass::generator(b, s); }

CentralFiberClass random_class(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4), bb(0, 7), sgn(0, 1), terms(0, 5);
  CentralFiberClass c;
  for (int t = terms(rng); t > 0; --t)
    c = c + Rational(num(rng), den(rng)) * R(bb(rng), sgn(rng) ? '+' : '-');
  return c;
}

}  // namespace

TEST_CASE("generator pairings") {
  CHECK(central_pairing(R(0, '+'), R(0, '+')) == Rational(-3, 4));
  CHECK(central_pairing(R(0, '-'), R(0, '-')) == Rational(-3, 4));
  CHECK(central_pairing(R(0, '+'), R(0, '-')) == 1);
  CHECK(central_pairing(R(0, '+'), R(1, '-')) == 0);
  CHECK(central_pairing(R(3, '-'), R(5, '-')) == Rational(1, 4));
  CHECK((R(0, '+') + Rational(-2) * R(3, '-')).str() == "R+0 - 2*R-3");
}

TEST_CASE("property: the central pairing is symmetric and bilinear") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> sc(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    auto x = random_class(rng), y = random_class(rng), z = random_class(rng);
    Rational a(sc(rng), 3);
    CHECK(central_pairing(x, y) == central_pairing(y, x));
    CHECK(central_pairing(a * x + y, z) == a * central_pairing(x, z) + central_pairing(y, z));
  }
}

TEST_CASE("limit classes") {
  auto lc = limit_class(BLabel('+', 0, 1));
  CHECK(central_pairing(lc.cls, lc.cls) == -1);
  auto d = R(0, '+') - R(1, '+');
  CHECK(central_pairing(d, d) == -2);
  auto lc2 = limit_class(BLabel('-', 2, 5));
  CHECK(central_pairing(lc2.cls, lc2.cls) == -1);
  CHECK(all_labels().size() == 56);
}

TEST_CASE("limit intersection rules") {
  auto val = [](BLabel a, BLabel b) {
    return central_pairing(limit_class(a).cls, limit_class(b).cls);
  };
  CHECK(val(BLabel('+', 0, 1), BLabel('+', 0, 2)) == 0);
  CHECK(val(BLabel('+', 0, 1), BLabel('-', 0, 2)) == 1);
  CHECK(val(BLabel('+', 0, 1), BLabel('+', 2, 3)) == 1);
  CHECK(val(BLabel('+', 0, 1), BLabel('-', 2, 3)) == 0);
  CHECK(val(BLabel('+', 0, 1), BLabel('-', 0, 1)) == 2);
  auto rep = verify_limit_intersections();
  CHECK(rep.ok());
  CHECK(rep.pairs_checked == 56 * 56);
  CHECK(rep.rule_i + rep.rule_ii + rep.rule_iii == 56 * 55);
  // Oracle by counting: a label meets 2*6 pairs in one point, 15 disjointly.
  CHECK(rep.rule_i == 56 * 2 * 12);
  CHECK(rep.rule_ii == 56 * 2 * 15);
  CHECK(rep.rule_iii == 56);
}

TEST_CASE("limit map preserves exceptional intersections") {
  auto dict = label_exceptionals(build_picard());
  auto rep = verify_limit_map(dict);
  CHECK(rep.labels_match);
  CHECK(rep.intersections_preserved);
  CHECK(rep.failures.empty());
}

TEST_CASE("root shapes") {
  auto pic = build_picard();
  auto dict = label_exceptionals(pic);
  auto eps = epsilon_character(dict);
  auto s1 = root_shape(pic.e(1) - pic.e(2), dict, eps);
  CHECK(s1.shape == RootShape::same_sign_singleton);
  CHECK(s1.epsilon == 1);
  auto s2 = root_shape(pic.K - pic.l() + pic.e(1), dict, eps);
  CHECK(s2.shape == RootShape::same_sign_singleton);
  auto witness = pic.l() - pic.e(1) - pic.e(2) - pic.e(3);
  auto s3 = root_shape(witness, dict, eps);
  CHECK(s3.shape == RootShape::opposite_sign_disjoint);
  CHECK(s3.epsilon == -1);
  CHECK(witness == dict.class_of(BLabel('+', 1, 2)) - dict.class_of(BLabel('-', 0, 3)));
  CHECK_THROWS_AS(root_shape(pic.e(1), dict, eps), Error);
}

TEST_CASE("specialization criterion") {
  auto dict = label_exceptionals(build_picard());
  auto rep = lemma_specialize(dict, epsilon_character(dict));
  CHECK(rep.roots == 126);
  CHECK(rep.specializing == 56);
  CHECK(rep.not_specializing == 70);
  CHECK(rep.matches_epsilon);
  CHECK(rep.matches_shape);
}

TEST_CASE("permutations of B act as the kernel Weyl group") {
  auto pic = build_picard();
  auto dict = label_exceptionals(pic);
  auto eps = epsilon_character(dict);
  std::array<int, 8> t12{0, 2, 1, 3, 4, 5, 6, 7};
  CHECK(permutation_isometry(dict, t12) ==
        lattice::IsometryElement::reflection(pic.e(1) - pic.e(2)));
  auto rep = permutation_weyl_iso(dict, eps);
  CHECK(rep.identity_ok);
  CHECK(rep.all_isometries);
  CHECK(rep.transpositions_are_reflections);
  CHECK(rep.inside_kernel_weyl_group);
  CHECK(rep.group_order == 40320);
  CHECK(rep.image_order == 40320);
  CHECK(rep.injective);
  CHECK(rep.iota_is_minus_one_on_roots);
}

TEST_CASE("ray constants") {
  CHECK(check_ray_constants());
  RayConstants bad;
  bad.generator_multiple = 8;
  CHECK_FALSE(check_ray_constants(bad));
}
