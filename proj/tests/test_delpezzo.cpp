#include "doctest.h"

#include <array>
#include <functional>
#include <random>
#include <set>

#include "strata/delpezzo/picard.hpp"

using namespace strata;
using namespace strata::delpezzo;

namespace {

// Brute force over a coordinate box with machine integers.
std::size_t box_count(int square, int k_dot) {
  std::size_t n = 0;
  std::array<int, 8> x{};
  const int lo = -3, hi = 3;
  std::function<void(int, int, int)> rec = [&](int i, int sq, int kd) {
    if (i == 8) {
      n += (sq == square && kd == k_dot);
      return;
    }
    for (int v = lo; v <= hi; ++v) {
      x[i] = v;
      int s = i == 0 ? v * v : -v * v;
      int k = i == 0 ? 3 * v : v;
      rec(i + 1, sq + s, kd + k);
    }
  };
  rec(0, 0, 0);
  return n;
}

}  // namespace

TEST_CASE("Picard lattice basics") {
  auto pic = build_picard();
  for (std::size_t i = 0; i < 8; ++i)
    CHECK(pic.base->gram()(i, i) == (i == 0 ? 1 : -1));
  CHECK(pic.K.square() == 2);
  CHECK(pic.K.dot(pic.e(1)) == 1);
  CHECK(pic.K.expression() == "3l - e1 - e2 - e3 - e4 - e5 - e6 - e7");
}

TEST_CASE("exceptional classes and partner pairs") {
  auto pic = build_picard();
  auto ex = enumerate_exceptionals(pic);
  CHECK(ex.size() == 56);
  CHECK(box_count(-1, 1) == 56);
  bool has_e1 = false;
  for (const auto& e : ex)
    has_e1 = has_e1 || e.vec == pic.e(1);
  CHECK(has_e1);
  auto pairs = partner_pairs(pic, ex);
  CHECK(pairs.size() == 28);
  for (auto [a, b] : pairs)
    CHECK(ex[a].vec.dot(ex[b].vec) == 2);
}

TEST_CASE("root system of X") {
  auto pic = build_picard();
  auto sys = root_system_of_X(pic);
  CHECK(sys.roots().size() == 126);
  CHECK(box_count(-2, 0) == 126);
  CHECK(sys.type_label() == "E7");
  CHECK(roots_are_disjoint_differences(pic, sys));
}

TEST_CASE("dictionary") {
  auto pic = build_picard();
  auto dict = label_exceptionals(pic);
  CHECK(dict.size() == 56);
  CHECK(dict.label_of(pic.e(3)) == BLabel('-', 0, 3));
  CHECK(dict.label_of(pic.l() - pic.e(1) - pic.e(2)) == BLabel('+', 1, 2));
  CHECK(dict.label_of(pic.K - pic.e(3)) == BLabel('+', 0, 3));
  CHECK(dict.label_of(pic.K - (pic.l() - pic.e(4) - pic.e(6))) == BLabel('-', 4, 6));
  std::set<BLabel> all(dict.labels().begin(), dict.labels().end());
  CHECK(all.size() == 56);
  for (std::size_t i = 0; i < dict.size(); ++i) {
    auto j = dict.partner_index(i);
    CHECK(j != i);
    CHECK(dict.partner_index(j) == i);
    CHECK(dict.labels()[j] == dict.labels()[i].flipped());
  }
  CHECK(BLabel('+', 3, 1).str() == "E+{b1,b3}");
  CHECK_THROWS_AS(BLabel('+', 2, 2), Error);
}

TEST_CASE("epsilon") {
  auto pic = build_picard();
  auto dict = label_exceptionals(pic);
  auto eps = epsilon_character(dict);
  CHECK(eps.unique);
  CHECK(eps.constraint_rank == 8);
  for (std::size_t i = 1; i <= 7; ++i)
    CHECK(eps(pic.e(i)) == -1);
  CHECK(eps(pic.l() - pic.e(1) - pic.e(2)) == 1);
  CHECK(eps(pic.K) == -1);
  CHECK(eps.chi.str() == "(+,-,-,-,-,-,-,-)");
}

TEST_CASE("property: epsilon is multiplicative on random lattice vectors") {
  auto pic = build_picard();
  auto eps = epsilon_character(label_exceptionals(pic));
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 300; ++trial) {
    Vector a(8), b(8);
    for (std::size_t i = 0; i < 8; ++i) {
      a[i] = coef(rng);
      b[i] = coef(rng);
    }
    LatticeVector u(pic.base, a), v(pic.base, b);
    CHECK(eps(u + v) == eps(u) * eps(v));
    CHECK(eps(-u) == eps(u));
  }
}

TEST_CASE("kernel of epsilon") {
  auto pic = build_picard();
  auto rep = kernel_roots_report(pic, epsilon_character(label_exceptionals(pic)));
  CHECK(rep.system.roots().size() == 56);
  CHECK(rep.differences_of_e == 42);
  CHECK(rep.k_minus_l_plus_e == 14);
  CHECK(rep.system.type_label() == "A7");
  CHECK(rep.stated_basis_check.ok);
  CHECK(rep.stated_basis.front().expression() == "-2l + e2 + e3 + e4 + e5 + e6 + e7");
  for (const auto& b : rep.stated_basis)
    CHECK(b.square() == -2);
  REQUIRE(rep.index_in_e7.value);
  CHECK(*rep.index_in_e7.value == 2);
}

TEST_CASE("stratum subsystems") {
  auto pic = build_picard();
  auto s211 = stratum_subsystems("2,1^2");
  CHECK(s211.ambient.type_label() == "E7");
  REQUIRE(s211.boundary);
  CHECK(s211.boundary->type_label() == "A6");
  CHECK(s211.boundary->roots().size() == 42);
  CHECK(s211.boundary_basis_check.ok);

  auto s22 = stratum_subsystems("2^2");
  CHECK(s22.ambient.type_label() == "E6");
  CHECK(s22.ambient.roots().size() == 72);
  CHECK(s22.ambient_basis_check.ok);
  REQUIRE(s22.components.size() == 2);
  std::set<Vector> comps{s22.components[0].coords(), s22.components[1].coords()};
  CHECK(comps == std::set<Vector>{pic.e(7).coords(), (pic.K - pic.e(7)).coords()});
  REQUIRE(s22.boundary);
  CHECK(s22.boundary->type_label() == "A5");
  CHECK(s22.boundary->roots().size() == 30);
  CHECK(s22.boundary_basis_check.ok);
  for (const auto& r : s22.boundary->roots())
    CHECK(s22.ambient.contains(r));

  auto s4 = stratum_subsystems("4");
  CHECK(s4.ambient.type_label() == "E6");
  CHECK_FALSE(s4.boundary);
  auto s31 = stratum_subsystems("3,1");
  CHECK(s31.ambient.type_label() == "E7");
  CHECK_FALSE(s31.boundary);
  auto s1 = stratum_subsystems("1^4");
  REQUIRE(s1.boundary);
  CHECK(s1.boundary->type_label() == "A7");
  CHECK_THROWS_AS(stratum_subsystems("5"), Error);
}
