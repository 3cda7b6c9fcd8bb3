#include "doctest.h"

#include <filesystem>
#include <random>

#include "strata/lattice/cartan.hpp"
#include "strata/lattice/enumerate.hpp"
#include "strata/lattice/orbit.hpp"
#include "strata/lattice/smith.hpp"
#include "strata/lattice/subsystems.hpp"

using namespace strata;
using namespace strata::lattice;

namespace {

LatticePtr pic7() {
  Vector d(8, Rational(-1));
  d[0] = 1;
  return make_lattice(Matrix::diagonal(d), {"l", "e1", "e2", "e3", "e4", "e5", "e6", "e7"});
}

LatticeVector canonical(const LatticePtr& p) {
  Vector k(8, Rational(-1));
  k[0] = 3;
  return LatticeVector(p, k);
}

RootSystemData system_of(const std::string& label) {
  return make_root_system(enumerate_roots(root_lattice(label)));
}

}  // namespace

TEST_CASE("root counts of standard root lattices") {
  CHECK(enumerate_roots(root_lattice("A1")).size() == 2);
  CHECK(enumerate_roots(root_lattice("A7")).size() == 56);
  CHECK(enumerate_roots(root_lattice("D4")).size() == 24);
  CHECK(enumerate_roots(root_lattice("E6")).size() == 72);
  CHECK(enumerate_roots(root_lattice("E7")).size() == 126);
  CHECK(enumerate_roots(root_lattice("A5+A1")).size() == 32);
  for (std::string label : {"A3", "D5", "E6", "E7", "A2+A1"})
    CHECK(enumerate_roots(root_lattice(label)).size() == 2 * positive_root_count(label));
}

TEST_CASE("classification recovers the type of a root lattice") {
  for (std::string label : {"A1", "A4", "D4", "D6", "E6", "E7", "A5+A1", "A3+A3+A1"}) {
    auto res = cartan_type(enumerate_roots(root_lattice(label)));
    CHECK(res.type_label == label);
  }
}

TEST_CASE("roots orthogonal to the canonical class form E7") {
  auto p = pic7();
  auto roots = enumerate_roots(p, canonical(p));
  CHECK(roots.size() == 126);
  CHECK(cartan_type(roots).type_label == "E7");
}

TEST_CASE("unbounded searches are rejected") {
  auto p = pic7();
  CHECK_THROWS_WITH_AS(enumerate_roots(p), doctest::Contains("unbounded"), Error);
}

TEST_CASE("elementary divisors") {
  IntegerMatrix m = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto d = elementary_divisors(m);
  REQUIRE(d.size() == 3);
  CHECK(d[0] == 2);
  CHECK(d[1] == 6);
  CHECK(d[2] == 12);
  CHECK(elementary_divisors({{0, 0}, {0, 0}}).empty());
}

TEST_CASE("reduce_row gives a unimodular completion") {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<int> coef(-30, 30);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Integer> a(5);
    for (auto& x : a)
      x = coef(rng);
    if (std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; }))
      continue;
    auto rr = reduce_row(a);
    Integer g = 0;
    for (const auto& x : a)
      g = boost::multiprecision::gcd(g, x);
    CHECK(rr.gcd == g);
    IntegerMatrix u;
    for (std::size_t c = 0; c < rr.columns.size(); ++c) {
      Integer s = 0;
      for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * rr.columns[c][i];
      CHECK(s == (c == 0 ? g : Integer(0)));
      u.push_back(rr.columns[c]);
    }
    auto d = elementary_divisors(u);
    CHECK(d.size() == 5);
    CHECK(d.back() == 1);
  }
}

TEST_CASE("property: reflections are involutive isometries") {
  auto sys = system_of("E7");
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, sys.roots().size() - 1);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& a = sys.roots()[pick(rng)];
    auto s = IsometryElement::reflection(a);
    CHECK(s.preserves_form(*sys.ambient()));
    Vector v(7);
    for (auto& x : v)
      x = coef(rng);
    LatticeVector u(sys.ambient(), v);
    CHECK(s.apply(s.apply(u)) == u);
    CHECK(s.apply(a) == -a);
    CHECK(sys.contains(s.apply(sys.roots()[pick(rng)])));
  }
}

TEST_CASE("sublattice index") {
  auto e7 = system_of("E7");
  CHECK(*sublattice_index(e7.simple_roots(), *e7.ambient()).value == 1);
  auto p = pic7();
  auto roots = enumerate_roots(p, canonical(p));
  auto res = cartan_type(roots);
  // Q(E7) has discriminant 2 inside Pic: index of the root span in K-perp is 1.
  auto perp = orthogonal_complement_basis(canonical(p));
  CHECK(*sublattice_index(res.basis, perp).value == 1);
  std::vector<LatticeVector> doubled{2 * res.basis[0]};
  CHECK(sublattice_index(doubled, *p).infinite());
}

TEST_CASE("sign characters of E7 with A7 kernel") {
  auto e7 = system_of("E7");
  auto all = sign_characters(e7);
  CHECK(all.total == 128);
  CHECK(all.characters.size() == 128);
  CHECK(all.weyl_stable);
  auto a7 = sign_characters(e7, std::string("A7"));
  CHECK(a7.characters.size() == 36);
  CHECK(a7.transitive);
  // Oracle: |W(E7)| / (|W(A7)| * 2).
  CHECK(Integer(a7.characters.size()) == weyl_group_order("E7") / (weyl_group_order("A7") * 2));
  for (const auto& chi : a7.characters)
    CHECK(kernel_roots(e7, chi).size() == 56);
}

TEST_CASE("A7 and A6 subsystems of E7") {
  auto e7 = system_of("E7");
  auto a7 = classify_subsystems(e7, "A7");
  CHECK(a7.subsystems.size() == 36);
  CHECK(a7.transitive);
  auto a6 = classify_subsystems(e7, "A6");
  CHECK(a6.subsystems.size() == 288);
  CHECK(Integer(288) == weyl_group_order("E7") / (weyl_group_order("A6") * 2));
  CHECK(a6.transitive);
  REQUIRE(a6.covectors);
  CHECK(a6.covectors->bourbaki_node == 2);
  CHECK(a6.covectors->orbit.size() == 576);
  CHECK(a6.covectors->all_indivisible);
  CHECK(a6.covectors->kernels_are_subsystems);
  CHECK(a6.covectors->covers_all_subsystems);
  CHECK_THROWS_AS(classify_subsystems(e7, "D4"), Error);
}

TEST_CASE("orbit cache round trip and cap") {
  auto e6 = system_of("E6");
  auto dir = std::filesystem::temp_directory_path() / ("strata-test-" + std::to_string(::rand()));
  OrbitCache cache(dir);
  OrbitOptions opts;
  opts.cache = &cache;
  auto w = e6.fundamental_coweight(0);
  auto cold = weyl_orbit(w, e6.simple_reflections(), opts);
  auto warm = weyl_orbit(w, e6.simple_reflections(), opts);
  CHECK(cold.size() == 27);
  CHECK(cold == warm);
  auto key = OrbitCache::key_for(w, e6.simple_reflections());
  CHECK(std::filesystem::exists(cache.path_for(key)));
  CHECK_FALSE(OrbitCache::parse("garbage", key, 6));
  OrbitOptions tight;
  tight.cap = 10;
  CHECK_THROWS_AS(weyl_orbit(w, e6.simple_reflections(), tight), OrbitCapExceeded);
  std::filesystem::remove_all(dir);
}
