#include "doctest.h"

#include <random>

#include "strata/coxeter/affine.hpp"

using namespace strata;
using namespace strata::coxeter;

namespace {

Permutation identity_perm(std::size_t n) {
  Permutation g(n);
  for (std::size_t k = 0; k < n; ++k)
    g[k] = static_cast<int>(k);
  return g;
}

}  // namespace

TEST_CASE("affine diagrams") {
  auto e7 = build_affine("E7~");
  CHECK(e7.diagram().size() == 8);
  CHECK(e7.diagram().edges().size() == 7);
  CHECK(e7.diagram().is_connected());
  CHECK(e7.diagram().adjacent(0, 1));
  CHECK(e7.diagram().adjacent(2, 4));
  CHECK(e7.automorphisms().size() == 2);
  CHECK(e7.highest_root() == Vector{2, 2, 3, 4, 3, 2, 1});

  auto e6 = build_affine("E6");
  CHECK(e6.diagram().size() == 7);
  CHECK(e6.diagram().adjacent(0, 2));
  CHECK(e6.automorphisms().size() == 6);
  CHECK_THROWS_AS(build_affine("D5~"), Error);
}

TEST_CASE("subdiagram types") {
  auto e7 = build_affine("E7~");
  CHECK(subdiagram_type(e7, 0) == "E7");
  CHECK(subdiagram_type(e7, 2) == "A7");
  CHECK(subdiagram_type(e7, 4) == "A3+A3+A1");
  CHECK(subdiagram_type(e7, 7) == "E7");
  auto e6 = build_affine("E6~");
  CHECK(subdiagram_type(e6, 0) == "E6");
  CHECK(subdiagram_type(e6, 2) == "A5+A1");
  CHECK(subdiagram_type(e6, 4) == "A2+A2+A2");
}

TEST_CASE("realization identities") {
  for (std::string t : {"E6~", "E7~"}) {
    auto r = build_affine(t);
    CHECK(reflections_are_involutions(r));
    CHECK(coxeter_relations_hold(r));
    CHECK(vertices_satisfy_equations(r));
    CHECK(r.in_alcove(r.barycenter()));
    for (int i : r.diagram().vertices())
      CHECK(stabilizer_is_parabolic(r, i));
  }
}

TEST_CASE("longest elements") {
  auto e7 = build_affine("E7~");
  auto w0 = longest_element_at(e7, 0);
  CHECK(w0.type == "E7");
  CHECK(w0.word.size() == 63);
  CHECK(affine_length(e7, w0.image) == 63);
  CHECK(w0.image.apply(e7.vertex(0)) == e7.vertex(0));
  auto w2 = longest_element_at(e7, 2);
  CHECK(w2.type == "A7");
  CHECK(w2.word.size() == 28);
  CHECK(affine_length(e7, w2.image) == 28);
  CHECK(w2.image.apply(e7.vertex(2)) == e7.vertex(2));
  auto a1 = longest_element(e7, {3});
  CHECK(a1.word == std::vector<int>{3});
  auto a2 = longest_element(e7, {1, 3});
  CHECK(a2.word == std::vector<int>{1, 3, 1});

  auto e6 = build_affine("E6~");
  CHECK(longest_element_at(e6, 0).word.size() == 36);
  CHECK(longest_element_at(e6, 2).word.size() == 16);
  CHECK(longest_element(e7, {1, 3, 4, 5, 6, 7}).word.size() == 21);
  CHECK_THROWS_AS(longest_element(e7, {0, 1, 2, 3, 4, 5, 6, 7}), Error);
}

TEST_CASE("property: longest element words are reduced and of maximal length") {
  auto e7 = build_affine("E7~");
  std::mt19937_64 rng(99);
  std::bernoulli_distribution keep(0.6);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<int> sub;
    for (int v = 0; v < 8; ++v)
      if (keep(rng))
        sub.push_back(v);
    if (sub.empty() || sub.size() == 8)
      continue;
    auto w = longest_element(e7, sub);
    CHECK(w.word.size() == lattice::positive_root_count(w.type));
    CHECK(affine_length(e7, w.image) == w.word.size());
    // Every generator of the parabolic is a left descent: s_j w is shorter.
    for (int j : sub)
      CHECK(affine_length(e7, w.image.then(e7.reflection(j))) + 1 == w.word.size());
  }
}

TEST_CASE("opposition") {
  auto e7 = build_affine("E7~");
  for (int i = 0; i < 8; ++i) {
    auto s = opposition(e7, i);
    CHECK(s.apply(e7.vertex(i)) == e7.vertex(i));
    CHECK(s.then(s) == AffineIsometry::identity(7));
    CHECK(s.linear == Rational(-1) * Matrix::identity(7));
  }
}

TEST_CASE("quasi-special vertices") {
  auto e7 = build_affine("E7~");
  auto g0 = quasi_special(e7, 0);
  REQUIRE(g0);
  CHECK(*g0 == identity_perm(8));
  auto g2 = quasi_special(e7, 2);
  REQUIRE(g2);
  CHECK(*g2 != identity_perm(8));
  CHECK(*g2 == Permutation{7, 6, 2, 5, 4, 3, 1, 0});
  std::size_t with_a7 = 0;
  for (const auto& e : quasi_special_report(e7))
    with_a7 += e.subdiagram == "A7";
  CHECK(with_a7 == 1);
  CHECK_FALSE(quasi_special(e7, 4));

  auto e6 = build_affine("E6~");
  for (auto [t, nb] : {std::pair{0, 2}, std::pair{1, 3}, std::pair{6, 5}}) {
    auto gt = quasi_special(e6, t);
    auto gn = quasi_special(e6, nb);
    REQUIRE(gt);
    REQUIRE(gn);
    CHECK(*gt == *gn);
    CHECK((*gt)[static_cast<std::size_t>(t)] == t);
    CHECK(*gt != identity_perm(7));
  }
}

TEST_CASE("translations") {
  auto e7 = build_affine("E7~");
  CHECK(is_zero(translation_of_pair(e7, 2, 2)));
  auto t = translation_of_pair(e7, 0, 2);
  CHECK(t == Vector{2, Rational(7, 2), 4, 6, Rational(9, 2), 3, Rational(3, 2)});
  auto e6 = build_affine("E6~");
  auto t6 = translation_of_pair(e6, 0, 2);
  CHECK(t6 == Rational(2) * (e6.vertex(2) - e6.vertex(0)));
}

TEST_CASE("diagram automorphisms extend to isometries of the alcove") {
  for (std::string t : {"E6~", "E7~"}) {
    auto r = build_affine(t);
    for (const auto& g : r.automorphisms()) {
      auto ext = r.extension(g);
      CHECK(ext.linear.transpose() * r.form() * ext.linear == r.form());
      for (int k : r.diagram().vertices())
        CHECK(ext.apply(r.vertex(k)) == r.vertex(g[static_cast<std::size_t>(k)]));
    }
  }
}
