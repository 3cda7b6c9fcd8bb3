#include "doctest.h"

#include <set>

#include "strata/artin/presentation.hpp"

using namespace strata;
using namespace strata::artin;

TEST_CASE("Artin presentations of diagrams") {
  CoxeterDiagram a2({0, 1}, {{0, 1}});
  auto p = artin_presentation(a2);
  CHECK(p.generators.size() == 2);
  CHECK(p.count("braid") == 1);
  CHECK(p.count("commutation") == 0);
  CHECK(p.relators[0].word.str(p.generators) == "t0*t1*t0*t1^-1*t0^-1*t1^-1");

  auto e7 = coxeter::build_affine("E7~");
  auto pe = artin_presentation(e7.diagram());
  CHECK(pe.generators.size() == 8);
  CHECK(pe.count("braid") == 7);
  CHECK(pe.count("commutation") == 21);
}

TEST_CASE("property: Artin relators are permuted by diagram automorphisms") {
  for (std::string t : {"E6~", "E7~"}) {
    auto r = coxeter::build_affine(t);
    auto p = artin_presentation(r.diagram());
    auto key = [](int a, int b, const std::string& kind) {
      return kind + ":" + std::to_string(std::min(a, b)) + "," + std::to_string(std::max(a, b));
    };
    std::multiset<std::string> base;
    for (const auto& rel : p.relators)
      base.insert(key(rel.word.letters[0].gen, rel.word.letters[1].gen, rel.kind));
    for (const auto& g : r.automorphisms()) {
      std::multiset<std::string> moved;
      for (const auto& rel : p.relators)
        moved.insert(key(g[static_cast<std::size_t>(rel.word.letters[0].gen)],
                         g[static_cast<std::size_t>(rel.word.letters[1].gen)], rel.kind));
      CHECK(moved == base);
    }
  }
}

TEST_CASE("Garside words") {
  auto e7 = coxeter::build_affine("E7~");
  auto a1 = garside_word(e7, {5});
  CHECK(a1.word == ArtinWord::positive({5}));
  CHECK(a1.length == 1);
  auto a2 = garside_word(e7, {5, 6});
  CHECK(a2.word == ArtinWord::positive({5, 6, 5}));
  auto d0 = garside_word_at(e7, 0);
  CHECK(d0.type == "E7");
  CHECK(d0.length == 63);
  CHECK(d0.word.is_positive());
  CHECK(garside_word_at(e7, 2).length == 28);
  auto e6 = coxeter::build_affine("E6~");
  CHECK(garside_word_at(e6, 0).length == 36);
  CHECK(garside_word_at(e6, 2).length == 16);
  CHECK(garside_word(e7, {1, 3, 4, 5, 6, 7}).length == 21);
}

TEST_CASE("Coxeter images of words") {
  auto e7 = coxeter::build_affine("E7~");
  auto id = coxeter::AffineIsometry::identity(7);
  CHECK(coxeter_image(ArtinWord{}, e7) == id);
  CHECK(coxeter_image(ArtinWord::positive({3, 3}), e7) == id);
  auto d = coxeter_image(garside_word_at(e7, 2).word, e7);
  CHECK(d.apply(e7.vertex(2)) == e7.vertex(2));
  CHECK(coxeter::affine_length(e7, d) == 28);
}

TEST_CASE("stratum presentation 2,1^2") {
  auto p = stratum_presentation("2,1^2");
  CHECK(p.generators.size() == 8);
  CHECK(p.count("braid") + p.count("commutation") == 28);
  CHECK(p.count("order") + p.count("conjugation") == 9);
  CHECK_FALSE(p.semidirect);
  auto rep = verify_in_coxeter(p, coxeter::build_affine("E7~"));
  CHECK(rep.ok());
  CHECK(rep.count("a") == 2);
  CHECK(rep.count("b") == 1);
  CHECK(rep.count("c") == 28);
  CHECK(rep.count("d") == 9);
  CHECK_THROWS_AS(verify_in_coxeter(p, coxeter::build_affine("E6~")), Error);
}

TEST_CASE("stratum presentation 2,2") {
  auto p = stratum_presentation("2,2");
  CHECK(p.generators.size() == 7);
  REQUIRE(p.semidirect);
  CHECK(p.semidirect->elements.size() == 6);
  REQUIRE(p.count("garside") == 1);
  auto e6 = coxeter::build_affine("E6~");
  auto rep = verify_in_coxeter(p, e6);
  CHECK(rep.ok());
  CHECK(rep.count("b") == 1);
  auto flat = p.flattened();
  CHECK(flat.generators.size() == 12);
  CHECK(flat.count("group") == 25);
  CHECK(flat.count("action") == 35);

  auto v = stratum_presentation("2,2/terminal");
  CHECK(v.count("garside") == 3);
  auto vrep = verify_in_coxeter(v, e6);
  CHECK(vrep.ok());
  CHECK(vrep.count("b") == 3);
  CHECK_THROWS_AS(stratum_presentation("1^4"), Error);
}

TEST_CASE("presentations round-trip through JSON") {
  for (const auto& key : presentation_keys()) {
    auto p = stratum_presentation(key);
    auto text = p.to_json().dump();
    auto q = GroupPresentation::from_json(nlohmann::ordered_json::parse(text));
    CHECK(q == p);
    CHECK(q.to_json().dump() == text);
  }
  auto bad = stratum_presentation("2,1^2").to_json();
  bad["relators"][0][0][0] = 99;
  CHECK_THROWS_AS(GroupPresentation::from_json(bad), Error);
}

TEST_CASE("gap-style output") {
  auto s = stratum_presentation("2,2").to_gap_style();
  CHECK(s.find("< t0, t1, t2, t3, t4, t5, t6, u1, u2, u3, u4, u5 |") != std::string::npos);
  CHECK(s.back() == '\n');
}

TEST_CASE("braid groups of the hyperelliptic strata") {
  auto b7 = hyperelliptic_group_data(3, "2g-2");
  CHECK(b7.braid_group.generators.size() == 6);
  CHECK(b7.braid_group.count("braid") == 5);
  CHECK(b7.braid_group.count("commutation") == 10);
  CHECK(b7.extension.text() == "extension of mu_5 by B_7");
  auto b8 = hyperelliptic_group_data(3, "g-1,g-1");
  CHECK(b8.braid_group.generators.size() == 7);
  CHECK(b8.braid_group.count("braid") == 6);
  CHECK(b8.braid_group.count("commutation") == 15);
  CHECK(b8.extension.text() == "extension of S_2 x mu_3 by B_8");
  auto b2 = braid_presentation(2);
  CHECK(b2.generators.size() == 1);
  CHECK(b2.relators.empty());
}

TEST_CASE("torus weights") {
  CHECK(torus_weight_check(3, "2g-2") == -5);
  CHECK(torus_weight_check(3, "g-1,g-1") == -3);
  for (int g = 2; g <= 12; ++g) {
    CHECK(torus_weight_check(g, "2g-2") == 1 - 2 * g);
    CHECK(torus_weight_check(g, "g-1,g-1") == -g);
  }
  CHECK_THROWS_AS(torus_weight_check(3, "4"), Error);
}
