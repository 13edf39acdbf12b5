#include <doctest.h>

#include "sunada/catalog.hpp"
#include "sunada/error.hpp"
#include "sunada/homwide.hpp"

using namespace sunada;

TEST_CASE("seifert-weber module") {
  auto r = seifert_weber();
  CHECK(r.relations);
  CHECK(r.matrix_group_order == 120);
  CHECK(r.group->order() == 120);
  REQUIRE(r.traces.size() == 6);
  const std::uint64_t expected[] = {3, 4, 0, 1, 4, 2};
  for (std::size_t i = 0; i < 6; ++i) CHECK(r.traces[i].trace == expected[i]);
  CHECK(r.traces_match);
  CHECK(r.r_orbit_rank == 2);
  CHECK(r.rcr_orbit_rank == 3);
  CHECK(r.ok());
  // trace of r itself is -1 mod 5
  CHECK(r.module->trace(r.group->generator_indices()[0]) == 4);
}

TEST_CASE("module construction") {
  auto s3 = catalog::symmetric(3);
  CHECK_THROWS_AS(GModule::regular(s3, 3), Error);
  CHECK_THROWS_AS(GModule(s3, 4, 1, {{1}, {1}}), Error);
  // sign representation over Q
  GModule sign(s3, 0, 1, {{-1}, {1}});
  CHECK(sign.trace(s3.generator_indices()[0]) == -1);
  CHECK_THROWS_AS(GModule(s3, 0, 1, {{-1}, {-1}}), Error);  // a 3-cycle cannot act by -1
}

TEST_CASE("regular and trivial modules") {
  auto s3 = catalog::symmetric(3);
  auto reg = GModule::regular(s3, 5);
  auto r = contains_regular(reg);
  CHECK(r.status == SearchStatus::Found);
  CHECK(reg.span_rank(*r.vector, {0, 1, 2, 3, 4, 5}) == 6);
  auto triv = GModule::trivial(s3, 5);
  CHECK(contains_regular(triv).status == SearchStatus::None);
  auto h = Subgroup::generated_by(s3, {Permutation::from_cycles("(0 1)", 3)});
  CHECK(condition_star(triv, h).status == SearchStatus::None);
  CHECK(condition_star(reg, h).status == SearchStatus::Found);
  auto perm = GModule::permutation(s3, h, 5);
  auto star = condition_star(perm, h);
  CHECK(star.status == SearchStatus::Found);
  CHECK(contains_regular(perm).status == SearchStatus::None);
  // Q-module of dimension 6 without the sign character cannot be regular.
  auto q = GModule::permutation(s3, Subgroup::trivial(s3), 0);
  CHECK(contains_regular(q).status == SearchStatus::Found);
  auto two = GModule::trivial(s3, 0, 6);
  CHECK(contains_regular(two).status == SearchStatus::None);
}

TEST_CASE("wide modules satisfy condition star for every subgroup") {
  auto g = catalog::symmetric(4);
  auto reg = GModule::regular(g, 5);
  std::vector<Subgroup> subs = {Subgroup::trivial(g), Subgroup::whole(g),
                                Subgroup::generated_by(g, {Permutation::from_cycles("(0 1 2 3)", 4)}),
                                Subgroup::generated_by(g, {Permutation::from_cycles("(0 1)", 4)})};
  auto rep = wideness_report(reg, subs);
  CHECK(rep.regular.status == SearchStatus::Found);
  for (const auto& s : rep.star) CHECK(s.status == SearchStatus::Found);
  CHECK_THROWS_AS(GModule::regular(g, 3), Error);
}

TEST_CASE("surface criteria") {
  for (long long chi : {-8, -4, -2, 0, 2})
    for (std::size_t order : {2, 4, 8}) {
      auto g = catalog::cyclic(order);
      if (chi % static_cast<long long>(order) != 0) {
        CHECK_THROWS_AS(surface_action_character(g, chi), Error);
        continue;
      }
      auto r = surface_action_character(g, chi);
      CHECK((r.verdict == Wideness::Wide) == (chi < 0));
    }
  auto g = catalog::cyclic(2);
  auto r = surface_action_character(g, -4);
  CHECK(r.h.at_element(0) == Cyclotomic(6));
  CHECK(r.h.at_element(1) == Cyclotomic(2));
  auto klein = catalog::klein_pair();
  CHECK(surface_action_character(*klein.group, -8).verdict == Wideness::Wide);
  CHECK(surface_action_character(*klein.group, 0).verdict == Wideness::NotWide);
}

TEST_CASE("orbifold criteria") {
  auto g = catalog::cyclic(2);
  auto whole = Subgroup::whole(g);
  auto r = orbifold_action_character(g, -1, {whole, whole});
  CHECK(r.verdict == Wideness::Wide);
  for (const auto& lambda : linear_characters(g)) CHECK(character_inner(r.h, lambda.to_class_function()) >= 1);
  CHECK(r.chi_cover == -4);
  auto plain = orbifold_action_character(g, -2, {});
  CHECK(plain.h == surface_action_character(g, -4).h);
  auto e = Subgroup::trivial(g);
  CHECK(orbifold_action_character(g, -2, {e}).h == plain.h);
  CHECK(orbifold_action_character(g, 0, {whole, whole}).verdict == Wideness::Inconclusive);
  auto klein = catalog::klein_pair();
  CHECK_THROWS_AS(orbifold_action_character(*klein.group, -1, {Subgroup::whole(*klein.group)}), Error);
}
