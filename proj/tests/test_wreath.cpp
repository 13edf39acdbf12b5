#include <doctest.h>

#include "sunada/catalog.hpp"
#include "sunada/error.hpp"
#include "sunada/wreath.hpp"

using namespace sunada;

namespace {

// Oracle: induce both characters on the enumerated wreath product and take
// the exact inner product there.
void compare_with_dense(const WreathContext& ctx) {
  DenseWreath d = dense_wreath(ctx);
  std::vector<WreathLinearCharacter> all;
  for (int side = 1; side <= 2; ++side)
    for (auto& psi : all_wreath_linear_characters(ctx, side)) all.push_back(psi);
  std::vector<ClassFunction> induced;
  for (const auto& psi : all) induced.push_back(induce(d.realize(psi), psi.side == 1 ? *d.h1 : *d.h2));
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = 0; b < all.size(); ++b)
      REQUIRE(wreath_induced_inner(ctx, all[a], all[b]) == character_inner(induced[a], induced[b]));
}

}  // namespace

TEST_CASE("choice of ell") {
  CHECK(choose_ell(720) == 7);
  CHECK(choose_ell(168) == 5);
  CHECK(choose_ell(32) == 3);
  CHECK(choose_ell(96) == 5);
  CHECK(choose_ell(1) == 3);
  CHECK(is_prime(29));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("wreath context bookkeeping") {
  auto t = catalog::s3_transpositions();
  WreathContext ctx(*t.group, t.h1, t.h2, 3);
  CHECK(ctx.n() == 3);
  CHECK(ctx.orbits(1).size() == 2);
  CHECK(ctx.orbits(2).size() == 2);
  CHECK(wreath_linear_characters(ctx, 2).size() == 6);
  CHECK(all_wreath_linear_characters(ctx, 2).size() == 18);
  CHECK(std::abs(ctx.log10_order() - std::log10(162.0)) < 1e-12);
  CHECK_THROWS_AS(WreathContext(*t.group, t.h1, t.h2, 4), Error);
  auto xi = solitary_character(ctx);
  CHECK(wreath_induced_inner(ctx, xi, xi) == 1);
  auto bad = xi;
  bad.a = {1, 1, 0};
  CHECK_THROWS_AS(validate(ctx, bad), Error);
  bad.a = {0, 5, 0};
  CHECK_THROWS_AS(validate(ctx, bad), Error);
}

TEST_CASE("wreath mackey sum equals dense enumeration") {
  auto s3 = catalog::s3_transpositions();
  compare_with_dense(WreathContext(*s3.group, s3.h1, s3.h2, 3));
  auto klein = catalog::klein_pair();
  compare_with_dense(WreathContext(*klein.group, klein.h1, klein.h2, 3));
  auto c4 = catalog::cyclic(4);
  auto two = Subgroup::generated_by(c4, {c4.element(2)});
  compare_with_dense(WreathContext(c4, two, two, 3));
}

TEST_CASE("dense wreath decodes and rejects oversized products") {
  auto s3 = catalog::s3_transpositions();
  WreathContext ctx(*s3.group, s3.h1, s3.h2, 3);
  auto d = dense_wreath(ctx);
  CHECK(d.group->order() == 162);
  CHECK(d.h1->order() == 54);
  CHECK_THROWS_AS(dense_wreath(ctx, 100), Error);
}

TEST_CASE("isometry test verdicts") {
  auto g = catalog::gassmann();
  auto v = isometry_test(*g.group, g.h1, g.h2);
  CHECK_FALSE(v.equivalent);
  CHECK(v.ell == 7);
  CHECK(v.characters == 28);
  CHECK(v.budget == 56);
  CHECK(v.checks_performed == 56);
  CHECK(v.solitary_norm == 1);
  CHECK(v.dimension == 180);

  auto s3 = catalog::s3_transpositions();
  auto w = isometry_test(*s3.group, s3.h1, s3.h2);
  CHECK(w.equivalent);
  CHECK(w.ell == 5);
  REQUIRE(w.witness.has_value());
  CHECK(w.checks_performed <= w.budget);

  auto s4 = catalog::s4_cyclic_klein();
  CHECK_FALSE(isometry_test(*s4.group, s4.h1, s4.h2).equivalent);
  CHECK_THROWS_AS(isometry_test(*s4.group, s4.h1, s4.h2, {3, false}), Error);
  CHECK_THROWS_AS(isometry_test(*s3.group, s3.h1, s3.h2, {2, false}), Error);

  auto bt = catalog::brooks_tse();
  auto b = isometry_test(*bt.group, bt.h1, bt.h2);
  CHECK_FALSE(b.equivalent);
  CHECK(b.characters == 10);
  CHECK(b.budget == 20);
}

TEST_CASE("weak-conjugacy variant at ell = 2") {
  auto t = catalog::guralnick(3);
  IsometryOptions opt;
  opt.pintonello = true;
  auto v = isometry_test(*t.group, t.h1, t.h2, opt);
  CHECK_FALSE(v.equivalent);
  CHECK(v.ell == 2);
  CHECK(v.weak_precondition);
  CHECK(v.budget == 38);
  CHECK(v.checks_performed == 38);
  auto s4 = catalog::s4_cyclic_klein();
  CHECK_THROWS_AS(isometry_test(*s4.group, s4.h1, s4.h2, opt), Error);
}

TEST_CASE("solitary characters have a unique monomial structure") {
  auto s3 = catalog::s3_transpositions();
  WreathContext ctx(*s3.group, s3.h1, s3.h2, 3);
  auto r = solitary_uniqueness_bruteforce(ctx);
  CHECK(r.unique);
  CHECK(r.structures == 1);
  CHECK(r.inequality_holds);
  CHECK(r.order == 162);

  auto c4 = catalog::cyclic(4);
  auto e = Subgroup::trivial(c4);
  WreathContext c(c4, e, e, 3);
  auto q = solitary_uniqueness_bruteforce(c);
  CHECK(q.unique);
  CHECK(q.n == 4);
  CHECK(q.inequality_holds);

  WreathContext two(*s3.group, s3.h1, s3.h2, 2);
  CHECK_THROWS_AS(solitary_uniqueness_bruteforce(two), Error);
}

TEST_CASE("table rows") {
  auto rows = table1();
  REQUIRE(rows.size() == 6);
  for (const auto& row : rows) CHECK_MESSAGE(row.matches, row.name);
  CHECK(rows[1].budget == "56");
  CHECK_FALSE(rows[2].executable);
  CHECK(to_json(rows[0])["reference"]["budget"] == "24");
}
