#include <doctest.h>

#include <algorithm>
#include <set>

#include "sunada/error.hpp"
#include "sunada/group.hpp"

using namespace sunada;

namespace {

Permutation cyc(const char* s, std::size_t n) { return Permutation::from_cycles(s, n); }

FiniteGroup symmetric(std::size_t n) {
  std::vector<Point> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = static_cast<Point>((i + 1) % n);
  return FiniteGroup::generate(n, {cyc("(0 1)", n), Permutation(shift)});
}

// Oracle: brute-force set of products a*g*b.
std::set<std::size_t> double_coset_of(const FiniteGroup& g, const Subgroup& a, const Subgroup& b, std::size_t x) {
  std::set<std::size_t> out;
  for (std::size_t p : a.members())
    for (std::size_t q : b.members()) out.insert(g.multiply(g.multiply(p, x), q));
  return out;
}

}  // namespace

TEST_CASE("permutation parsing and composition") {
  auto p = cyc("(0 1 2)", 4);
  auto q = cyc("(0 1)", 4);
  CHECK((p * q)(0) == p(q(0)));
  CHECK((p * q).to_cycles() == "(0 2)");
  CHECK((p.inverse() * p).is_identity());
  CHECK(cyc("()", 3).is_identity());
  CHECK(cyc("(0 3)(1 2)", 4).order() == 2);
  CHECK_THROWS(cyc("(0 4)", 4));
  CHECK_THROWS(cyc("(0 1)(1 2)", 4));
  CHECK_THROWS(cyc("0 1", 4));
}

TEST_CASE("enumeration") {
  CHECK(symmetric(6).order() == 720);
  auto trivial = FiniteGroup::generate(3, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.class_count() == 1);
  auto klein = FiniteGroup::generate(4, {cyc("(0 1)(2 3)", 4), cyc("(0 2)(1 3)", 4)});
  CHECK(klein.order() == 4);
  CHECK(klein.class_count() == 4);
  CHECK(klein.element(0).is_identity());
  CHECK_THROWS_AS(FiniteGroup::generate(6, {cyc("(0 1)", 6), cyc("(0 1 2 3 4 5)", 6)}, 100), Error);
  CHECK_THROWS_AS(FiniteGroup::generate(3, {cyc("(0 1)", 4)}), Error);
}

TEST_CASE("classes of S5 follow cycle types") {
  auto s5 = symmetric(5);
  CHECK(s5.class_count() == 7);
  std::size_t total = 0;
  for (std::size_t c = 0; c < s5.class_count(); ++c) {
    total += s5.class_size(c);
    auto type = [&](std::size_t e) {
      std::vector<std::size_t> lens;
      const auto& p = s5.element(e);
      std::vector<bool> seen(5);
      for (Point i = 0; i < 5; ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (Point j = i; !seen[j]; j = p(j)) seen[j] = true, ++len;
        lens.push_back(len);
      }
      std::sort(lens.begin(), lens.end());
      return lens;
    };
    for (std::size_t e : s5.class_members(c)) CHECK(type(e) == type(s5.class_representative(c)));
  }
  CHECK(total == 120);
}

TEST_CASE("cosets and cocycles") {
  auto s6 = symmetric(6);
  auto h1 = Subgroup::generated_by(s6, {cyc("(0 1)(2 3)", 6), cyc("(0 2)(1 3)", 6)});
  CosetTable t(s6, h1);
  CHECK(t.size() == 180);
  CHECK(t.representative(0) == 0);
  for (std::size_t g : {std::size_t{1}, std::size_t{17}, std::size_t{400}})
    for (std::size_t i = 0; i < t.size(); i += 7) {
      std::size_t h = t.cocycle(g, i);
      CHECK(h1.contains(h));
      CHECK(s6.multiply(g, t.representative(i)) == s6.multiply(t.representative(t.act(g, i)), h));
    }

  auto s3 = symmetric(3);
  auto t3 = CosetTable(s3, Subgroup::generated_by(s3, {cyc("(0 1)", 3)}));
  CHECK(t3.size() == 3);
  auto a = t3.action(s3.index_of(cyc("(0 1 2)", 3)));
  CHECK(a.order() == 3);
  CHECK(CosetTable(s3, Subgroup::whole(s3)).size() == 1);
}

TEST_CASE("double cosets against brute force") {
  auto s3 = symmetric(3);
  auto h = Subgroup::generated_by(s3, {cyc("(0 1)", 3)});
  auto dc = double_cosets(s3, h, h);
  REQUIRE(dc.size() == 2);
  std::multiset<std::size_t> sizes{dc[0].size, dc[1].size};
  CHECK(sizes == std::multiset<std::size_t>{2, 4});

  auto klein = FiniteGroup::generate(4, {cyc("(0 1)(2 3)", 4), cyc("(0 2)(1 3)", 4)});
  auto a = Subgroup::generated_by(klein, {cyc("(0 1)(2 3)", 4)});
  auto b = Subgroup::generated_by(klein, {cyc("(0 2)(1 3)", 4)});
  CHECK(double_cosets(klein, a, b).size() == 1);

  auto s4 = symmetric(4);
  auto e = Subgroup::trivial(s4);
  CHECK(double_cosets(s4, e, e).size() == 24);
  auto c4 = Subgroup::generated_by(s4, {cyc("(0 1 2 3)", 4)});
  auto v4 = Subgroup::generated_by(s4, {cyc("(0 1)(2 3)", 4), cyc("(0 2)(1 3)", 4)});
  auto parts = double_cosets(s4, c4, v4);
  std::size_t total = 0;
  for (const auto& d : parts) {
    auto oracle = double_coset_of(s4, c4, v4, d.representative);
    CHECK(oracle.size() == d.size);
    CHECK(*oracle.begin() == d.representative);
    total += d.size;
  }
  CHECK(total == 24);
  auto by_e = double_cosets(s4, c4, e);
  CHECK(by_e.size() == 6);
  for (const auto& d : by_e) CHECK(d.size == 4);
}

TEST_CASE("normal core") {
  auto s3 = symmetric(3);
  auto core = normal_core(s3, Subgroup::generated_by(s3, {cyc("(0 1)", 3)}));
  CHECK(core.order() == 1);
  CHECK(core.index() == 6);
  auto s4 = symmetric(4);
  auto a4 = Subgroup::generated_by(s4, {cyc("(0 1 2)", 4), cyc("(1 2 3)", 4)});
  CHECK(a4.order() == 12);
  CHECK(normal_core(s4, a4) == a4);
  auto v4 = Subgroup::generated_by(s4, {cyc("(0 1)(2 3)", 4), cyc("(0 2)(1 3)", 4)});
  CHECK(normal_core(s4, v4) == v4);
}

TEST_CASE("abelianization") {
  auto s4 = symmetric(4);
  auto ab = abelianization(s4);
  CHECK(ab.order == 2);
  CHECK(ab.invariants == std::vector<std::uint64_t>{2});
  CHECK(ab.derived_order == 12);

  auto z2z4 = FiniteGroup::generate(6, {cyc("(0 1)", 6), cyc("(2 3 4 5)", 6)});
  auto ab2 = abelianization(z2z4);
  CHECK(ab2.order == 8);
  CHECK(ab2.invariants == std::vector<std::uint64_t>{2, 4});

  // Heisenberg group mod 3: upper unitriangular matrices acting on the
  // 27 column vectors of F_3^3.
  auto idx = [](int x, int y, int z) { return static_cast<Point>(((x % 3 + 3) % 3) * 9 + ((y % 3 + 3) % 3) * 3 + ((z % 3 + 3) % 3)); };
  std::vector<Point> a(27), b(27);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) {
        a[idx(x, y, z)] = idx(x + y, y, z);
        b[idx(x, y, z)] = idx(x, y + z, z);
      }
  auto heis = FiniteGroup::generate(27, {Permutation(a), Permutation(b)});
  CHECK(heis.order() == 27);
  auto ab3 = abelianization(heis);
  CHECK(ab3.order == 9);
  CHECK(ab3.invariants == std::vector<std::uint64_t>{3, 3});

  // Coordinates form a homomorphism.
  for (std::size_t i = 0; i < heis.order(); ++i)
    for (std::size_t j = 0; j < heis.order(); j += 5) {
      auto ij = heis.multiply(i, j);
      for (std::size_t c = 0; c < 2; ++c)
        CHECK((ab3.coordinates[i][c] + ab3.coordinates[j][c]) % 3 == ab3.coordinates[ij][c]);
    }
}

TEST_CASE("conjugate subgroups") {
  auto s3 = symmetric(3);
  auto h1 = Subgroup::generated_by(s3, {cyc("(0 1)", 3)});
  auto h2 = Subgroup::generated_by(s3, {cyc("(0 2)", 3)});
  auto x = are_conjugate_subgroups(s3, h1, h2);
  REQUIRE(x);
  CHECK(conjugate_subgroup(s3, h1, *x) == h2);
  CHECK(are_conjugate_subgroups(s3, h1, h1) == std::optional<std::size_t>{0});

  auto s6 = symmetric(6);
  auto g1 = Subgroup::generated_by(s6, {cyc("(0 1)(2 3)", 6), cyc("(0 2)(1 3)", 6)});
  auto g2 = Subgroup::generated_by(s6, {cyc("(0 1)(2 3)", 6), cyc("(0 1)(4 5)", 6)});
  CHECK_FALSE(are_conjugate_subgroups(s6, g1, g2));
}
