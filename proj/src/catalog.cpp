#include "sunada/catalog.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <functional>

#include "sunada/error.hpp"

namespace sunada::catalog {

namespace {

Permutation cyc(const char* s, std::size_t n) { return Permutation::from_cycles(s, n); }

Triple make(std::string name, FiniteGroup g, const std::function<Subgroup(const FiniteGroup&)>& h1,
             const std::function<Subgroup(const FiniteGroup&)>& h2) {
  auto group = std::make_shared<const FiniteGroup>(std::move(g));
  return Triple{std::move(name), group, h1(*group), h2(*group)};
}

Subgroup filter(const FiniteGroup& g, const std::function<bool(const Permutation&)>& keep) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (keep(g.element(i))) members.push_back(i);
  return Subgroup::from_members(g, std::move(members));
}

}  // namespace

FiniteGroup symmetric(std::size_t n) {
  if (n <= 1) return FiniteGroup::generate(std::max<std::size_t>(n, 1), {});
  std::vector<Point> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = static_cast<Point>((i + 1) % n);
  return FiniteGroup::generate(n, {cyc("(0 1)", n), Permutation(shift)});
}

FiniteGroup cyclic(std::size_t n) {
  std::vector<Point> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = static_cast<Point>((i + 1) % n);
  return FiniteGroup::generate(n, {Permutation(shift)});
}

Triple gassmann() {
  return make("gassmann", symmetric(6),
              [](const FiniteGroup& g) { return Subgroup::generated_by(g, {cyc("(0 1)(2 3)", 6), cyc("(0 2)(1 3)", 6)}); },
              [](const FiniteGroup& g) { return Subgroup::generated_by(g, {cyc("(0 1)(2 3)", 6), cyc("(0 1)(4 5)", 6)}); });
}

Triple gerst() {
  auto aff = [](unsigned a, unsigned b) {
    std::vector<Point> img(8);
    for (unsigned x = 0; x < 8; ++x) img[x] = (a * x + b) % 8;
    return Permutation(img);
  };
  FiniteGroup g = FiniteGroup::generate(8, {aff(3, 0), aff(5, 0), aff(1, 1)});
  return make(
      "gerst", std::move(g),
      [aff](const FiniteGroup& grp) { return Subgroup::generated_by(grp, {aff(3, 0), aff(5, 0)}); },
      [aff](const FiniteGroup& grp) { return Subgroup::generated_by(grp, {aff(3, 4), aff(5, 4)}); });
}

Triple brooks_tse() {
  // Point v-1 is the nonzero vector with bit pattern v (bit 0 = first coordinate).
  using Matrix = std::array<unsigned, 3>;  // columns as bit patterns
  auto act = [](const Matrix& m, unsigned v) {
    unsigned out = 0;
    for (unsigned j = 0; j < 3; ++j)
      if (v >> j & 1u) out ^= m[j];
    return out;
  };
  auto perm = [&](const Matrix& m) {
    std::vector<Point> img(7);
    for (unsigned v = 1; v < 8; ++v) img[v - 1] = act(m, v) - 1;
    return Permutation(img);
  };
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) {
      if (i == j) continue;
      Matrix m{1u, 2u, 4u};
      m[j] ^= 1u << i;  // elementary transvection
      gens.push_back(perm(m));
    }
  FiniteGroup g = FiniteGroup::generate(7, gens);
  check(g.order() == 168, "GL(3,2) has order 168");
  return make(
      "brooks-tse", std::move(g),
      // first column e1: the vector e1 is fixed
      [](const FiniteGroup& grp) { return filter(grp, [](const Permutation& p) { return p(0) == 0; }); },
      // first row e1: the first coordinate of every vector is preserved
      [](const FiniteGroup& grp) {
        return filter(grp, [](const Permutation& p) {
          for (unsigned v = 1; v < 8; ++v)
            if (((p(v - 1) + 1) & 1u) != (v & 1u)) return false;
          return true;
        });
      });
}

Triple barden_kang() {
  // A = Z/2 x Z/2 x Z/4, point index a0 + 2 a1 + 4 a2; then six points for Z/6.
  using Vec = std::array<unsigned, 3>;
  auto index = [](const Vec& a) { return a[0] % 2 + 2 * (a[1] % 2) + 4 * (a[2] % 4); };
  auto phi = [](const Vec& a, unsigned k) {
    Vec v = a;
    for (unsigned r = 0; r < k % 3; ++r) v = {v[1], (v[0] + v[1]) % 2, v[2]};
    return v;
  };
  auto element = [&](const Vec& a, unsigned k) {
    std::vector<Point> img(22);
    for (unsigned i = 0; i < 16; ++i) {
      Vec x{i % 2, (i / 2) % 2, i / 4};
      Vec y = phi(x, k);
      img[i] = index({a[0] + y[0], a[1] + y[1], a[2] + y[2]});
    }
    for (unsigned t = 0; t < 6; ++t) img[16 + t] = 16 + (t + k) % 6;
    return Permutation(img);
  };
  FiniteGroup g =
      FiniteGroup::generate(22, {element({1, 0, 0}, 0), element({0, 1, 0}, 0), element({0, 0, 1}, 0), element({0, 0, 0}, 1)});
  check(g.order() == 96, "Barden-Kang group has order 96");
  return make(
      "barden-kang", std::move(g),
      [element](const FiniteGroup& grp) { return Subgroup::generated_by(grp, {element({1, 0, 1}, 0), element({0, 1, 0}, 3)}); },
      [element](const FiniteGroup& grp) { return Subgroup::generated_by(grp, {element({1, 0, 1}, 0), element({1, 1, 0}, 3)}); });
}

Triple guralnick(std::size_t p) {
  if (p < 3 || p > 7) throw Error(ErrorKind::TooLarge, "guralnick group supported for p in {3, 5, 7}");
  const unsigned q = static_cast<unsigned>(p);
  const unsigned p2 = q * q;
  struct El {
    unsigned x, y, h1, h2;
  };
  // phi_(1,0): (x, y) -> (x + p y mod p^2, x + y mod p); phi_(0,1): x -> (p+1) x.
  auto phi = [&](unsigned x, unsigned y, unsigned h1, unsigned h2) {
    for (unsigned i = 0; i < h2; ++i) x = (q + 1) * x % p2;
    for (unsigned i = 0; i < h1; ++i) {
      unsigned nx = (x + q * y) % p2;
      unsigned ny = (x + y) % q;
      x = nx;
      y = ny;
    }
    return std::pair<unsigned, unsigned>{x, y};
  };
  auto mul = [&](const El& a, const El& b) {
    auto [bx, by] = phi(b.x, b.y, a.h1, a.h2);
    return El{(a.x + bx) % p2, (a.y + by) % q, (a.h1 + b.h1) % q, (a.h2 + b.h2) % q};
  };
  const unsigned size = p2 * q * q * q;
  auto index = [&](const El& e) { return ((e.x * q + e.y) * q + e.h1) * q + e.h2; };
  auto decode = [&](unsigned i) {
    El e;
    e.h2 = i % q;
    i /= q;
    e.h1 = i % q;
    i /= q;
    e.y = i % q;
    e.x = i / q;
    return e;
  };
  auto regular = [&](const El& g) {
    std::vector<Point> img(size);
    for (unsigned i = 0; i < size; ++i) img[i] = index(mul(g, decode(i)));
    return Permutation(img);
  };
  FiniteGroup g = FiniteGroup::generate(size, {regular({1, 0, 0, 0}), regular({0, 1, 0, 0}), regular({0, 0, 1, 0}), regular({0, 0, 0, 1})});
  check(g.order() == size, "Guralnick group acts regularly");
  Permutation a = regular({0, 0, 1, 0}), b1 = regular({0, 0, 0, 1}), b2 = regular({q, 0, 0, 1});
  return make(
      "guralnick" + std::to_string(p), std::move(g),
      [a, b1](const FiniteGroup& grp) { return Subgroup::generated_by(grp, {a, b1}); },
      [a, b2](const FiniteGroup& grp) { return Subgroup::generated_by(grp, {a, b2}); });
}

FiniteGroup heisenberg(std::size_t p) {
  const unsigned q = static_cast<unsigned>(p);
  auto idx = [q](unsigned x, unsigned y, unsigned z) { return static_cast<Point>((x % q) * q * q + (y % q) * q + z % q); };
  std::vector<Point> a(q * q * q), b(q * q * q);
  for (unsigned x = 0; x < q; ++x)
    for (unsigned y = 0; y < q; ++y)
      for (unsigned z = 0; z < q; ++z) {
        a[idx(x, y, z)] = idx(x + y, y, z);
        b[idx(x, y, z)] = idx(x, y + z, z);
      }
  return FiniteGroup::generate(q * q * q, {Permutation(a), Permutation(b)});
}

Triple s4_cyclic_klein() {
  return make("s4-cyclic-klein", symmetric(4),
              [](const FiniteGroup& g) { return Subgroup::generated_by(g, {cyc("(0 1 2 3)", 4)}); },
              [](const FiniteGroup& g) { return Subgroup::generated_by(g, {cyc("(0 1)(2 3)", 4), cyc("(0 2)(1 3)", 4)}); });
}

Triple s3_transpositions() {
  return make("s3-transpositions", symmetric(3),
              [](const FiniteGroup& g) { return Subgroup::generated_by(g, {cyc("(0 1)", 3)}); },
              [](const FiniteGroup& g) { return Subgroup::generated_by(g, {cyc("(0 2)", 3)}); });
}

Triple klein_pair() {
  FiniteGroup g = FiniteGroup::generate(4, {cyc("(0 1)(2 3)", 4), cyc("(0 2)(1 3)", 4)});
  return make("klein-pair", std::move(g),
              [](const FiniteGroup& grp) { return Subgroup::generated_by(grp, {cyc("(0 1)(2 3)", 4)}); },
              [](const FiniteGroup& grp) { return Subgroup::generated_by(grp, {cyc("(0 2)(1 3)", 4)}); });
}

std::vector<std::string> names() {
  return {"gassmann", "gerst", "brooks-tse", "barden-kang", "guralnick3", "guralnick5", "s4-cyclic-klein", "s3-transpositions", "klein-pair"};
}

Triple by_name(const std::string& name) {
  if (name == "gassmann") return gassmann();
  if (name == "gerst") return gerst();
  if (name == "brooks-tse") return brooks_tse();
  if (name == "barden-kang") return barden_kang();
  if (name == "guralnick3") return guralnick(3);
  if (name == "guralnick5") return guralnick(5);
  if (name == "s4-cyclic-klein") return s4_cyclic_klein();
  if (name == "s3-transpositions") return s3_transpositions();
  if (name == "klein-pair") return klein_pair();
  throw Error(ErrorKind::Parse, "unknown built-in example \"" + name + "\"");
}

namespace {

Permutation random_permutation(std::mt19937_64& rng, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

std::size_t random_below(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

Subgroup random_subgroup(std::mt19937_64& rng, const FiniteGroup& g) {
  std::vector<std::size_t> gens{random_below(rng, g.order())};
  if (random_below(rng, 3) == 0) gens.push_back(random_below(rng, g.order()));
  return Subgroup::generated_by_indices(g, gens);
}

}  // namespace

Triple random_triple(std::mt19937_64& rng, std::size_t max_order) {
  if (random_below(rng, 5) == 0) {
    static const char* small[] = {"gerst", "barden-kang", "s4-cyclic-klein", "s3-transpositions", "klein-pair"};
    for (;;) {
      auto t = by_name(small[random_below(rng, std::size(small))]);
      if (t.group->order() > max_order) continue;
      const FiniteGroup& g = *t.group;
      auto h1 = conjugate_subgroup(g, t.h1, random_below(rng, g.order()));
      auto h2 = conjugate_subgroup(g, t.h2, random_below(rng, g.order()));
      return Triple{t.name + "-conjugated", t.group, std::move(h1), std::move(h2)};
    }
  }
  for (;;) {
    const std::size_t degree = 3 + random_below(rng, 5);
    std::vector<Permutation> gens{random_permutation(rng, degree)};
    if (random_below(rng, 4) != 0) gens.push_back(random_permutation(rng, degree));
    FiniteGroup g;
    try {
      g = FiniteGroup::generate(degree, gens, max_order);
    } catch (const Error&) {
      continue;
    }
    if (g.order() < 2 || g.order() > max_order) continue;
    auto group = std::make_shared<const FiniteGroup>(std::move(g));
    Subgroup h1 = random_subgroup(rng, *group);
    Subgroup h2 = random_below(rng, 3) == 0 ? conjugate_subgroup(*group, h1, random_below(rng, group->order()))
                                            : random_subgroup(rng, *group);
    return Triple{"random", group, std::move(h1), std::move(h2)};
  }
}

}  // namespace sunada::catalog
