#include "sunada/wreath.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <set>

#include "sunada/catalog.hpp"
#include "sunada/error.hpp"

namespace sunada {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t choose_ell(std::uint64_t group_order) {
  std::uint64_t ell = 3;
  while (!is_prime(ell) || std::gcd(ell, group_order) != 1) ++ell;
  if (group_order >= 2) check(ell <= 2 * group_order, "a suitable prime exists below 2|G|");
  return ell;
}

WreathContext::WreathContext(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2, std::uint64_t ell)
    : g_(&g), h1_(&h1), h2_(&h2), ell_(ell), table_(g, h1), n_(table_.size()) {
  require_subgroup(g, h2);
  if (!is_prime(ell)) throw Error(ErrorKind::EllTooSmall, "ell = " + std::to_string(ell) + " is not prime");
  if (ell > 0xffffu) throw Error(ErrorKind::TooLarge, "ell too large");
  action_.resize(g.order() * n_);
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t i = 0; i < n_; ++i) action_[x * n_ + i] = static_cast<std::uint32_t>(table_.act(x, i));
  // Homomorphism to Sym(n) and the cocycle identity, on generator pairs.
  for (std::size_t a : g.generator_indices())
    for (std::size_t b : g.generator_indices()) {
      std::size_t ab = g.multiply(a, b);
      for (std::size_t i = 0; i < n_; ++i) {
        check(act(ab, i) == act(a, act(b, i)), "coset action is a homomorphism");
        check(table_.cocycle(ab, i) == g.multiply(table_.cocycle(a, act(b, i)), table_.cocycle(b, i)),
              "cocycle identity h_{gg',i} = h_{g,g'(i)} h_{g',i}");
      }
    }
  for (int side = 1; side <= 2; ++side) {
    const Subgroup& h = this->h(side);
    std::vector<char> seen(n_, 0);
    for (std::size_t start = 0; start < n_; ++start) {
      if (seen[start]) continue;
      std::vector<std::size_t> orbit{start};
      seen[start] = 1;
      for (std::size_t head = 0; head < orbit.size(); ++head)
        for (std::size_t s : h.generator_indices()) {
          std::size_t j = act(s, orbit[head]);
          if (!seen[j]) {
            seen[j] = 1;
            orbit.push_back(j);
          }
        }
      std::sort(orbit.begin(), orbit.end());
      orbits_[side - 1].push_back(std::move(orbit));
    }
  }
  for (int j = 1; j <= 2; ++j)
    for (int i = 1; i <= 2; ++i) dcs_[j - 1][i - 1] = sunada::double_cosets(g, this->h(j), this->h(i));
}

std::vector<std::uint32_t> WreathContext::transport(std::size_t g, const std::vector<std::uint32_t>& a) const {
  std::vector<std::uint32_t> out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[act(g, j)] = a[j];
  return out;
}

double WreathContext::log10_order() const {
  return static_cast<double>(n_) * std::log10(static_cast<double>(ell_)) + std::log10(static_cast<double>(g_->order()));
}

namespace {

WreathLinearCharacter make_solitary(const WreathContext& ctx) {
  std::vector<std::uint32_t> a(ctx.n(), 0);
  a[0] = 1;
  return {1, std::move(a), LinearCharacter::trivial(ctx.h(1).group()), 0};
}

}  // namespace

WreathLinearCharacter solitary_character(const WreathContext& ctx) {
  if (ctx.ell() < 3)
    throw Error(ErrorKind::EllTooSmall, "a solitary character needs ell >= 3 (use the weak-conjugacy variant for ell = 2)");
  return make_solitary(ctx);
}

std::vector<WreathLinearCharacter> wreath_linear_characters(const WreathContext& ctx, int side) {
  const auto& orbits = ctx.orbits(side);
  std::size_t best = 0;
  for (std::size_t o = 1; o < orbits.size(); ++o)
    if (orbits[o].size() < orbits[best].size()) best = o;
  auto chars = linear_characters(ctx.h(side).group());
  std::vector<WreathLinearCharacter> out;
  for (std::uint32_t c = 0; c < ctx.ell(); ++c)
    for (std::size_t x = 0; x < chars.size(); ++x) {
      std::vector<std::uint32_t> a(ctx.n(), 0);
      for (std::size_t j : orbits[best]) a[j] = c;
      out.push_back({side, std::move(a), chars[x], x});
    }
  check(out.size() == ctx.ell() * chars.size(), "searched characters number ell * |H^ab|");
  return out;
}

std::vector<WreathLinearCharacter> all_wreath_linear_characters(const WreathContext& ctx, int side) {
  const auto& orbits = ctx.orbits(side);
  auto chars = linear_characters(ctx.h(side).group());
  std::vector<std::uint32_t> c(orbits.size(), 0);
  std::vector<WreathLinearCharacter> out;
  for (;;) {
    std::vector<std::uint32_t> a(ctx.n(), 0);
    for (std::size_t o = 0; o < orbits.size(); ++o)
      for (std::size_t j : orbits[o]) a[j] = c[o];
    for (std::size_t x = 0; x < chars.size(); ++x) out.push_back({side, a, chars[x], x});
    std::size_t o = orbits.size();
    while (o > 0 && ++c[o - 1] == ctx.ell()) c[--o] = 0;
    if (o == 0) break;
  }
  return out;
}

void validate(const WreathContext& ctx, const WreathLinearCharacter& psi) {
  if (psi.side != 1 && psi.side != 2) throw Error(ErrorKind::MalformedCharacter, "side must be 1 or 2");
  if (psi.a.size() != ctx.n()) throw Error(ErrorKind::MalformedCharacter, "exponent vector has wrong length");
  for (auto x : psi.a)
    if (x >= ctx.ell()) throw Error(ErrorKind::MalformedCharacter, "exponent out of range");
  const Subgroup& h = ctx.h(psi.side);
  if (&psi.chi.group() != &h.group()) throw Error(ErrorKind::MalformedCharacter, "base character lives on the wrong group");
  for (std::size_t s : h.generator_indices())
    if (ctx.transport(s, psi.a) != psi.a)
      throw Error(ErrorKind::MalformedCharacter, "exponent vector is not constant on orbits, so not multiplicative");
}

std::uint64_t wreath_induced_inner(const WreathContext& ctx, const WreathLinearCharacter& psi1,
                                   const WreathLinearCharacter& psi2) {
  validate(ctx, psi1);
  validate(ctx, psi2);
  const FiniteGroup& g = ctx.group();
  const Subgroup& hi = ctx.h(psi1.side);
  const Subgroup& hj = ctx.h(psi2.side);
  std::uint64_t total = 0;
  for (const auto& dc : ctx.double_cosets(psi2.side, psi1.side)) {
    const std::size_t s = dc.representative;
    // Agreement on the base C^n: Phi(s) a = b.
    if (ctx.transport(s, psi1.a) != psi2.a) continue;
    // Agreement on Hj cap s Hi s^-1.
    const std::size_t s_inv = g.inverse(s);
    bool equal = true;
    for (std::size_t h : hj.members()) {
      auto x = hi.to_local(g.multiply(g.multiply(s_inv, h), s));
      if (!x) continue;
      if (!LinearCharacter::agree(psi1.chi, *x, psi2.chi, *hj.to_local(h))) {
        equal = false;
        break;
      }
    }
    if (equal) ++total;
  }
  return total;
}

IsometryVerdict isometry_test(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2,
                              const IsometryOptions& options) {
  require_subgroup(g, h1);
  require_subgroup(g, h2);
  IsometryVerdict v;
  v.pintonello = options.pintonello;
  v.ell = options.ell ? *options.ell : (options.pintonello ? 2 : choose_ell(g.order()));
  if (!is_prime(v.ell)) throw Error(ErrorKind::EllTooSmall, "ell = " + std::to_string(v.ell) + " is not prime");
  if (!options.pintonello && v.ell < 3)
    throw Error(ErrorKind::EllTooSmall, "ell = 2 needs the weak-conjugacy variant (--pintonello)");
  if (std::gcd(v.ell, static_cast<std::uint64_t>(g.order())) != 1)
    throw Error(ErrorKind::EllDividesOrder, "ell = " + std::to_string(v.ell) + " divides |G| = " + std::to_string(g.order()));

  WreathContext ctx(g, h1, h2, v.ell);
  v.dimension = h2.index();
  const auto xi = options.pintonello ? make_solitary(ctx) : solitary_character(ctx);
  const auto chars = wreath_linear_characters(ctx, 2);
  v.characters = chars.size();
  const std::size_t ab2 = chars.size() / v.ell;
  v.budget = options.pintonello ? 2 + 4 * ab2 : 2 * v.ell * ab2;
  v.solitary_norm = wreath_induced_inner(ctx, xi, xi);

  bool searching = true;
  if (options.pintonello) {
    WreathLinearCharacter t1{1, std::vector<std::uint32_t>(ctx.n(), 0), LinearCharacter::trivial(h1.group()), 0};
    WreathLinearCharacter t2{2, std::vector<std::uint32_t>(ctx.n(), 0), LinearCharacter::trivial(h2.group()), 0};
    const auto b11 = wreath_induced_inner(ctx, t1, t1), b21 = wreath_induced_inner(ctx, t1, t2);
    const auto b12 = wreath_induced_inner(ctx, t2, t1), b22 = wreath_induced_inner(ctx, t2, t2);
    v.checks_performed += 2;
    v.weak_precondition = b11 == b21 && b12 == b22;
    searching = v.weak_precondition;
  }
  for (std::size_t idx = 0; searching && idx < chars.size(); ++idx) {
    const auto& psi = chars[idx];
    const auto a21 = wreath_induced_inner(ctx, xi, psi);
    const auto a12 = wreath_induced_inner(ctx, psi, xi);
    check(a12 == a21, "off-diagonal wreath multiplicities coincide");
    const auto a22 = wreath_induced_inner(ctx, psi, psi);
    v.checks_performed += 2;
    if (v.solitary_norm == a21 && a12 == a22) {
      v.equivalent = true;
      v.witness = psi;
      v.witness_index = idx;
      searching = false;
    }
  }
  check(v.checks_performed <= v.budget, "checks stay within the budget");
  v.conjugator = are_conjugate_subgroups(g, h1, h2);
  check(v.equivalent == v.conjugator.has_value(), "wreath verdict agrees with the conjugacy scan");
  return v;
}

nlohmann::json to_json(const WreathContext& ctx, const IsometryVerdict& v) {
  nlohmann::json out = {{"equivalent", v.equivalent},
                        {"ell", v.ell},
                        {"mode", v.pintonello ? "weak-conjugacy (ell = 2)" : "standard"},
                        {"checks_performed", v.checks_performed},
                        {"budget", v.budget},
                        {"characters_searched", v.characters},
                        {"solitary_norm", v.solitary_norm},
                        {"dimension", v.dimension},
                        {"n", ctx.n()},
                        {"log10_wreath_order", std::round(ctx.log10_order() * 1e6) / 1e6}};
  if (v.pintonello) out["weak_conjugacy_precondition"] = v.weak_precondition;
  if (v.witness) {
    out["witness"] = {{"index", v.witness_index}, {"exponents", v.witness->a}, {"base_character", v.witness->chi_index}};
  } else {
    out["witness"] = nullptr;
  }
  out["conjugator"] =
      v.conjugator ? nlohmann::json(ctx.group().element(*v.conjugator).to_cycles()) : nlohmann::json(nullptr);
  return out;
}

Permutation DenseWreath::element(const std::vector<std::uint32_t>& k, std::size_t g, const FiniteGroup& base) const {
  const std::size_t deg = base.degree();
  std::vector<Point> img(n * ell + deg);
  const Permutation& p = base.element(g);
  // act on coordinates through base_action_ of g
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t gi = coset_action[g * n + i];
    for (std::size_t x = 0; x < ell; ++x) img[i * ell + x] = static_cast<Point>(gi * ell + (x + k[gi]) % ell);
  }
  for (std::size_t q = 0; q < deg; ++q) img[n * ell + q] = static_cast<Point>(n * ell + p(static_cast<Point>(q)));
  return Permutation(std::move(img));
}

LinearCharacter DenseWreath::realize(const WreathLinearCharacter& psi) const {
  const Subgroup& ht = psi.side == 1 ? *h1 : *h2;
  const Subgroup& hb = psi.side == 1 ? *base_h1 : *base_h2;
  const std::uint64_t m = psi.chi.modulus();
  const std::uint64_t l = std::lcm(ell, m);
  std::vector<std::uint32_t> e(ht.order());
  for (std::size_t x = 0; x < ht.order(); ++x) {
    std::size_t p = ht.to_parent(x);
    std::uint64_t dot = 0;
    for (std::size_t j = 0; j < n; ++j) dot += static_cast<std::uint64_t>(psi.a[j]) * k_of[p][j];
    auto local = hb.to_local(base_of[p]);
    check(local.has_value(), "dense subgroup element projects into the base subgroup");
    e[x] = static_cast<std::uint32_t>(((dot % ell) * (l / ell) + psi.chi.exponent(*local) * (l / m)) % l);
  }
  return LinearCharacter(ht.group(), l, std::move(e));
}

DenseWreath dense_wreath(const WreathContext& ctx, std::size_t cap) {
  const double log_order = ctx.log10_order();
  if (log_order > std::log10(static_cast<double>(cap)) + 1e-9)
    throw Error(ErrorKind::TooLarge, "wreath product too large to enumerate");
  const FiniteGroup& base = ctx.group();
  DenseWreath d;
  d.n = ctx.n();
  d.ell = ctx.ell();
  d.base_h1 = &ctx.h(1);
  d.base_h2 = &ctx.h(2);
  d.coset_action.resize(base.order() * d.n);
  for (std::size_t x = 0; x < base.order(); ++x)
    for (std::size_t i = 0; i < d.n; ++i) d.coset_action[x * d.n + i] = static_cast<std::uint32_t>(ctx.act(x, i));
  const std::size_t degree = d.n * d.ell + base.degree();

  auto unit = [&](std::size_t j) {
    std::vector<std::uint32_t> k(d.n, 0);
    k[j] = 1;
    return k;
  };
  const std::vector<std::uint32_t> zero(d.n, 0);
  std::vector<Permutation> gens{d.element(unit(0), 0, base)};
  for (std::size_t s : base.generator_indices()) gens.push_back(d.element(zero, s, base));
  auto group = std::make_shared<FiniteGroup>(FiniteGroup::generate(degree, gens, cap));
  d.group = group;

  // Decode every element as (k, g).
  d.k_of.resize(group->order());
  d.base_of.resize(group->order());
  for (std::size_t x = 0; x < group->order(); ++x) {
    const Permutation& p = group->element(x);
    std::vector<Point> tail(base.degree());
    for (std::size_t q = 0; q < base.degree(); ++q) tail[q] = p(static_cast<Point>(d.n * d.ell + q)) - static_cast<Point>(d.n * d.ell);
    std::size_t g = base.index_of(Permutation(tail));
    std::vector<std::uint32_t> k(d.n);
    for (std::size_t i = 0; i < d.n; ++i) {
      Point img = p(static_cast<Point>(i * d.ell));
      check(img / d.ell == ctx.act(g, i), "dense element permutes coordinates like its base part");
      k[img / d.ell] = img % d.ell;
    }
    check(d.element(k, g, base) == p, "dense element decodes to (k, g)");
    d.k_of[x] = std::move(k);
    d.base_of[x] = g;
  }
  check(static_cast<double>(group->order()) == std::round(std::pow(10.0, log_order)), "|C^n x| G| = ell^n |G|");

  for (int side = 1; side <= 2; ++side) {
    std::vector<Permutation> hg;
    for (std::size_t j = 0; j < d.n; ++j) hg.push_back(d.element(unit(j), 0, base));
    for (std::size_t s : ctx.h(side).generator_indices()) hg.push_back(d.element(zero, s, base));
    auto sub = std::make_shared<const Subgroup>(Subgroup::generated_by(*group, hg));
    check(sub->order() == group->order() / ctx.h(side).index(), "C^n x| H has index [G:H]");
    (side == 1 ? d.h1 : d.h2) = sub;
  }
  return d;
}

SolitaryReport solitary_uniqueness_bruteforce(const WreathContext& ctx) {
  if (ctx.ell() < 3)
    throw Error(ErrorKind::EllTooSmall, "ell = 2 is unsupported: solitary characters need not exist there");
  SolitaryReport r;
  r.n = ctx.n();
  if (ctx.log10_order() > 6.0 + 1e-9) throw Error(ErrorKind::TooLarge, "ell^n |G| exceeds 10^6");
  const double two_pi = 2.0 * std::acos(-1.0);
  const double nn = static_cast<double>(r.n);
  r.psi_abs = std::abs(std::complex<double>(std::cos(two_pi / ctx.ell()) + nn - 1.0, std::sin(two_pi / ctx.ell())));
  r.inequality_holds = r.psi_abs > nn - 2.0;

  DenseWreath d = dense_wreath(ctx, 1000000);
  const FiniteGroup& gt = *d.group;
  r.order = gt.order();
  const auto xi = solitary_character(ctx);
  const ClassFunction psi = induce(d.realize(xi), *d.h1);
  check(character_inner(psi, psi) == 1, "Ind Xi is irreducible");

  // Monomial matrices of Ind Xi: e_i -> zeta^{k_{g(i)}} e_{g(i)} at (k, g).
  for (std::size_t c = 0; c < gt.class_count(); ++c) {
    std::size_t x = gt.class_representative(c);
    std::vector<std::int64_t> counts(ctx.ell(), 0);
    for (std::size_t i = 0; i < r.n; ++i)
      if (ctx.act(d.base_of[x], i) == i) ++counts[d.k_of[x][i]];
    check(Cyclotomic::from_counts(ctx.ell(), counts) == psi[c], "monomial matrices have trace Ind Xi");
  }
  // |psi| at e_1 agrees with the character value.
  {
    std::vector<std::uint32_t> k(r.n, 0);
    k[0] = 1;
    std::size_t e1 = gt.index_of(d.element(k, 0, ctx.group()));
    check(std::abs(std::abs(psi.at_element(e1).to_complex()) - r.psi_abs) < 1e-9, "psi(e_1) = zeta + n - 1");
  }

  if (r.n == 1) {
    r.unique = true;
    r.structures = 1;
    r.subgroups_examined = 1;
    return r;
  }

  // Irreducibility forces a transitive set of lines, so each monomial
  // structure is G~/K with a linear character of K inducing to psi.
  // Index-n subgroups K arise as point stabilizers of transitive actions.
  const auto& gens = gt.generator_indices();
  std::vector<Permutation> sym_n;
  {
    std::vector<Point> p(r.n);
    std::iota(p.begin(), p.end(), Point{0});
    do sym_n.emplace_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  double tuples = std::pow(static_cast<double>(sym_n.size()), static_cast<double>(gens.size()));
  if (tuples * static_cast<double>(gt.order()) > 5e9) throw Error(ErrorKind::TooLarge, "too many candidate actions");

  // Spanning tree of the Cayley graph: parent[x] * gens[via[x]] = x.
  std::vector<std::size_t> order{0}, parent(gt.order(), 0), via(gt.order(), 0);
  std::vector<char> seen(gt.order(), 0);
  seen[0] = 1;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      std::size_t y = gt.multiply(order[head], gens[s]);
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = order[head];
        via[y] = s;
        order.push_back(y);
      }
    }

  std::set<std::vector<std::size_t>> stabilizers;
  std::vector<std::size_t> choice(gens.size(), 0);
  std::vector<Permutation> image(gt.order());
  for (;;) {
    image[0] = Permutation::identity(r.n);
    for (std::size_t i = 1; i < order.size(); ++i) image[order[i]] = image[parent[order[i]]] * sym_n[choice[via[order[i]]]];
    bool hom = true;
    for (std::size_t x = 0; x < gt.order() && hom; ++x)
      for (std::size_t s = 0; s < gens.size() && hom; ++s)
        hom = image[gt.multiply(x, gens[s])] == image[x] * sym_n[choice[s]];
    if (hom) {
      // Transitivity and the stabilizer of point 0.
      std::vector<char> hit(r.n, 0);
      std::vector<std::size_t> stab;
      for (std::size_t x = 0; x < gt.order(); ++x) {
        Point p = image[x](0);
        hit[p] = 1;
        if (p == 0) stab.push_back(x);
      }
      if (std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; })) stabilizers.insert(stab);
    }
    std::size_t s = gens.size();
    while (s > 0 && ++choice[s - 1] == sym_n.size()) choice[--s] = 0;
    if (s == 0) break;
  }

  // Conjugacy classes of the stabilizers.
  std::vector<Subgroup> classes;
  for (const auto& members : stabilizers) {
    Subgroup k = Subgroup::from_members(gt, members);
    bool known = false;
    for (const auto& c : classes)
      if (are_conjugate_subgroups(gt, c, k)) {
        known = true;
        break;
      }
    if (!known) classes.push_back(std::move(k));
  }
  r.subgroups_examined = classes.size();
  bool h1_matches = false;
  for (const auto& k : classes) {
    bool carries = false;
    for (const auto& lambda : linear_characters(k.group()))
      if (induce(lambda, k) == psi) {
        carries = true;
        break;
      }
    if (carries) {
      ++r.structures;
      if (are_conjugate_subgroups(gt, k, *d.h1)) h1_matches = true;
    }
  }
  r.unique = r.structures == 1 && h1_matches;
  return r;
}

namespace {

std::string sci(double log10_value) {
  double exponent = std::floor(log10_value);
  double mantissa = std::pow(10.0, log10_value - exponent);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fe%d", mantissa, static_cast<int>(exponent));
  return buf;
}

double log10_factorial(std::uint64_t n) {
  double s = 0;
  for (std::uint64_t k = 2; k <= n; ++k) s += std::log10(static_cast<double>(k));
  return s;
}

Table1Row executable_row(const std::string& label, const Triple& t, bool weak_variant, const std::string& ref_order,
                         std::size_t ref_sub, const std::string& ref_ell, const std::string& ref_dim,
                         const std::string& ref_budget) {
  Table1Row row;
  row.name = label;
  const FiniteGroup& g = *t.group;
  check(t.h1.order() == t.h2.order(), "subgroups of a Sunada triple have equal order");
  row.group_order = std::to_string(g.order());
  row.subgroup_order = t.h2.order();
  const std::uint64_t ell = weak_variant ? 2 : choose_ell(g.order());
  const std::uint64_t ab2 = abelianization(t.h2).order;
  row.ell = std::to_string(ell);
  row.dimension = std::to_string(t.h2.index());
  row.budget = std::to_string(weak_variant ? 2 + 4 * ab2 : 2 * ell * ab2);
  row.expected_group_order = ref_order;
  row.expected_subgroup_order = ref_sub;
  row.expected_ell = ref_ell;
  row.expected_dimension = ref_dim;
  row.expected_budget = ref_budget;
  row.matches = row.group_order == ref_order && row.subgroup_order == ref_sub && row.ell == ref_ell &&
                row.dimension == ref_dim && row.budget == ref_budget;
  if (weak_variant) row.note = "ell = 2 with the weak-conjugacy variant: budget 2 + 4|H2^ab|";
  return row;
}

}  // namespace

std::vector<Table1Row> table1() {
  std::vector<Table1Row> rows;
  rows.push_back(executable_row("Gerst", catalog::gerst(), false, "32", 4, "3", "8", "24"));
  rows.push_back(executable_row("Gassmann", catalog::gassmann(), false, "720", 4, "7", "180", "56"));

  {
    // Symmetric group on p^3 letters with subgroups of order p^3; closed forms only.
    const std::uint64_t p = 3, p3 = p * p * p;
    Table1Row row;
    row.name = "Komatsu (p = 3)";
    row.executable = false;
    const double log_g = log10_factorial(p3), log_dim = log10_factorial(p3 - 1);
    row.group_order = "(p^3)! = " + sci(log_g);
    row.subgroup_order = p3;
    // Every prime factor of (p^3)! is below p^3, so ell is the least prime above p^3.
    std::uint64_t least = p3 + 1;
    while (!is_prime(least)) ++least;
    const std::uint64_t bound = 2 * p3 - 3;
    // Abelianization of the order-p^3 subgroup: the Heisenberg group mod p.
    const std::uint64_t ab = abelianization(catalog::heisenberg(p)).order;
    row.ell = std::to_string(least) + " (<= 2p^3-3 = " + std::to_string(bound) + ")";
    row.dimension = "(p^3-1)! = " + sci(log_dim);
    const std::uint64_t budget_at_least = 2 * least * ab;
    const std::uint64_t budget_formula = 2 * p * p * (2 * p3 - 3);
    row.budget = std::to_string(budget_at_least) + " (formula 2p^2(2p^3-3) = " + std::to_string(budget_formula) + ")";
    row.expected_group_order = "~1e28";
    row.expected_subgroup_order = 27;
    row.expected_ell = "29";
    row.expected_dimension = "~4e26";
    row.expected_budget = "522";
    const bool order_ok = std::floor(log_g) == 28;
    const bool dim_ok = std::floor(log_dim) == 26 && std::lround(std::pow(10.0, log_dim - 26)) == 4;
    row.matches = order_ok && dim_ok && least == 29 && least <= bound && ab == p * p && budget_at_least == 522 &&
                  budget_at_least <= budget_formula;
    row.note = "formulas only; the reference budget 522 uses ell = 29, the closed form bounds it by 918";
    rows.push_back(row);
  }

  rows.push_back(executable_row("Brooks-Tse", catalog::brooks_tse(), false, "168", 24, "5", "7", "20"));
  rows.push_back(executable_row("Barden-Kang", catalog::barden_kang(), false, "96", 8, "5", "12", "80"));
  rows.push_back(executable_row("Guralnick (p = 3)", catalog::guralnick(3), true, "243", 9, "2", "27", "38"));
  return rows;
}

nlohmann::json to_json(const Table1Row& row) {
  return {{"name", row.name},
          {"group_order", row.group_order},
          {"subgroup_order", row.subgroup_order},
          {"ell", row.ell},
          {"dimension", row.dimension},
          {"budget", row.budget},
          {"executable", row.executable},
          {"reference",
           {{"group_order", row.expected_group_order},
            {"subgroup_order", row.expected_subgroup_order},
            {"ell", row.expected_ell},
            {"dimension", row.expected_dimension},
            {"budget", row.expected_budget}}},
          {"matches", row.matches},
          {"note", row.note}};
}

}  // namespace sunada
