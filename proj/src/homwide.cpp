#include "sunada/homwide.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "sunada/error.hpp"
#include "sunada/wreath.hpp"

namespace sunada {

namespace {

PrimeField::T to_field(const PrimeField& f, const Rational& q) { return reduce_mod(q, f.p); }
RationalField::T to_field(const RationalField&, const Rational& q) { return q; }
Rational from_field(std::uint64_t x) { return Rational(x); }
Rational from_field(const Rational& q) { return q; }

template <class F>
Matrix<F> to_matrix(const F& f, std::size_t dim, const std::vector<Rational>& entries) {
  if (entries.size() != dim * dim) throw Error(ErrorKind::Parse, "matrix has " + std::to_string(entries.size()) +
                                                                     " entries, expected " + std::to_string(dim * dim));
  Matrix<F> m(dim, dim, f.zero());
  for (std::size_t i = 0; i < entries.size(); ++i) m.a[i] = to_field(f, entries[i]);
  return m;
}

template <class F>
std::vector<typename F::T> to_vector(const F& f, const Vector& v) {
  std::vector<typename F::T> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(to_field(f, q));
  return out;
}

template <class F>
Vector from_vector(const std::vector<typename F::T>& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(from_field(x));
  return out;
}

// Element matrices by BFS over the Cayley graph, checking M(xs) = M(x) M(s)
// on every edge.
template <class F>
std::vector<Matrix<F>> element_matrices(const F& f, const FiniteGroup& g, std::size_t dim,
                                        const std::vector<std::vector<Rational>>& generators) {
  const auto& gens = g.generator_indices();
  if (generators.size() != gens.size())
    throw Error(ErrorKind::Parse, "module has " + std::to_string(generators.size()) + " matrices for " +
                                      std::to_string(gens.size()) + " generators");
  std::vector<Matrix<F>> gm;
  for (const auto& entries : generators) {
    gm.push_back(to_matrix(f, dim, entries));
    if (!inverse(f, gm.back())) throw Error(ErrorKind::Parse, "generator matrix is not invertible");
  }
  std::vector<Matrix<F>> mats(g.order());
  std::vector<char> seen(g.order(), 0);
  mats[0] = identity_matrix(f, dim);
  seen[0] = 1;
  std::vector<std::size_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t x = queue[head];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::size_t y = g.multiply(x, gens[k]);
      Matrix<F> product = multiply(f, mats[x], gm[k]);
      if (!seen[y]) {
        seen[y] = 1;
        mats[y] = std::move(product);
        queue.push_back(y);
      } else if (mats[y] != product) {
        throw Error(ErrorKind::Parse, "matrices do not define a representation of the group");
      }
    }
  }
  check(queue.size() == g.order(), "generators reach every element");
  return mats;
}

template <class F>
std::size_t rank_rows(const F& f, const std::vector<Vector>& rows, std::size_t dim) {
  Matrix<F> m(rows.size(), dim, f.zero());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = to_field(f, rows[i][j]);
  return rank(f, m);
}

template <class F>
std::vector<Vector> fixed_basis(const F& f, const std::vector<Matrix<F>>& mats, const Subgroup& h, std::size_t dim) {
  const auto& gens = h.generator_indices();
  Matrix<F> stacked(std::max<std::size_t>(gens.size(), 1) * dim, dim, f.zero());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto& m = mats[gens[k]];
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) stacked(k * dim + i, j) = f.sub(m(i, j), i == j ? f.one() : f.zero());
  }
  std::vector<Vector> out;
  for (auto& v : nullspace(f, stacked)) out.push_back(from_vector<F>(v));
  return out;
}

// Odometer over alphabet^len, skipping the zero vector; calls fn until it returns true.
template <class Fn>
bool sweep(const std::vector<Rational>& alphabet, std::size_t len, std::size_t& budget, std::size_t& used, Fn&& fn) {
  std::vector<std::size_t> digit(len, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < len && ++digit[i] == alphabet.size()) digit[i++] = 0;
    if (i == len) return false;
    if (budget == 0) return false;
    --budget;
    ++used;
    std::vector<Rational> coeffs(len);
    for (std::size_t k = 0; k < len; ++k) coeffs[k] = alphabet[digit[k]];
    if (fn(coeffs)) return true;
  }
}

std::vector<Rational> alphabet_for(std::uint64_t ell) {
  std::vector<Rational> out;
  if (ell) {
    for (std::uint64_t x = 0; x < ell; ++x) out.emplace_back(x);
  } else {
    out = {0, 1, -1, 2};
  }
  return out;
}

double log_power(std::size_t base, std::size_t exp) {
  return static_cast<double>(exp) * std::log(static_cast<double>(base));
}

}  // namespace

GModule::GModule(const FiniteGroup& g, std::uint64_t ell, std::size_t dim) : g_(&g), ell_(ell), dim_(dim) {
  if (ell != 0 && !is_prime(ell)) throw Error(ErrorKind::FieldMismatch, "F_" + std::to_string(ell) + " is not a prime field");
  if (ell > (std::uint64_t{1} << 31)) throw Error(ErrorKind::FieldMismatch, "characteristic too large");
}

GModule::GModule(const FiniteGroup& g, std::uint64_t ell, std::size_t dim,
                 const std::vector<std::vector<Rational>>& generators, bool allow_modular)
    : GModule(g, ell, dim) {
  if (ell != 0 && g.order() % ell == 0 && !allow_modular)
    throw Error(ErrorKind::EllDividesOrder, "ell = " + std::to_string(ell) + " divides |G| = " + std::to_string(g.order()));
  build(generators);
}

void GModule::build(const std::vector<std::vector<Rational>>& generators) {
  if (ell_)
    mod_ = element_matrices(PrimeField{ell_}, *g_, dim_, generators);
  else
    rat_ = element_matrices(RationalField{}, *g_, dim_, generators);
}

GModule GModule::regular(const FiniteGroup& g, std::uint64_t ell) {
  std::vector<std::vector<Rational>> gens;
  const std::size_t n = g.order();
  for (std::size_t s : g.generator_indices()) {
    std::vector<Rational> m(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) m[g.multiply(s, x) * n + x] = 1;
    gens.push_back(std::move(m));
  }
  return GModule(g, ell, n, gens);
}

GModule GModule::permutation(const FiniteGroup& g, const Subgroup& h, std::uint64_t ell) {
  CosetTable table(g, h);
  const std::size_t n = table.size();
  std::vector<std::vector<Rational>> gens;
  for (std::size_t s : g.generator_indices()) {
    std::vector<Rational> m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) m[table.act(s, i) * n + i] = 1;
    gens.push_back(std::move(m));
  }
  return GModule(g, ell, n, gens);
}

GModule GModule::trivial(const FiniteGroup& g, std::uint64_t ell, std::size_t dim) {
  std::vector<Rational> id(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) id[i * dim + i] = 1;
  return GModule(g, ell, dim, std::vector<std::vector<Rational>>(g.generator_indices().size(), id));
}

std::string GModule::field_name() const { return ell_ ? "F" + std::to_string(ell_) : "Q"; }

std::vector<Rational> GModule::matrix(std::size_t x) const {
  std::vector<Rational> out;
  if (ell_)
    for (auto v : mod_.at(x).a) out.emplace_back(v);
  else
    out = rat_.at(x).a;
  return out;
}

Vector GModule::act(std::size_t x, const Vector& v) const {
  if (v.size() != dim_) throw Error(ErrorKind::DegreeMismatch, "vector has the wrong dimension");
  if (ell_) {
    PrimeField f{ell_};
    return from_vector<PrimeField>(apply(f, mod_[x], to_vector(f, v)));
  }
  return apply(RationalField{}, rat_[x], v);
}

Rational GModule::trace(std::size_t x) const {
  Rational t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += ell_ ? Rational(mod_[x](i, i)) : rat_[x](i, i);
  return ell_ ? Rational(reduce_mod(t, ell_)) : t;
}

Vector GModule::normalize(const Vector& v) const {
  if (!ell_) return v;
  return from_vector<PrimeField>(to_vector(PrimeField{ell_}, v));
}

std::size_t GModule::rank_of(const std::vector<Vector>& rows) const {
  return ell_ ? rank_rows(PrimeField{ell_}, rows, dim_) : rank_rows(RationalField{}, rows, dim_);
}

std::size_t GModule::span_rank(const Vector& v, const std::vector<std::size_t>& elements) const {
  std::vector<Vector> rows;
  for (std::size_t x : elements) rows.push_back(act(x, v));
  return rank_of(rows);
}

std::vector<Vector> GModule::fixed_space(const Subgroup& h) const {
  if (&h.parent() != g_) throw Error(ErrorKind::GroupMismatch, "subgroup of a different group");
  return ell_ ? fixed_basis(PrimeField{ell_}, mod_, h, dim_) : fixed_basis(RationalField{}, rat_, h, dim_);
}

std::optional<std::vector<Vector>> GModule::eigen_space(const LinearCharacter& lambda) const {
  if (&lambda.group() != g_) throw Error(ErrorKind::GroupMismatch, "character of a different group");
  const std::uint64_t order = lambda.order();
  // lambda(x) = zeta_order^k(x)
  auto k = [&](std::size_t x) { return lambda.exponent(x) * order / lambda.modulus(); };
  auto solve = [&](const auto& f, const auto& mats, const auto& value) {
    using F = std::decay_t<decltype(f)>;
    const auto& gens = g_->generator_indices();
    Matrix<F> stacked(std::max<std::size_t>(gens.size(), 1) * dim_, dim_, f.zero());
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const auto v = value(k(gens[g]));
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
          stacked(g * dim_ + i, j) = f.sub(mats[gens[g]](i, j), i == j ? v : f.zero());
    }
    std::vector<Vector> out;
    for (auto& x : nullspace(f, stacked)) out.push_back(from_vector<F>(x));
    return out;
  };
  if (ell_) {
    if ((ell_ - 1) % order != 0) return std::nullopt;
    std::uint64_t omega = order == 1 ? 1 : 0;
    for (std::uint64_t x = 2; x < ell_ && !omega; ++x) {
      const std::uint64_t y = pow_mod(x, (ell_ - 1) / order, ell_);
      bool primitive = true;
      for (std::uint64_t d = 1; d < order && primitive; ++d)
        if (pow_mod(y, d, ell_) == 1) primitive = false;
      if (primitive) omega = y;
    }
    check(omega != 0, "F_ell has a primitive root of unity of each order dividing ell - 1");
    return solve(PrimeField{ell_}, mod_, [&](std::uint64_t e) { return pow_mod(omega, e, ell_); });
  }
  if (order > 2) return std::nullopt;
  return solve(RationalField{}, rat_, [](std::uint64_t e) { return Rational(e % 2 ? -1 : 1); });
}

GModule GModule::restrict(const Subgroup& h) const {
  if (&h.parent() != g_) throw Error(ErrorKind::GroupMismatch, "subgroup of a different group");
  GModule out(h.group(), ell_, dim_);
  std::vector<std::vector<Rational>> gens;
  for (std::size_t s : h.group().generator_indices()) gens.push_back(matrix(h.to_parent(s)));
  out.build(gens);
  return out;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::None: return "none";
    case SearchStatus::Unknown: return "unknown";
  }
  return "?";
}

std::string to_string(Wideness w) {
  switch (w) {
    case Wideness::Wide: return "wide";
    case Wideness::NotWide: return "not wide";
    case Wideness::Inconclusive: return "inconclusive";
  }
  return "?";
}

CyclicVectorResult contains_regular(const GModule& m, std::size_t budget) {
  const FiniteGroup& g = m.group();
  CyclicVectorResult r;
  if (m.dim() < g.order()) {
    r.status = SearchStatus::None;
    r.certificate = "dim " + std::to_string(m.dim()) + " < |G| = " + std::to_string(g.order());
    return r;
  }
  // F[G] restricted to a cyclic subgroup C has a fixed space of dimension [G:C].
  std::vector<char> done(g.class_count(), 0);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (done[g.class_of(x)]) continue;
    done[g.class_of(x)] = 1;
    auto c = Subgroup::generated_by_indices(g, {x});
    const auto fixed = m.fixed_space(c).size();
    if (fixed < c.index()) {
      r.status = SearchStatus::None;
      r.certificate = "fixed space of <" + g.element(x).to_cycles() + "> has dimension " + std::to_string(fixed) +
                      " < " + std::to_string(c.index());
      return r;
    }
  }
  // F[G] contains every linear character realizable over the field.
  for (const auto& lambda : linear_characters(g)) {
    auto space = m.eigen_space(lambda);
    if (space && space->empty()) {
      r.status = SearchStatus::None;
      r.certificate = "a linear character of order " + std::to_string(lambda.order()) + " does not occur";
      return r;
    }
  }
  std::vector<std::size_t> all(g.order());
  std::iota(all.begin(), all.end(), std::size_t{0});
  auto cyclic = [&](const Vector& v) {
    ++r.candidates;
    return m.span_rank(v, all) == g.order();
  };
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Vector e(m.dim(), 0);
    e[i] = 1;
    if (cyclic(e)) {
      r.status = SearchStatus::Found;
      r.vector = e;
      return r;
    }
  }
  const auto alphabet = alphabet_for(m.ell());
  std::size_t remaining = budget, used = 0;
  Vector found;
  bool hit = sweep(alphabet, m.dim(), remaining, used, [&](const Vector& v) {
    if (cyclic(v)) {
      found = v;
      return true;
    }
    return false;
  });
  if (hit) {
    r.status = SearchStatus::Found;
    r.vector = found;
  } else if (m.ell() && log_power(alphabet.size(), m.dim()) <= std::log(static_cast<double>(budget) + 1.5)) {
    r.status = SearchStatus::None;
    r.certificate = "exhaustive search over F_" + std::to_string(m.ell()) + "^" + std::to_string(m.dim());
  }
  return r;
}

bool is_star_witness(const GModule& m, const Subgroup& h1, const Vector& v) {
  for (std::size_t s : h1.generator_indices())
    if (m.act(s, v) != m.normalize(v)) return false;
  CosetTable table(m.group(), h1);
  return m.span_rank(v, table.representatives()) == table.size();
}

StarResult condition_star(const GModule& m, const Subgroup& h1, std::size_t budget) {
  const FiniteGroup& g = m.group();
  require_subgroup(g, h1);
  if (m.ell() && std::gcd(m.ell(), static_cast<std::uint64_t>(g.order())) != 1)
    throw Error(ErrorKind::EllDividesOrder, "condition (*) needs ell coprime to |G|");
  StarResult r;
  const auto basis = m.fixed_space(h1);
  r.fixed_dimension = basis.size();
  const std::size_t n = h1.index();
  if (m.dim() < n) {
    r.status = SearchStatus::None;
    r.certificate = "dim " + std::to_string(m.dim()) + " < [G:H1] = " + std::to_string(n);
    return r;
  }
  // F[G/H1] has an H1-fixed space of dimension |H1\G/H1|.
  const std::size_t rank = double_cosets(g, h1, h1).size();
  if (basis.size() < rank) {
    r.status = SearchStatus::None;
    r.certificate = "H1-fixed space has dimension " + std::to_string(basis.size()) + " < |H1\\G/H1| = " +
                    std::to_string(rank);
    return r;
  }
  CosetTable table(g, h1);
  auto combine = [&](const std::vector<Rational>& coeffs) {
    Vector v(m.dim(), 0);
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t j = 0; j < m.dim(); ++j) v[j] += coeffs[k] * basis[k][j];
    return m.normalize(v);
  };
  auto works = [&](const Vector& v) {
    ++r.candidates;
    return m.span_rank(v, table.representatives()) == n;
  };
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<Rational> coeffs(basis.size(), 0);
    coeffs[k] = 1;
    auto v = combine(coeffs);
    if (works(v)) {
      r.status = SearchStatus::Found;
      r.witness = v;
      return r;
    }
  }
  const auto alphabet = alphabet_for(m.ell());
  std::size_t remaining = budget, used = 0;
  Vector found;
  bool hit = sweep(alphabet, basis.size(), remaining, used, [&](const std::vector<Rational>& coeffs) {
    auto v = combine(coeffs);
    if (works(v)) {
      found = v;
      return true;
    }
    return false;
  });
  if (hit) {
    r.status = SearchStatus::Found;
    r.witness = found;
  } else if (m.ell() && log_power(alphabet.size(), basis.size()) <= std::log(static_cast<double>(budget) + 1.5)) {
    r.status = SearchStatus::None;
    r.certificate = "exhaustive search over the H1-fixed space";
  }
  return r;
}

WidenessReport wideness_report(const GModule& m, const std::vector<Subgroup>& subgroups) {
  WidenessReport out;
  out.regular = contains_regular(m);
  for (const auto& h : subgroups) {
    auto star = condition_star(m, h);
    if (out.regular.vector) {
      Vector pushed(m.dim(), 0);
      for (std::size_t x : h.members()) {
        auto hv = m.act(x, *out.regular.vector);
        for (std::size_t j = 0; j < m.dim(); ++j) pushed[j] += hv[j];
      }
      pushed = m.normalize(pushed);
      check(is_star_witness(m, h, pushed), "a cyclic vector averaged over H is a star witness");
      check(star.status == SearchStatus::Found, "homologically wide modules satisfy condition (*)");
    }
    out.star.push_back(std::move(star));
  }
  return out;
}

namespace {

Wideness regular_part_verdict(const FiniteGroup& g, const ClassFunction& h) {
  // Exact necessary check on linear characters: <h, lambda> >= 1.
  for (const auto& lambda : linear_characters(g))
    if (character_inner(h, lambda.to_class_function()) < 1) return Wideness::NotWide;
  return Wideness::Wide;
}

}  // namespace

SurfaceReport surface_action_character(const FiniteGroup& g, long long chi_m) {
  const long long order = static_cast<long long>(g.order());
  if (chi_m % order != 0)
    throw Error(ErrorKind::NotDivisible, "a free action needs |G| = " + std::to_string(order) + " to divide chi = " +
                                             std::to_string(chi_m));
  const Rational c(-chi_m / order);
  ClassFunction h = ClassFunction::trivial(g);
  h *= Cyclotomic(2);
  h += ClassFunction::regular(g) * Cyclotomic(c);
  check(h.at_element(0) == Cyclotomic(2 - chi_m), "dim H_1 = 2 - chi");
  Wideness verdict;
  if (order == 1) {
    verdict = 2 - chi_m >= 1 ? Wideness::Wide : Wideness::NotWide;
  } else {
    // h - rho_reg = 2 * 1 + (c - 1) rho_reg is a character iff c >= 1; for
    // c <= 0 a nontrivial irreducible rho has <h, rho> = c dim rho < dim rho.
    verdict = c >= 1 ? Wideness::Wide : Wideness::NotWide;
    if (verdict == Wideness::Wide) check(regular_part_verdict(g, h) == Wideness::Wide, "linear multiplicities >= 1");
    for (const auto& lambda : linear_characters(g)) {
      const auto mult = inner_product(h, lambda.to_class_function());
      check(mult == Cyclotomic(c + (lambda.is_trivial() ? 2 : 0)), "<h, lambda> = 2 [lambda = 1] + c");
    }
  }
  return {h, c, verdict};
}

OrbifoldReport orbifold_action_character(const FiniteGroup& g, long long chi_quotient,
                                         const std::vector<Subgroup>& branch) {
  const long long order = static_cast<long long>(g.order());
  const auto reg = ClassFunction::regular(g);
  ClassFunction h = ClassFunction::trivial(g);
  h *= Cyclotomic(2);
  h += reg * Cyclotomic(-chi_quotient);
  long long chi_cover = order * chi_quotient;
  for (const auto& c : branch) {
    require_subgroup(g, c);
    bool cyclic = false;
    for (std::size_t x : c.members()) cyclic = cyclic || g.element_order(x) == c.order();
    if (!cyclic) throw Error(ErrorKind::NotCyclic, "branch isotropy group is not cyclic");
    h += reg;
    h -= induce(ClassFunction::trivial(c.group()), c);
    chi_cover -= order - order / static_cast<long long>(c.order());
  }
  check(h.at_element(0) == Cyclotomic(2 - chi_cover), "dim H_1 of the cover by Riemann-Hurwitz");
  Wideness verdict = Wideness::Inconclusive;
  if (chi_quotient < 0) {
    verdict = Wideness::Wide;
    check(regular_part_verdict(g, h) == Wideness::Wide, "linear multiplicities >= 1 when chi_q < 0");
  }
  return {h, chi_cover, verdict};
}

SeifertWeberReport seifert_weber() {
  SeifertWeberReport rep;
  auto g = std::make_shared<FiniteGroup>(FiniteGroup::generate(
      5, {Permutation::from_cycles("(0 1)", 5), Permutation::from_cycles("(0 1 2 3 4)", 5)}));
  rep.group = g;
  const std::vector<Rational> r = {4, 2, 4, 0, 0, 2, 0, 3, 0};
  const std::vector<Rational> c = {0, 1, 0, 0, 0, 1, 1, 2, 3};
  auto module = std::make_shared<GModule>(*g, 5, 3, std::vector<std::vector<Rational>>{r, c}, true);
  rep.module = module;

  // Relations and order of the matrix group, independently of the permutation group.
  PrimeField f{5};
  const auto mr = to_matrix(f, 3, r), mc = to_matrix(f, 3, c);
  auto power = [&](const Matrix<PrimeField>& m, int k) {
    auto out = identity_matrix(f, 3);
    for (int i = 0; i < k; ++i) out = multiply(f, out, m);
    return out;
  };
  const auto id = identity_matrix(f, 3);
  rep.relations = power(mr, 2) == id && power(mc, 5) == id;
  {
    auto key = [](const Matrix<PrimeField>& m) {
      std::uint64_t k = 0;
      for (auto x : m.a) k = k * 5 + x;
      return k;
    };
    std::unordered_set<std::uint64_t> seen{key(id)};
    std::vector<Matrix<PrimeField>> queue{id};
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const auto* s : {&mr, &mc}) {
        auto y = multiply(f, queue[head], *s);
        if (seen.insert(key(y)).second) queue.push_back(std::move(y));
      }
    rep.matrix_group_order = queue.size();
  }

  // Traces on one element of each listed cycle type.
  const std::vector<std::pair<std::vector<std::size_t>, std::int64_t>> listed = {
      {{1, 1, 1, 1, 1}, 3}, {{1, 1, 1, 2}, -1}, {{1, 1, 3}, 0}, {{1, 4}, 1}, {{1, 2, 2}, -1}, {{2, 3}, 2}};
  rep.traces_match = true;
  for (const auto& [shape, expected] : listed) {
    std::optional<std::size_t> found;
    for (std::size_t x = 0; x < g->order() && !found; ++x) {
      std::vector<std::size_t> cycle;
      std::vector<char> seen(5, 0);
      for (Point p = 0; p < 5; ++p) {
        if (seen[p]) continue;
        std::size_t len = 0;
        for (Point q = p; !seen[q]; q = g->element(x)(q)) {
          seen[q] = 1;
          ++len;
        }
        cycle.push_back(len);
      }
      std::sort(cycle.begin(), cycle.end());
      if (cycle == shape) found = x;
    }
    check(found.has_value(), "every listed cycle type occurs in S5");
    TraceCheck t;
    for (auto len : shape) t.cycle_type += std::to_string(len);
    t.representative = g->element(*found).to_cycles();
    t.trace = static_cast<std::uint64_t>(boost::multiprecision::numerator(module->trace(*found)));
    t.expected = static_cast<std::uint64_t>(((expected % 5) + 5) % 5);
    rep.traces_match = rep.traces_match && t.trace == t.expected;
    rep.traces.push_back(t);
  }

  // Cyclic vectors for <r> and <c r c^-1 r>.
  const std::size_t ri = g->generator_indices()[0], ci = g->generator_indices()[1];
  const std::size_t crcr = g->multiply(g->multiply(g->multiply(ci, ri), g->inverse(ci)), ri);
  auto hr = Subgroup::generated_by_indices(*g, {ri});
  auto hc = Subgroup::generated_by_indices(*g, {crcr});
  rep.r_vector = {1, 1, 0};
  rep.rcr_vector = {1, 0, 0};
  rep.r_orbit_rank = module->span_rank(rep.r_vector, hr.members());
  rep.rcr_orbit_rank = module->span_rank(rep.rcr_vector, hc.members());
  const auto via_search_r = contains_regular(module->restrict(hr));
  const auto via_search_c = contains_regular(module->restrict(hc));
  rep.cyclic_vectors = hr.order() == 2 && hc.order() == 3 && rep.r_orbit_rank == 2 && rep.rcr_orbit_rank == 3 &&
                       via_search_r.status == SearchStatus::Found && via_search_c.status == SearchStatus::Found;
  return rep;
}

nlohmann::json to_json(const Vector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

nlohmann::json to_json(const CyclicVectorResult& r) {
  nlohmann::json out = {{"status", to_string(r.status)}, {"candidates", r.candidates}};
  out["cyclic_vector"] = r.vector ? to_json(*r.vector) : nlohmann::json(nullptr);
  if (!r.certificate.empty()) out["certificate"] = r.certificate;
  return out;
}

nlohmann::json to_json(const StarResult& r) {
  nlohmann::json out = {{"status", to_string(r.status)},
                        {"fixed_dimension", r.fixed_dimension},
                        {"candidates", r.candidates}};
  out["witness"] = r.witness ? to_json(*r.witness) : nlohmann::json(nullptr);
  if (!r.certificate.empty()) out["certificate"] = r.certificate;
  return out;
}

nlohmann::json to_json(const SeifertWeberReport& r) {
  nlohmann::json traces = nlohmann::json::array();
  for (const auto& t : r.traces)
    traces.push_back({{"cycle_type", t.cycle_type},
                      {"representative", t.representative},
                      {"trace_mod_5", t.trace},
                      {"expected_mod_5", t.expected}});
  return {{"relations", r.relations},
          {"matrix_group_order", r.matrix_group_order},
          {"traces", traces},
          {"traces_match", r.traces_match},
          {"cyclic_vector_r", {{"vector", to_json(r.r_vector)}, {"orbit_rank", r.r_orbit_rank}}},
          {"cyclic_vector_crcr", {{"vector", to_json(r.rcr_vector)}, {"orbit_rank", r.rcr_orbit_rank}}},
          {"integral_homology", r.integral_homology},
          {"ok", r.ok()}};
}

}  // namespace sunada
