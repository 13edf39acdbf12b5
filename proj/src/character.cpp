#include "sunada/character.hpp"

#include <numeric>

#include "sunada/error.hpp"

namespace sunada {

ClassFunction::ClassFunction(const FiniteGroup& g) : group_(&g), values_(g.class_count()) {}

ClassFunction::ClassFunction(const FiniteGroup& g, std::vector<Cyclotomic> values)
    : group_(&g), values_(std::move(values)) {
  if (values_.size() != g.class_count())
    throw Error(ErrorKind::MalformedCharacter, "class function needs one value per conjugacy class");
}

ClassFunction ClassFunction::trivial(const FiniteGroup& g) {
  return ClassFunction(g, std::vector<Cyclotomic>(g.class_count(), Cyclotomic(1)));
}

ClassFunction ClassFunction::regular(const FiniteGroup& g) {
  ClassFunction f(g);
  f.values_[0] = Cyclotomic(static_cast<long long>(g.order()));
  return f;
}

void ClassFunction::require_same(const ClassFunction& o) const {
  if (group_ != o.group_) throw Error(ErrorKind::GroupMismatch, "class functions live on different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  require_same(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  require_same(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Cyclotomic& s) {
  for (auto& v : values_) v *= s;
  return *this;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  a.require_same(b);
  return a.values_ == b.values_;
}

LinearCharacter::LinearCharacter(const FiniteGroup& g, std::uint64_t modulus, std::vector<std::uint32_t> exponents)
    : group_(&g), modulus_(modulus), exponents_(std::move(exponents)) {
  if (modulus_ == 0 || exponents_.size() != g.order())
    throw Error(ErrorKind::MalformedCharacter, "linear character needs one exponent per element");
  for (auto e : exponents_)
    if (e >= modulus_) throw Error(ErrorKind::MalformedCharacter, "exponent out of range");
  const auto& gens = g.generator_indices();
  for (std::size_t a : gens)
    for (std::size_t b : gens)
      if ((exponents_[a] + exponents_[b]) % modulus_ != exponents_[g.multiply(a, b)])
        throw Error(ErrorKind::MalformedCharacter, "exponent map is not multiplicative");
}

LinearCharacter LinearCharacter::trivial(const FiniteGroup& g) {
  return LinearCharacter(g, 1, std::vector<std::uint32_t>(g.order(), 0));
}

bool LinearCharacter::is_trivial() const {
  for (auto e : exponents_)
    if (e != 0) return false;
  return true;
}

std::uint64_t LinearCharacter::order() const {
  std::uint64_t g = modulus_;
  for (auto e : exponents_) g = std::gcd(g, static_cast<std::uint64_t>(e));
  return modulus_ / g;
}

ClassFunction LinearCharacter::to_class_function() const {
  std::vector<Cyclotomic> values;
  for (std::size_t c = 0; c < group_->class_count(); ++c) values.push_back(value(group_->class_representative(c)));
  return ClassFunction(*group_, std::move(values));
}

bool LinearCharacter::agree(const LinearCharacter& a, std::size_t ga, const LinearCharacter& b, std::size_t gb) {
  // e_a / m_a == e_b / m_b mod 1
  unsigned __int128 lhs = static_cast<unsigned __int128>(a.exponents_[ga]) * b.modulus_;
  unsigned __int128 rhs = static_cast<unsigned __int128>(b.exponents_[gb]) * a.modulus_;
  return lhs == rhs;
}

std::vector<LinearCharacter> linear_characters(const FiniteGroup& h) {
  Abelianization ab = abelianization(h);
  const std::uint64_t m = ab.exponent();
  const std::size_t k = ab.invariants.size();
  std::vector<std::uint64_t> t(k, 0);
  std::vector<LinearCharacter> out;
  // Odometer over the character coordinates, last coordinate fastest.
  auto advance = [&] {
    for (std::size_t i = k; i-- > 0;) {
      if (++t[i] < ab.invariants[i]) return true;
      t[i] = 0;
    }
    return false;
  };
  do {
    std::vector<std::uint32_t> e(h.order());
    for (std::size_t x = 0; x < h.order(); ++x) {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < k; ++i) s += t[i] * ab.coordinates[x][i] % ab.invariants[i] * (m / ab.invariants[i]);
      e[x] = static_cast<std::uint32_t>(s % m);
    }
    out.emplace_back(h, m, std::move(e));
  } while (advance());
  check(out.size() == ab.order, "number of linear characters equals |H^ab|");
  return out;
}

ClassFunction induce(const ClassFunction& f, const Subgroup& h) {
  if (&f.group() != &h.group()) throw Error(ErrorKind::GroupMismatch, "class function does not live on the subgroup");
  const FiniteGroup& g = h.parent();
  CosetTable table(g, h);
  std::vector<Cyclotomic> values(g.class_count());
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    std::size_t x = g.class_representative(c);
    for (std::size_t i = 0; i < table.size(); ++i)
      if (table.act(x, i) == i) values[c] += f.at_element(*h.to_local(table.cocycle(x, i)));
  }
  ClassFunction out(g, std::move(values));
  check(out.degree() == f.degree() * Rational(static_cast<long long>(table.size())),
        "induced degree is the index times the degree");
  return out;
}

ClassFunction induce(const LinearCharacter& chi, const Subgroup& h) {
  if (&chi.group() != &h.group()) throw Error(ErrorKind::GroupMismatch, "character does not live on the subgroup");
  const FiniteGroup& g = h.parent();
  CosetTable table(g, h);
  const std::uint64_t m = chi.modulus();
  std::vector<Cyclotomic> values;
  values.reserve(g.class_count());
  std::vector<std::int64_t> counts(m);
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    std::fill(counts.begin(), counts.end(), 0);
    std::size_t x = g.class_representative(c);
    for (std::size_t i = 0; i < table.size(); ++i)
      if (table.act(x, i) == i) ++counts[chi.exponent(*h.to_local(table.cocycle(x, i)))];
    values.push_back(Cyclotomic::from_counts(m, counts));
  }
  return ClassFunction(g, std::move(values));
}

ClassFunction restrict(const ClassFunction& f, const Subgroup& h) {
  if (&f.group() != &h.parent()) throw Error(ErrorKind::GroupMismatch, "class function does not live on the parent");
  const FiniteGroup& local = h.group();
  std::vector<Cyclotomic> values;
  for (std::size_t c = 0; c < local.class_count(); ++c)
    values.push_back(f.at_element(h.to_parent(local.class_representative(c))));
  return ClassFunction(local, std::move(values));
}

ClassFunction tensor(const ClassFunction& a, const ClassFunction& b) {
  if (&a.group() != &b.group()) throw Error(ErrorKind::GroupMismatch, "class functions live on different groups");
  std::vector<Cyclotomic> values;
  for (std::size_t c = 0; c < a.values().size(); ++c) values.push_back(a[c] * b[c]);
  return ClassFunction(a.group(), std::move(values));
}

ClassFunction conjugate(const ClassFunction& f) {
  std::vector<Cyclotomic> values;
  for (const auto& v : f.values()) values.push_back(v.conjugate());
  return ClassFunction(f.group(), std::move(values));
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (&a.group() != &b.group()) throw Error(ErrorKind::GroupMismatch, "class functions live on different groups");
  const FiniteGroup& g = a.group();
  Cyclotomic sum;
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    if (a[c].is_zero() || b[c].is_zero()) continue;
    sum += a[c] * b[c].conjugate() * Rational(static_cast<long long>(g.class_size(c)));
  }
  return sum * Rational(1, static_cast<long long>(g.order()));
}

std::uint64_t character_inner(const ClassFunction& a, const ClassFunction& b) {
  Cyclotomic z = inner_product(a, b);
  check(z.is_rational(), "inner product of characters is rational");
  Rational r = z.to_rational();
  check(is_integer(r) && r >= 0, "inner product of characters is a nonnegative integer");
  return static_cast<std::uint64_t>(boost::multiprecision::numerator(r));
}

std::uint64_t mackey_inner(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2, const LinearCharacter& chi1,
                           const LinearCharacter& chi2) {
  require_subgroup(g, h1);
  require_subgroup(g, h2);
  if (&chi1.group() != &h1.group() || &chi2.group() != &h2.group())
    throw Error(ErrorKind::GroupMismatch, "characters must live on their subgroups");
  std::uint64_t total = 0;
  for (const auto& dc : double_cosets(g, h2, h1)) {
    const std::size_t s = dc.representative;
    const std::size_t s_inv = g.inverse(s);
    bool equal = true;
    for (std::size_t k : h2.members()) {
      std::size_t x = g.multiply(g.multiply(s_inv, k), s);
      auto lx = h1.to_local(x);
      if (!lx) continue;
      if (!LinearCharacter::agree(chi1, *lx, chi2, *h2.to_local(k))) {
        equal = false;
        break;
      }
    }
    if (equal) ++total;
  }
  return total;
}

nlohmann::json to_json(const Cyclotomic& z) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : z.coefficients()) coeffs.push_back(to_string(c));
  return {{"conductor", z.conductor()}, {"coefficients", coeffs}};
}

nlohmann::json to_json(const ClassFunction& f) {
  nlohmann::json out = nlohmann::json::array();
  const FiniteGroup& g = f.group();
  for (std::size_t c = 0; c < g.class_count(); ++c)
    out.push_back({{"class_representative", g.element(g.class_representative(c)).to_cycles()},
                   {"class_size", g.class_size(c)},
                   {"value", to_json(f[c])}});
  return out;
}

}  // namespace sunada
