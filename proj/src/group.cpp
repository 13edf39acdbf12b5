#include "sunada/group.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <deque>
#include <numeric>

#include "sunada/error.hpp"

namespace sunada {

namespace {

constexpr std::size_t kTableLimit = 2048;

}  // namespace

FiniteGroup FiniteGroup::generate(std::size_t degree, const std::vector<Permutation>& generators, std::size_t cap) {
  FiniteGroup g;
  g.degree_ = degree;
  g.generators_ = generators;
  for (const auto& p : generators)
    if (p.degree() != degree)
      throw Error(ErrorKind::DegreeMismatch,
                  "generator of degree " + std::to_string(p.degree()) + " in group of degree " + std::to_string(degree));

  std::vector<Permutation> sorted;
  for (const auto& p : generators)
    if (!p.is_identity()) sorted.push_back(p);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  g.elements_.push_back(Permutation::identity(degree));
  g.lookup_.emplace(g.elements_.back(), 0);
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const auto& s : sorted) {
      Permutation y = g.elements_[head] * s;
      if (g.lookup_.count(y)) continue;
      if (g.elements_.size() >= cap)
        throw Error(ErrorKind::CapExceeded, "group closure exceeds " + std::to_string(cap) + " elements");
      g.lookup_.emplace(y, static_cast<std::uint32_t>(g.elements_.size()));
      g.elements_.push_back(std::move(y));
    }
  }

  const std::size_t n = g.elements_.size();
  g.inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.inverse_[i] = g.lookup_.at(g.elements_[i].inverse());
  if (n <= kTableLimit) {
    g.table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g.table_[i * n + j] = g.lookup_.at(g.elements_[i] * g.elements_[j]);
  }
  for (const auto& p : generators) g.generator_indices_.push_back(g.lookup_.at(p));
  g.compute_classes();
  return g;
}

std::optional<std::size_t> FiniteGroup::find(const Permutation& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree_) throw Error(ErrorKind::DegreeMismatch, "permutation degree differs from group degree");
  auto it = lookup_.find(p);
  if (it == lookup_.end()) throw Error(ErrorKind::NotSubgroup, p.to_cycles() + " is not an element of the group");
  return it->second;
}

std::size_t FiniteGroup::multiply(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * elements_.size() + b];
  return lookup_.at(elements_[a] * elements_[b]);
}

void FiniteGroup::compute_classes() {
  const std::size_t n = elements_.size();
  constexpr std::uint32_t unset = 0xffffffffu;
  class_of_.assign(n, unset);
  std::vector<std::size_t> gens;
  for (std::size_t s : generator_indices_)
    if (s != 0) gens.push_back(s);
  for (std::size_t start = 0; start < n; ++start) {
    if (class_of_[start] != unset) continue;
    const auto id = static_cast<std::uint32_t>(classes_.size());
    std::vector<std::size_t> members{start};
    class_of_[start] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (std::size_t s : gens) {
        std::size_t y = conjugate(s, members[head]);
        if (class_of_[y] == unset) {
          class_of_[y] = id;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes_.push_back(std::move(members));
  }
  std::size_t total = 0;
  for (const auto& c : classes_) total += c.size();
  check(total == n, "class sizes sum to the group order");
  check(classes_[0].size() == 1, "identity forms its own class");
}

std::vector<std::size_t> closure(const FiniteGroup& parent, const std::vector<std::size_t>& generators) {
  std::vector<char> in(parent.order(), 0);
  std::vector<std::size_t> members{0};
  in[0] = 1;
  std::vector<std::size_t> gens;
  for (std::size_t s : generators)
    if (s != 0) gens.push_back(s);
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (std::size_t s : gens) {
      std::size_t y = parent.multiply(members[head], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Subgroup Subgroup::build(const FiniteGroup& parent, std::vector<std::size_t> generators,
                         std::vector<std::size_t> members) {
  Subgroup h;
  h.parent_ = &parent;
  h.members_ = std::move(members);
  h.generators_ = std::move(generators);
  if (parent.order() % h.members_.size() != 0)
    throw Error(ErrorKind::Internal, "Lagrange violated: subgroup order does not divide group order");
  std::vector<Permutation> perms;
  for (std::size_t s : h.generators_) perms.push_back(parent.element(s));
  h.local_ = std::make_shared<const FiniteGroup>(FiniteGroup::generate(parent.degree(), perms));
  check(h.local_->order() == h.members_.size(), "subgroup enumeration matches closure");
  h.local_of_.assign(parent.order(), kNone);
  h.parent_of_.resize(h.local_->order());
  for (std::size_t i = 0; i < h.local_->order(); ++i) {
    std::size_t p = parent.index_of(h.local_->element(i));
    h.parent_of_[i] = p;
    h.local_of_[p] = static_cast<std::uint32_t>(i);
  }
  return h;
}

Subgroup Subgroup::generated_by(const FiniteGroup& parent, const std::vector<Permutation>& generators) {
  std::vector<std::size_t> idx;
  for (const auto& p : generators) idx.push_back(parent.index_of(p));
  return generated_by_indices(parent, idx);
}

Subgroup Subgroup::generated_by_indices(const FiniteGroup& parent, const std::vector<std::size_t>& generators) {
  for (std::size_t s : generators)
    if (s >= parent.order()) throw Error(ErrorKind::NotSubgroup, "generator index out of range");
  return build(parent, generators, closure(parent, generators));
}

Subgroup Subgroup::from_members(const FiniteGroup& parent, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != 0) throw Error(ErrorKind::NotSubgroup, "member set lacks the identity");
  std::vector<char> in(parent.order(), 0);
  for (std::size_t m : members) {
    if (m >= parent.order()) throw Error(ErrorKind::NotSubgroup, "member index out of range");
    in[m] = 1;
  }
  // Greedy generating set: add members not yet covered.
  std::vector<std::size_t> gens;
  std::vector<std::size_t> current{0};
  for (std::size_t m : members) {
    if (std::binary_search(current.begin(), current.end(), m)) continue;
    gens.push_back(m);
    current = closure(parent, gens);
    for (std::size_t x : current)
      if (!in[x]) throw Error(ErrorKind::NotSubgroup, "member set is not closed under multiplication");
  }
  if (current.size() != members.size()) throw Error(ErrorKind::NotSubgroup, "member set is not a subgroup");
  return build(parent, std::move(gens), std::move(members));
}

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  std::vector<std::size_t> all(parent.order());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return build(parent, parent.generator_indices(), std::move(all));
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) { return build(parent, {}, {0}); }

std::optional<std::size_t> Subgroup::to_local(std::size_t g) const {
  if (local_of_[g] == kNone) return std::nullopt;
  return local_of_[g];
}

void require_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (&h.parent() != &g) throw Error(ErrorKind::NotSubgroup, "subgroup belongs to a different parent group");
}

CosetTable::CosetTable(const FiniteGroup& parent, const Subgroup& subgroup) : parent_(&parent) {
  require_subgroup(parent, subgroup);
  constexpr std::uint32_t unset = 0xffffffffu;
  coset_of_.assign(parent.order(), unset);
  for (std::size_t g = 0; g < parent.order(); ++g) {
    if (coset_of_[g] != unset) continue;
    const auto id = static_cast<std::uint32_t>(reps_.size());
    reps_.push_back(g);
    for (std::size_t h : subgroup.members()) coset_of_[parent.multiply(g, h)] = id;
  }
  check(reps_.size() * subgroup.order() == parent.order(), "coset count times subgroup order equals group order");
}

std::size_t CosetTable::act(std::size_t g, std::size_t i) const { return coset_of_[parent_->multiply(g, reps_[i])]; }

std::size_t CosetTable::cocycle(std::size_t g, std::size_t i) const {
  std::size_t gi = parent_->multiply(g, reps_[i]);
  return parent_->multiply(parent_->inverse(reps_[coset_of_[gi]]), gi);
}

Permutation CosetTable::action(std::size_t g) const {
  std::vector<Point> images(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) images[i] = static_cast<Point>(act(g, i));
  return Permutation(std::move(images));
}

std::vector<DoubleCoset> double_cosets(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  require_subgroup(g, a);
  require_subgroup(g, b);
  CosetTable table(g, b);
  const std::size_t n = table.size();
  std::vector<char> seen(n, 0);
  std::vector<DoubleCoset> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> orbit{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (std::size_t s : a.generator_indices()) {
        std::size_t j = table.act(s, orbit[head]);
        if (!seen[j]) {
          seen[j] = 1;
          orbit.push_back(j);
        }
      }
    std::size_t rep = table.representative(start);
    for (std::size_t i : orbit) rep = std::min(rep, table.representative(i));
    out.push_back({rep, orbit.size() * b.order()});
  }
  std::sort(out.begin(), out.end(), [](const DoubleCoset& x, const DoubleCoset& y) { return x.representative < y.representative; });
  return out;
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, std::size_t x) {
  require_subgroup(g, h);
  std::vector<std::size_t> gens;
  for (std::size_t s : h.generator_indices()) gens.push_back(g.conjugate(x, s));
  return Subgroup::generated_by_indices(g, gens);
}

Subgroup normal_core(const FiniteGroup& g, const Subgroup& h) {
  require_subgroup(g, h);
  CosetTable table(g, h);
  const std::size_t n = table.size();
  std::vector<std::size_t> kernel;
  for (std::size_t x : h.members()) {
    bool fixes_all = true;
    for (std::size_t i = 0; i < n && fixes_all; ++i) fixes_all = table.act(x, i) == i;
    if (fixes_all) kernel.push_back(x);
  }
  // Independent computation: intersection of the conjugates g_i H g_i^-1.
  std::vector<std::size_t> inter;
  for (std::size_t x : h.members()) {
    bool everywhere = true;
    for (std::size_t i = 0; i < n && everywhere; ++i)
      everywhere = h.contains(g.conjugate(g.inverse(table.representative(i)), x));
    if (everywhere) inter.push_back(x);
  }
  check(kernel == inter, "normal core: coset-action kernel equals intersection of conjugates");
  Subgroup core = Subgroup::from_members(g, kernel);
  // [G : core] <= [G : H]!
  if (n < 20) {
    std::uint64_t fact = 1;
    for (std::uint64_t k = 2; k <= n; ++k) fact *= k;
    check(core.index() <= fact, "index of the normal core is at most [G:H]!");
  }
  return core;
}

Subgroup normal_closure(const FiniteGroup& g, const std::vector<std::size_t>& elements) {
  std::vector<std::size_t> gens = elements;
  for (;;) {
    std::vector<std::size_t> members = closure(g, gens);
    std::size_t before = gens.size();
    for (std::size_t i = 0; i < before; ++i)
      for (std::size_t s : g.generator_indices()) {
        std::size_t c = g.conjugate(s, gens[i]);
        if (!std::binary_search(members.begin(), members.end(), c)) {
          gens.push_back(c);
          members = closure(g, gens);
        }
      }
    if (gens.size() == before) return Subgroup::from_members(g, std::move(members));
  }
}

namespace {

using BigInt = boost::multiprecision::cpp_int;
using I128 = __int128;

std::int64_t mod_pos(I128 a, std::int64_t m) {
  I128 r = a % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

// Extended gcd on nonnegative inputs: returns g, s, t with s*a + t*b = g.
void ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& g, std::int64_t& s, std::int64_t& t) {
  std::int64_t old_r = a, r = b, old_s = 1, s1 = 0, old_t = 0, t1 = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * s1; old_s = s1; s1 = tmp;
    tmp = old_t - q * t1; old_t = t1; t1 = tmp;
  }
  g = old_r; s = old_s; t = old_t;
}

// Hermite basis of the relation lattice L with modulus*Z^k <= L. Entries are
// kept reduced modulo `modulus`, which is legitimate because every
// modulus*e_i lies in L.
class ModularHermite {
 public:
  ModularHermite(std::size_t k, std::int64_t modulus) : k_(k), m_(modulus), rows_(k, std::vector<std::int64_t>(k, 0)) {
    for (std::size_t i = 0; i < k; ++i) rows_[i][i] = modulus;
  }

  void insert(std::vector<std::int64_t> v) {
    for (auto& x : v) x = mod_pos(x, m_);
    for (std::size_t c = 0; c < k_; ++c) {
      if (v[c] == 0) continue;
      auto& row = rows_[c];
      std::int64_t g, s, t;
      ext_gcd(row[c], v[c], g, s, t);
      std::int64_t a = row[c] / g, b = v[c] / g;
      std::vector<std::int64_t> fresh(k_), rest(k_);
      for (std::size_t j = c; j < k_; ++j) {
        fresh[j] = mod_pos(static_cast<I128>(s) * row[j] + static_cast<I128>(t) * v[j], m_);
        rest[j] = mod_pos(static_cast<I128>(a) * v[j] - static_cast<I128>(b) * row[j], m_);
      }
      fresh[c] = g;  // g divides the modulus, so keep it unreduced
      row = fresh;
      v = rest;
    }
  }

  std::vector<std::vector<std::int64_t>> rows() const { return rows_; }

 private:
  std::size_t k_;
  std::int64_t m_;
  std::vector<std::vector<std::int64_t>> rows_;
};

// Smith form D = U A V of a square nonsingular matrix; returns the diagonal
// and V.
void smith(std::vector<std::vector<BigInt>> a, std::vector<BigInt>& diag, std::vector<std::vector<BigInt>>& v) {
  const std::size_t k = a.size();
  v.assign(k, std::vector<BigInt>(k, 0));
  for (std::size_t i = 0; i < k; ++i) v[i][i] = 1;
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(a[i][x], a[i][y]);
      std::swap(v[i][x], v[i][y]);
    }
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& f) {  // col dst += f * col src
    for (std::size_t i = 0; i < k; ++i) {
      a[i][dst] += f * a[i][src];
      v[i][dst] += f * v[i][src];
    }
  };
  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      std::size_t pr = k, pc = k;
      for (std::size_t i = t; i < k; ++i)
        for (std::size_t j = t; j < k; ++j)
          if (a[i][j] != 0 && (pr == k || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == k) break;
      std::swap(a[t], a[pr]);
      swap_cols(t, pc);
      bool clean = true;
      for (std::size_t i = t + 1; i < k; ++i) {
        BigInt q = a[i][t] / a[t][t];
        if (q != 0)
          for (std::size_t j = t; j < k; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        BigInt q = a[t][j] / a[t][t];
        if (q != 0) add_col(j, t, -q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: pivot must divide the rest of the block.
      bool divides = true;
      for (std::size_t i = t + 1; i < k && divides; ++i)
        for (std::size_t j = t + 1; j < k && divides; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = t; c < k; ++c) a[t][c] += a[i][c];
            divides = false;
          }
      if (divides) break;
    }
  }
  diag.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i][i] < 0) {
      for (std::size_t r = 0; r < k; ++r) v[r][i] = -v[r][i];
      a[i][i] = -a[i][i];
    }
    diag[i] = a[i][i];
  }
}

}  // namespace

Abelianization abelianization(const FiniteGroup& h) {
  Abelianization out;
  const auto& gens = h.generator_indices();
  std::vector<std::size_t> commutators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      std::size_t a = gens[i], b = gens[j];
      std::size_t c = h.multiply(h.multiply(a, b), h.multiply(h.inverse(a), h.inverse(b)));
      if (c != 0) commutators.push_back(c);
    }
  Subgroup derived = normal_closure(h, commutators);
  out.derived_order = derived.order();
  out.order = h.order() / derived.order();
  out.coordinates.assign(h.order(), {});
  if (out.order == 1) return out;

  CosetTable quotient(h, derived);
  const std::size_t q = quotient.size();
  const std::size_t k = gens.size();
  std::vector<std::vector<std::int64_t>> word(q);
  std::vector<char> seen(q, 0);
  word[0].assign(k, 0);
  seen[0] = 1;
  std::deque<std::size_t> queue{0};
  ModularHermite lattice(k, static_cast<std::int64_t>(q));
  while (!queue.empty()) {
    std::size_t c = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t target = quotient.coset_of(h.multiply(quotient.representative(c), gens[j]));
      std::vector<std::int64_t> w = word[c];
      w[j] += 1;
      if (!seen[target]) {
        seen[target] = 1;
        word[target] = w;
        queue.push_back(target);
      } else {
        for (std::size_t x = 0; x < k; ++x) w[x] -= word[target][x];
        lattice.insert(w);
      }
    }
  }

  std::vector<std::vector<BigInt>> basis(k, std::vector<BigInt>(k));
  auto rows = lattice.rows();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) basis[i][j] = rows[i][j];
  std::vector<BigInt> diag;
  std::vector<std::vector<BigInt>> v;
  smith(basis, diag, v);
  BigInt product = 1;
  for (const auto& d : diag) product *= d;
  check(product == q, "Smith invariants multiply to the abelianization order");

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < k; ++i)
    if (diag[i] != 1) kept.push_back(i);
  std::sort(kept.begin(), kept.end(), [&](std::size_t x, std::size_t y) { return diag[x] < diag[y]; });
  for (std::size_t i : kept) out.invariants.push_back(static_cast<std::uint64_t>(diag[i]));
  for (std::size_t i = 1; i < out.invariants.size(); ++i)
    check(out.invariants[i] % out.invariants[i - 1] == 0, "invariant factors form a divisibility chain");

  std::vector<std::vector<std::uint64_t>> coset_coords(q);
  for (std::size_t c = 0; c < q; ++c) {
    for (std::size_t i : kept) {
      BigInt s = 0;
      for (std::size_t x = 0; x < k; ++x) s += BigInt(word[c][x]) * v[x][i];
      s %= diag[i];
      if (s < 0) s += diag[i];
      coset_coords[c].push_back(static_cast<std::uint64_t>(s));
    }
  }
  for (std::size_t e = 0; e < h.order(); ++e) out.coordinates[e] = coset_coords[quotient.coset_of(e)];
  return out;
}

std::optional<std::size_t> are_conjugate_subgroups(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2) {
  require_subgroup(g, h1);
  require_subgroup(g, h2);
  if (h1.order() != h2.order()) return std::nullopt;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool inside = true;
    for (std::size_t s : h1.generator_indices()) {
      if (!h2.contains(g.conjugate(x, s))) {
        inside = false;
        break;
      }
    }
    if (inside) return x;
  }
  return std::nullopt;
}

}  // namespace sunada
