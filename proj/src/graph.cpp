#include "sunada/graph.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "sunada/error.hpp"
#include "sunada/gassmann.hpp"

namespace sunada {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::size_t count() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) c += find(i) == i;
    return c;
  }
};

std::vector<std::int64_t>& slot(TwistedOperator& op, std::size_t r, std::size_t c) {
  auto& v = op.entries[{r, c}];
  if (v.empty()) v.assign(op.modulus, 0);
  return v;
}

// Counts flat sections: components of the gain graph whose cycles all have trivial gain.
std::size_t balanced_components(std::size_t nodes, std::uint64_t modulus, const std::vector<GainEdge>& gains) {
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> adj(nodes);
  for (const auto& e : gains) {
    adj[e.from].push_back({e.to, e.phase});
    adj[e.to].push_back({e.from, static_cast<std::uint32_t>((modulus - e.phase) % modulus)});
  }
  std::vector<std::int64_t> theta(nodes, -1);
  std::size_t balanced = 0;
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < nodes; ++start) {
    if (theta[start] >= 0) continue;
    theta[start] = 0;
    queue.assign(1, start);
    bool ok = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t a = queue[head];
      for (auto [b, ph] : adj[a]) {
        const auto want = static_cast<std::int64_t>((static_cast<std::uint64_t>(theta[a]) + ph) % modulus);
        if (theta[b] < 0) {
          theta[b] = want;
          queue.push_back(b);
        } else if (theta[b] != want) {
          ok = false;
        }
      }
    }
    balanced += ok;
  }
  return balanced;
}

std::vector<GainEdge> gain_edges(const VoltageGraph& x, const MonomialRep& rho) {
  std::vector<GainEdge> out;
  const std::size_t n = rho.dim;
  for (const auto& e : x.edges())
    for (std::size_t i = 0; i < n; ++i)
      out.push_back({e.u * n + i, e.v * n + rho.perm[e.voltage][i], rho.phase[e.voltage][i]});
  return out;
}

std::complex<double> to_complex(const std::vector<std::int64_t>& counts) {
  const double two_pi = 2.0 * std::acos(-1.0);
  const double m = static_cast<double>(counts.size());
  std::complex<double> z = 0;
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k]) z += static_cast<double>(counts[k]) * std::polar(1.0, two_pi * static_cast<double>(k) / m);
  return z;
}

Cyclotomic from_counts(const std::vector<std::int64_t>& counts) {
  return Cyclotomic::from_counts(counts.size(), counts);
}

}  // namespace

std::size_t Graph::components() const {
  UnionFind uf(vertices);
  for (auto [a, b] : edges) uf.unite(a, b);
  return uf.count();
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(vertices, 0);
  for (auto [a, b] : edges) {
    ++d[a];
    ++d[b];
  }
  return d;
}

VoltageGraph::VoltageGraph(const FiniteGroup& g, std::size_t vertices, std::vector<VoltageEdge> edges)
    : g_(&g), vertices_(vertices), edges_(std::move(edges)) {
  if (vertices == 0) throw Error(ErrorKind::Parse, "base graph has no vertices");
  for (const auto& e : edges_) {
    if (e.u >= vertices || e.v >= vertices) throw Error(ErrorKind::Parse, "edge endpoint out of range");
    if (e.voltage >= g.order()) throw Error(ErrorKind::Parse, "voltage is not a group element");
  }
  // BFS spanning tree with potentials p(v): products of voltages along the tree path.
  std::vector<std::vector<std::pair<std::size_t, bool>>> adj(vertices);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    adj[edges_[k].u].push_back({k, true});
    if (edges_[k].u != edges_[k].v) adj[edges_[k].v].push_back({k, false});
  }
  std::vector<std::size_t> potential(vertices, 0);
  std::vector<char> seen(vertices, 0), tree(edges_.size(), 0);
  std::vector<std::size_t> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t w = queue[head];
    for (auto [k, forward] : adj[w]) {
      const auto& e = edges_[k];
      const std::size_t other = forward ? e.v : e.u;
      if (seen[other]) continue;
      seen[other] = 1;
      tree[k] = 1;
      potential[other] =
          forward ? g.multiply(e.voltage, potential[w]) : g.multiply(g.inverse(e.voltage), potential[w]);
      queue.push_back(other);
    }
  }
  if (queue.size() != vertices) throw Error(ErrorKind::Parse, "base graph is not connected");
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (tree[k]) continue;
    const auto& e = edges_[k];
    loops_.push_back(g.multiply(g.multiply(g.inverse(potential[e.v]), e.voltage), potential[e.u]));
  }
}

VoltageGraph VoltageGraph::bouquet(const FiniteGroup& g, const std::vector<std::size_t>& voltages) {
  std::vector<VoltageEdge> edges;
  for (std::size_t v : voltages) edges.push_back({0, 0, v});
  return VoltageGraph(g, 1, std::move(edges));
}

std::vector<std::size_t> VoltageGraph::degrees() const {
  std::vector<std::size_t> d(vertices_, 0);
  for (const auto& e : edges_) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

Subgroup VoltageGraph::monodromy() const { return Subgroup::generated_by_indices(*g_, loops_); }

MonomialRep MonomialRep::trivial(const FiniteGroup& g) {
  MonomialRep r;
  r.group = &g;
  r.dim = 1;
  r.perm.assign(g.order(), {0});
  r.phase.assign(g.order(), {0});
  return r;
}

MonomialRep MonomialRep::regular(const FiniteGroup& g) {
  MonomialRep r;
  r.group = &g;
  r.dim = g.order();
  r.perm.resize(g.order());
  r.phase.assign(g.order(), std::vector<std::uint32_t>(g.order(), 0));
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) r.perm[x].push_back(static_cast<std::uint32_t>(g.multiply(x, y)));
  return r;
}

MonomialRep MonomialRep::linear(const LinearCharacter& chi) {
  const FiniteGroup& g = chi.group();
  MonomialRep r;
  r.group = &g;
  r.dim = 1;
  r.modulus = chi.modulus();
  r.perm.assign(g.order(), {0});
  for (std::size_t x = 0; x < g.order(); ++x) r.phase.push_back({chi.exponent(x)});
  return r;
}

MonomialRep MonomialRep::induced(const LinearCharacter& chi, const Subgroup& h) {
  if (&chi.group() != &h.group()) throw Error(ErrorKind::GroupMismatch, "character is not defined on the subgroup");
  const FiniteGroup& g = h.parent();
  CosetTable table(g, h);
  MonomialRep r;
  r.group = &g;
  r.dim = table.size();
  r.modulus = chi.modulus();
  r.perm.resize(g.order());
  r.phase.resize(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t i = 0; i < r.dim; ++i) {
      r.perm[x].push_back(static_cast<std::uint32_t>(table.act(x, i)));
      r.phase[x].push_back(chi.exponent(*h.to_local(table.cocycle(x, i))));
    }
  r.validate();
  return r;
}

void MonomialRep::validate() const {
  check(group && perm.size() == group->order() && phase.size() == group->order(), "one monomial matrix per element");
  for (std::size_t i = 0; i < dim; ++i) check(perm[0][i] == i && phase[0][i] == 0, "identity acts trivially");
  for (std::size_t x = 0; x < group->order(); ++x)
    for (std::size_t s : group->generator_indices()) {
      const std::size_t y = group->multiply(x, s);
      for (std::size_t i = 0; i < dim; ++i) {
        const auto j = perm[s][i];
        if (perm[y][i] != perm[x][j] || phase[y][i] != (phase[s][i] + phase[x][j]) % modulus)
          throw Error(ErrorKind::MalformedCharacter, "monomial matrices are not multiplicative");
      }
    }
}

Cyclotomic MonomialRep::trace(std::size_t x) const {
  std::vector<std::int64_t> counts(modulus, 0);
  for (std::size_t i = 0; i < dim; ++i)
    if (perm[x][i] == i) ++counts[phase[x][i]];
  return Cyclotomic::from_counts(modulus, counts);
}

ClassFunction MonomialRep::character() const {
  std::vector<Cyclotomic> values;
  for (std::size_t c = 0; c < group->class_count(); ++c) values.push_back(trace(group->class_representative(c)));
  return ClassFunction(*group, std::move(values));
}

MonomialRep direct_sum(const MonomialRep& a, const MonomialRep& b) {
  if (a.group != b.group) throw Error(ErrorKind::GroupMismatch, "representations of different groups");
  MonomialRep r;
  r.group = a.group;
  r.dim = a.dim + b.dim;
  r.modulus = lcm_conductor(a.modulus, b.modulus);
  const auto sa = static_cast<std::uint32_t>(r.modulus / a.modulus), sb = static_cast<std::uint32_t>(r.modulus / b.modulus);
  r.perm.resize(a.perm.size());
  r.phase.resize(a.perm.size());
  for (std::size_t x = 0; x < a.perm.size(); ++x) {
    for (std::size_t i = 0; i < a.dim; ++i) {
      r.perm[x].push_back(a.perm[x][i]);
      r.phase[x].push_back(a.phase[x][i] * sa);
    }
    for (std::size_t i = 0; i < b.dim; ++i) {
      r.perm[x].push_back(static_cast<std::uint32_t>(a.dim + b.perm[x][i]));
      r.phase[x].push_back(b.phase[x][i] * sb);
    }
  }
  return r;
}

MonomialRep tensor(const MonomialRep& a, const MonomialRep& b) {
  if (a.group != b.group) throw Error(ErrorKind::GroupMismatch, "representations of different groups");
  MonomialRep r;
  r.group = a.group;
  r.dim = a.dim * b.dim;
  r.modulus = lcm_conductor(a.modulus, b.modulus);
  const std::uint64_t sa = r.modulus / a.modulus, sb = r.modulus / b.modulus;
  r.perm.resize(a.perm.size());
  r.phase.resize(a.perm.size());
  for (std::size_t x = 0; x < a.perm.size(); ++x) {
    r.perm[x].resize(r.dim);
    r.phase[x].resize(r.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j) {
        r.perm[x][i * b.dim + j] = static_cast<std::uint32_t>(a.perm[x][i] * b.dim + b.perm[x][j]);
        r.phase[x][i * b.dim + j] = static_cast<std::uint32_t>((a.phase[x][i] * sa + b.phase[x][j] * sb) % r.modulus);
      }
  }
  return r;
}

MonomialRep dual(const MonomialRep& a) {
  MonomialRep r = a;
  // rho*(g) = conj(rho(g)) for unitary rho: same permutation, negated phases.
  for (auto& row : r.phase)
    for (auto& p : row) p = static_cast<std::uint32_t>((a.modulus - p) % a.modulus);
  return r;
}

MonomialRep restrict(const MonomialRep& a, const Subgroup& h) {
  if (&h.parent() != a.group) throw Error(ErrorKind::GroupMismatch, "subgroup of a different group");
  MonomialRep r;
  r.group = &h.group();
  r.dim = a.dim;
  r.modulus = a.modulus;
  for (std::size_t x = 0; x < h.order(); ++x) {
    r.perm.push_back(a.perm[h.to_parent(x)]);
    r.phase.push_back(a.phase[h.to_parent(x)]);
  }
  return r;
}

SchreierCover schreier_cover(const VoltageGraph& x, const Subgroup& h) {
  const FiniteGroup& g = x.group();
  require_subgroup(g, h);
  CosetTable table(g, h);
  const std::size_t n = table.size();
  SchreierCover out;
  out.graph.vertices = x.vertices() * n;
  std::vector<VoltageEdge> lifted;
  for (const auto& e : x.edges())
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = table.act(e.voltage, i);
      out.graph.edges.push_back({e.u * n + i, e.v * n + j});
      lifted.push_back({e.u * n + i, e.v * n + j, *h.to_local(table.cocycle(e.voltage, i))});
    }
  if (out.graph.components() == 1)
    out.lift = std::make_shared<const VoltageGraph>(h.group(), out.graph.vertices, std::move(lifted));
  return out;
}

Cyclotomic TwistedOperator::entry(std::size_t r, std::size_t c) const {
  auto it = entries.find({r, c});
  return it == entries.end() ? Cyclotomic() : from_counts(it->second);
}

bool TwistedOperator::is_hermitian() const {
  for (const auto& [key, counts] : entries)
    if (entry(key.second, key.first) != from_counts(counts).conjugate()) return false;
  return true;
}

Cyclotomic TwistedOperator::trace() const {
  Cyclotomic t;
  for (std::size_t r = 0; r < size(); ++r) t += entry(r, r);
  return t;
}

Cyclotomic TwistedOperator::trace_of_square() const {
  Cyclotomic t;
  for (const auto& [key, counts] : entries) {
    const auto z = from_counts(counts);
    t += z * z.conjugate();
  }
  return t;
}

TwistedOperator twisted_laplacian(const VoltageGraph& x, const MonomialRep& rho, std::size_t max_size) {
  if (rho.group != &x.group()) throw Error(ErrorKind::GroupMismatch, "representation of a different group");
  TwistedOperator op;
  op.vertices = x.vertices();
  op.dim = rho.dim;
  op.modulus = rho.modulus;
  if (op.size() > max_size)
    throw Error(ErrorKind::DimensionOverflow, "operator of size " + std::to_string(op.size()) + " exceeds " +
                                                  std::to_string(max_size));
  const std::size_t n = rho.dim;
  const auto degrees = x.degrees();
  for (std::size_t u = 0; u < op.vertices; ++u)
    for (std::size_t i = 0; i < n; ++i) slot(op, u * n + i, u * n + i)[0] += static_cast<std::int64_t>(degrees[u]);
  for (const auto& e : x.edges())
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t row = e.v * n + rho.perm[e.voltage][i], col = e.u * n + i;
      const std::uint32_t ph = rho.phase[e.voltage][i];
      slot(op, row, col)[ph] -= 1;
      slot(op, col, row)[(op.modulus - ph) % op.modulus] -= 1;
    }
  op.gains = gain_edges(x, rho);
  return op;
}

TwistedOperator graph_laplacian(const Graph& g, std::size_t max_size) {
  if (g.vertices > max_size) throw Error(ErrorKind::DimensionOverflow, "graph too large");
  TwistedOperator op;
  op.vertices = g.vertices;
  op.dim = 1;
  for (std::size_t v = 0; v < g.vertices; ++v) slot(op, v, v)[0] += 0;
  for (auto [a, b] : g.edges) {
    slot(op, a, a)[0] += 1;
    slot(op, b, b)[0] += 1;
    slot(op, a, b)[0] -= 1;
    slot(op, b, a)[0] -= 1;
    op.gains.push_back({a, b, 0});
  }
  return op;
}

std::size_t kernel_multiplicity(const TwistedOperator& op) {
  return balanced_components(op.size(), op.modulus, op.gains);
}

std::size_t kernel_multiplicity(const VoltageGraph& x, const MonomialRep& rho) {
  if (rho.group != &x.group()) throw Error(ErrorKind::GroupMismatch, "representation of a different group");
  return balanced_components(x.vertices() * rho.dim, rho.modulus, gain_edges(x, rho));
}

std::size_t kernel_multiplicity_mod_p(const TwistedOperator& op, std::uint64_t* prime_used) {
  const std::uint64_t m = op.modulus;
  std::uint64_t k = (std::uint64_t{1} << 30) / m;
  std::uint64_t p = 0;
  for (;; ++k) {
    p = m * k + 1;
    if (is_prime(p)) break;
  }
  // primitive m-th root of unity
  std::vector<std::uint64_t> prime_factors;
  for (std::uint64_t q = 2, r = m; r > 1; ++q)
    if (r % q == 0) {
      prime_factors.push_back(q);
      while (r % q == 0) r /= q;
    }
  std::uint64_t omega = 1;
  for (std::uint64_t a = 2; m > 1; ++a) {
    omega = pow_mod(a, (p - 1) / m, p);
    bool primitive = true;
    for (auto q : prime_factors) primitive = primitive && pow_mod(omega, m / q, p) != 1;
    if (primitive) break;
  }
  PrimeField f{p};
  std::vector<std::uint64_t> powers(m);
  for (std::uint64_t e = 0; e < m; ++e) powers[e] = pow_mod(omega, e, p);
  Matrix<PrimeField> mat(op.size(), op.size(), 0);
  for (const auto& [key, counts] : op.entries) {
    std::uint64_t v = 0;
    for (std::uint64_t e = 0; e < m; ++e) {
      if (!counts[e]) continue;
      const std::uint64_t c = static_cast<std::uint64_t>(((counts[e] % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                                                         static_cast<std::int64_t>(p));
      v = f.add(v, f.mul(c, powers[e]));
    }
    mat(key.first, key.second) = v;
  }
  if (prime_used) *prime_used = p;
  return op.size() - rank(f, std::move(mat));
}

std::size_t expected_multiplicity(const VoltageGraph& x, const MonomialRep& rho) {
  const Subgroup k = x.monodromy();
  Cyclotomic sum;
  for (std::size_t y : k.members()) sum += rho.trace(y);
  const Rational avg = (sum * (Rational(1) / static_cast<long long>(k.order()))).to_rational();
  check(is_integer(avg) && avg >= 0, "<Res rho, 1> is a nonnegative integer");
  return static_cast<std::size_t>(boost::multiprecision::numerator(avg));
}

Spectrum spectrum(const TwistedOperator& op, double tolerance) {
  Spectrum s;
  const auto n = static_cast<Eigen::Index>(op.size());
  Eigen::VectorXd values;
  if (op.modulus <= 2) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [key, counts] : op.entries) m(key.first, key.second) = to_complex(counts).real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::ConvergenceFailure, "symmetric eigensolver failed");
    values = solver.eigenvalues();
  } else {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& [key, counts] : op.entries) m(key.first, key.second) = to_complex(counts);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error(ErrorKind::ConvergenceFailure, "Hermitian eigensolver failed");
    values = solver.eigenvalues();
  }
  s.eigenvalues.assign(values.data(), values.data() + values.size());
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  for (double v : s.eigenvalues) {
    if (!s.clusters.empty() && std::abs(v - s.clusters.back().first) <= tolerance * std::max(1.0, std::abs(v)))
      ++s.clusters.back().second;
    else
      s.clusters.push_back({v, 1});
    s.sum += v;
    s.sum_of_squares += v * v;
  }
  s.trace = op.trace();
  s.trace_of_square = op.trace_of_square();
  const double t = s.trace.to_complex().real(), t2 = s.trace_of_square.to_complex().real();
  s.traces_ok = std::abs(s.sum - t) <= 1e-8 * std::max(1.0, std::abs(t)) &&
                std::abs(s.sum_of_squares - t2) <= 1e-8 * std::max(1.0, std::abs(t2));
  check(s.traces_ok, "eigenvalue sums match the exact traces of the operator and its square");
  return s;
}

double spectral_distance(const Spectrum& a, const Spectrum& b) {
  if (a.eigenvalues.size() != b.eigenvalues.size()) return std::numeric_limits<double>::infinity();
  double d = 0;
  for (std::size_t k = 0; k < a.eigenvalues.size(); ++k) d = std::max(d, std::abs(a.eigenvalues[k] - b.eigenvalues[k]));
  return d;
}

bool same_spectrum(const Spectrum& a, const Spectrum& b, double tolerance) {
  double scale = 1;
  for (double v : a.eigenvalues) scale = std::max(scale, std::abs(v));
  return spectral_distance(a, b) <= tolerance * scale;
}

nlohmann::json to_json(const Spectrum& s) {
  auto round12 = [](double v) {
    const double r = std::round(v * 1e12) / 1e12;
    return r == 0 ? 0.0 : r;
  };
  nlohmann::json clusters = nlohmann::json::array();
  for (auto [v, m] : s.clusters) clusters.push_back({{"value", round12(v)}, {"multiplicity", m}});
  return {{"size", s.eigenvalues.size()},
          {"clusters", clusters},
          {"trace", s.trace.to_string()},
          {"trace_of_square", s.trace_of_square.to_string()},
          {"traces_ok", s.traces_ok}};
}

bool BenchReport::ok() const {
  bool sunada = true;
  if (weakly_conjugate && covers_isospectral) sunada = *covers_isospectral && exact_traces_equal;
  return snt_ok && regular_ok && solo_consistent && kernels_match_mackey && sunada;
}

BenchReport verify_sunada_bench(const VoltageGraph& x, const Subgroup& h1, const Subgroup& h2,
                                const LinearCharacter& chi1, const LinearCharacter& chi2, std::size_t max_size,
                                double tolerance) {
  const FiniteGroup& g = x.group();
  require_subgroup(g, h1);
  require_subgroup(g, h2);
  BenchReport r;
  const auto weak = weak_conjugacy(g, h1, h2);
  r.weakly_conjugate = weak.weakly_conjugate;
  r.conjugate = weak.conjugate;
  const bool connected = x.cover_connected();

  const Subgroup* hs[2] = {&h1, &h2};
  const LinearCharacter* chis[2] = {&chi1, &chi2};
  SchreierCover covers[2];
  std::optional<Spectrum> cover_spectra[2];
  for (int s = 0; s < 2; ++s) {
    covers[s] = schreier_cover(x, *hs[s]);
    r.components[s] = covers[s].graph.components();
    const auto ind = MonomialRep::induced(LinearCharacter::trivial(hs[s]->group()), *hs[s]);
    const auto kernel = kernel_multiplicity(x, ind);
    r.snt_ok = r.snt_ok && kernel == r.components[s] && kernel == expected_multiplicity(x, ind);
    if (covers[s].graph.vertices <= max_size) {
      const auto lap = graph_laplacian(covers[s].graph, max_size);
      const auto tw = twisted_laplacian(x, ind, max_size);
      cover_spectra[s] = spectrum(lap, tolerance);
      r.snt_ok = r.snt_ok && kernel_multiplicity(lap) == kernel && kernel_multiplicity(tw) == kernel &&
                 same_spectrum(*cover_spectra[s], spectrum(tw, tolerance), tolerance);
    }
  }
  if (x.vertices() * g.order() <= max_size) {
    const auto full = schreier_cover(x, Subgroup::trivial(g));
    const auto lap = graph_laplacian(full.graph, max_size);
    const auto tw = twisted_laplacian(x, MonomialRep::regular(g), max_size);
    r.regular_ok = same_spectrum(spectrum(lap, tolerance), spectrum(tw, tolerance), tolerance) && kernel_multiplicity(lap) == kernel_multiplicity(tw);
  }
  r.cover_spectrum[0] = cover_spectra[0];
  r.cover_spectrum[1] = cover_spectra[1];
  if (cover_spectra[0] && cover_spectra[1]) {
    r.cover_distance = spectral_distance(*cover_spectra[0], *cover_spectra[1]);
    r.covers_isospectral = same_spectrum(*cover_spectra[0], *cover_spectra[1], tolerance);
    r.exact_traces_equal = cover_spectra[0]->trace == cover_spectra[1]->trace &&
                           cover_spectra[0]->trace_of_square == cover_spectra[1]->trace_of_square;
  }

  // a_ij as kernels on the Schreier cover for H_i of chi_i^* (x) Res_{H_i} Ind_{H_j} chi_j.
  const AMatrix a = a_matrix(g, h1, h2, chi1, chi2);
  std::vector<MonomialRep> induced;
  for (int s = 0; s < 2; ++s) induced.push_back(MonomialRep::induced(*chis[s], *hs[s]));
  bool all_spectra = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      SoloSlot cell;
      cell.i = i + 1;
      cell.j = j + 1;
      cell.mackey = a[i][j];
      const auto rho = tensor(dual(MonomialRep::linear(*chis[i])), restrict(induced[j], *hs[i]));
      if (covers[i].lift) {
        cell.kernel = kernel_multiplicity(*covers[i].lift, rho);
        check(cell.kernel == expected_multiplicity(*covers[i].lift, rho), "kernel = <Res_K rho, 1>");
        if (covers[i].lift->vertices() * rho.dim <= max_size)
          cell.spectrum = spectrum(twisted_laplacian(*covers[i].lift, rho, max_size), tolerance);
      } else {
        // Disconnected Schreier cover: push everything down to the base.
        const auto down = tensor(dual(induced[i]), induced[j]);
        cell.kernel = kernel_multiplicity(x, down);
      }
      if (connected) r.kernels_match_mackey = r.kernels_match_mackey && cell.kernel == cell.mackey;
      all_spectra = all_spectra && cell.spectrum.has_value();
      r.slots.push_back(std::move(cell));
    }
  r.solo_equalities = r.slots[0].kernel == r.slots[2].kernel && r.slots[1].kernel == r.slots[3].kernel;
  r.induced_equal = induce(chi1, h1) == induce(chi2, h2);
  r.solo_consistent = !connected || r.solo_equalities == r.induced_equal;
  if (all_spectra) {
    bool eq = true;
    for (int k = 1; k < 4; ++k) eq = eq && same_spectrum(*r.slots[0].spectrum, *r.slots[k].spectrum, tolerance);
    r.slot_spectra_equal = eq;
  }
  return r;
}

nlohmann::json to_json(const BenchReport& r) {
  nlohmann::json slots = nlohmann::json::array();
  for (const auto& s : r.slots) {
    nlohmann::json j = {{"slot", "a" + std::to_string(s.i) + std::to_string(s.j)},
                        {"kernel_multiplicity", s.kernel},
                        {"character_multiplicity", s.mackey}};
    if (s.spectrum) j["spectrum"] = to_json(*s.spectrum);
    slots.push_back(j);
  }
  nlohmann::json out = {{"weakly_conjugate", r.weakly_conjugate},
                        {"conjugate", r.conjugate},
                        {"components", {r.components[0], r.components[1]}},
                        {"induction_identity", r.snt_ok},
                        {"regular_identity", r.regular_ok},
                        {"exact_traces_equal", r.exact_traces_equal},
                        {"solo_slots", slots},
                        {"solo_equalities", r.solo_equalities},
                        {"induced_characters_equal", r.induced_equal},
                        {"solo_consistent", r.solo_consistent},
                        {"kernels_match_characters", r.kernels_match_mackey},
                        {"ok", r.ok()}};
  out["covers_isospectral"] = r.covers_isospectral ? nlohmann::json(*r.covers_isospectral) : nlohmann::json(nullptr);
  out["max_eigenvalue_deviation"] = r.cover_distance ? nlohmann::json(*r.cover_distance) : nlohmann::json(nullptr);
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& s : r.cover_spectrum) covers.push_back(s ? to_json(*s) : nlohmann::json(nullptr));
  out["cover_spectra"] = covers;
  out["slot_spectra_equal"] = r.slot_spectra_equal ? nlohmann::json(*r.slot_spectra_equal) : nlohmann::json(nullptr);
  return out;
}

HomologyModule graph_homology_module(const VoltageGraph& x, std::uint64_t ell) {
  const FiniteGroup& g = x.group();
  if (!x.cover_connected()) throw Error(ErrorKind::DisconnectedCover, "the G-cover is not connected");
  const std::size_t order = g.order();
  HomologyModule hm;
  hm.cover_vertices = x.vertices() * order;
  hm.cover_edges = x.edges().size() * order;
  // Cover edge e * |G| + y runs from (u_e, y) to (v_e, g_e y).
  auto tail = [&](std::size_t edge) { return x.edges()[edge / order].u * order + edge % order; };
  auto head = [&](std::size_t edge) {
    const auto& e = x.edges()[edge / order];
    return e.v * order + g.multiply(e.voltage, edge % order);
  };
  std::vector<std::vector<std::size_t>> adj(hm.cover_vertices);
  for (std::size_t k = 0; k < hm.cover_edges; ++k) {
    adj[tail(k)].push_back(k);
    adj[head(k)].push_back(k);
  }
  std::vector<std::size_t> parent_edge(hm.cover_vertices, SIZE_MAX), depth(hm.cover_vertices, 0);
  std::vector<char> seen(hm.cover_vertices, 0), tree(hm.cover_edges, 0);
  std::vector<std::size_t> queue{0};
  seen[0] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const std::size_t w = queue[h];
    for (std::size_t k : adj[w]) {
      const std::size_t other = tail(k) == w ? head(k) : tail(k);
      if (seen[other]) continue;
      seen[other] = 1;
      tree[k] = 1;
      parent_edge[other] = k;
      depth[other] = depth[w] + 1;
      queue.push_back(other);
    }
  }
  check(queue.size() == hm.cover_vertices, "connected cover has a spanning tree");
  auto parent = [&](std::size_t w) {
    const std::size_t k = parent_edge[w];
    return tail(k) == w ? head(k) : tail(k);
  };
  const std::uint64_t minus_one = ell - 1;
  // Adds the tree path from a up to b's side: walk both to the common ancestor.
  auto add_path = [&](std::vector<std::uint64_t>& z, std::size_t from, std::size_t to) {
    // path from -> to, as a chain
    std::vector<std::pair<std::size_t, std::uint64_t>> down;
    while (from != to) {
      if (depth[from] >= depth[to]) {
        const std::size_t k = parent_edge[from];
        z[k] = (z[k] + (tail(k) == from ? 1 : minus_one)) % ell;
        from = parent(from);
      } else {
        const std::size_t k = parent_edge[to];
        // traversed parent(to) -> to
        down.push_back({k, head(k) == to ? 1 : minus_one});
        to = parent(to);
      }
    }
    for (auto [k, c] : down) z[k] = (z[k] + c) % ell;
  };
  for (std::size_t k = 0; k < hm.cover_edges; ++k) {
    if (tree[k]) continue;
    std::vector<std::uint64_t> z(hm.cover_edges, 0);
    z[k] = 1;
    add_path(z, head(k), tail(k));
    hm.non_tree.push_back(k);
    hm.cycles.push_back(std::move(z));
  }
  const std::size_t dim = hm.non_tree.size();
  check(dim == hm.cover_edges - hm.cover_vertices + 1, "cycle space has dimension E - V + 1");
  // Boundary check: every basis cycle is closed.
  for (const auto& z : hm.cycles) {
    std::vector<std::uint64_t> boundary(hm.cover_vertices, 0);
    for (std::size_t k = 0; k < hm.cover_edges; ++k) {
      if (!z[k]) continue;
      boundary[head(k)] = (boundary[head(k)] + z[k]) % ell;
      boundary[tail(k)] = (boundary[tail(k)] + ell - z[k]) % ell;
    }
    check(std::all_of(boundary.begin(), boundary.end(), [](std::uint64_t b) { return b == 0; }), "basis cycles are closed");
  }
  // (k z)(e, y) = z(e, y k)
  std::vector<std::vector<Rational>> gens;
  for (std::size_t s : g.generator_indices()) {
    std::vector<Rational> m(dim * dim, 0);
    for (std::size_t b = 0; b < dim; ++b) {
      const std::size_t edge = hm.non_tree[b];
      const std::size_t moved = (edge / order) * order + g.multiply(edge % order, s);
      for (std::size_t a = 0; a < dim; ++a) m[b * dim + a] = Rational(hm.cycles[a][moved]);
    }
    gens.push_back(std::move(m));
  }
  hm.module = std::make_shared<const GModule>(g, ell, dim, gens);
  return hm;
}

WreathCover build_wreath_cover(const WreathContext& ctx, const VoltageGraph& x, const Vector& witness) {
  const FiniteGroup& g = ctx.group();
  if (&x.group() != &g) throw Error(ErrorKind::GroupMismatch, "voltage graph over a different group");
  const std::uint64_t ell = ctx.ell();
  const HomologyModule hm = graph_homology_module(x, ell);
  const GModule& m = *hm.module;
  if (witness.size() != m.dim() || !is_star_witness(m, ctx.h(1), witness))
    throw Error(ErrorKind::NotAWitness, "vector is not a condition (*) witness in the cycle space");
  const std::size_t n = ctx.n(), d = m.dim(), order = g.order();
  const PrimeField f{ell};
  auto field_matrix = [&](std::size_t el) {
    Matrix<PrimeField> out(d, d, 0);
    const auto entries = m.matrix(el);
    for (std::size_t k = 0; k < entries.size(); ++k) out.a[k] = reduce_mod(entries[k], ell);
    return out;
  };
  // B: columns g_i v. Left inverse L0 from reducing [B | I].
  Matrix<PrimeField> aug(d, n + d, 0);
  const auto& reps = ctx.cosets().representatives();
  for (std::size_t i = 0; i < n; ++i) {
    const auto col = m.act(reps[i], witness);
    for (std::size_t r = 0; r < d; ++r) aug(r, i) = reduce_mod(col[r], ell);
  }
  Matrix<PrimeField> b(d, n, 0);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t i = 0; i < n; ++i) b(r, i) = aug(r, i);
  for (std::size_t r = 0; r < d; ++r) aug(r, n + r) = 1;
  const auto pivots = row_reduce(f, aug);
  for (std::size_t i = 0; i < n; ++i) check(pivots.size() > i && pivots[i] == i, "witness translates are independent");
  Matrix<PrimeField> l0(n, d, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < d; ++c) l0(i, c) = aug(i, n + c);
  // Equivariant left inverse P = |G|^-1 sum_k Phi(k) L0 M(k^-1).
  auto permute_rows = [&](std::size_t k, const Matrix<PrimeField>& y) {
    Matrix<PrimeField> out(y.rows, y.cols, 0);
    for (std::size_t i = 0; i < y.rows; ++i)
      for (std::size_t c = 0; c < y.cols; ++c) out(ctx.act(k, i), c) = y(i, c);
    return out;
  };
  Matrix<PrimeField> p(n, d, 0);
  for (std::size_t k = 0; k < order; ++k) {
    const auto term = permute_rows(k, multiply(f, l0, field_matrix(g.inverse(k))));
    for (std::size_t t = 0; t < p.a.size(); ++t) p.a[t] = f.add(p.a[t], term.a[t]);
  }
  const std::uint64_t inv_order = inv_mod(order % ell, ell);
  for (auto& v : p.a) v = f.mul(v, inv_order);
  check(multiply(f, p, b) == identity_matrix(f, n), "P is a left inverse of the witness embedding");
  for (std::size_t s : g.generator_indices())
    check(multiply(f, p, field_matrix(s)) == permute_rows(s, p), "P is G-equivariant");

  // F(eps) = P pi(delta_eps) with pi the averaged projection onto cycles.
  auto index_of_nontree = [&]() {
    std::vector<std::size_t> idx(hm.cover_edges, SIZE_MAX);
    for (std::size_t a = 0; a < hm.non_tree.size(); ++a) idx[hm.non_tree[a]] = a;
    return idx;
  }();
  auto transport = [&](std::size_t k, const std::vector<std::uint32_t>& a) {
    std::vector<std::uint32_t> out(n);
    for (std::size_t j = 0; j < n; ++j) out[ctx.act(k, j)] = a[j];
    return out;
  };
  std::vector<std::vector<std::uint32_t>> base_k;
  for (std::size_t e = 0; e < x.edges().size(); ++e) {
    std::vector<std::uint64_t> pi(d, 0);
    for (std::size_t k = 0; k < order; ++k) {
      const std::size_t a = index_of_nontree[e * order + k];  // k^-1 . (e, 1) = (e, k)
      if (a == SIZE_MAX) continue;
      const auto mk = field_matrix(k);
      for (std::size_t r = 0; r < d; ++r) pi[r] = f.add(pi[r], mk(r, a));
    }
    for (auto& v : pi) v = f.mul(v, inv_order);
    const auto fe = apply(f, p, pi);
    std::vector<std::uint32_t> k(fe.begin(), fe.end());
    base_k.push_back(transport(x.edges()[e].voltage, k));
  }

  WreathCover out;
  auto dense = std::make_shared<DenseWreath>(dense_wreath(ctx, 200000));
  out.wreath = dense;
  const FiniteGroup& gt = *dense->group;
  std::vector<VoltageEdge> edges;
  for (std::size_t e = 0; e < x.edges().size(); ++e) {
    const auto& be = x.edges()[e];
    edges.push_back({be.u, be.v, gt.index_of(dense->element(base_k[e], be.voltage, g))});
  }
  auto vg = std::make_shared<VoltageGraph>(gt, x.vertices(), edges);
  out.voltage_graph = vg;

  // Monodromy on H_1 of the G-cover equals P.
  out.monodromy_matches = true;
  for (std::size_t a = 0; a < d; ++a) {
    std::vector<std::uint64_t> total(n, 0);
    for (std::size_t k = 0; k < hm.cover_edges; ++k) {
      const std::uint64_t c = hm.cycles[a][k];
      if (!c) continue;
      const auto& be = x.edges()[k / order];
      const std::size_t headpos = g.multiply(be.voltage, k % order);
      const auto term = transport(g.inverse(headpos), base_k[k / order]);
      for (std::size_t j = 0; j < n; ++j) total[j] = f.add(total[j], f.mul(c, term[j]));
    }
    for (std::size_t j = 0; j < n; ++j) out.monodromy_matches = out.monodromy_matches && total[j] == p(j, a);
  }

  // The cover graph: (u, w) -- (v, z_e w).
  const std::size_t big = gt.order();
  out.graph.vertices = x.vertices() * big;
  std::unordered_set<std::uint64_t> edge_set;
  auto key = [&](std::size_t a, std::size_t bb) {
    return static_cast<std::uint64_t>(std::min(a, bb)) * out.graph.vertices + std::max(a, bb);
  };
  for (const auto& e : edges)
    for (std::size_t w = 0; w < big; ++w) {
      const std::size_t a = e.u * big + w, c = e.v * big + gt.multiply(e.voltage, w);
      out.graph.edges.push_back({a, c});
      edge_set.insert(key(a, c));
    }
  out.connected = out.graph.components() == 1 && vg->cover_connected();

  // C^n acts freely on the right with quotient the G-cover.
  out.free_base_action = true;
  const std::vector<std::uint32_t> zero(n, 0);
  std::vector<std::size_t> units;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::uint32_t> k(n, 0);
    k[j] = 1;
    units.push_back(gt.index_of(dense->element(k, 0, g)));
  }
  for (std::size_t c : units)
    for (const auto& e : edges)
      for (std::size_t w = 0; w < big; ++w) {
        const std::size_t wc = gt.multiply(w, c);
        const std::size_t z = gt.multiply(e.voltage, wc);
        out.free_base_action = out.free_base_action && wc != w && edge_set.count(key(e.u * big + wc, e.v * big + z));
      }
  std::vector<std::size_t> fiber(order, 0);
  for (std::size_t w = 0; w < big; ++w) ++fiber[dense->base_of[w]];
  for (std::size_t y = 0; y < order; ++y)
    out.free_base_action = out.free_base_action && fiber[y] == big / order;
  for (std::size_t e = 0; e < edges.size(); ++e)
    for (std::size_t w = 0; w < big; ++w)
      out.free_base_action = out.free_base_action &&
                             dense->base_of[gt.multiply(edges[e].voltage, w)] ==
                                 g.multiply(x.edges()[e].voltage, dense->base_of[w]);

  // Conjugation by (0, s) moves the coordinates by Phi(s).
  out.conjugation_matches = true;
  for (std::size_t s : g.generator_indices()) {
    const std::size_t lift = gt.index_of(dense->element(zero, s, g));
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::uint32_t> k(n, 0);
      k[j] = 1;
      const std::size_t conj = gt.conjugate(lift, units[j]);
      out.conjugation_matches =
          out.conjugation_matches && conj == gt.index_of(dense->element(ctx.transport(s, k), 0, g));
    }
  }
  if (!out.connected) throw Error(ErrorKind::NotAWitness, "the realized wreath cover is not connected");
  return out;
}

nlohmann::json to_json(const WreathCover& c) {
  return {{"vertices", c.graph.vertices},
          {"edges", c.graph.edges.size()},
          {"wreath_order", c.wreath->group->order()},
          {"connected", c.connected},
          {"free_base_action", c.free_base_action},
          {"conjugation_matches", c.conjugation_matches},
          {"monodromy_matches", c.monodromy_matches}};
}

CoverSolo cover_solo(const WreathCover& c, const WreathContext& ctx, const WreathLinearCharacter& psi1,
                     const WreathLinearCharacter& psi2) {
  const DenseWreath& d = *c.wreath;
  const WreathLinearCharacter* psis[2] = {&psi1, &psi2};
  std::vector<MonomialRep> induced;
  std::vector<LinearCharacter> realized;
  for (int s = 0; s < 2; ++s) realized.push_back(d.realize(*psis[s]));
  for (int s = 0; s < 2; ++s)
    induced.push_back(MonomialRep::induced(realized[s], psis[s]->side == 1 ? *d.h1 : *d.h2));
  CoverSolo out;
  out.kernels_match = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      out.kernel[i][j] = kernel_multiplicity(*c.voltage_graph, tensor(dual(induced[i]), induced[j]));
      out.expected[i][j] = wreath_induced_inner(ctx, *psis[j], *psis[i]);
      out.kernels_match = out.kernels_match && out.kernel[i][j] == out.expected[i][j];
    }
  out.spectra_equal = same_spectrum(spectrum(twisted_laplacian(*c.voltage_graph, induced[0])),
                                    spectrum(twisted_laplacian(*c.voltage_graph, induced[1])));
  return out;
}

}  // namespace sunada
