#pragma once

#include <cstdint>
#include <json.hpp>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sunada/character.hpp"
#include "sunada/group.hpp"
#include "sunada/homwide.hpp"
#include "sunada/wreath.hpp"

namespace sunada {

/// Plain undirected multigraph; loops allowed and counted twice in degrees.
struct Graph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t components() const;
  std::vector<std::size_t> degrees() const;
};

struct VoltageEdge {
  std::size_t u = 0, v = 0;
  std::size_t voltage = 0;  // element of the voltage group; the reversed edge carries the inverse
};

/// Base graph with voltages in an enumerated group. The cover has vertices
/// (u, x) and, for each edge u -> v with voltage g, edges (u, x) -- (v, g x).
class VoltageGraph {
 public:
  VoltageGraph(const FiniteGroup& g, std::size_t vertices, std::vector<VoltageEdge> edges);
  static VoltageGraph bouquet(const FiniteGroup& g, const std::vector<std::size_t>& voltages);

  const FiniteGroup& group() const noexcept { return *g_; }
  std::size_t vertices() const noexcept { return vertices_; }
  const std::vector<VoltageEdge>& edges() const noexcept { return edges_; }
  std::vector<std::size_t> degrees() const;

  /// Monodromy of the fundamental cycles of a BFS spanning tree rooted at 0.
  const std::vector<std::size_t>& loop_voltages() const noexcept { return loops_; }
  /// Subgroup generated by the loop voltages; the cover is connected iff it is G.
  Subgroup monodromy() const;
  bool cover_connected() const { return monodromy().order() == g_->order(); }

 private:
  const FiniteGroup* g_;
  std::size_t vertices_;
  std::vector<VoltageEdge> edges_;
  std::vector<std::size_t> loops_;
};

/// Representation by monomial matrices: rho(g) e_i = zeta_modulus^phase e_perm.
struct MonomialRep {
  const FiniteGroup* group = nullptr;
  std::size_t dim = 0;
  std::uint64_t modulus = 1;
  std::vector<std::vector<std::uint32_t>> perm;   // per element
  std::vector<std::vector<std::uint32_t>> phase;  // per element

  static MonomialRep trivial(const FiniteGroup& g);
  static MonomialRep regular(const FiniteGroup& g);
  static MonomialRep linear(const LinearCharacter& chi);
  /// Ind_H chi for chi a linear character of h.group(); basis = left cosets of H.
  static MonomialRep induced(const LinearCharacter& chi, const Subgroup& h);

  /// Checks rho(x s) = rho(x) rho(s) for every element x and generator s.
  void validate() const;
  ClassFunction character() const;
  Cyclotomic trace(std::size_t x) const;
};

MonomialRep direct_sum(const MonomialRep& a, const MonomialRep& b);
MonomialRep tensor(const MonomialRep& a, const MonomialRep& b);
MonomialRep dual(const MonomialRep& a);
/// The restriction as a representation of h.group().
MonomialRep restrict(const MonomialRep& a, const Subgroup& h);

/// Schreier cover of the base for H: vertices (u, i) with i a left coset of
/// H, numbered u * [G:H] + i. The lift carries voltages in h.group()
/// (the coset cocycle), so that its H-cover is the G-cover.
struct SchreierCover {
  Graph graph;
  std::shared_ptr<const VoltageGraph> lift;
};

SchreierCover schreier_cover(const VoltageGraph& x, const Subgroup& h);

struct GainEdge {
  std::size_t from = 0, to = 0;
  std::uint32_t phase = 0;  // flat sections satisfy f(to) = zeta^phase f(from)
};

/// Twisted Laplacian on sections over the base, blocks of size dim per base
/// vertex (row u * dim + i). Exact entries are counts of powers of zeta_modulus.
struct TwistedOperator {
  std::size_t vertices = 0, dim = 0;
  std::uint64_t modulus = 1;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::int64_t>> entries;
  std::vector<GainEdge> gains;

  std::size_t size() const { return vertices * dim; }
  Cyclotomic entry(std::size_t r, std::size_t c) const;
  bool is_hermitian() const;
  // Real cyclotomic integers; rational when no loop or parallel edges carry torsion.
  Cyclotomic trace() const;
  Cyclotomic trace_of_square() const;
};

inline constexpr std::size_t kMaxOperatorSize = 4096;

/// Edge u -> v with voltage g contributes -rho(g) to block (v, u) and its
/// adjoint to block (u, v); diagonal blocks are degree * I.
TwistedOperator twisted_laplacian(const VoltageGraph& x, const MonomialRep& rho,
                                  std::size_t max_size = kMaxOperatorSize);
/// Combinatorial Laplacian of a plain graph.
TwistedOperator graph_laplacian(const Graph& g, std::size_t max_size = kMaxOperatorSize);

/// Dimension of the kernel: the operator is a sum of squares |f(v) - rho(g) f(u)|^2,
/// so the kernel is the space of flat sections, counted on the gain graph.
std::size_t kernel_multiplicity(const TwistedOperator& op);
/// Same count without assembling the matrix.
std::size_t kernel_multiplicity(const VoltageGraph& x, const MonomialRep& rho);
/// dim ker over F_p for a prime p = 1 mod modulus, zeta sent to a primitive root.
/// Never smaller than the characteristic-zero kernel.
std::size_t kernel_multiplicity_mod_p(const TwistedOperator& op, std::uint64_t* prime_used = nullptr);
/// <Res_K rho, 1> for K the monodromy group; equals the kernel dimension.
std::size_t expected_multiplicity(const VoltageGraph& x, const MonomialRep& rho);

struct Spectrum {
  std::vector<double> eigenvalues;                      // ascending
  std::vector<std::pair<double, std::size_t>> clusters;  // value, multiplicity
  Cyclotomic trace, trace_of_square;                    // exact
  double sum = 0, sum_of_squares = 0;                   // from the eigenvalues
  bool traces_ok = false;
};

Spectrum spectrum(const TwistedOperator& op, double tolerance = 1e-9);
/// Largest deviation between matched sorted eigenvalues; infinity on size mismatch.
double spectral_distance(const Spectrum& a, const Spectrum& b);
bool same_spectrum(const Spectrum& a, const Spectrum& b, double tolerance = 1e-9);
nlohmann::json to_json(const Spectrum& s);

struct SoloSlot {
  int i = 1, j = 1;
  std::uint64_t kernel = 0;   // on the Schreier cover for H_i
  std::uint64_t mackey = 0;   // <Ind chi_j, Ind chi_i> from the character side
  std::optional<Spectrum> spectrum;
};

struct BenchReport {
  bool weakly_conjugate = false;
  bool conjugate = false;
  std::size_t components[2] = {0, 0};
  bool snt_ok = true;                  // Sp(Schreier cover) = Sp(twisted by Ind 1)
  bool regular_ok = true;              // Sp(G-cover) = Sp(twisted by regular)
  std::optional<bool> covers_isospectral;
  std::optional<double> cover_distance;
  std::optional<Spectrum> cover_spectrum[2];  // Schreier covers, when small enough
  bool exact_traces_equal = false;
  std::vector<SoloSlot> slots;         // a11, a12, a21, a22
  bool solo_equalities = false;        // a11 = a21 and a12 = a22
  bool induced_equal = false;          // Ind chi1 = Ind chi2
  bool solo_consistent = false;        // the two agree
  std::optional<bool> slot_spectra_equal;
  bool kernels_match_mackey = true;
  bool ok() const;
};

/// Graph-level Sunada bench for (G, H1, H2) over the voltage graph x.
BenchReport verify_sunada_bench(const VoltageGraph& x, const Subgroup& h1, const Subgroup& h2,
                                const LinearCharacter& chi1, const LinearCharacter& chi2,
                                std::size_t max_size = kMaxOperatorSize, double tolerance = 1e-9);
nlohmann::json to_json(const BenchReport& r);

/// Cycle space of the G-cover over F_ell with G acting by deck
/// transformations k . (u, x) = (u, x k^-1).
struct HomologyModule {
  std::shared_ptr<const GModule> module;
  std::size_t cover_vertices = 0, cover_edges = 0;
  std::vector<std::size_t> non_tree;                 // cover edge per basis vector
  std::vector<std::vector<std::uint64_t>> cycles;    // basis cycles on all cover edges
};

HomologyModule graph_homology_module(const VoltageGraph& x, std::uint64_t ell);

struct WreathCover {
  std::shared_ptr<const DenseWreath> wreath;
  std::shared_ptr<const VoltageGraph> voltage_graph;  // over the wreath product
  Graph graph;
  bool connected = false;
  bool free_base_action = false;   // C^n acts freely with quotient the G-cover
  bool conjugation_matches = false;
  bool monodromy_matches = false;  // H_1 of the G-cover maps by the chosen projection
};

/// Realizes C^n x| G as a voltage cover from a condition (*) witness in the
/// cycle space of the G-cover.
WreathCover build_wreath_cover(const WreathContext& ctx, const VoltageGraph& x, const Vector& witness);
nlohmann::json to_json(const WreathCover& c);

struct CoverSolo {
  std::uint64_t kernel[2][2] = {};    // a_ij from twisted kernels on the wreath voltage graph
  std::uint64_t expected[2][2] = {};  // a_ij from the wreath Mackey sum
  bool kernels_match = false;
  bool spectra_equal = false;  // Sp(Ind psi1) = Sp(Ind psi2) on the base
};

/// Solo comparison on the realized cover for characters of the two wreath subgroups.
CoverSolo cover_solo(const WreathCover& c, const WreathContext& ctx, const WreathLinearCharacter& psi1,
                     const WreathLinearCharacter& psi2);

}  // namespace sunada
