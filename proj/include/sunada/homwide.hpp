#pragma once

#include <cstdint>
#include <json.hpp>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sunada/character.hpp"
#include "sunada/group.hpp"
#include "sunada/linalg.hpp"

namespace sunada {

using Vector = std::vector<Rational>;

/// Finite-dimensional representation of an enumerated group over Q (ell = 0)
/// or F_ell. Matrices act on column vectors and M(xy) = M(x) M(y).
class GModule {
 public:
  /// One row-major dim x dim matrix per generator of `g`, in generator
  /// order. Over F_ell with ell | |G| the constructor refuses unless
  /// `allow_modular` is set.
  GModule(const FiniteGroup& g, std::uint64_t ell, std::size_t dim, const std::vector<std::vector<Rational>>& generators,
          bool allow_modular = false);

  /// Regular module F[G], basis indexed by group elements.
  static GModule regular(const FiniteGroup& g, std::uint64_t ell);
  /// Permutation module F[G/H].
  static GModule permutation(const FiniteGroup& g, const Subgroup& h, std::uint64_t ell);
  static GModule trivial(const FiniteGroup& g, std::uint64_t ell, std::size_t dim = 1);

  const FiniteGroup& group() const noexcept { return *g_; }
  std::uint64_t ell() const noexcept { return ell_; }
  std::size_t dim() const noexcept { return dim_; }
  std::string field_name() const;

  /// Row-major matrix of element x; entries in [0, ell) over F_ell.
  std::vector<Rational> matrix(std::size_t x) const;
  Vector act(std::size_t x, const Vector& v) const;
  Rational trace(std::size_t x) const;
  /// Normalizes entries (reduction mod ell).
  Vector normalize(const Vector& v) const;

  /// Rank of { x v : x in elements }.
  std::size_t span_rank(const Vector& v, const std::vector<std::size_t>& elements) const;
  std::size_t rank_of(const std::vector<Vector>& rows) const;
  /// Basis of the vectors fixed by every element of h.
  std::vector<Vector> fixed_space(const Subgroup& h) const;
  /// { v : x v = lambda(x) v for all x }, or nullopt when the field lacks
  /// the values of lambda.
  std::optional<std::vector<Vector>> eigen_space(const LinearCharacter& lambda) const;
  /// The module restricted to h, as a module for h.group().
  GModule restrict(const Subgroup& h) const;

 private:
  GModule(const FiniteGroup& g, std::uint64_t ell, std::size_t dim);
  void build(const std::vector<std::vector<Rational>>& generators);

  const FiniteGroup* g_;
  std::uint64_t ell_;
  std::size_t dim_;
  std::vector<Matrix<PrimeField>> mod_;
  std::vector<Matrix<RationalField>> rat_;
};

enum class SearchStatus { Found, None, Unknown };
std::string to_string(SearchStatus s);

struct CyclicVectorResult {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<Vector> vector;
  std::size_t candidates = 0;
  std::string certificate;  // reason for None
};

/// Looks for v whose G-orbit spans a |G|-dimensional space, i.e. F[G] inside M.
CyclicVectorResult contains_regular(const GModule& m, std::size_t budget = 15625);

struct StarResult {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<Vector> witness;  // H1-fixed v with g_1 v, ..., g_n v independent
  std::size_t fixed_dimension = 0;
  std::size_t candidates = 0;
  std::string certificate;
};

/// Searches for an injective equivariant map F[G/H1] -> M. Requires ell
/// coprime to |G| so that the image splits off.
StarResult condition_star(const GModule& m, const Subgroup& h1, std::size_t budget = 15625);

/// True iff v is H1-fixed and its translates by coset representatives are independent.
bool is_star_witness(const GModule& m, const Subgroup& h1, const Vector& v);

struct WidenessReport {
  CyclicVectorResult regular;
  std::vector<StarResult> star;  // per requested subgroup
};

/// contains_regular plus condition_star per subgroup. A cyclic vector v is
/// pushed to sum_{h in H} h v, which must be a star witness.
WidenessReport wideness_report(const GModule& m, const std::vector<Subgroup>& subgroups);

enum class Wideness { Wide, NotWide, Inconclusive };
std::string to_string(Wideness w);

struct SurfaceReport {
  ClassFunction h;
  Rational regular_coefficient;  // h = 2 * 1 + c * rho_reg
  Wideness verdict = Wideness::Inconclusive;
};

/// Character of a free action on H_1 of a closed orientable surface with
/// Euler characteristic chi_m.
SurfaceReport surface_action_character(const FiniteGroup& g, long long chi_m);

struct OrbifoldReport {
  ClassFunction h;
  long long chi_cover = 0;  // Euler characteristic of the cover by Riemann-Hurwitz
  Wideness verdict = Wideness::Inconclusive;
};

/// h = 2 * 1 - chi_q * rho_reg + sum_i (rho_reg - Ind_{C_i} 1) for a branched
/// action with cyclic isotropy C_i over a quotient of Euler characteristic chi_q.
/// Wide when chi_q < 0; otherwise inconclusive.
OrbifoldReport orbifold_action_character(const FiniteGroup& g, long long chi_quotient,
                                         const std::vector<Subgroup>& branch);

struct TraceCheck {
  std::string cycle_type;
  std::string representative;
  std::uint64_t trace = 0;
  std::uint64_t expected = 0;
};

struct SeifertWeberReport {
  std::shared_ptr<const FiniteGroup> group;  // S5 on 5 points, generators r, c
  std::shared_ptr<const GModule> module;     // over F_5
  bool relations = false;                    // r^2 = c^5 = 1
  std::size_t matrix_group_order = 0;
  std::vector<TraceCheck> traces;
  bool traces_match = false;
  Vector r_vector, rcr_vector;
  std::size_t r_orbit_rank = 0, rcr_orbit_rank = 0;
  bool cyclic_vectors = false;
  std::string integral_homology = "(Z/5)^3";
  bool ok() const { return relations && matrix_group_order == 120 && traces_match && cyclic_vectors; }
};

SeifertWeberReport seifert_weber();

nlohmann::json to_json(const Vector& v);
nlohmann::json to_json(const CyclicVectorResult& r);
nlohmann::json to_json(const StarResult& r);
nlohmann::json to_json(const SeifertWeberReport& r);

}  // namespace sunada
