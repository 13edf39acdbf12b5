#pragma once

#include <cstdint>
#include <json.hpp>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sunada/character.hpp"
#include "sunada/group.hpp"

namespace sunada {

bool is_prime(std::uint64_t n);

/// Smallest prime >= 3 coprime to `group_order`.
std::uint64_t choose_ell(std::uint64_t group_order);

/// Symbolic data for the wreath product C^n x| G with C = Z/ell, where G
/// permutes the n = [G:H1] coordinates as it permutes the left cosets of H1.
/// Elements are pairs (k, g) with (k, g)(k', g') = (k + Phi(g)k', gg') and
/// (Phi(g)k)_{g(j)} = k_j. The group itself is never enumerated.
class WreathContext {
 public:
  WreathContext(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2, std::uint64_t ell);

  const FiniteGroup& group() const noexcept { return *g_; }
  const Subgroup& h(int side) const { return side == 1 ? *h1_ : *h2_; }
  std::uint64_t ell() const noexcept { return ell_; }
  std::size_t n() const noexcept { return n_; }
  const CosetTable& cosets() const noexcept { return table_; }
  std::size_t act(std::size_t g, std::size_t i) const { return action_[g * n_ + i]; }

  /// Phi(g) a
  std::vector<std::uint32_t> transport(std::size_t g, const std::vector<std::uint32_t>& a) const;
  /// Orbits of H_side on the coordinates, each sorted, ordered by smallest member.
  const std::vector<std::vector<std::size_t>>& orbits(int side) const { return orbits_[side - 1]; }
  /// Double cosets H_j s H_i in G.
  const std::vector<DoubleCoset>& double_cosets(int j, int i) const { return dcs_[j - 1][i - 1]; }
  /// log10 |C^n x| G|
  double log10_order() const;

 private:
  const FiniteGroup* g_;
  const Subgroup* h1_;
  const Subgroup* h2_;
  std::uint64_t ell_;
  CosetTable table_;
  std::size_t n_;
  std::vector<std::uint32_t> action_;
  std::vector<std::vector<std::size_t>> orbits_[2];
  std::vector<DoubleCoset> dcs_[2][2];
};

/// Linear character of C^n x| H_side: (k, h) -> zeta_ell^<a,k> chi(h), with
/// `a` constant on the H_side-orbits of the coordinates.
struct WreathLinearCharacter {
  int side = 1;
  std::vector<std::uint32_t> a;
  LinearCharacter chi;
  std::size_t chi_index = 0;  // position in linear_characters(H_side)
};

/// Exponent vector e_1 on H1~, trivial on H1.
WreathLinearCharacter solitary_character(const WreathContext& ctx);

/// The ell * |H_side^ab| characters searched by the isometry test:
/// a = c * 1_O for the first smallest H_side-orbit O, c in Z/ell, every chi.
/// Ordered by c, then by chi.
std::vector<WreathLinearCharacter> wreath_linear_characters(const WreathContext& ctx, int side);

/// Every linear character (a, chi) of C^n x| H_side, ell^(#orbits) * |H^ab| of them.
std::vector<WreathLinearCharacter> all_wreath_linear_characters(const WreathContext& ctx, int side);

void validate(const WreathContext& ctx, const WreathLinearCharacter& psi);

/// <Ind psi1, Ind psi2> over C^n x| G via the Mackey sum on the double
/// cosets H_j s H_i of the base group.
std::uint64_t wreath_induced_inner(const WreathContext& ctx, const WreathLinearCharacter& psi1,
                                   const WreathLinearCharacter& psi2);

struct IsometryOptions {
  std::optional<std::uint64_t> ell;
  bool pintonello = false;
};

struct IsometryVerdict {
  bool equivalent = false;
  std::uint64_t ell = 0;
  bool pintonello = false;
  bool weak_precondition = true;  // Pintonello mode only
  std::optional<WreathLinearCharacter> witness;
  std::size_t witness_index = 0;
  std::size_t checks_performed = 0;
  std::size_t budget = 0;
  std::size_t characters = 0;  // size of the searched character list
  std::uint64_t solitary_norm = 0;
  std::size_t dimension = 0;  // [G:H2]
  std::optional<std::size_t> conjugator;
};

/// Decides whether H1 and H2 are conjugate purely through multiplicities of
/// induced wreath characters; the verdict is asserted against a direct
/// conjugacy scan.
IsometryVerdict isometry_test(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2,
                              const IsometryOptions& options = {});

nlohmann::json to_json(const WreathContext& ctx, const IsometryVerdict& v);

/// C^n x| G realized as a permutation group on n*ell + deg(G) points:
/// (k, g) sends (i, x) to (g(i), x + k_{g(i)}) and moves the extra points by g.
struct DenseWreath {
  std::shared_ptr<const FiniteGroup> group;
  std::shared_ptr<const Subgroup> h1;  // C^n x| H1
  std::shared_ptr<const Subgroup> h2;  // C^n x| H2
  std::vector<std::vector<std::uint32_t>> k_of;  // per element
  std::vector<std::size_t> base_of;             // per element, index in G
  std::size_t n = 0;
  std::uint64_t ell = 0;
  const Subgroup* base_h1 = nullptr;
  const Subgroup* base_h2 = nullptr;
  std::vector<std::uint32_t> coset_action;  // |G| x n

  Permutation element(const std::vector<std::uint32_t>& k, std::size_t g, const FiniteGroup& base) const;
  /// The character as an exponent map on the enumerated subgroup.
  LinearCharacter realize(const WreathLinearCharacter& psi) const;
};

DenseWreath dense_wreath(const WreathContext& ctx, std::size_t cap = 100000);

struct SolitaryReport {
  bool unique = false;
  std::size_t structures = 0;         // G~-set classes carrying a matching monomial structure
  std::size_t subgroups_examined = 0;  // index-n subgroups up to conjugacy
  bool inequality_holds = false;      // |psi(e_1)| > n - 2
  double psi_abs = 0;
  std::size_t n = 0;
  std::size_t order = 0;
};

/// Brute-force uniqueness of the monomial structure of Ind Xi. Tiny cases
/// only: ell^n |G| <= 10^6, ell >= 3.
SolitaryReport solitary_uniqueness_bruteforce(const WreathContext& ctx);

struct Table1Row {
  std::string name;
  std::string group_order;
  std::size_t subgroup_order = 0;
  std::string ell;
  std::string dimension;
  std::string budget;
  bool executable = true;
  // reference values
  std::string expected_group_order, expected_ell, expected_dimension, expected_budget;
  std::size_t expected_subgroup_order = 0;
  bool matches = false;
  std::string note;
};

std::vector<Table1Row> table1();
nlohmann::json to_json(const Table1Row& row);

}  // namespace sunada
