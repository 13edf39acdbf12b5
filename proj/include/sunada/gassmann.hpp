#pragma once

#include <array>
#include <cstdint>
#include <json.hpp>
#include <map>
#include <optional>
#include <vector>

#include "sunada/character.hpp"
#include "sunada/group.hpp"

namespace sunada {

using AMatrix = std::array<std::array<std::uint64_t, 2>, 2>;

struct GassmannReport {
  bool weakly_conjugate = false;
  bool conjugate = false;
  std::optional<std::size_t> conjugator;
  /// Per conjugacy class of G: (|c cap H1|, |c cap H2|).
  std::vector<std::pair<std::size_t, std::size_t>> class_profile;
  bool induced_characters_equal = false;  // criterion (a)
  bool class_counts_equal = false;        // criterion (b); (c) follows from (b)
  AMatrix a_matrix{};                     // trivial characters
};

GassmannReport weak_conjugacy(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2);

/// a[i][j] = <Ind_{Hj} chi_j, Ind_{Hi} chi_i> (0-based i, j).
AMatrix a_matrix(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2, const LinearCharacter& chi1,
                 const LinearCharacter& chi2);

/// True iff a11 = a21 and a12 = a22, i.e. Ind chi1 = Ind chi2. Cross-checked
/// against direct comparison of the induced class functions.
bool solo_test(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2, const LinearCharacter& chi1,
               const LinearCharacter& chi2);

struct ResIndPart {
  std::size_t representative;  // s with K s H a double coset
  std::size_t degree;          // [K : K cap sHs^-1]
};

struct ResIndDecomposition {
  std::vector<ResIndPart> parts;
  std::map<std::size_t, std::size_t> multiplicities;  // degree -> count
};

/// Res_K Ind_H 1 as a sum of permutation modules K / (K cap sHs^-1).
ResIndDecomposition res_ind_decomposition(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

nlohmann::json to_json(const FiniteGroup& g, const GassmannReport& r);

}  // namespace sunada
