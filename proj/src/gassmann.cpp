#include "sunada/gassmann.hpp"

#include "sunada/error.hpp"

namespace sunada {

GassmannReport weak_conjugacy(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2) {
  require_subgroup(g, h1);
  require_subgroup(g, h2);
  GassmannReport r;
  r.class_profile.assign(g.class_count(), {0, 0});
  for (std::size_t x : h1.members()) ++r.class_profile[g.class_of(x)].first;
  for (std::size_t x : h2.members()) ++r.class_profile[g.class_of(x)].second;
  r.class_counts_equal = true;
  for (const auto& [a, b] : r.class_profile) r.class_counts_equal = r.class_counts_equal && a == b;

  auto p1 = induce(LinearCharacter::trivial(h1.group()), h1);
  auto p2 = induce(LinearCharacter::trivial(h2.group()), h2);
  r.induced_characters_equal = p1 == p2;
  check(r.induced_characters_equal == r.class_counts_equal,
        "induced trivial characters agree exactly when class intersections agree");
  r.weakly_conjugate = r.class_counts_equal;

  r.conjugator = are_conjugate_subgroups(g, h1, h2);
  r.conjugate = r.conjugator.has_value();
  check(!r.conjugate || r.weakly_conjugate, "conjugate subgroups are weakly conjugate");

  r.a_matrix = a_matrix(g, h1, h2, LinearCharacter::trivial(h1.group()), LinearCharacter::trivial(h2.group()));
  if (r.weakly_conjugate) {
    check(h1.order() == h2.order(), "weakly conjugate subgroups have equal order");
    const auto v = r.a_matrix[0][0];
    check(r.a_matrix[0][1] == v && r.a_matrix[1][0] == v && r.a_matrix[1][1] == v,
          "weak conjugacy makes all trivial-character multiplicities equal");
  }
  return r;
}

AMatrix a_matrix(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2, const LinearCharacter& chi1,
                 const LinearCharacter& chi2) {
  const Subgroup* hs[2] = {&h1, &h2};
  const LinearCharacter* cs[2] = {&chi1, &chi2};
  AMatrix a{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a[i][j] = mackey_inner(g, *hs[j], *hs[i], *cs[j], *cs[i]);
  check(a[0][1] == a[1][0], "off-diagonal multiplicities coincide");
  return a;
}

bool solo_test(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2, const LinearCharacter& chi1,
               const LinearCharacter& chi2) {
  AMatrix a = a_matrix(g, h1, h2, chi1, chi2);
  bool equal = a[0][0] == a[1][0] && a[0][1] == a[1][1];
  bool direct = induce(chi1, h1) == induce(chi2, h2);
  check(equal == direct, "multiplicity equalities hold exactly when the induced characters coincide");
  return equal;
}

ResIndDecomposition res_ind_decomposition(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  ResIndDecomposition out;
  std::size_t total = 0;
  for (const auto& dc : double_cosets(g, k, h)) {
    std::size_t degree = dc.size / h.order();
    out.parts.push_back({dc.representative, degree});
    ++out.multiplicities[degree];
    total += degree;
  }
  check(total == h.index(), "restricted permutation module has dimension [G:H]");
  return out;
}

nlohmann::json to_json(const FiniteGroup& g, const GassmannReport& r) {
  nlohmann::json profile = nlohmann::json::array();
  for (std::size_t c = 0; c < r.class_profile.size(); ++c)
    profile.push_back({{"class_representative", g.element(g.class_representative(c)).to_cycles()},
                       {"class_size", g.class_size(c)},
                       {"h1", r.class_profile[c].first},
                       {"h2", r.class_profile[c].second}});
  nlohmann::json out = {{"weakly_conjugate", r.weakly_conjugate},
                        {"conjugate", r.conjugate},
                        {"criteria",
                         {{"induced_characters_equal", r.induced_characters_equal},
                          {"class_counts_equal", r.class_counts_equal},
                          {"bijection_exists", r.class_counts_equal}}},
                        {"class_profile", profile},
                        {"a_matrix", {{r.a_matrix[0][0], r.a_matrix[0][1]}, {r.a_matrix[1][0], r.a_matrix[1][1]}}}};
  out["conjugator"] = r.conjugator ? nlohmann::json(g.element(*r.conjugator).to_cycles()) : nlohmann::json(nullptr);
  return out;
}

}  // namespace sunada
