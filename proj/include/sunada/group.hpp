#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sunada/permutation.hpp"

namespace sunada {

/// Permutation group stored with every element enumerated.
///
/// Element 0 is the identity; the rest appear in breadth-first discovery
/// order from the sorted, deduplicated generator list, so indices are
/// reproducible.
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultCap = std::size_t{1} << 20;

  FiniteGroup() = default;

  static FiniteGroup generate(std::size_t degree, const std::vector<Permutation>& generators,
                              std::size_t cap = kDefaultCap);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }

  /// Generators in the order they were supplied.
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<std::size_t>& generator_indices() const noexcept { return generator_indices_; }

  const Permutation& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::optional<std::size_t> find(const Permutation& p) const;
  std::size_t index_of(const Permutation& p) const;  // NotSubgroup if absent

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  /// g x g^-1
  std::size_t conjugate(std::size_t g, std::size_t x) const { return multiply(multiply(g, x), inverse_[g]); }
  std::size_t element_order(std::size_t a) const { return elements_[a].order(); }

  std::size_t class_count() const noexcept { return classes_.size(); }
  const std::vector<std::size_t>& class_members(std::size_t c) const { return classes_[c]; }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }
  /// Smallest element index in the class.
  std::size_t class_representative(std::size_t c) const { return classes_[c].front(); }
  std::size_t class_size(std::size_t c) const { return classes_[c].size(); }

 private:
  void compute_classes();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<std::size_t> generator_indices_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> lookup_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> table_;  // full multiplication table for small groups
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::uint32_t> class_of_;
};

/// Subgroup of an enumerated parent. The parent must outlive the handle.
/// The subgroup is also enumerated as a group in its own right (`group()`),
/// which carries its own classes; `to_parent`/`to_local` translate indices.
class Subgroup {
 public:
  static Subgroup generated_by(const FiniteGroup& parent, const std::vector<Permutation>& generators);
  static Subgroup generated_by_indices(const FiniteGroup& parent, const std::vector<std::size_t>& generators);
  /// Members must already form a subgroup (checked).
  static Subgroup from_members(const FiniteGroup& parent, std::vector<std::size_t> members);
  static Subgroup whole(const FiniteGroup& parent);
  static Subgroup trivial(const FiniteGroup& parent);

  const FiniteGroup& parent() const noexcept { return *parent_; }
  std::size_t order() const noexcept { return members_.size(); }
  std::size_t index() const noexcept { return parent_->order() / members_.size(); }
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  const std::vector<std::size_t>& generator_indices() const noexcept { return generators_; }
  bool contains(std::size_t g) const { return local_of_[g] != kNone; }

  const FiniteGroup& group() const noexcept { return *local_; }
  std::size_t to_parent(std::size_t local) const { return parent_of_[local]; }
  std::optional<std::size_t> to_local(std::size_t g) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;
  static Subgroup build(const FiniteGroup& parent, std::vector<std::size_t> generators,
                        std::vector<std::size_t> members);

  const FiniteGroup* parent_ = nullptr;
  std::vector<std::size_t> members_;
  std::vector<std::size_t> generators_;
  std::shared_ptr<const FiniteGroup> local_;
  std::vector<std::size_t> parent_of_;
  std::vector<std::uint32_t> local_of_;  // indexed by parent element
};

/// Subgroup generated by `generators` (parent indices) inside `parent`.
std::vector<std::size_t> closure(const FiniteGroup& parent, const std::vector<std::size_t>& generators);

/// Left cosets gH with representatives g_1 = e, g_2, ..., g_n, each the
/// smallest element index of its coset. For every g and i,
/// g * g_i = g_{act(g,i)} * cocycle(g,i) with cocycle(g,i) in H.
class CosetTable {
 public:
  CosetTable(const FiniteGroup& parent, const Subgroup& subgroup);

  std::size_t size() const noexcept { return reps_.size(); }
  std::size_t representative(std::size_t i) const { return reps_[i]; }
  const std::vector<std::size_t>& representatives() const noexcept { return reps_; }
  std::size_t coset_of(std::size_t g) const { return coset_of_[g]; }
  std::size_t act(std::size_t g, std::size_t i) const;
  std::size_t cocycle(std::size_t g, std::size_t i) const;
  Permutation action(std::size_t g) const;

 private:
  const FiniteGroup* parent_;
  std::vector<std::size_t> reps_;
  std::vector<std::uint32_t> coset_of_;
};

struct DoubleCoset {
  std::size_t representative;  // smallest element index in the double coset
  std::size_t size;
};

/// Double cosets A g B, ordered by representative.
std::vector<DoubleCoset> double_cosets(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

/// Largest normal subgroup of G contained in H.
Subgroup normal_core(const FiniteGroup& g, const Subgroup& h);

/// Normal closure of a set of elements (parent indices).
Subgroup normal_closure(const FiniteGroup& g, const std::vector<std::size_t>& elements);

struct Abelianization {
  std::size_t order = 1;                 // |H / [H,H]|
  std::size_t derived_order = 1;         // |[H,H]|
  std::vector<std::uint64_t> invariants;  // d_1 | d_2 | ... , all > 1
  /// Per element of the group: coordinates in Z/d_1 x ... x Z/d_k.
  std::vector<std::vector<std::uint64_t>> coordinates;
  std::uint64_t exponent() const { return invariants.empty() ? 1 : invariants.back(); }
};

Abelianization abelianization(const FiniteGroup& h);
inline Abelianization abelianization(const Subgroup& h) { return abelianization(h.group()); }

/// Some g with g H1 g^-1 = H2, scanning G in index order.
std::optional<std::size_t> are_conjugate_subgroups(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2);

/// The subgroup x H x^-1.
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, std::size_t x);

/// Throws NotSubgroup unless h lives in g.
void require_subgroup(const FiniteGroup& g, const Subgroup& h);

}  // namespace sunada
