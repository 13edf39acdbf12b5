#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sunada {

using Point = std::uint32_t;

/// Bijection of {0, ..., degree-1}. Composition is right-to-left:
/// (p * q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Parses disjoint-cycle notation with 0-based points, e.g. "(0 1)(2 3)".
  /// "()" is the identity. Points must be < degree.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  std::size_t order() const;

  /// Disjoint-cycle notation, fixed points omitted, "()" for the identity.
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace sunada
