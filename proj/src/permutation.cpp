#include "sunada/permutation.hpp"

#include <numeric>

#include "sunada/error.hpp"

namespace sunada {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw Error(ErrorKind::Parse, "images do not form a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',')) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw Error(ErrorKind::Parse, "empty permutation");
  while (pos < text.size()) {
    if (text[pos] != '(') throw Error(ErrorKind::Parse, "expected '(' in \"" + std::string(text) + "\"");
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw Error(ErrorKind::Parse, "unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] < '0' || text[pos] > '9') throw Error(ErrorKind::Parse, "bad character in cycle");
      std::uint64_t value = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > (1u << 30)) throw Error(ErrorKind::Parse, "point out of range");
        ++pos;
      }
      if (value >= degree)
        throw Error(ErrorKind::Parse, "point " + std::to_string(value) + " out of range for degree " + std::to_string(degree));
      if (used[value]) throw Error(ErrorKind::Parse, "point " + std::to_string(value) + " repeated");
      used[value] = true;
      cycle.push_back(static_cast<Point>(value));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out += ' ';
      out += std::to_string(j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw Error(ErrorKind::DegreeMismatch, "composing permutations of different degree");
  Permutation r;
  r.images_.resize(q.degree());
  for (std::size_t i = 0; i < q.degree(); ++i) r.images_[i] = p.images_[q.images_[i]];
  return r;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace sunada
