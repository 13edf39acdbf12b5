#pragma once

#include <cstdint>
#include <json.hpp>
#include <vector>

#include "sunada/cyclotomic.hpp"
#include "sunada/group.hpp"

namespace sunada {

/// Function on a group that is constant on conjugacy classes, one value per
/// class. The group must outlive the function.
class ClassFunction {
 public:
  explicit ClassFunction(const FiniteGroup& g);  // zero
  ClassFunction(const FiniteGroup& g, std::vector<Cyclotomic> values);

  static ClassFunction trivial(const FiniteGroup& g);
  static ClassFunction regular(const FiniteGroup& g);

  const FiniteGroup& group() const noexcept { return *group_; }
  const std::vector<Cyclotomic>& values() const noexcept { return values_; }
  const Cyclotomic& operator[](std::size_t cls) const { return values_[cls]; }
  const Cyclotomic& at_element(std::size_t g) const { return values_[group_->class_of(g)]; }
  const Cyclotomic& degree() const { return values_[0]; }

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const Cyclotomic& s);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const Cyclotomic& s) { return a *= s; }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

 private:
  void require_same(const ClassFunction& o) const;
  const FiniteGroup* group_;
  std::vector<Cyclotomic> values_;
};

/// Homomorphism to Z/modulus, i.e. h -> zeta_modulus^exponent(h).
class LinearCharacter {
 public:
  LinearCharacter(const FiniteGroup& g, std::uint64_t modulus, std::vector<std::uint32_t> exponents);
  static LinearCharacter trivial(const FiniteGroup& g);

  const FiniteGroup& group() const noexcept { return *group_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint32_t exponent(std::size_t g) const { return exponents_[g]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exponents_; }
  Cyclotomic value(std::size_t g) const { return Cyclotomic::zeta(modulus_, exponents_[g]); }
  bool is_trivial() const;
  /// Multiplicative order of the character.
  std::uint64_t order() const;
  ClassFunction to_class_function() const;

  /// Same value at the given elements (elements of possibly different groups).
  static bool agree(const LinearCharacter& a, std::size_t ga, const LinearCharacter& b, std::size_t gb);

 private:
  const FiniteGroup* group_;
  std::uint64_t modulus_;
  std::vector<std::uint32_t> exponents_;
};

/// All |H^ab| linear characters, trivial first, from the abelianization.
std::vector<LinearCharacter> linear_characters(const FiniteGroup& h);

/// f lives on h.group(); result lives on h.parent().
ClassFunction induce(const ClassFunction& f, const Subgroup& h);
ClassFunction induce(const LinearCharacter& chi, const Subgroup& h);
/// f lives on h.parent(); result lives on h.group().
ClassFunction restrict(const ClassFunction& f, const Subgroup& h);
ClassFunction tensor(const ClassFunction& a, const ClassFunction& b);
ClassFunction conjugate(const ClassFunction& f);

/// (1/|G|) sum_g a(g) conj(b(g)); exact.
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);
/// Inner product of two genuine characters: asserts a nonnegative integer.
std::uint64_t character_inner(const ClassFunction& a, const ClassFunction& b);

/// <Ind_{H1} chi1, Ind_{H2} chi2> via the double cosets H2 s H1.
std::uint64_t mackey_inner(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2, const LinearCharacter& chi1,
                           const LinearCharacter& chi2);

nlohmann::json to_json(const Cyclotomic& z);
nlohmann::json to_json(const ClassFunction& f);

}  // namespace sunada
