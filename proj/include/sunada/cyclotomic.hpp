#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "sunada/rational.hpp"

namespace sunada {

/// Largest conductor accepted when values from different fields are mixed.
inline constexpr std::uint64_t kMaxConductor = 10000;

/// Element of Q(zeta_m), zeta_m = exp(2 pi i / m).
///
/// Canonical form: coefficients on the power basis 1, zeta, ..., zeta^(phi(m)-1),
/// i.e. every polynomial in zeta is reduced modulo the cyclotomic polynomial
/// Phi_m. With a fixed conductor, equality is coefficient-wise. Mixed
/// conductors are embedded into Q(zeta_lcm).
class Cyclotomic {
 public:
  Cyclotomic();  // zero, conductor 1
  Cyclotomic(const Rational& r);  // NOLINT: implicit on purpose
  Cyclotomic(long long n) : Cyclotomic(Rational(n)) {}  // NOLINT

  /// zeta_m^k
  static Cyclotomic zeta(std::uint64_t m, std::int64_t k = 1);
  /// sum_k counts[k] zeta_m^k with counts.size() == m
  static Cyclotomic from_counts(std::uint64_t m, const std::vector<std::int64_t>& counts);
  static Cyclotomic from_power_coefficients(std::uint64_t m, std::vector<Rational> coefficients);

  std::uint64_t conductor() const noexcept { return m_; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  /// Same value viewed in Q(zeta_target); m must divide target.
  Cyclotomic embed(std::uint64_t target) const;

  bool is_zero() const;
  bool is_rational() const;
  Rational to_rational() const;  // Internal error when not rational
  Cyclotomic conjugate() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  Cyclotomic operator-() const;
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  std::uint64_t m_ = 1;
  std::vector<Rational> c_;  // length phi(m)
};

/// Integer coefficients of Phi_m, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t m);
std::uint64_t euler_phi(std::uint64_t m);
std::uint64_t lcm_conductor(std::uint64_t a, std::uint64_t b);  // ConductorOverflow above kMaxConductor

}  // namespace sunada
