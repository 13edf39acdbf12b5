#include "sunada/linalg.hpp"

namespace sunada {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  for (; e; e >>= 1) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw Error(ErrorKind::Internal, "division by zero in F_" + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

std::uint64_t reduce_mod(const Rational& q, std::uint64_t p) {
  BigInt num = boost::multiprecision::numerator(q) % p;
  if (num < 0) num += p;
  BigInt den = boost::multiprecision::denominator(q) % p;
  if (den == 0) throw Error(ErrorKind::FieldMismatch, "denominator divisible by " + std::to_string(p));
  return mul_mod(static_cast<std::uint64_t>(num), inv_mod(static_cast<std::uint64_t>(den), p), p);
}

}  // namespace sunada
