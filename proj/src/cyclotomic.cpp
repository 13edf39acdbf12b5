#include "sunada/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "sunada/error.hpp"

namespace sunada {

namespace {

struct Field {
  std::uint64_t m;
  std::uint64_t phi;
  std::vector<std::int64_t> poly;            // Phi_m, monic, length phi + 1
  std::vector<std::vector<std::int64_t>> powers;  // x^j mod Phi_m for 0 <= j < m (empty if too large)
};

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<std::uint64_t, std::unique_ptr<Field>>& cache() {
  static std::map<std::uint64_t, std::unique_ptr<Field>> c;
  return c;
}

// Multiplies x^j (as a reduced vector) by x and reduces again.
void shift_reduce(std::vector<std::int64_t>& v, const std::vector<std::int64_t>& poly) {
  const std::size_t phi = v.size();
  std::int64_t top = v[phi - 1];
  for (std::size_t i = phi - 1; i > 0; --i) v[i] = v[i - 1];
  v[0] = 0;
  if (top != 0)
    for (std::size_t i = 0; i < phi; ++i) v[i] -= top * poly[i];
}

std::vector<std::int64_t> poly_divide(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  // Exact division by a monic polynomial.
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    std::int64_t c = num[i];
    q[i - dn] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) check(num[i] == 0, "cyclotomic polynomial division is exact");
  return q;
}

const Field& field_locked(std::uint64_t m);

std::vector<std::int64_t> compute_poly(std::uint64_t m) {
  std::vector<std::int64_t> p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (std::uint64_t d = 1; d < m; ++d)
    if (m % d == 0) p = poly_divide(p, field_locked(d).poly);
  return p;
}

const Field& field_locked(std::uint64_t m) {
  auto& c = cache();
  auto it = c.find(m);
  if (it != c.end()) return *it->second;
  auto f = std::make_unique<Field>();
  f->m = m;
  f->poly = compute_poly(m);
  f->phi = f->poly.size() - 1;
  if (m * f->phi <= 4'000'000) {
    f->powers.reserve(m);
    std::vector<std::int64_t> v(f->phi, 0);
    v[0] = 1;
    for (std::uint64_t j = 0; j < m; ++j) {
      f->powers.push_back(v);
      shift_reduce(v, f->poly);
    }
  }
  return *c.emplace(m, std::move(f)).first->second;
}

const Field& field(std::uint64_t m) {
  if (m == 0 || m > kMaxConductor) throw Error(ErrorKind::ConductorOverflow, "conductor " + std::to_string(m) + " out of range");
  std::lock_guard<std::mutex> lock(cache_mutex());
  return field_locked(m);
}

// Reduces sum_j a[j] x^j (j < m, i.e. already folded by x^m = 1) modulo Phi_m.
template <typename T>
std::vector<Rational> reduce_folded(const Field& f, const std::vector<T>& a) {
  std::vector<Rational> out(f.phi);
  if (!f.powers.empty()) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] == 0) continue;
      if (j < f.phi) {
        out[j] += a[j];
        continue;
      }
      const auto& pw = f.powers[j];
      for (std::size_t i = 0; i < f.phi; ++i)
        if (pw[i] != 0) out[i] += a[j] * pw[i];
    }
    return out;
  }
  std::vector<std::int64_t> v(f.phi, 0);
  v[0] = 1;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] != 0)
      for (std::size_t i = 0; i < f.phi; ++i)
        if (v[i] != 0) out[i] += a[j] * v[i];
    shift_reduce(v, f.poly);
  }
  return out;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t m) { return field(m).poly; }

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t result = m;
  std::uint64_t x = m;
  for (std::uint64_t p = 2; p * p <= x; ++p) {
    if (x % p) continue;
    while (x % p == 0) x /= p;
    result -= result / p;
  }
  if (x > 1) result -= result / x;
  return result;
}

std::uint64_t lcm_conductor(std::uint64_t a, std::uint64_t b) {
  std::uint64_t l = std::lcm(a, b);
  if (l > kMaxConductor)
    throw Error(ErrorKind::ConductorOverflow, "lcm of conductors " + std::to_string(a) + " and " + std::to_string(b) +
                                                  " exceeds " + std::to_string(kMaxConductor));
  return l;
}

Cyclotomic::Cyclotomic() : c_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(const Rational& r) : c_(1, r) {}

Cyclotomic Cyclotomic::zeta(std::uint64_t m, std::int64_t k) {
  const Field& f = field(m);
  std::vector<std::int64_t> counts(m, 0);
  std::int64_t e = k % static_cast<std::int64_t>(m);
  if (e < 0) e += static_cast<std::int64_t>(m);
  counts[e] = 1;
  Cyclotomic z;
  z.m_ = m;
  z.c_ = reduce_folded(f, counts);
  return z;
}

Cyclotomic Cyclotomic::from_counts(std::uint64_t m, const std::vector<std::int64_t>& counts) {
  if (counts.size() != m) throw Error(ErrorKind::Internal, "count vector length differs from conductor");
  Cyclotomic z;
  z.m_ = m;
  z.c_ = reduce_folded(field(m), counts);
  return z;
}

Cyclotomic Cyclotomic::from_power_coefficients(std::uint64_t m, std::vector<Rational> coefficients) {
  const Field& f = field(m);
  std::vector<Rational> folded(m);
  for (std::size_t j = 0; j < coefficients.size(); ++j) folded[j % m] += coefficients[j];
  Cyclotomic z;
  z.m_ = m;
  z.c_ = reduce_folded(f, folded);
  return z;
}

Cyclotomic Cyclotomic::embed(std::uint64_t target) const {
  if (target == m_) return *this;
  if (target % m_ != 0) throw Error(ErrorKind::Internal, "embedding into a field that does not contain the value");
  const Field& f = field(target);
  const std::uint64_t step = target / m_;
  std::vector<Rational> folded(target);
  for (std::size_t k = 0; k < c_.size(); ++k) folded[k * step] = c_[k];
  Cyclotomic z;
  z.m_ = target;
  z.c_ = reduce_folded(f, folded);
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::to_rational() const {
  check(is_rational(), "cyclotomic value " + to_string() + " is rational");
  return c_[0];
}

Cyclotomic Cyclotomic::conjugate() const {
  if (m_ <= 2) return *this;
  std::vector<Rational> folded(m_);
  for (std::size_t k = 0; k < c_.size(); ++k) folded[(m_ - k) % m_] = c_[k];
  Cyclotomic z;
  z.m_ = m_;
  z.c_ = reduce_folded(field(m_), folded);
  return z;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<long double> s = 0;
  const long double two_pi = 2.0L * std::acos(-1.0L);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    long double angle = two_pi * static_cast<long double>(k) / static_cast<long double>(m_);
    s += static_cast<long double>(c_[k].convert_to<double>()) * std::polar(1.0L, angle);
  }
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return sunada::to_string(c_[0]);
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + sunada::to_string(c_[k]) + ")";
    if (k > 0) out += "*z" + std::to_string(m_) + "^" + std::to_string(k);
  }
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.m_ != m_) {
    std::uint64_t l = lcm_conductor(m_, o.m_);
    *this = embed(l);
    if (o.m_ != l) return *this += o.embed(l);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic z = *this;
  for (auto& x : z.c_) x = -x;
  return z;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& x : c_) x *= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.m_ == 1) return *this *= o.c_[0];
  if (m_ == 1) {
    Rational r = c_[0];
    *this = o;
    return *this *= r;
  }
  if (o.m_ != m_) {
    std::uint64_t l = lcm_conductor(m_, o.m_);
    *this = embed(l);
    if (o.m_ != l) return *this *= o.embed(l);
  }
  const Field& f = field(m_);
  std::vector<Rational> folded(m_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j] != 0) folded[(i + j) % m_] += c_[i] * o.c_[j];
  }
  c_ = reduce_folded(f, folded);
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  std::uint64_t l = lcm_conductor(a.m_, b.m_);
  return a.embed(l).c_ == b.embed(l).c_;
}

}  // namespace sunada
