#pragma once

#include <complex>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "bisetkit/rational.hpp"

namespace bisetkit {

namespace detail {

using Poly = std::vector<Rational>;  // ascending coefficients

inline void trim_poly(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Remainder of a modulo the monic polynomial m.
inline Poly poly_mod(Poly a, const Poly& m) {
  trim_poly(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    Rational lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    if (lead != 0)
      for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] -= lead * m[i];
    a.pop_back();
    trim_poly(a);
  }
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

/// Exact division by a monic divisor.
inline Poly poly_div_exact(Poly a, const Poly& m) {
  trim_poly(a);
  const std::size_t dm = m.size() - 1;
  if (a.size() < m.size()) return {};
  Poly q(a.size() - dm, Rational(0));
  while (a.size() > dm) {
    Rational lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    q[shift] = lead;
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] -= lead * m[i];
    a.pop_back();
  }
  return q;
}

/// Data for the field Q(zeta_e): the cyclotomic polynomial and the reduced powers of zeta.
struct CyclotomicField {
  int conductor = 1;
  int degree = 1;
  Poly modulus;                 // Phi_e, monic
  std::vector<Poly> zeta_pow;   // zeta^k reduced, k = 0..e-1
};

inline const CyclotomicField& cyclotomic_field(int e) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(e);
  if (it != cache.end()) return *it->second;
  auto phi_of = [&](auto&& self, int n) -> Poly {
    Poly p(static_cast<std::size_t>(n) + 1, Rational(0));
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
      if (n % d == 0) p = poly_div_exact(p, self(self, d));
    return p;
  };
  auto f = std::make_shared<CyclotomicField>();
  f->conductor = e;
  f->modulus = phi_of(phi_of, e);
  f->degree = static_cast<int>(f->modulus.size()) - 1;
  for (int k = 0; k < e; ++k) {
    Poly x(static_cast<std::size_t>(k) + 1, Rational(0));
    x[k] = 1;
    f->zeta_pow.push_back(poly_mod(x, f->modulus));
  }
  cache.emplace(e, f);
  return *f;
}

}  // namespace detail

/// Exact element of Q(zeta_e), stored in the power basis 1, zeta, ..., zeta^{phi(e)-1}.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coords_{Rational(0)} {}
  Cyclotomic(const Rational& q) : conductor_(1), coords_{q} {}  // NOLINT: rationals embed
  Cyclotomic(long n) : Cyclotomic(Rational(n)) {}                // NOLINT

  /// zeta_e^k
  static Cyclotomic zeta(int e, long k) {
    const auto& f = detail::cyclotomic_field(e);
    long kk = ((k % e) + e) % e;
    return from_poly(e, f.zeta_pow[kk]);
  }

  static Cyclotomic from_coords(int e, std::vector<Rational> coords) {
    const auto& f = detail::cyclotomic_field(e);
    require(static_cast<int>(coords.size()) == f.degree, ErrorCode::InvalidInput, "wrong coordinate count");
    Cyclotomic c;
    c.conductor_ = e;
    c.coords_ = std::move(coords);
    return c;
  }

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& q : coords_)
      if (q != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
      if (coords_[i] != 0) return false;
    return true;
  }
  Rational rational_value() const {
    require(is_rational(), ErrorCode::NonRationalValues, "value is not rational");
    return coords_[0];
  }

  /// Same number written over Q(zeta_E) for a multiple E of the conductor.
  Cyclotomic promoted(int e) const {
    if (e == conductor_) return *this;
    require(e % conductor_ == 0, ErrorCode::Internal, "promotion to a non-multiple conductor");
    const auto& f = detail::cyclotomic_field(e);
    const int step = e / conductor_;
    std::vector<Rational> out(static_cast<std::size_t>(f.degree), Rational(0));
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] == 0) continue;
      const auto& p = f.zeta_pow[(static_cast<long>(i) * step) % e];
      for (std::size_t j = 0; j < p.size(); ++j) out[j] += coords_[i] * p[j];
    }
    return from_coords(e, std::move(out));
  }

  /// Rewrites over the smallest conductor dividing the current one (cheap checks only).
  Cyclotomic simplified() const {
    if (is_rational()) return Cyclotomic(coords_[0]);
    return *this;
  }

  Cyclotomic conj() const {
    const auto& f = detail::cyclotomic_field(conductor_);
    std::vector<Rational> out(static_cast<std::size_t>(f.degree), Rational(0));
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] == 0) continue;
      const auto& p = f.zeta_pow[(conductor_ - static_cast<int>(i)) % conductor_];
      for (std::size_t j = 0; j < p.size(); ++j) out[j] += coords_[i] * p[j];
    }
    return from_coords(conductor_, std::move(out));
  }

  /// Galois action zeta -> zeta^k for k coprime to the conductor.
  Cyclotomic galois(long k) const {
    const auto& f = detail::cyclotomic_field(conductor_);
    std::vector<Rational> out(static_cast<std::size_t>(f.degree), Rational(0));
    long kk = ((k % conductor_) + conductor_) % conductor_;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] == 0) continue;
      const auto& p = f.zeta_pow[(static_cast<long>(i) * kk) % conductor_];
      for (std::size_t j = 0; j < p.size(); ++j) out[j] += coords_[i] * p[j];
    }
    return from_coords(conductor_, std::move(out));
  }

  std::complex<double> to_complex() const {
    std::complex<double> z = 0;
    const double two_pi = 2.0 * std::acos(-1.0);
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (coords_[i] != 0) z += coords_[i].get_d() * std::polar(1.0, two_pi * static_cast<double>(i) / conductor_);
    return z;
  }

  Cyclotomic inverse() const {
    require(!is_zero(), ErrorCode::InvalidInput, "division by zero");
    if (conductor_ == 1) return Cyclotomic(Rational(1) / coords_[0]);
    // Extended Euclid: find s with s * a = 1 mod Phi_e.
    const auto& f = detail::cyclotomic_field(conductor_);
    detail::Poly r0 = f.modulus, r1 = coords_;
    detail::trim_poly(r1);
    detail::Poly s0{}, s1{Rational(1)};
    while (!(r1.size() == 1)) {
      auto [q, r] = divmod(r0, r1);
      auto s2 = sub(s0, detail::poly_mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      detail::trim_poly(r1);
      require(!r1.empty(), ErrorCode::Internal, "cyclotomic inverse failed");
    }
    Rational c = Rational(1) / r1[0];
    for (auto& x : s1) x *= c;
    return from_poly(conductor_, detail::poly_mod(s1, f.modulus));
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    int e = std::lcm(a.conductor_, b.conductor_);
    auto x = a.promoted(e), y = b.promoted(e);
    for (std::size_t i = 0; i < x.coords_.size(); ++i) x.coords_[i] += y.coords_[i];
    return x;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    int e = std::lcm(a.conductor_, b.conductor_);
    auto x = a.promoted(e), y = b.promoted(e);
    for (std::size_t i = 0; i < x.coords_.size(); ++i) x.coords_[i] -= y.coords_[i];
    return x;
  }
  Cyclotomic operator-() const {
    Cyclotomic x = *this;
    for (auto& q : x.coords_) q = -q;
    return x;
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ == 1) return b.scaled(a.coords_[0]);
    if (b.conductor_ == 1) return a.scaled(b.coords_[0]);
    int e = std::lcm(a.conductor_, b.conductor_);
    auto x = a.promoted(e), y = b.promoted(e);
    const auto& f = detail::cyclotomic_field(e);
    return from_poly(e, detail::poly_mod(detail::poly_mul(x.coords_, y.coords_), f.modulus));
  }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  Cyclotomic scaled(const Rational& q) const {
    Cyclotomic x = *this;
    for (auto& c : x.coords_) c *= q;
    return x;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).is_zero(); }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::string to_string() const {
    if (is_rational()) return coords_[0].get_str();
    std::string s;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] == 0) continue;
      if (!s.empty()) s += coords_[i] > 0 ? " + " : " - ";
      else if (coords_[i] < 0) s += "-";
      Rational a = abs(coords_[i]);
      std::string z = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
      if (i == 0) s += a.get_str();
      else if (a == 1) s += z;
      else s += a.get_str() + "*" + z;
    }
    return s + " (z=E(" + std::to_string(conductor_) + "))";
  }

 private:
  static Cyclotomic from_poly(int e, const detail::Poly& p) {
    const auto& f = detail::cyclotomic_field(e);
    std::vector<Rational> c(static_cast<std::size_t>(f.degree), Rational(0));
    for (std::size_t i = 0; i < p.size() && i < c.size(); ++i) c[i] = p[i];
    Cyclotomic x;
    x.conductor_ = e;
    x.coords_ = std::move(c);
    return x;
  }
  static detail::Poly sub(detail::Poly a, const detail::Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    detail::trim_poly(a);
    return a;
  }
  static std::pair<detail::Poly, detail::Poly> divmod(detail::Poly a, const detail::Poly& b) {
    detail::trim_poly(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {{}, a};
    detail::Poly q(a.size() - db, Rational(0));
    Rational lead_inv = Rational(1) / b.back();
    while (a.size() > db && !a.empty()) {
      Rational c = a.back() * lead_inv;
      std::size_t shift = a.size() - 1 - db;
      q[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
      a.pop_back();
      detail::trim_poly(a);
      if (a.size() < b.size()) break;
    }
    detail::trim_poly(q);
    return {q, a};
  }

  int conductor_;
  std::vector<Rational> coords_;
};

inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }

}  // namespace bisetkit
