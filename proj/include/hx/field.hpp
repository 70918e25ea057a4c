#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hx {

// Prime modulus shared by all Gf values in a computation.  65521 is the
// largest prime below 2^16, so products fit comfortably in 64 bits.
inline uint64_t& gf_modulus() {
  static uint64_t p = 65521;
  return p;
}

inline void set_gf_modulus(uint64_t p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("gf modulus must be an odd prime");
  gf_modulus() = p;
}

// Element of GF(p) for the configured odd prime p.
class Gf {
 public:
  Gf() : v_(0) {}
  Gf(long long x) {
    long long p = static_cast<long long>(gf_modulus());
    long long r = x % p;
    if (r < 0) r += p;
    v_ = static_cast<uint64_t>(r);
  }

  static Gf from_fraction(long long num, long long den) { return Gf(num) / Gf(den); }

  bool is_zero() const { return v_ == 0; }
  uint64_t value() const { return v_; }

  Gf operator-() const { return raw(v_ == 0 ? 0 : gf_modulus() - v_); }
  Gf operator+(const Gf& o) const {
    uint64_t s = v_ + o.v_;
    if (s >= gf_modulus()) s -= gf_modulus();
    return raw(s);
  }
  Gf operator-(const Gf& o) const { return *this + (-o); }
  Gf operator*(const Gf& o) const { return raw((v_ * o.v_) % gf_modulus()); }
  Gf operator/(const Gf& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero in GF(p)");
    return *this * o.inverse();
  }
  Gf& operator+=(const Gf& o) { return *this = *this + o; }
  Gf& operator-=(const Gf& o) { return *this = *this - o; }
  Gf& operator*=(const Gf& o) { return *this = *this * o; }
  Gf& operator/=(const Gf& o) { return *this = *this / o; }

  bool operator==(const Gf& o) const { return v_ == o.v_; }
  bool operator!=(const Gf& o) const { return v_ != o.v_; }

  Gf inverse() const {
    // Fermat: a^(p-2) mod p.
    uint64_t base = v_, e = gf_modulus() - 2, acc = 1, p = gf_modulus();
    while (e) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return raw(acc);
  }

  std::string str() const { return std::to_string(v_); }

 private:
  static Gf raw(uint64_t v) {
    Gf g;
    g.v_ = v;
    return g;
  }
  uint64_t v_;
};

// Exact rational scalar.
class Rat {
 public:
  using rep = boost::multiprecision::cpp_rational;

  Rat() : v_(0) {}
  Rat(long long x) : v_(x) {}
  Rat(rep v) : v_(std::move(v)) {}

  static Rat from_fraction(long long num, long long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    return Rat(rep(num, den));
  }

  bool is_zero() const { return v_ == 0; }
  const rep& value() const { return v_; }

  Rat operator-() const { return Rat(-v_); }
  Rat operator+(const Rat& o) const { return Rat(v_ + o.v_); }
  Rat operator-(const Rat& o) const { return Rat(v_ - o.v_); }
  Rat operator*(const Rat& o) const { return Rat(v_ * o.v_); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return Rat(v_ / o.v_);
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }
  bool operator<(const Rat& o) const { return v_ < o.v_; }
  bool operator<=(const Rat& o) const { return v_ <= o.v_; }
  bool operator>(const Rat& o) const { return v_ > o.v_; }
  bool operator>=(const Rat& o) const { return v_ >= o.v_; }

  std::string str() const { return v_.str(); }

 private:
  rep v_;
};

}  // namespace hx
