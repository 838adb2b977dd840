#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gss {

// Raised when exact arithmetic leaves the 128-bit range. Exact-mode results
// are either correct or this is thrown; there is no silent wraparound.
struct ExactOverflow : std::runtime_error {
  ExactOverflow() : std::runtime_error("exact rational arithmetic overflowed 128-bit range") {}
};

// Reduced fraction over checked 128-bit integers. Denominator is kept
// positive and gcd-normalized after every operation.
class Rational {
 public:
  using Int = __int128;

  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  static Rational from_parts(Int n, Int d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    r.normalize();
    return r;
  }

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_parts(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                      checked_mul(a.den_, b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_parts(checked_sub(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                      checked_mul(a.den_, b.den_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_parts(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from_parts(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
  }
  Rational operator-() const { return from_parts(-num_, den_); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    std::string s = int_to_string(num_);
    if (den_ != 1) s += "/" + int_to_string(den_);
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  static std::string int_to_string(Int v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    std::string digits;
    while (u > 0) {
      digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
      u /= 10;
    }
    if (neg) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
  }

 private:
  Int num_;
  Int den_;

  static Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw ExactOverflow();
    return r;
  }
  static Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw ExactOverflow();
    return r;
  }
  static Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw ExactOverflow();
    return r;
  }

  static unsigned __int128 uabs(Int v) {
    return v < 0 ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  }

  static unsigned __int128 gcd_u(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
      unsigned __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      num_ = checked_sub(0, num_);
      den_ = checked_sub(0, den_);
    }
    unsigned __int128 g = gcd_u(uabs(num_), uabs(den_));
    if (g > 1) {
      num_ /= static_cast<Int>(g);
      den_ /= static_cast<Int>(g);
    }
  }
};

inline Rational abs(const Rational& r) { return r.abs(); }
inline Rational real(const Rational& r) { return r; }
inline Rational imag(const Rational&) { return Rational(0); }
inline Rational conj(const Rational& r) { return r; }
inline Rational abs2(const Rational& r) { return r * r; }

// Gaussian rational a + bi. The exact scalar for all complex computations.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long long re) : re_(re) {}  // NOLINT: implicit by design
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT: implicit by design
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.re_ * b.re_ + b.im_ * b.im_;
    if (n.is_zero()) throw std::domain_error("gaussian rational division by zero");
    return {(a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n};
  }
  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational abs2() const { return re_ * re_ + im_ * im_; }

  std::string str() const {
    if (im_.is_zero()) return re_.str();
    std::string s = re_.is_zero() ? std::string() : re_.str();
    if (im_.sign() > 0 && !s.empty()) s += "+";
    if (im_ == Rational(-1)) {
      s += "-";
    } else if (im_ != Rational(1)) {
      s += im_.str();
    }
    s += "i";
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.str();
  }

 private:
  Rational re_;
  Rational im_;
};

inline Rational real(const GaussianRational& z) { return z.real(); }
inline Rational imag(const GaussianRational& z) { return z.imag(); }
inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }
inline Rational abs2(const GaussianRational& z) { return z.abs2(); }

namespace detail {

inline Rational::Int checked_add_int(Rational::Int a, Rational::Int b) {
  Rational::Int r;
  if (__builtin_add_overflow(a, b, &r)) throw ExactOverflow();
  return r;
}

inline Rational::Int checked_mul_int(Rational::Int a, Rational::Int b) {
  Rational::Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw ExactOverflow();
  return r;
}

inline Rational::Int int_gcd(Rational::Int a, Rational::Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Rational::Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Rational::Int int_lcm(Rational::Int a, Rational::Int b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul_int(a / int_gcd(a, b), b);
}

// Gaussian integers as (re, im) pairs over checked 128-bit components.
struct Gint {
  Rational::Int re = 0;
  Rational::Int im = 0;
  bool is_zero() const { return re == 0 && im == 0; }
};

inline Gint gint_mul(const Gint& a, const Gint& b) {
  return {checked_add_int(checked_mul_int(a.re, b.re), -checked_mul_int(a.im, b.im)),
          checked_add_int(checked_mul_int(a.re, b.im), checked_mul_int(a.im, b.re))};
}

inline Gint gint_conj(const Gint& a) { return {a.re, -a.im}; }

inline Rational::Int round_div(Rational::Int p, Rational::Int q) {
  // nearest integer to p/q for q > 0
  if (p >= 0) return (p + q / 2) / q;
  return -((-p + q / 2) / q);
}

// Euclidean gcd in Z[i] with nearest-integer division.
inline Gint gint_gcd(Gint a, Gint b) {
  while (!b.is_zero()) {
    Rational::Int n = checked_add_int(checked_mul_int(b.re, b.re), checked_mul_int(b.im, b.im));
    Gint num = gint_mul(a, gint_conj(b));
    Gint q{round_div(num.re, n), round_div(num.im, n)};
    Gint r{checked_add_int(a.re, -gint_mul(q, b).re), checked_add_int(a.im, -gint_mul(q, b).im)};
    a = b;
    b = r;
  }
  return a;
}

}  // namespace detail

}  // namespace gss
