#include "hgdec/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

namespace hgdec {

namespace {

std::int64_t checked_cast(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error("rational overflow");
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational Rational::operator+(const Rational& o) const {
  __int128 n = static_cast<__int128>(num_) * o.den_ +
               static_cast<__int128>(o.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  auto abs128 = [](__int128 v) { return v < 0 ? -v : v; };
  __int128 a = abs128(n), b = d;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  Rational r;
  r.num_ = checked_cast(n);
  r.den_ = checked_cast(d);
  return r;
}

Rational Rational::operator-(const Rational& o) const {
  Rational neg;
  neg.num_ = -o.num_;
  neg.den_ = o.den_;
  return *this + neg;
}

Rational Rational::operator*(const Rational& o) const {
  std::int64_t g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
  std::int64_t g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
  __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
  __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
  Rational r;
  r.num_ = checked_cast(n);
  r.den_ = checked_cast(d);
  return r;
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num_) * o.den_ <
         static_cast<__int128>(o.num_) * den_;
}

Rational Rational::from_double(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite weight");
  bool neg = x < 0;
  double v = neg ? -x : x;
  // Continued-fraction expansion: p/q track the current convergent,
  // pp/qq the previous one.
  std::int64_t pp = 1, qq = 0, p = static_cast<std::int64_t>(std::floor(v)),
               q = 1;
  double frac = v - std::floor(v);
  while (frac > 1e-12) {
    double inv = 1.0 / frac;
    std::int64_t a = static_cast<std::int64_t>(std::floor(inv));
    frac = inv - std::floor(inv);
    __int128 np = static_cast<__int128>(a) * p + pp;
    __int128 nq = static_cast<__int128>(a) * q + qq;
    if (nq > max_den) {
      // Best semiconvergent within the denominator budget.
      std::int64_t k = static_cast<std::int64_t>((max_den - qq) / q);
      __int128 sp = static_cast<__int128>(k) * p + pp;
      __int128 sq = static_cast<__int128>(k) * q + qq;
      double cand = static_cast<double>(sp) / static_cast<double>(sq);
      double conv = static_cast<double>(p) / static_cast<double>(q);
      if (sq > 0 && std::abs(cand - v) < std::abs(conv - v)) {
        p = checked_cast(sp);
        q = checked_cast(sq);
      }
      break;
    }
    pp = p;
    qq = q;
    p = checked_cast(np);
    q = checked_cast(nq);
    if (frac <= 1e-12) break;
  }
  Rational r(neg ? -p : p, q);
  return r;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal(int places) const {
  if (den_ == 1) return std::to_string(num_);
  bool neg = num_ < 0;
  std::int64_t n = neg ? -num_ : num_;
  std::int64_t ip = n / den_;
  std::int64_t rem = n % den_;
  std::string frac;
  for (int i = 0; i < places && rem != 0; ++i) {
    rem *= 10;
    frac += static_cast<char>('0' + rem / den_);
    rem %= den_;
  }
  // Round the last emitted digit to nearest.
  if (rem * 2 >= den_ && !frac.empty()) {
    int i = static_cast<int>(frac.size()) - 1;
    while (i >= 0) {
      if (frac[i] != '9') {
        ++frac[i];
        break;
      }
      frac[i] = '0';
      --i;
    }
    if (i < 0) ++ip;
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (neg ? "-" : "") + std::to_string(ip);
  if (!frac.empty()) out += "." + frac;
  return out;
}

}  // namespace hgdec
