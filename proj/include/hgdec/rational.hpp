#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hgdec {

// Exact small rational. Cover weights and widths are kept as rationals so
// that coverage tests never depend on float noise; floats entering the
// system are snapped to a bounded-denominator rational at the boundary.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d);

  // Best rational approximation of x with denominator <= max_den
  // (continued-fraction convergents and semiconvergents).
  static Rational from_double(double x, std::int64_t max_den = 1'000'000);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  bool is_integer() const { return den_ == 1; }
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string to_string() const;             // "3/2", "2"
  std::string to_decimal(int places = 6) const;  // "1.5", "0.333333"

 private:
  void normalize();

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace hgdec
