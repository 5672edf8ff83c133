#ifndef COPA_TYPES_HPP
#define COPA_TYPES_HPP

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace copa {

template <typename Scalar>
using Vec = Eigen::Array<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Mat = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VecXd = Vec<double>;
using MatXd = Mat<double>;
using MatXcd = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic>;
using Index = Eigen::Index;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline double deg2rad(double d) { return d * pi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / pi; }

/// Direction cosine of an angle given in degrees (u = sin theta).
inline double dircos_from_deg(double d) { return std::sin(deg2rad(d)); }
/// Angle in degrees of a direction cosine (theta = asin u).
inline double deg_from_dircos(double u) { return rad2deg(std::asin(u)); }

/// Exact rational with int64 terms, used where fractional multipliers
/// must produce exact integer element counts (k2 = 8/3 and friends).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }
  std::int64_t integer() const {
    if (!is_integer()) throw std::invalid_argument("rational: not an integer");
    return num;
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  Rational operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }
  Rational operator*(std::int64_t s) const { return Rational(num * s, den); }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator>(const Rational& o) const { return num * o.den > o.num * den; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  /// Parses "8/3", "2", or a finite decimal such as "2.67" (taken exactly
  /// as 267/100, so an inexact decimal fails its integer-count checks
  /// honestly instead of being silently rounded).
  static Rational parse(const std::string& s);
};

}  // namespace copa

#endif
