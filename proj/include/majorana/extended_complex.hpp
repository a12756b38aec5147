#pragma once

// Points of the extended complex plane and the Majorana sphere.
//
// Sphere convention: z = cot(theta/2) * exp(-i phi). The point at infinity is
// the north pole (theta = 0) and z = 0 the south pole. With this orientation
// the single-qubit state cos(theta/2)|0> + exp(i phi) sin(theta/2)|1> has its
// Majorana root at z = cos(theta/2) / (exp(i phi) sin(theta/2)).

#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>

#include <Eigen/Core>

#include "majorana/errors.hpp"

namespace majorana {

template <typename Scalar>
class ExtendedComplex {
 public:
  using RealScalar = Scalar;
  using Complex = std::complex<Scalar>;

  ExtendedComplex() = default;
  ExtendedComplex(Complex z) : value_(z) {  // NOLINT(google-explicit-constructor)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("ExtendedComplex: finite value expected, use infinity()");
    }
  }
  ExtendedComplex(Scalar x) : ExtendedComplex(Complex(x, 0)) {}  // NOLINT

  static ExtendedComplex infinity() {
    ExtendedComplex p;
    p.infinite_ = true;
    return p;
  }

  /// Wraps a possibly overflowed quotient: non-finite values become infinity.
  static ExtendedComplex from_unchecked(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return infinity();
    return ExtendedComplex(z);
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  Complex value() const {
    if (infinite_) throw DomainError("ExtendedComplex: value() of the point at infinity");
    return value_;
  }

  /// Exact equality; use chordal_distance for numerical comparisons.
  friend bool operator==(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtendedComplex& p) {
    if (p.infinite_) return os << "inf";
    return os << p.value_;
  }

 private:
  Complex value_{0, 0};
  bool infinite_ = false;
};

using ExtendedComplexd = ExtendedComplex<double>;

/// Unit spinor (u, w) with z = u / w; infinity is (1, 0).
template <typename Scalar>
Eigen::Matrix<std::complex<Scalar>, 2, 1> spinor(const ExtendedComplex<Scalar>& p) {
  using C = std::complex<Scalar>;
  Eigen::Matrix<C, 2, 1> v;
  if (p.is_infinite()) {
    v << C(1), C(0);
    return v;
  }
  const C z = p.value();
  const Scalar r = std::abs(z);
  if (r <= Scalar(1)) {
    v << z, C(1);
  } else {
    v << C(1), C(1) / z;
  }
  v /= v.norm();
  return v;
}

/// Chordal distance on the unit sphere: 2|z-w| / sqrt((1+|z|^2)(1+|w|^2)).
template <typename Scalar>
Scalar chordal_distance(const ExtendedComplex<Scalar>& a, const ExtendedComplex<Scalar>& b) {
  if (a.is_infinite() && b.is_infinite()) return Scalar(0);
  if (a.is_infinite() || b.is_infinite()) {
    const auto z = a.is_infinite() ? b.value() : a.value();
    return Scalar(2) / std::sqrt(Scalar(1) + std::norm(z));
  }
  // Spinor form avoids overflow for large moduli: |u1 w2 - u2 w1| = |z-w|/sqrt(..).
  const auto s = spinor(a);
  const auto t = spinor(b);
  return Scalar(2) * std::abs(s(0) * t(1) - t(0) * s(1));
}

template <typename Scalar>
struct SpherePoint {
  Scalar theta{0};  ///< polar angle in [0, pi]
  Scalar phi{0};    ///< azimuth in [0, 2 pi), zero at the poles
};

using SpherePointd = SpherePoint<double>;

template <typename Scalar>
SpherePoint<Scalar> make_sphere_point(Scalar theta, Scalar phi) {
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  if (!(theta >= 0 && theta <= pi)) throw DomainError("SpherePoint: theta outside [0, pi]");
  if (!std::isfinite(phi)) throw DomainError("SpherePoint: non-finite phi");
  if (theta == 0 || theta == pi) return {theta, Scalar(0)};
  Scalar wrapped = std::fmod(phi, 2 * pi);
  if (wrapped < 0) wrapped += 2 * pi;
  if (wrapped >= 2 * pi) wrapped = 0;
  return {theta, wrapped + Scalar(0)};  // + 0 turns -0 into 0
}

template <typename Scalar>
SpherePoint<Scalar> to_sphere(const ExtendedComplex<Scalar>& p) {
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  if (p.is_infinite()) return {Scalar(0), Scalar(0)};
  const auto z = p.value();
  const Scalar r = std::abs(z);
  if (r == 0) return {pi, Scalar(0)};
  const Scalar theta = 2 * std::atan2(Scalar(1), r);
  return make_sphere_point(theta, -std::arg(z));
}

template <typename Scalar>
ExtendedComplex<Scalar> from_sphere(const SpherePoint<Scalar>& s) {
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  if (s.theta == 0) return ExtendedComplex<Scalar>::infinity();
  if (s.theta == pi) return ExtendedComplex<Scalar>(Scalar(0));
  const Scalar half = s.theta / 2;
  return ExtendedComplex<Scalar>(std::polar(std::cos(half) / std::sin(half), -s.phi));
}

/// Cartesian coordinates (sin t cos p, sin t sin p, cos t) on the unit sphere.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 1> to_cartesian(const SpherePoint<Scalar>& s) {
  Eigen::Matrix<Scalar, 3, 1> v;
  v << std::sin(s.theta) * std::cos(s.phi), std::sin(s.theta) * std::sin(s.phi), std::cos(s.theta);
  return v;
}

template <typename Scalar>
Eigen::Matrix<Scalar, 3, 1> to_cartesian(const ExtendedComplex<Scalar>& p) {
  return to_cartesian(to_sphere(p));
}

/// Parameter t = exp(i phi) tan(theta/2) of the canonical families, in spinor
/// form (numerator, denominator) = (exp(i phi) sin(theta/2), cos(theta/2)) so
/// that theta = pi stays finite. The moving root 1/t is then from_sphere(theta, phi).
template <typename Scalar>
Eigen::Matrix<std::complex<Scalar>, 2, 1> family_parameter(const SpherePoint<Scalar>& s) {
  Eigen::Matrix<std::complex<Scalar>, 2, 1> v;
  v << std::polar(std::sin(s.theta / 2), s.phi), std::complex<Scalar>(std::cos(s.theta / 2));
  return v;
}

}  // namespace majorana
