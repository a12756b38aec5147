#pragma once

// Permutation-symmetric n-qubit pure states in the Dicke basis and their
// Majorana representation.
//
//   psi(z) = sum_k (-1)^{k-n} a_k sqrt(C(n,k)) z^k  ~  prod_i (z - z_i)
//
// Roots missing from the finite part (degree deficit) sit at infinity, the
// north pole, which is where |0> lives.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include <Eigen/Core>

#include "majorana/errors.hpp"
#include "majorana/extended_complex.hpp"
#include "majorana/moebius.hpp"
#include "majorana/polynomial.hpp"

namespace majorana {

template <typename Scalar>
using Amplitudes = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
Scalar binomial(int n, int k) {
  if (k < 0 || k > n) return Scalar(0);
  k = std::min(k, n - k);
  Scalar acc = 1;
  for (int i = 1; i <= k; ++i) acc = acc * Scalar(n - k + i) / Scalar(i);
  return std::round(acc);
}

/// Normalized amplitudes a_0..a_n with a canonical global phase: the lowest-k
/// amplitude above 1e-12 * max|a| is real and positive.
template <typename Scalar>
class SymmetricState {
 public:
  using Complex = std::complex<Scalar>;
  using Vector = Amplitudes<Scalar>;

  explicit SymmetricState(Vector amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() < 2) throw DomainError("SymmetricState: need n >= 1 (at least two amplitudes)");
    for (Eigen::Index k = 0; k < amps_.size(); ++k) {
      if (!std::isfinite(amps_(k).real()) || !std::isfinite(amps_(k).imag())) {
        throw DomainError("SymmetricState: non-finite amplitude");
      }
    }
    const Scalar peak = amps_.cwiseAbs().maxCoeff();
    if (peak == 0) throw DomainError("SymmetricState: zero vector");
    // Already-normalized input is left untouched so that states re-read from
    // serialized documents reproduce the same bits.
    const Scalar slack = Scalar(4) * std::numeric_limits<Scalar>::epsilon() * Scalar(amps_.size());
    if (!(std::abs(amps_.norm() - 1) <= slack)) {
      amps_ /= peak;  // guards the norm against overflow
      amps_ /= amps_.norm();
    }
    for (Eigen::Index k = 0; k < amps_.size(); ++k) {
      const Scalar r = std::abs(amps_(k));
      if (r > Scalar(1e-12) * amps_.cwiseAbs().maxCoeff()) {
        if (amps_(k).imag() == 0 && amps_(k).real() > 0) break;
        amps_ *= std::conj(amps_(k)) / r;
        amps_(k) = Complex(std::abs(amps_(k)), 0);
        break;
      }
    }
  }

  int n() const { return static_cast<int>(amps_.size()) - 1; }
  const Vector& amplitudes() const { return amps_; }
  Complex operator[](int k) const { return amps_(k); }

 private:
  Vector amps_;
};

using SymmetricStated = SymmetricState<double>;

/// |<s1|s2>| for normalized states.
template <typename Scalar>
Scalar fidelity(const SymmetricState<Scalar>& s1, const SymmetricState<Scalar>& s2) {
  if (s1.n() != s2.n()) throw DomainError("fidelity: qubit counts differ");
  return std::abs(s1.amplitudes().dot(s2.amplitudes()));
}

/// Dicke state |S_k> of n qubits.
template <typename Scalar = double>
SymmetricState<Scalar> dicke(int n, int k) {
  if (n < 1) throw DomainError("dicke: n must be at least 1");
  if (k < 0 || k > n) throw DomainError("dicke: k must lie in [0, n]");
  Amplitudes<Scalar> a = Amplitudes<Scalar>::Zero(n + 1);
  a(k) = 1;
  return SymmetricState<Scalar>(a);
}

/// Builds a state from unnormalized amplitudes given as a list.
template <typename Scalar = double>
SymmetricState<Scalar> make_state(std::initializer_list<std::complex<Scalar>> amps) {
  Amplitudes<Scalar> a(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index k = 0;
  for (const auto& x : amps) a(k++) = x;
  return SymmetricState<Scalar>(a);
}

/// Coefficients c_0..c_n of the Majorana polynomial.
template <typename Scalar>
Coefficients<Scalar> majorana_polynomial(const SymmetricState<Scalar>& s) {
  const int n = s.n();
  Coefficients<Scalar> c(n + 1);
  for (int k = 0; k <= n; ++k) {
    const Scalar sign = ((n - k) % 2 == 0) ? Scalar(1) : Scalar(-1);
    c(k) = sign * std::sqrt(binomial<Scalar>(n, k)) * s[k];
  }
  return c;
}

/// n Majorana points: finite roots sorted by (modulus, argument in [0, 2pi))
/// plus a multiplicity at infinity.
template <typename Scalar>
class RootMultiset {
 public:
  using Complex = std::complex<Scalar>;

  RootMultiset(int n, std::vector<Complex> finite_roots, int infinity_count)
      : n_(n), finite_(std::move(finite_roots)), infinity_(infinity_count) {
    if (n_ < 1) throw DomainError("RootMultiset: n must be at least 1");
    if (infinity_ < 0 || static_cast<int>(finite_.size()) + infinity_ != n_) {
      throw DomainError("RootMultiset: finite roots plus infinity count must equal n");
    }
    for (const auto& z : finite_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("RootMultiset: non-finite root");
    }
    std::sort(finite_.begin(), finite_.end(), [](const Complex& a, const Complex& b) {
      const Scalar ra = std::abs(a), rb = std::abs(b);
      if (ra != rb) return ra < rb;
      return positive_arg(a) < positive_arg(b);
    });
  }

  /// Convenience: build from extended points.
  static RootMultiset from_points(const std::vector<ExtendedComplex<Scalar>>& points) {
    std::vector<Complex> finite;
    int inf = 0;
    for (const auto& p : points) {
      if (p.is_infinite()) {
        ++inf;
      } else {
        finite.push_back(p.value());
      }
    }
    return RootMultiset(static_cast<int>(points.size()), std::move(finite), inf);
  }

  int n() const { return n_; }
  const std::vector<Complex>& finite_roots() const { return finite_; }
  int infinity_count() const { return infinity_; }

  /// All n points in serialized order, infinity last.
  std::vector<ExtendedComplex<Scalar>> points() const {
    std::vector<ExtendedComplex<Scalar>> out(finite_.begin(), finite_.end());
    for (int i = 0; i < infinity_; ++i) out.push_back(ExtendedComplex<Scalar>::infinity());
    return out;
  }

  static Scalar positive_arg(const Complex& z) {
    Scalar a = std::arg(z);
    if (a < 0) a += 2 * std::numbers::pi_v<Scalar>;
    if (a >= 2 * std::numbers::pi_v<Scalar>) a = 0;
    return a;
  }

 private:
  int n_;
  std::vector<Complex> finite_;
  int infinity_;
};

using RootMultisetd = RootMultiset<double>;

template <typename Scalar>
RootMultiset<Scalar> majorana_roots(const SymmetricState<Scalar>& s,
                                    const RootFinderOptions<Scalar>& options = RootFinderOptions<Scalar>()) {
  const auto found = find_roots(majorana_polynomial(s), options);
  return RootMultiset<Scalar>(s.n(), found.finite, found.at_infinity);
}

/// Inverse of majorana_roots. The product is expanded in homogeneous form
/// prod_i (w_i z - u_i) with unit spinors (u_i, w_i), so infinite roots enter
/// as constant factors and large roots do not overflow.
template <typename Scalar>
SymmetricState<Scalar> state_from_roots(const RootMultiset<Scalar>& r) {
  using C = std::complex<Scalar>;
  const int n = r.n();
  Coefficients<Scalar> poly = Coefficients<Scalar>::Zero(n + 1);
  poly(0) = C(1);
  int degree = 0;
  for (const auto& p : r.points()) {
    const auto s = spinor(p);
    const C u = s(0), w = s(1);
    for (int k = degree + 1; k >= 1; --k) poly(k) = poly(k) * (-u) + poly(k - 1) * w;
    poly(0) *= -u;
    ++degree;
  }
  Amplitudes<Scalar> a(n + 1);
  for (int k = 0; k <= n; ++k) {
    const Scalar sign = ((n - k) % 2 == 0) ? Scalar(1) : Scalar(-1);
    a(k) = poly(k) / (sign * std::sqrt(binomial<Scalar>(n, k)));
  }
  // Exact zeros above the finite degree.
  for (int k = n - r.infinity_count() + 1; k <= n; ++k) a(k) = C(0);
  return SymmetricState<Scalar>(a);
}

/// Root-level action of the symmetric SLOCC operation B^{(x)n}: every
/// Majorana root moves under the Moebius map with B's entries.
template <typename Scalar>
SymmetricState<Scalar> apply_symmetric(const MoebiusMap<Scalar>& m, const SymmetricState<Scalar>& s) {
  const auto roots = majorana_roots(s);
  std::vector<ExtendedComplex<Scalar>> image;
  for (const auto& p : roots.points()) image.push_back(apply(m, p));
  return state_from_roots(RootMultiset<Scalar>::from_points(image));
}

template <typename Scalar>
SymmetricState<Scalar> apply_symmetric(const Eigen::Matrix<std::complex<Scalar>, 2, 2>& b,
                                       const SymmetricState<Scalar>& s) {
  return apply_symmetric(MoebiusMap<Scalar>(b), s);
}

}  // namespace majorana
