#pragma once

// Moebius transformations f(z) = (az + b)/(cz + d) on the extended complex
// plane, stored as 2x2 matrices normalized to unit determinant. The same
// matrix is the single-qubit operation B of a symmetric SLOCC operation B^{(x)n}:
// Majorana roots transform under f with exactly these entries.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <ostream>
#include <vector>

#include <Eigen/Core>
#include <Eigen/LU>

#include "majorana/errors.hpp"
#include "majorana/extended_complex.hpp"

namespace majorana {

template <typename Scalar>
class MoebiusMap {
 public:
  using Complex = std::complex<Scalar>;
  using Matrix = Eigen::Matrix<Complex, 2, 2>;

  MoebiusMap() : m_(Matrix::Identity()) {}

  explicit MoebiusMap(const Matrix& m) : m_(m) { normalize(); }

  MoebiusMap(Complex a, Complex b, Complex c, Complex d) {
    m_ << a, b, c, d;
    normalize();
  }

  static MoebiusMap identity() { return MoebiusMap(); }

  /// f(z) = A z + B
  static MoebiusMap affine(Complex scale, Complex offset) {
    return MoebiusMap(scale, offset, Complex(0), Complex(1));
  }

  /// z -> exp(i angle) z
  static MoebiusMap rotation_z(Scalar angle) {
    return MoebiusMap(std::polar(Scalar(1), angle), Complex(0), Complex(0), Complex(1));
  }

  /// z -> 1/z, the R_x(pi) rotation of the sphere.
  static MoebiusMap inversion() { return MoebiusMap(Complex(0), Complex(1), Complex(1), Complex(0)); }

  const Matrix& matrix() const { return m_; }
  Complex a() const { return m_(0, 0); }
  Complex b() const { return m_(0, 1); }
  Complex c() const { return m_(1, 0); }
  Complex d() const { return m_(1, 1); }
  Complex trace() const { return m_(0, 0) + m_(1, 1); }

  friend std::ostream& operator<<(std::ostream& os, const MoebiusMap& m) {
    return os << "[" << m.a() << ", " << m.b() << "; " << m.c() << ", " << m.d() << "]";
  }

 private:
  void normalize() {
    const Scalar scale = m_.cwiseAbs().maxCoeff();
    if (!std::isfinite(scale) || scale == 0) throw DomainError("MoebiusMap: zero or non-finite matrix");
    const Complex det = m_.determinant();
    if (!(std::abs(det) > Scalar(1e-13) * scale * scale)) {
      throw DomainError("MoebiusMap: singular matrix (ad - bc = 0)");
    }
    // Square root with nonnegative real part, positive imaginary part on ties.
    Complex root = std::sqrt(det);
    if (root.real() < 0 || (root.real() == 0 && root.imag() < 0)) root = -root;
    m_ /= root;
  }

  Matrix m_;
};

using MoebiusMapd = MoebiusMap<double>;

template <typename Scalar>
ExtendedComplex<Scalar> apply(const MoebiusMap<Scalar>& m, const ExtendedComplex<Scalar>& z) {
  using C = std::complex<Scalar>;
  if (z.is_infinite()) {
    if (m.c() == C(0)) return ExtendedComplex<Scalar>::infinity();
    return ExtendedComplex<Scalar>::from_unchecked(m.a() / m.c());
  }
  const C x = z.value();
  const C den = m.c() * x + m.d();
  if (den == C(0)) return ExtendedComplex<Scalar>::infinity();
  return ExtendedComplex<Scalar>::from_unchecked((m.a() * x + m.b()) / den);
}

/// compose(m2, m1) applies m1 first.
template <typename Scalar>
MoebiusMap<Scalar> compose(const MoebiusMap<Scalar>& m2, const MoebiusMap<Scalar>& m1) {
  return MoebiusMap<Scalar>(typename MoebiusMap<Scalar>::Matrix(m2.matrix() * m1.matrix()));
}

template <typename Scalar>
MoebiusMap<Scalar> inverse(const MoebiusMap<Scalar>& m) {
  return MoebiusMap<Scalar>(m.d(), -m.b(), -m.c(), m.a());
}

/// True when m and n are the same transformation (equal up to sign) within tol.
template <typename Scalar>
bool projectively_equal(const MoebiusMap<Scalar>& m, const MoebiusMap<Scalar>& n, Scalar tol) {
  const Scalar plus = (m.matrix() - n.matrix()).cwiseAbs().maxCoeff();
  const Scalar minus = (m.matrix() + n.matrix()).cwiseAbs().maxCoeff();
  const Scalar scale = std::max(Scalar(1), m.matrix().cwiseAbs().maxCoeff());
  return std::min(plus, minus) <= tol * scale;
}

namespace detail {

// Matrix sending (v1, v2, v3) to (0, 1, infinity).
template <typename Scalar>
Eigen::Matrix<std::complex<Scalar>, 2, 2> to_reference_triple(const ExtendedComplex<Scalar>& v1,
                                                              const ExtendedComplex<Scalar>& v2,
                                                              const ExtendedComplex<Scalar>& v3) {
  using C = std::complex<Scalar>;
  Eigen::Matrix<C, 2, 2> t;
  if (v1.is_infinite()) {
    // (v2 - v3) / (z - v3)
    t << C(0), v2.value() - v3.value(), C(1), -v3.value();
  } else if (v2.is_infinite()) {
    // (z - v1) / (z - v3)
    t << C(1), -v1.value(), C(1), -v3.value();
  } else if (v3.is_infinite()) {
    // (z - v1) / (v2 - v1)
    t << C(1), -v1.value(), C(0), v2.value() - v1.value();
  } else {
    const C p = v1.value(), q = v2.value(), r = v3.value();
    t << q - r, -p * (q - r), q - p, -r * (q - p);
  }
  return t;
}

template <typename Scalar>
void require_distinct(const ExtendedComplex<Scalar>& a, const ExtendedComplex<Scalar>& b,
                      const ExtendedComplex<Scalar>& c, Scalar tol) {
  if (chordal_distance(a, b) <= tol || chordal_distance(a, c) <= tol || chordal_distance(b, c) <= tol) {
    throw DomainError("from_three_points: points of a triple must be pairwise distinct");
  }
}

}  // namespace detail

/// The unique Moebius map with v_i -> w_i, built through the reference
/// triple (0, 1, infinity).
template <typename Scalar>
MoebiusMap<Scalar> from_three_points(const std::array<ExtendedComplex<Scalar>, 3>& v,
                                     const std::array<ExtendedComplex<Scalar>, 3>& w,
                                     Scalar tol = Scalar(1e-12)) {
  detail::require_distinct(v[0], v[1], v[2], tol);
  detail::require_distinct(w[0], w[1], w[2], tol);
  const auto tv = detail::to_reference_triple(v[0], v[1], v[2]);
  const auto tw = detail::to_reference_triple(w[0], w[1], w[2]);
  // tw^{-1} up to scale is its adjugate.
  Eigen::Matrix<std::complex<Scalar>, 2, 2> adj;
  adj << tw(1, 1), -tw(0, 1), -tw(1, 0), tw(0, 0);
  return MoebiusMap<Scalar>(Eigen::Matrix<std::complex<Scalar>, 2, 2>(adj * tv));
}

/// (v1 - v3)(v2 - v4) / ((v2 - v3)(v1 - v4)). Evaluated in homogeneous
/// coordinates, where the factors belonging to an infinite point cancel
/// exactly. Returns infinity for a vanishing denominator; 0/0 is a domain error.
template <typename Scalar>
ExtendedComplex<Scalar> cross_ratio(const ExtendedComplex<Scalar>& v1, const ExtendedComplex<Scalar>& v2,
                                    const ExtendedComplex<Scalar>& v3, const ExtendedComplex<Scalar>& v4) {
  using C = std::complex<Scalar>;
  auto hom = [](const ExtendedComplex<Scalar>& p) -> std::array<C, 2> {
    if (p.is_infinite()) return {C(1), C(0)};
    return {p.value(), C(1)};
  };
  const auto p1 = hom(v1), p2 = hom(v2), p3 = hom(v3), p4 = hom(v4);
  auto bracket = [](const std::array<C, 2>& x, const std::array<C, 2>& y) { return x[0] * y[1] - y[0] * x[1]; };
  const C num = bracket(p1, p3) * bracket(p2, p4);
  const C den = bracket(p2, p3) * bracket(p1, p4);
  if (den == C(0)) {
    if (num == C(0)) throw DomainError("cross_ratio: undefined 0/0 configuration");
    return ExtendedComplex<Scalar>::infinity();
  }
  return ExtendedComplex<Scalar>::from_unchecked(num / den);
}

enum class MapKind { identity, parabolic, elliptic, hyperbolic, loxodromic };

inline const char* to_string(MapKind k) {
  switch (k) {
    case MapKind::identity: return "identity";
    case MapKind::parabolic: return "parabolic";
    case MapKind::elliptic: return "elliptic";
    case MapKind::hyperbolic: return "hyperbolic";
    case MapKind::loxodromic: return "loxodromic";
  }
  return "unknown";
}

template <typename Scalar>
struct MapClass {
  MapKind kind = MapKind::identity;
  std::vector<ExtendedComplex<Scalar>> fixed_points;  ///< empty for the identity
};

/// Classification by tr^2 of the unit-determinant matrix, with fixed points
/// solving c z^2 + (d - a) z - b = 0.
template <typename Scalar>
MapClass<Scalar> classify_map(const MoebiusMap<Scalar>& m, Scalar tol = Scalar(1e-10)) {
  using C = std::complex<Scalar>;
  using P = ExtendedComplex<Scalar>;
  MapClass<Scalar> out;
  const Scalar scale = std::max(Scalar(1), m.matrix().cwiseAbs().maxCoeff());
  if (std::abs(m.b()) <= tol * scale && std::abs(m.c()) <= tol * scale && std::abs(m.a() - m.d()) <= tol * scale) {
    out.kind = MapKind::identity;
    return out;
  }
  const C tr2 = m.trace() * m.trace();
  const Scalar slack = tol * (Scalar(1) + std::abs(tr2));
  const bool real = std::abs(tr2.imag()) <= slack;
  const bool parabolic = std::abs(tr2 - C(4)) <= slack;
  if (parabolic) {
    out.kind = MapKind::parabolic;
  } else if (real && tr2.real() >= 0 && tr2.real() < 4) {
    out.kind = MapKind::elliptic;
  } else if (real && tr2.real() > 4) {
    out.kind = MapKind::hyperbolic;
  } else {
    out.kind = MapKind::loxodromic;
  }

  const C qa = m.c(), qb = m.d() - m.a(), qc = -m.b();
  if (qa == C(0)) {
    out.fixed_points.push_back(P::infinity());
    if (!parabolic && qb != C(0)) out.fixed_points.push_back(P::from_unchecked(-qc / qb));
    return out;
  }
  if (parabolic) {
    out.fixed_points.push_back(P::from_unchecked(-qb / (Scalar(2) * qa)));
    return out;
  }
  // Discriminant (d-a)^2 + 4bc = tr^2 - 4 for unit determinant.
  const C s = std::sqrt(qb * qb - Scalar(4) * qa * qc);
  const C q = (std::real(std::conj(qb) * s) >= 0) ? C(-0.5) * (qb + s) : C(-0.5) * (qb - s);
  if (q == C(0)) {
    out.fixed_points.push_back(P(C(0)));
    out.fixed_points.push_back(P(C(0)));
    return out;
  }
  out.fixed_points.push_back(P::from_unchecked(q / qa));
  out.fixed_points.push_back(P::from_unchecked(qc / q));
  return out;
}

/// Returns the SU(2) representative (alpha, -conj(beta); beta, conj(alpha))
/// when m^dagger m is a positive multiple of the identity within tol.
template <typename Scalar>
std::optional<MoebiusMap<Scalar>> is_projective_unitary(const MoebiusMap<Scalar>& m, Scalar tol = Scalar(1e-9)) {
  using C = std::complex<Scalar>;
  const auto h = (m.matrix().adjoint() * m.matrix()).eval();
  const Scalar half_trace = (h(0, 0).real() + h(1, 1).real()) / 2;
  if (std::abs(h(0, 1)) > tol * half_trace || std::abs(h(0, 0) - h(1, 1)) > tol * half_trace) {
    return std::nullopt;
  }
  C alpha = (m.a() + std::conj(m.d())) / Scalar(2);
  C beta = (m.c() - std::conj(m.b())) / Scalar(2);
  const Scalar norm = std::sqrt(std::norm(alpha) + std::norm(beta));
  alpha /= norm;
  beta /= norm;
  return MoebiusMap<Scalar>(alpha, -std::conj(beta), beta, std::conj(alpha));
}

/// f(z) = A z + B with A > 0.
template <typename Scalar>
struct AffineMap {
  Scalar scale{1};                 ///< A
  std::complex<Scalar> offset{0};  ///< B

  MoebiusMap<Scalar> as_map() const { return MoebiusMap<Scalar>::affine(scale, offset); }
  Eigen::Matrix<std::complex<Scalar>, 2, 2> matrix() const {
    Eigen::Matrix<std::complex<Scalar>, 2, 2> m;
    m << scale, offset, 0, 1;
    return m;
  }
};

template <typename Scalar>
AffineMap<Scalar> make_affine(Scalar scale, std::complex<Scalar> offset) {
  if (!(scale > 0)) throw DomainError("AffineMap: scale A must be positive");
  return {scale, offset};
}

/// Affine maps compose as (A1, B1) o (A2, B2) = (A1 A2, A1 B2 + B1).
template <typename Scalar>
AffineMap<Scalar> compose(const AffineMap<Scalar>& f1, const AffineMap<Scalar>& f2) {
  return {f1.scale * f2.scale, f1.scale * f2.offset + f1.offset};
}

/// lambda * m = rotation * affine with rotation in SU(2), A > 0, lambda > 0.
template <typename Scalar>
struct Decomposition {
  MoebiusMap<Scalar> rotation;
  AffineMap<Scalar> affine;
  Scalar lambda{1};

  std::complex<Scalar> alpha() const { return rotation.a(); }
  std::complex<Scalar> beta() const { return rotation.c(); }
};

template <typename Scalar>
Decomposition<Scalar> decompose_affine(const MoebiusMap<Scalar>& m) {
  using C = std::complex<Scalar>;
  const C a = m.a(), b = m.b(), c = m.c(), d = m.d();
  const Scalar lambda = std::sqrt(std::norm(a) + std::norm(c));
  const C alpha = a / lambda;
  const C beta = c / lambda;
  const Scalar lambda2 = lambda * lambda;
  // Both expressions for B hold when ad - bc = 1; use the better-conditioned one.
  const C offset = std::abs(a) >= std::abs(c) ? (lambda2 * b + std::conj(c)) / a : (lambda2 * d - std::conj(a)) / c;
  Decomposition<Scalar> out;
  out.rotation = MoebiusMap<Scalar>(alpha, -std::conj(beta), beta, std::conj(alpha));
  out.affine = AffineMap<Scalar>{lambda2, offset};
  out.lambda = lambda;
  return out;
}

/// Moving-sphere picture of an affine map: the north pole rises from height
/// h1 to h2 = A h1 and the sphere is displaced horizontally by B.
template <typename Scalar>
struct SphereTranslation {
  Scalar height{0};
  std::complex<Scalar> displacement{0};
};

template <typename Scalar>
SphereTranslation<Scalar> translation_view(const AffineMap<Scalar>& aff, Scalar h1) {
  if (!(h1 > 0)) throw DomainError("translation_view: h1 must be positive");
  return {aff.scale * h1, aff.offset};
}

/// Inverse of translation_view: the affine map moving a sphere with pole
/// height h1 to height h2 and horizontal displacement.
template <typename Scalar>
AffineMap<Scalar> affine_from_translation(Scalar h1, Scalar h2, std::complex<Scalar> displacement) {
  if (!(h1 > 0) || !(h2 > 0)) throw DomainError("affine_from_translation: heights must be positive");
  return {h2 / h1, displacement};
}

/// A rotation (SU(2) map) sending p to the north pole (infinity).
template <typename Scalar>
MoebiusMap<Scalar> rotation_to_north_pole(const ExtendedComplex<Scalar>& p) {
  const auto s = spinor(p);  // p = u / w
  // Rows (conj u, conj w) and (-w, u): image of (u, w) is (1, 0).
  return MoebiusMap<Scalar>(std::conj(s(0)), std::conj(s(1)), -s(1), s(0));
}

}  // namespace majorana
