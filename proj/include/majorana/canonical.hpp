#pragma once

// Canonical representatives of symmetric SLOCC classes for n <= 5.
//
// Three distinct Majorana points are sent to the equatorial triangle
// {1, w, w^2}, w = exp(2 pi i / 3). The remaining points are then folded by
// the six rotations that permute the triangle,
//   {z, wz, w^2 z, 1/z, w/z, w^2/z}  (R_z(2pi/3) and R_x(pi) in root space),
// into a fixed parameter region. A moving point 1/t with
// t = exp(i phi) tan(theta/2) sits at sphere coordinates (theta, phi).

#include <array>
#include <vector>

#include "majorana/classify.hpp"
#include "majorana/extended_complex.hpp"
#include "majorana/moebius.hpp"
#include "majorana/symmetric_state.hpp"

namespace majorana {

struct TriangleFrame {
  static std::array<ExtendedComplexd, 3> vertices();
  static std::array<MoebiusMapd, 6> fold_group();
};

struct CanonicalForm {
  int n = 0;
  std::vector<int> partition;
  std::vector<double> params;  ///< (), (theta, phi) or (theta1, phi1, theta2, phi2)
  SymmetricStated state = dicke(1, 0);
  bool unique = true;          ///< false for the over-complete generic 5-qubit family
};

inline constexpr double kDomainSlack = 1e-9;

/// 2|S_0> + t|S_1> + |S_3> + 2t|S_4>, roots {1, w, w^2, 1/t}.
SymmetricStated four_qubit_family(const SpherePointd& p);
/// sqrt10(|S_0> + t|S_5>) + t|S_2> + |S_3> + sqrt2(1+t)(|S_1> + |S_4>), roots {1, 1, w, w^2, 1/t}.
SymmetricStated five_qubit_degenerate_family(const SpherePointd& p);
/// sqrt10(|S_0> + t1 t2|S_5>) + t1 t2|S_2> + |S_3> + sqrt2(t1+t2)(|S_1> + |S_4>),
/// roots {1, w, w^2, 1/t1, 1/t2}.
SymmetricStated five_qubit_generic_family(const SpherePointd& p1, const SpherePointd& p2);

/// [0, pi/2) x [0, 2pi/3)  U  {pi/2} x [0, pi/3]
bool in_triangle_domain(const SpherePointd& p, double slack = kDomainSlack);
/// [0, pi/2) x [0, 2pi)  U  {pi/2} x [0, pi]
bool in_hemisphere_domain(const SpherePointd& p, double slack = kDomainSlack);

/// Orbit representative of p under the triangle fold group, in the triangle
/// domain. Points within slack of an edge snap onto the included edge.
SpherePointd fold_into_triangle_domain(const ExtendedComplexd& p, double slack = kDomainSlack);
/// Representative of p under {z, 1/z}, in the hemisphere domain.
SpherePointd fold_into_hemisphere(const ExtendedComplexd& p, double slack = kDomainSlack);

/// Fixed representatives for n = 2, 3.
SymmetricStated representative_small(int n, const DegeneracyConfiguration& dc);

/// Image of the fourth site after sending sites triple[0..2] to the triangle,
/// folded into the triangle domain (diversity-4, n = 4 states).
SpherePointd four_qubit_parameter_for_triple(const ClusteredRoots& sites, const std::array<int, 3>& triple);

CanonicalForm canonical_4(const SymmetricStated& s, double tol = kDefaultTolerance);

/// Hemisphere-folded parameters from every (doubled, single, single) -> (1, w, w^2)
/// assignment of a D_{2,1,1,1} state, in enumeration order.
std::vector<SpherePointd> five_qubit_degenerate_candidates(const SymmetricStated& s, double tol = kDefaultTolerance);

CanonicalForm canonical_5_degenerate(const SymmetricStated& s, double tol = kDefaultTolerance);

/// Over-complete representative of a diversity-5, n = 5 state. `triple`
/// selects which three sites go to the triangle.
CanonicalForm representative_5_generic(const SymmetricStated& s, double tol = kDefaultTolerance,
                                       const std::array<int, 3>& triple = {0, 1, 2});

/// Dispatches on n (1..5) and diversity.
CanonicalForm canonicalize(const SymmetricStated& s, double tol = kDefaultTolerance);

}  // namespace majorana
