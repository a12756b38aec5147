#pragma once

// Random generators shared by the unit tests and the acceptance binary.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "majorana/extended_complex.hpp"
#include "majorana/moebius.hpp"
#include "majorana/symmetric_state.hpp"

namespace support {

using Rng = std::mt19937_64;
using Complex = std::complex<double>;
using namespace majorana;

inline constexpr double kPi = std::numbers::pi;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline Complex gaussian_complex(Rng& rng) {
  std::normal_distribution<double> g;
  return {g(rng), g(rng)};
}

/// Haar-random SU(2).
inline Eigen::Matrix2cd random_su2(Rng& rng) {
  Complex a = gaussian_complex(rng), b = gaussian_complex(rng);
  const double r = std::sqrt(std::norm(a) + std::norm(b));
  a /= r;
  b /= r;
  Eigen::Matrix2cd u;
  u << a, -std::conj(b), b, std::conj(a);
  return u;
}

/// U diag(sqrt(k), 1/sqrt(k)) V with Haar rotations and singular-value ratio
/// k log-uniform in [1, 8]; the sphere is stretched by at most a factor k.
inline MoebiusMapd random_map(Rng& rng) {
  const double k = std::exp(uniform(rng, 0, std::log(8.0)));
  Eigen::Matrix2cd d = Eigen::Matrix2cd::Zero();
  d(0, 0) = std::sqrt(k);
  d(1, 1) = 1 / std::sqrt(k);
  return MoebiusMapd(random_su2(rng) * d * random_su2(rng));
}

inline MoebiusMapd random_rotation(Rng& rng) { return MoebiusMapd(random_su2(rng)); }

/// Uniform point on the sphere.
inline ExtendedComplexd random_point(Rng& rng) {
  const double theta = std::acos(uniform(rng, -1, 1));
  return from_sphere(make_sphere_point(theta, uniform(rng, 0, 2 * kPi)));
}

inline double min_separation(const std::vector<ExtendedComplexd>& pts) {
  double best = 2;
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, chordal_distance(pts[i], pts[j]));
  }
  return best;
}

/// n uniform points with pairwise chordal separation at least `sep`.
inline std::vector<ExtendedComplexd> separated_points(Rng& rng, int n, double sep) {
  for (;;) {
    std::vector<ExtendedComplexd> pts;
    for (int i = 0; i < n; ++i) pts.push_back(random_point(rng));
    if (min_separation(pts) >= sep) return pts;
  }
}

inline SymmetricStated random_state(Rng& rng, int n) {
  Amplitudes<double> a(n + 1);
  for (int k = 0; k <= n; ++k) a(k) = gaussian_complex(rng);
  return SymmetricStated(a);
}

/// A state whose Majorana points are well separated.
inline SymmetricStated random_separated_state(Rng& rng, int n, double sep = 0.05) {
  return state_from_roots(RootMultisetd::from_points(separated_points(rng, n, sep)));
}

/// Multiset with the given multiplicities at well-separated random sites.
inline RootMultisetd random_configuration(Rng& rng, const std::vector<int>& partition, double sep = 0.3) {
  const auto sites = separated_points(rng, static_cast<int>(partition.size()), sep);
  std::vector<ExtendedComplexd> pts;
  for (size_t i = 0; i < partition.size(); ++i) pts.insert(pts.end(), partition[i], sites[i]);
  return RootMultisetd::from_points(pts);
}

/// Smallest total chordal cost of a bijection between two small point lists
/// (max over pairs), by brute-force permutation.
inline double multiset_distance(std::vector<ExtendedComplexd> a, const std::vector<ExtendedComplexd>& b) {
  std::vector<int> perm(a.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  double best = 1e300;
  do {
    double worst = 0;
    for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, chordal_distance(a[i], b[perm[i]]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace support
