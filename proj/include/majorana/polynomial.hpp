#pragma once

// Roots of complex polynomials p(z) = sum_k c_k z^k.
//
// Eigenvalues of the balanced companion matrix give initial roots, each is
// polished by Newton's method in the chart where it is well conditioned (z for
// |z| <= 1, w = 1/z otherwise), and clusters consistent with a perturbed
// multiple root are merged and re-solved as a simple root of p^{(m-1)}.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "majorana/errors.hpp"

namespace majorana {

template <typename Scalar>
using Coefficients = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

using Coefficientsd = Coefficients<double>;

template <typename Scalar>
struct RootFinderOptions {
  Scalar zero_tolerance = Scalar(1e-12);      ///< |c_k| <= tol * max|c| counts as zero
  int max_polish_iterations = 100;            ///< Newton steps per root
  Scalar residual_tolerance = Scalar(1e-10);  ///< accepted |p(z)| / (max|c| max(1,|z|)^deg)
  bool merge_multiple_roots = true;
};

/// Finite roots plus the number of roots at infinity (degree deficit).
template <typename Scalar>
struct PolynomialRoots {
  std::vector<std::complex<Scalar>> finite;
  int at_infinity = 0;
};

/// Horner evaluation.
template <typename Scalar>
std::complex<Scalar> evaluate(const Coefficients<Scalar>& c, std::complex<Scalar> z) {
  std::complex<Scalar> acc(0);
  for (Eigen::Index k = c.size() - 1; k >= 0; --k) acc = acc * z + c(k);
  return acc;
}

/// Taylor coefficients of p at z0: p(z0 + h) = sum_j q_j h^j.
template <typename Scalar>
Coefficients<Scalar> taylor_shift(const Coefficients<Scalar>& c, std::complex<Scalar> z0) {
  Coefficients<Scalar> q = c;
  const Eigen::Index n = q.size();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = n - 2; k >= j; --k) q(k) += z0 * q(k + 1);
  }
  return q;
}

/// Index of the highest coefficient above the relative zero threshold, or -1.
template <typename Scalar>
Eigen::Index effective_degree(const Coefficients<Scalar>& c, Scalar zero_tolerance) {
  const Scalar cmax = c.size() ? c.cwiseAbs().maxCoeff() : Scalar(0);
  for (Eigen::Index k = c.size() - 1; k >= 0; --k) {
    if (std::abs(c(k)) > zero_tolerance * cmax) return k;
  }
  return -1;
}

namespace detail {

// Parlett-Reinsch balancing with radix 2 (similarity transform, exact in floating point).
template <typename MatrixType>
void balance(MatrixType& a) {
  using Real = typename Eigen::NumTraits<typename MatrixType::Scalar>::Real;
  const Eigen::Index n = a.rows();
  bool converged = false;
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    converged = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      Real col = 0, row = 0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        col += std::abs(a(j, i));
        row += std::abs(a(i, j));
      }
      if (col == 0 || row == 0) continue;
      Real f = 1;
      const Real s = col + row;
      while (col < row / 2) {
        col *= 2;
        row /= 2;
        f *= 2;
      }
      while (col >= row * 2) {
        col /= 2;
        row *= 2;
        f /= 2;
      }
      if ((col + row) < Real(0.95) * s) {
        converged = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

template <typename Scalar>
Coefficients<Scalar> reversed(const Coefficients<Scalar>& c) {
  return c.reverse().eval();
}

template <typename Scalar>
Coefficients<Scalar> derivative(const Coefficients<Scalar>& c) {
  if (c.size() <= 1) return Coefficients<Scalar>::Zero(1);
  Coefficients<Scalar> d(c.size() - 1);
  for (Eigen::Index k = 1; k < c.size(); ++k) d(k - 1) = Scalar(k) * c(k);
  return d;
}

template <typename Scalar>
Scalar evaluation_scale(const Coefficients<Scalar>& c, Scalar r) {
  Scalar acc = 0;
  for (Eigen::Index k = c.size() - 1; k >= 0; --k) acc = acc * r + std::abs(c(k));
  return acc;
}

// Newton polish of a root of p (poly) with derivative dp; keeps the best iterate.
template <typename Scalar>
std::complex<Scalar> newton_polish(const Coefficients<Scalar>& p, const Coefficients<Scalar>& dp,
                                   std::complex<Scalar> z, int max_iterations,
                                   Scalar max_move = std::numeric_limits<Scalar>::infinity()) {
  Scalar best = std::abs(evaluate(p, z));
  const std::complex<Scalar> start = z;
  std::complex<Scalar> best_z = z;
  for (int it = 0; it < max_iterations && best > 0; ++it) {
    const auto fz = evaluate(p, z);
    const auto dz = evaluate(dp, z);
    if (dz == std::complex<Scalar>(0)) break;
    const auto step = fz / dz;
    z -= step;
    if (!(std::abs(z - start) <= max_move)) break;
    const Scalar r = std::abs(evaluate(p, z));
    if (!std::isfinite(r)) break;
    if (r < best) {
      best = r;
      best_z = z;
    } else if (std::abs(step) <= std::numeric_limits<Scalar>::epsilon() * std::max(Scalar(1), std::abs(z))) {
      break;
    }
    if (std::abs(step) <= std::numeric_limits<Scalar>::epsilon() * std::max(Scalar(1), std::abs(z)) / 4) break;
  }
  return best_z;
}

// A cluster of m roots expressed in one chart.
template <typename Scalar>
struct Chart {
  const Coefficients<Scalar>* poly;
  bool inverted;  // coordinates are w = 1/z
};

template <typename Scalar>
std::complex<Scalar> to_chart(std::complex<Scalar> z, bool inverted) {
  return inverted ? std::complex<Scalar>(1) / z : z;
}

// Tries to treat `members` as one multiple root. On success writes the
// refined root (in z) to `merged`.
template <typename Scalar>
bool try_merge(const std::vector<std::complex<Scalar>>& members, const Coefficients<Scalar>& p,
               const Coefficients<Scalar>& p_rev, std::complex<Scalar>& merged) {
  using C = std::complex<Scalar>;
  const auto m = static_cast<Eigen::Index>(members.size());
  C mean = std::accumulate(members.begin(), members.end(), C(0)) / Scalar(m);
  const bool inverted = std::abs(mean) > 1;
  if (inverted) {
    for (const auto& z : members) {
      if (z == C(0)) return false;
    }
  }
  const Coefficients<Scalar>& poly = inverted ? p_rev : p;
  std::vector<C> pts;
  for (const auto& z : members) pts.push_back(to_chart(z, inverted));
  C center = std::accumulate(pts.begin(), pts.end(), C(0)) / Scalar(m);
  Scalar radius = 0;
  for (const auto& x : pts) radius = std::max(radius, std::abs(x - center));

  auto noise_radius = [&](C at, const Coefficients<Scalar>& q) {
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    const Scalar delta = Scalar(64) * eps * evaluation_scale(poly, std::abs(at));
    const Scalar lead = std::abs(q(m));
    if (lead == 0) return std::numeric_limits<Scalar>::infinity();
    return Scalar(10) * std::pow(delta / lead, Scalar(1) / Scalar(m));
  };

  Coefficients<Scalar> q = taylor_shift(poly, center);
  if (q.size() <= m) return false;
  const Scalar allowed = noise_radius(center, q);
  if (!(radius <= allowed)) return false;

  // Newton on p^{(m-1)}: in Taylor terms h = -q_{m-1} / (m q_m).
  C best = center;
  Scalar best_val = std::abs(q(m - 1));
  C x = center;
  for (int it = 0; it < 20; ++it) {
    const C step = -q(m - 1) / (Scalar(m) * q(m));
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
    x += step;
    if (std::abs(x - center) > radius + allowed) break;
    q = taylor_shift(poly, x);
    if (std::abs(q(m - 1)) < best_val) {
      best_val = std::abs(q(m - 1));
      best = x;
    } else {
      break;
    }
  }
  // A genuine m-fold root also has Taylor coefficients q_0..q_{m-1} at the
  // rounding level of the shifted polynomial. The radius test alone admits
  // nearby simple roots once m is large.
  q = taylor_shift(poly, best);
  const Coefficients<Scalar> bound = taylor_shift(Coefficients<Scalar>(poly.cwiseAbs().template cast<C>()),
                                                  C(std::abs(best)));
  for (Eigen::Index j = 0; j < m; ++j) {
    if (std::abs(q(j)) > Scalar(1e4) * std::numeric_limits<Scalar>::epsilon() * std::abs(bound(j))) return false;
  }
  merged = inverted ? C(1) / best : best;
  return std::isfinite(merged.real()) && std::isfinite(merged.imag());
}

template <typename Scalar>
void merge_multiple_roots(std::vector<std::complex<Scalar>>& roots, const Coefficients<Scalar>& p) {
  using C = std::complex<Scalar>;
  if (roots.size() < 2) return;
  const Coefficients<Scalar> p_rev = reversed(p);
  struct Group {
    std::vector<C> members;
    C center;
  };
  std::vector<Group> groups;
  for (const auto& z : roots) groups.push_back({{z}, z});

  auto chordal = [](C a, C b) {
    return Scalar(2) * std::abs(a - b) / std::sqrt((Scalar(1) + std::norm(a)) * (Scalar(1) + std::norm(b)));
  };

  bool changed = true;
  while (changed && groups.size() > 1) {
    changed = false;
    std::vector<std::pair<Scalar, std::pair<size_t, size_t>>> pairs;
    for (size_t i = 0; i < groups.size(); ++i) {
      for (size_t j = i + 1; j < groups.size(); ++j) {
        const Scalar dist = chordal(groups[i].center, groups[j].center);
        if (dist < Scalar(0.05)) pairs.push_back({dist, {i, j}});
      }
    }
    std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [dist, ij] : pairs) {
      std::vector<C> members = groups[ij.first].members;
      members.insert(members.end(), groups[ij.second].members.begin(), groups[ij.second].members.end());
      C merged;
      if (try_merge(members, p, p_rev, merged)) {
        groups[ij.first] = {members, merged};
        groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(ij.second));
        changed = true;
        break;
      }
    }
  }
  roots.clear();
  for (const auto& g : groups) {
    for (size_t k = 0; k < g.members.size(); ++k) roots.push_back(g.center);
  }
}

}  // namespace detail

/// Roots of p with multiplicity. Coefficients at or below the relative zero
/// threshold are dropped at the top (roots at infinity) and at the bottom
/// (exact roots at zero). Throws NumericError if the eigen-solver fails or a
/// polished root misses the residual criterion.
template <typename Scalar>
PolynomialRoots<Scalar> find_roots(const Coefficients<Scalar>& c,
                                   const RootFinderOptions<Scalar>& options = RootFinderOptions<Scalar>()) {
  using C = std::complex<Scalar>;
  using Matrix = Eigen::Matrix<C, Eigen::Dynamic, Eigen::Dynamic>;
  PolynomialRoots<Scalar> out;
  const Eigen::Index n = c.size() - 1;
  if (n < 0) throw DomainError("find_roots: empty coefficient vector");
  const Eigen::Index degree = effective_degree(c, options.zero_tolerance);
  if (degree < 0) throw DomainError("find_roots: zero polynomial");
  out.at_infinity = static_cast<int>(n - degree);

  const Scalar cmax = c.cwiseAbs().maxCoeff();
  Eigen::Index low = 0;
  while (low < degree && std::abs(c(low)) <= options.zero_tolerance * cmax) ++low;
  for (Eigen::Index k = 0; k < low; ++k) out.finite.emplace_back(0);

  // Deflated polynomial q(z) = sum_{k=low}^{degree} c_k z^{k-low}.
  const Eigen::Index m = degree - low;
  if (m == 0) return out;
  Coefficients<Scalar> q = c.segment(low, m + 1);
  q /= q.cwiseAbs().maxCoeff();

  std::vector<C> roots;
  if (m == 1) {
    roots.push_back(-q(0) / q(1));
  } else {
    Matrix companion = Matrix::Zero(m, m);
    for (Eigen::Index i = 1; i < m; ++i) companion(i, i - 1) = C(1);
    for (Eigen::Index i = 0; i < m; ++i) companion(i, m - 1) = -q(i) / q(m);
    detail::balance(companion);
    Eigen::ComplexEigenSolver<Matrix> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw NumericError("find_roots: companion eigenvalue iteration failed");
    for (Eigen::Index i = 0; i < m; ++i) roots.push_back(solver.eigenvalues()(i));
  }

  const Coefficients<Scalar> dq = detail::derivative(q);
  const Coefficients<Scalar> q_rev = detail::reversed(q);
  const Coefficients<Scalar> dq_rev = detail::derivative(q_rev);
  // Near a multiple root Newton can leap onto a neighbouring root, so each
  // root may move at most half way to the nearest other eigenvalue.
  const std::vector<C> raw = roots;
  for (size_t i = 0; i < roots.size(); ++i) {
    auto& z = roots[i];
    const bool inner = std::abs(z) <= 1;
    const C x = inner ? z : C(1) / z;
    Scalar gap = std::numeric_limits<Scalar>::infinity();
    for (size_t j = 0; j < raw.size(); ++j) {
      if (j != i) gap = std::min(gap, std::abs(x - (inner ? raw[j] : C(1) / raw[j])));
    }
    if (inner) {
      z = detail::newton_polish(q, dq, z, options.max_polish_iterations, gap / 2);
    } else {
      const C w = detail::newton_polish(q_rev, dq_rev, x, options.max_polish_iterations, gap / 2);
      if (w != C(0)) z = C(1) / w;
    }
  }
  if (options.merge_multiple_roots) detail::merge_multiple_roots(roots, q);

  const Scalar qmax = q.cwiseAbs().maxCoeff();
  for (const auto& z : roots) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NumericError("find_roots: non-finite root after polishing");
    }
    const Scalar r = std::max(Scalar(1), std::abs(z));
    const Scalar bound = options.residual_tolerance * qmax * std::pow(r, Scalar(m));
    if (!(std::abs(evaluate(q, z)) <= bound)) {
      throw NumericError("find_roots: root polishing did not converge within the iteration cap");
    }
    out.finite.push_back(z);
  }
  return out;
}

}  // namespace majorana
