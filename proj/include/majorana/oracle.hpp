#pragma once

// Brute-force reference engine on full 2^n amplitude vectors. Nothing here
// touches Majorana roots, so it can cross-check the root-level operations.

#include <complex>
#include <span>

#include <Eigen/Core>

#include "majorana/extended_complex.hpp"
#include "majorana/moebius.hpp"
#include "majorana/symmetric_state.hpp"

namespace majorana::oracle {

inline constexpr int kMaxDenseQubits = 20;
inline constexpr int kMaxSymmetrizeQubits = 10;

/// Computational-basis amplitudes; bit i of the index is the state of qubit i.
struct DenseState {
  int n = 0;
  Eigen::VectorXcd amplitudes;
};

DenseState expand_full(const SymmetricStated& s);

/// Normalized permutation sum of the product states
/// cos(theta/2)|0> + exp(i phi) sin(theta/2)|1>, by direct enumeration of n! orderings.
DenseState symmetrize(std::span<const SpherePointd> bloch);

/// B applied to every qubit; the result is not renormalized.
DenseState apply_tensor(const Eigen::Matrix2cd& b, const DenseState& v);
DenseState apply_tensor(const MoebiusMapd& m, const DenseState& v);

/// |<v1|v2>| / (|v1| |v2|) >= 1 - tol.
bool equal_up_to_scale(const DenseState& v1, const DenseState& v2, double tol);

/// Normalized overlap |<v1|v2>| / (|v1| |v2|).
double overlap(const DenseState& v1, const DenseState& v2);

/// Swaps qubits i and j.
DenseState permute_qubits(const DenseState& v, int i, int j);

}  // namespace majorana::oracle
