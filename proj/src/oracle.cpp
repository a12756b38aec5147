#include "majorana/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <vector>

#include "majorana/errors.hpp"

namespace majorana::oracle {

DenseState expand_full(const SymmetricStated& s) {
  const int n = s.n();
  if (n > kMaxDenseQubits) throw ResourceError("expand_full: n exceeds the dense guard");
  DenseState out{n, Eigen::VectorXcd::Zero(Eigen::Index{1} << n)};
  for (Eigen::Index idx = 0; idx < out.amplitudes.size(); ++idx) {
    const int k = std::popcount(static_cast<unsigned long long>(idx));
    out.amplitudes(idx) = s[k] / std::sqrt(binomial<double>(n, k));
  }
  return out;
}

DenseState symmetrize(std::span<const SpherePointd> bloch) {
  const int n = static_cast<int>(bloch.size());
  if (n < 1) throw DomainError("symmetrize: need at least one point");
  if (n > kMaxSymmetrizeQubits) throw ResourceError("symmetrize: n exceeds the permutation-sum guard");

  std::vector<Eigen::Vector2cd> qubits;
  for (const auto& p : bloch) {
    Eigen::Vector2cd q;
    q << std::cos(p.theta / 2), std::polar(std::sin(p.theta / 2), p.phi);
    qubits.push_back(q);
  }

  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(dim);
  Eigen::VectorXcd product(dim);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    // qubit position i carries single-qubit state order[i]
    product.setOnes();
    for (int i = 0; i < n; ++i) {
      const auto& q = qubits[order[i]];
      for (Eigen::Index idx = 0; idx < dim; ++idx) product(idx) *= q((idx >> i) & 1);
    }
    sum += product;
  } while (std::next_permutation(order.begin(), order.end()));

  const double norm = sum.norm();
  if (norm == 0) throw DomainError("symmetrize: permutation sum vanished");
  return {n, sum / norm};
}

DenseState apply_tensor(const Eigen::Matrix2cd& b, const DenseState& v) {
  DenseState out = v;
  for (int q = 0; q < v.n; ++q) {
    const Eigen::Index bit = Eigen::Index{1} << q;
    for (Eigen::Index idx = 0; idx < out.amplitudes.size(); ++idx) {
      if (idx & bit) continue;
      const auto x0 = out.amplitudes(idx);
      const auto x1 = out.amplitudes(idx | bit);
      out.amplitudes(idx) = b(0, 0) * x0 + b(0, 1) * x1;
      out.amplitudes(idx | bit) = b(1, 0) * x0 + b(1, 1) * x1;
    }
  }
  return out;
}

DenseState apply_tensor(const MoebiusMapd& m, const DenseState& v) { return apply_tensor(m.matrix(), v); }

double overlap(const DenseState& v1, const DenseState& v2) {
  if (v1.n != v2.n) throw DomainError("overlap: qubit counts differ");
  const double n1 = v1.amplitudes.norm(), n2 = v2.amplitudes.norm();
  if (n1 == 0 || n2 == 0) throw DomainError("overlap: zero vector");
  return std::abs(v1.amplitudes.dot(v2.amplitudes)) / (n1 * n2);
}

bool equal_up_to_scale(const DenseState& v1, const DenseState& v2, double tol) {
  return overlap(v1, v2) >= 1 - tol;
}

DenseState permute_qubits(const DenseState& v, int i, int j) {
  DenseState out = v;
  const Eigen::Index bi = Eigen::Index{1} << i, bj = Eigen::Index{1} << j;
  for (Eigen::Index idx = 0; idx < v.amplitudes.size(); ++idx) {
    Eigen::Index target = idx & ~(bi | bj);
    if (idx & bi) target |= bj;
    if (idx & bj) target |= bi;
    out.amplitudes(target) = v.amplitudes(idx);
  }
  return out;
}

}  // namespace majorana::oracle
