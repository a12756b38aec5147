#include "majorana/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "majorana/errors.hpp"

namespace majorana {

int DegeneracyConfiguration::n() const { return std::accumulate(partition.begin(), partition.end(), 0); }

std::string DegeneracyConfiguration::label() const {
  std::ostringstream os;
  os << "D_{";
  for (size_t i = 0; i < partition.size(); ++i) os << (i ? "," : "") << partition[i];
  os << "}";
  return os.str();
}

int ClusteredRoots::n() const {
  int total = 0;
  for (const auto& s : sites) total += s.multiplicity;
  return total;
}

DegeneracyConfiguration ClusteredRoots::configuration() const {
  DegeneracyConfiguration dc;
  for (const auto& s : sites) dc.partition.push_back(s.multiplicity);
  std::sort(dc.partition.begin(), dc.partition.end(), std::greater<>());
  return dc;
}

namespace {

int find_root(std::vector<int>& parent, int i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

// Mean in the chart where the members are bounded.
ExtendedComplexd cluster_representative(const std::vector<ExtendedComplexd>& members) {
  for (const auto& p : members) {
    if (p.is_infinite()) return ExtendedComplexd::infinity();
  }
  std::complex<double> mean(0);
  for (const auto& p : members) mean += p.value();
  mean /= static_cast<double>(members.size());
  if (std::abs(mean) <= 1) return ExtendedComplexd(mean);
  std::complex<double> inv(0);
  for (const auto& p : members) {
    if (p.value() == std::complex<double>(0)) return ExtendedComplexd(mean);
    inv += 1.0 / p.value();
  }
  inv /= static_cast<double>(members.size());
  return ExtendedComplexd::from_unchecked(1.0 / inv);
}

}  // namespace

ClusteredRoots cluster_roots(const RootMultisetd& r, double tol) {
  if (!(tol > 0)) throw DomainError("cluster_roots: tolerance must be positive");
  const auto pts = r.points();
  const int n = static_cast<int>(pts.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (chordal_distance(pts[i], pts[j]) <= tol) parent[find_root(parent, i)] = find_root(parent, j);
    }
  }
  // Clusters in order of their first member.
  std::vector<int> order;
  std::vector<std::vector<ExtendedComplexd>> members(n);
  for (int i = 0; i < n; ++i) {
    const int root = find_root(parent, i);
    if (members[root].empty()) order.push_back(root);
    members[root].push_back(pts[i]);
  }
  ClusteredRoots out;
  for (int root : order) {
    out.sites.push_back({cluster_representative(members[root]), static_cast<int>(members[root].size())});
  }
  return out;
}

std::pair<DegeneracyConfiguration, ClusteredRoots> degeneracy_configuration(const RootMultisetd& r, double tol) {
  auto clustered = cluster_roots(r, tol);
  return {clustered.configuration(), std::move(clustered)};
}

const char* to_string(EquivalenceKind k) { return k == EquivalenceKind::locc ? "locc" : "slocc"; }

const char* to_string(FailureStage s) {
  switch (s) {
    case FailureStage::none: return "none";
    case FailureStage::partition_mismatch: return "partition_mismatch";
    case FailureStage::candidates_exhausted: return "candidates_exhausted";
  }
  return "unknown";
}

bool maps_sites_onto(const MoebiusMapd& m, const ClusteredRoots& from, const ClusteredRoots& to, double tol) {
  if (from.sites.size() != to.sites.size()) return false;
  std::vector<bool> used(to.sites.size(), false);
  for (const auto& site : from.sites) {
    const auto image = apply(m, site.point);
    int best = -1;
    double best_dist = 0;
    for (size_t j = 0; j < to.sites.size(); ++j) {
      if (used[j] || to.sites[j].multiplicity != site.multiplicity) continue;
      const double dist = chordal_distance(image, to.sites[j].point);
      if (best < 0 || dist < best_dist) {
        best = static_cast<int>(j);
        best_dist = dist;
      }
    }
    if (best < 0 || best_dist > tol) return false;
    used[best] = true;
  }
  return true;
}

namespace {

// Sends a to infinity and b to zero.
MoebiusMapd to_poles(const ExtendedComplexd& a, const ExtendedComplexd& b) {
  const auto rot = rotation_to_north_pole(a);
  const auto image = apply(rot, b);
  return compose(MoebiusMapd::affine(1.0, -image.value()), rot);
}

// Rotation sending a to infinity and b onto the positive real axis.
MoebiusMapd rotate_to_frame(const ExtendedComplexd& a, const ExtendedComplexd& b) {
  const auto rot = rotation_to_north_pole(a);
  const auto image = apply(rot, b).value();
  const double angle = image == std::complex<double>(0) ? 0.0 : -std::arg(image);
  return compose(MoebiusMapd::rotation_z(angle), rot);
}

}  // namespace

EquivalenceDecision decide_equivalence(const SymmetricStated& s1, const SymmetricStated& s2, EquivalenceKind kind,
                                       double tol) {
  if (s1.n() != s2.n()) throw DomainError("equivalence: states have different qubit counts");
  const auto c1 = cluster_roots(majorana_roots(s1), tol);
  const auto c2 = cluster_roots(majorana_roots(s2), tol);
  EquivalenceDecision out;
  if (c1.configuration() != c2.configuration()) {
    out.stage = FailureStage::partition_mismatch;
    return out;
  }

  auto accept = [&](const MoebiusMapd& m) -> bool {
    ++out.candidates_tried;
    if (!maps_sites_onto(m, c1, c2, tol)) return false;
    if (kind == EquivalenceKind::locc) {
      const auto u = is_projective_unitary(m, 10 * tol);
      if (!u) return false;
      out.witness = EquivalenceWitness{*u, kind};
    } else {
      out.witness = EquivalenceWitness{m, kind};
    }
    return true;
  };

  const auto& u = c1.sites;
  const auto& v = c2.sites;
  const size_t d = u.size();
  if (d == 1) {
    accept(compose(inverse(rotation_to_north_pole(v[0].point)), rotation_to_north_pole(u[0].point)));
  } else if (d == 2) {
    for (const auto& [i0, i1] : {std::pair<size_t, size_t>{0, 1}, std::pair<size_t, size_t>{1, 0}}) {
      if (v[i0].multiplicity != u[0].multiplicity || v[i1].multiplicity != u[1].multiplicity) continue;
      if (kind == EquivalenceKind::slocc) {
        // Residual stabilizer of {0, inf} is z -> kz; k = 1 suffices.
        if (accept(compose(inverse(to_poles(v[i0].point, v[i1].point)), to_poles(u[0].point, u[1].point)))) break;
      } else {
        // Rotations fixing the frame leave only the phase, fixed by putting
        // the second site on the positive real axis.
        if (accept(compose(inverse(rotate_to_frame(v[i0].point, v[i1].point)),
                           rotate_to_frame(u[0].point, u[1].point)))) {
          break;
        }
      }
    }
  } else {
    const std::array<ExtendedComplexd, 3> source{u[0].point, u[1].point, u[2].point};
    bool done = false;
    for (size_t i = 0; i < d && !done; ++i) {
      if (v[i].multiplicity != u[0].multiplicity) continue;
      for (size_t j = 0; j < d && !done; ++j) {
        if (j == i || v[j].multiplicity != u[1].multiplicity) continue;
        for (size_t k = 0; k < d && !done; ++k) {
          if (k == i || k == j || v[k].multiplicity != u[2].multiplicity) continue;
          const auto m = from_three_points<double>(source, {v[i].point, v[j].point, v[k].point}, 0.0);
          done = accept(m);
        }
      }
    }
  }
  if (!out.witness) out.stage = FailureStage::candidates_exhausted;
  return out;
}

std::optional<EquivalenceWitness> slocc_equivalent(const SymmetricStated& s1, const SymmetricStated& s2, double tol) {
  return decide_equivalence(s1, s2, EquivalenceKind::slocc, tol).witness;
}

std::optional<EquivalenceWitness> locc_equivalent(const SymmetricStated& s1, const SymmetricStated& s2, double tol) {
  return decide_equivalence(s1, s2, EquivalenceKind::locc, tol).witness;
}

std::vector<ExtendedComplexd> cross_ratio_fingerprint(const RootMultisetd& r, double tol) {
  const auto clustered = cluster_roots(r, tol);
  if (clustered.sites.size() != 4) throw DomainError("cross_ratio_fingerprint: diversity must be exactly 4");
  std::array<int, 4> order{0, 1, 2, 3};
  std::vector<ExtendedComplexd> out;
  do {
    const auto& s = clustered.sites;
    out.push_back(cross_ratio(s[order[0]].point, s[order[1]].point, s[order[2]].point, s[order[3]].point));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

bool fingerprints_intersect(const std::vector<ExtendedComplexd>& f1, const std::vector<ExtendedComplexd>& f2,
                            double tol) {
  for (const auto& a : f1) {
    for (const auto& b : f2) {
      if (chordal_distance(a, b) <= tol) return true;
    }
  }
  return false;
}

std::vector<int> CircleSignature::counts() const {
  std::vector<int> out;
  for (const auto& c : circles) out.push_back(c.on_circle);
  std::sort(out.begin(), out.end());
  return out;
}

CircleSignature circle_signature(const RootMultisetd& r, double tol) {
  const auto clustered = cluster_roots(r, tol);
  const auto& sites = clustered.sites;
  const size_t d = sites.size();
  std::vector<Eigen::Vector3d> pos;
  for (const auto& s : sites) pos.push_back(to_cartesian(s.point));

  CircleSignature sig;
  std::set<std::vector<size_t>> seen;
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = i + 1; j < d; ++j) {
      for (size_t k = j + 1; k < d; ++k) {
        Eigen::Vector3d normal = (pos[j] - pos[i]).cross(pos[k] - pos[i]);
        const double len = normal.norm();
        if (len == 0) continue;
        normal /= len;
        const double offset = normal.dot(pos[i]);
        std::vector<size_t> on;
        int above = 0, below = 0;
        for (size_t l = 0; l < d; ++l) {
          const double h = normal.dot(pos[l]) - offset;
          if (std::abs(h) <= tol) {
            on.push_back(l);
          } else if (h > 0) {
            above += sites[l].multiplicity;
          } else {
            below += sites[l].multiplicity;
          }
        }
        if (!seen.insert(on).second) continue;
        sig.circles.push_back({{sites[on[0]].point, sites[on[1]].point, sites[on[2]].point},
                               static_cast<int>(on.size()),
                               std::min(above, below)});
      }
    }
  }
  return sig;
}

std::optional<std::pair<CircleSignature, CircleSignature>> cocircularity_witness(const RootMultisetd& r1,
                                                                                  const RootMultisetd& r2,
                                                                                  double tol) {
  if (r1.n() != r2.n()) throw DomainError("cocircularity_witness: root multisets have different n");
  auto sig1 = circle_signature(r1, tol);
  auto sig2 = circle_signature(r2, tol);
  if (sig1.counts() == sig2.counts()) return std::nullopt;
  return std::make_pair(std::move(sig1), std::move(sig2));
}

}  // namespace majorana
