#pragma once

// Degeneracy configurations and LOCC / SLOCC equivalence deciders for
// symmetric states, plus Moebius-invariant inequivalence certificates.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "majorana/extended_complex.hpp"
#include "majorana/moebius.hpp"
#include "majorana/symmetric_state.hpp"

namespace majorana {

inline constexpr double kDefaultTolerance = 1e-7;

/// Multiplicities n_1 >= ... >= n_d of coinciding Majorana points.
struct DegeneracyConfiguration {
  std::vector<int> partition;

  int n() const;
  int diversity() const { return static_cast<int>(partition.size()); }
  std::string label() const;  ///< "D_{2,1,1}"
  friend bool operator==(const DegeneracyConfiguration&, const DegeneracyConfiguration&) = default;
};

struct Site {
  ExtendedComplexd point;
  int multiplicity = 1;
};

/// Distinct Majorana points with multiplicities, in serialized order
/// (modulus, argument, infinity last).
struct ClusteredRoots {
  std::vector<Site> sites;

  int n() const;
  DegeneracyConfiguration configuration() const;
};

/// Single-linkage clustering in the chordal metric.
std::pair<DegeneracyConfiguration, ClusteredRoots> degeneracy_configuration(const RootMultisetd& r,
                                                                            double tol = kDefaultTolerance);
ClusteredRoots cluster_roots(const RootMultisetd& r, double tol = kDefaultTolerance);

enum class EquivalenceKind { locc, slocc };
const char* to_string(EquivalenceKind k);

struct EquivalenceWitness {
  MoebiusMapd map;
  EquivalenceKind kind = EquivalenceKind::slocc;
};

/// Why a decision came out negative.
enum class FailureStage { none, partition_mismatch, candidates_exhausted };
const char* to_string(FailureStage s);

struct EquivalenceDecision {
  std::optional<EquivalenceWitness> witness;
  FailureStage stage = FailureStage::none;
  int candidates_tried = 0;
};

/// Full decision with the failed stage. Throws DomainError if the qubit counts differ.
EquivalenceDecision decide_equivalence(const SymmetricStated& s1, const SymmetricStated& s2, EquivalenceKind kind,
                                       double tol = kDefaultTolerance);

std::optional<EquivalenceWitness> slocc_equivalent(const SymmetricStated& s1, const SymmetricStated& s2,
                                                   double tol = kDefaultTolerance);
std::optional<EquivalenceWitness> locc_equivalent(const SymmetricStated& s1, const SymmetricStated& s2,
                                                  double tol = kDefaultTolerance);

/// True when the map sends every site of `from` onto a site of `to` with the
/// same multiplicity, bijectively, within tol.
bool maps_sites_onto(const MoebiusMapd& m, const ClusteredRoots& from, const ClusteredRoots& to, double tol);

/// Cross-ratios of the four distinct sites over all 24 orderings. Throws
/// DomainError unless the diversity is exactly 4.
std::vector<ExtendedComplexd> cross_ratio_fingerprint(const RootMultisetd& r, double tol = kDefaultTolerance);

/// Whether two fingerprints share a value within chordal tol.
bool fingerprints_intersect(const std::vector<ExtendedComplexd>& f1, const std::vector<ExtendedComplexd>& f2,
                            double tol = 1e-9);

struct CircleRecord {
  std::array<ExtendedComplexd, 3> through;  ///< the first three sites on the circle
  int on_circle = 0;                        ///< distinct sites on the circle
  int min_cap = 0;                          ///< smaller of the two cap populations (with multiplicity)
};

/// Every distinct circle through at least three sites.
struct CircleSignature {
  std::vector<CircleRecord> circles;

  /// Sorted on-circle counts, the part compared between states.
  std::vector<int> counts() const;
};

CircleSignature circle_signature(const RootMultisetd& r, double tol = kDefaultTolerance);

/// A certificate of SLOCC inequivalence when the multisets of on-circle
/// counts differ; empty (inconclusive) otherwise.
std::optional<std::pair<CircleSignature, CircleSignature>> cocircularity_witness(const RootMultisetd& r1,
                                                                                  const RootMultisetd& r2,
                                                                                  double tol = kDefaultTolerance);

}  // namespace majorana
