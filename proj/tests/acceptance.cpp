// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "majorana/canonical.hpp"
#include "majorana/classify.hpp"
#include "majorana/oracle.hpp"
#include "support.hpp"

using namespace majorana;
using support::Complex;
using support::kPi;

namespace {

const Complex kOmega = std::polar(1.0, 2 * kPi / 3);
constexpr double kThird = 2 * kPi / 3;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

// Coefficients (ascending) of prod_i (t_i z - 1) * (z^3 - 1) by direct convolution.
Eigen::VectorXcd family_product(const std::vector<Complex>& t) {
  std::vector<Complex> poly{-1.0, 0.0, 0.0, 1.0};
  for (const auto& ti : t) {
    std::vector<Complex> next(poly.size() + 1, 0.0);
    for (size_t k = 0; k < poly.size(); ++k) {
      next[k] -= poly[k];
      next[k + 1] += ti * poly[k];
    }
    poly = next;
  }
  return Eigen::Map<Eigen::VectorXcd>(poly.data(), static_cast<Eigen::Index>(poly.size()));
}

// max |p - s q| / max |p| for the least-squares scale s.
double scaled_mismatch(const Eigen::VectorXcd& p, const Eigen::VectorXcd& q) {
  const Complex s = q.dot(p) / q.squaredNorm();
  return (p - s * q).cwiseAbs().maxCoeff() / p.cwiseAbs().maxCoeff();
}

// Integer partitions of n, counted by the pentagonal-number recurrence.
long partition_count(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long sign = (k % 2 == 1) ? 1 : -1;
      p[m] += sign * p[m - g1];
      if (g2 <= m) p[m] += sign * p[m - g2];
    }
  }
  return p[n];
}

void enumerate_partitions(int n, int max_part, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    prefix.push_back(k);
    enumerate_partitions(n - k, k, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  enumerate_partitions(n, n, prefix, out);
  return out;
}

std::vector<int> partition_of(const SymmetricStated& s) {
  return cluster_roots(majorana_roots(s)).configuration().partition;
}

SpherePointd random_triangle_point(support::Rng& rng) {
  if (rng() % 10 == 0) return {kPi / 2, support::uniform(rng, 0.02, kPi / 3)};
  return {support::uniform(rng, 0.02, kPi / 2 - 0.02), support::uniform(rng, 0.02, kThird - 0.02)};
}

// Points of [0, pi/2) x [0, 2pi) plus the closed equator arc [0, pi], kept
// away from the poles and from the vertices where the partition changes.
SpherePointd random_hemisphere_point(support::Rng& rng) {
  if (rng() % 10 == 0) {
    double phi;
    do {
      phi = support::uniform(rng, 0, kPi);
    } while (std::abs(phi) < 0.02 || std::abs(phi - kThird) < 0.02);
    return {kPi / 2, phi};
  }
  return {support::uniform(rng, 0.02, kPi / 2 - 0.02), support::uniform(rng, 0, 2 * kPi)};
}

double param_gap(const std::vector<double>& params, const SpherePointd& p) {
  if (params.size() != 2) return 1e300;
  return std::max(std::abs(params[0] - p.theta), std::abs(params[1] - p.phi));
}

Outcome ghz_examples() {
  Outcome o;
  const auto ghz = make_state<double>({1.0, 0.0, 0.0, 1.0});
  const auto r = majorana_roots(ghz);
  std::vector<ExtendedComplexd> unity{ExtendedComplexd(1.0), ExtendedComplexd(kOmega), ExtendedComplexd(kOmega * kOmega)};
  const double root_error = support::multiset_distance(r.points(), unity);
  o.require(root_error <= 1e-9, "GHZ roots differ from cube roots of unity");

  const auto halved = majorana_roots(apply_symmetric(MoebiusMapd::affine(0.5, 0.0), ghz));
  bool half = halved.infinity_count() == 0;
  for (const auto& z : halved.finite_roots()) half = half && std::abs(std::abs(z) - 0.5) <= 1e-9;
  o.require(half, "z/2 image roots not of modulus 1/2");

  const auto partner = make_state<double>({1.0, 0.0, std::sqrt(3.0), 0.0});
  const auto w = locc_equivalent(ghz, partner);
  o.require(w.has_value() && is_projective_unitary(w->map).has_value() &&
                fidelity(apply_symmetric(w->map, ghz), partner) >= 1 - 1e-9,
            "no unitary witness to S0 + sqrt3 S2");

  for (const double beta : {0.3, 0.6, 2.0}) {
    const auto lopsided = make_state<double>({1.0, 0.0, 0.0, Complex(beta * std::cos(0.4), beta * std::sin(0.4))});
    o.require(!locc_equivalent(ghz, lopsided).has_value(), "locc accepted |alpha| != |beta|");
    o.require(slocc_equivalent(ghz, lopsided).has_value(), "slocc rejected |alpha| != |beta|");
  }
  o.detail << (o.pass ? "" : "; ") << "GHZ root error " << root_error;
  return o;
}

Outcome affine_decomposition() {
  Outcome o;
  support::Rng rng(2001);
  double worst_rec = 0, worst_unit = 0, worst_idem = 0;
  bool positive = true;
  for (int trial = 0; trial < 1000; ++trial) {
    Eigen::Matrix2cd raw;
    raw << support::gaussian_complex(rng), support::gaussian_complex(rng), support::gaussian_complex(rng),
        support::gaussian_complex(rng);
    const MoebiusMapd m(raw);  // stored with unit determinant
    const auto d = decompose_affine(m);
    const Eigen::Matrix2cd rebuilt = d.rotation.matrix() * d.affine.matrix();
    worst_rec = std::max(worst_rec, (rebuilt - d.lambda * m.matrix()).cwiseAbs().maxCoeff());
    worst_unit = std::max(worst_unit, std::abs(std::norm(d.alpha()) + std::norm(d.beta()) - 1));
    positive = positive && d.affine.scale > 0 && d.lambda > 0;
    const auto again = decompose_affine(MoebiusMapd(rebuilt));
    worst_idem = std::max({worst_idem, std::abs(again.alpha() - d.alpha()), std::abs(again.beta() - d.beta()),
                           std::abs(again.affine.scale - d.affine.scale) / d.affine.scale,
                           std::abs(again.affine.offset - d.affine.offset) / (1 + std::abs(d.affine.offset))});
  }
  o.require(worst_rec <= 1e-10, "reconstruction error " + fmt(worst_rec));
  o.require(worst_unit <= 1e-12, "|alpha|^2+|beta|^2 off by " + fmt(worst_unit));
  o.require(positive, "non-positive A or lambda");
  o.require(worst_idem <= 1e-10, "re-decomposition drift " + fmt(worst_idem));

  const auto a = affine_from_translation(2.0, 5.0, Complex(0));
  const auto b = affine_from_translation(2.0, 5.0, Complex(5, -5));
  o.require(a.scale == 2.5 && a.offset == Complex(0), "pure lift is not (5/2, 0)");
  o.require(b.scale == 2.5 && b.offset == Complex(5, -5), "shifted lift is not (5/2, 5-5i)");
  const auto round = decompose_affine(b.as_map());
  o.require(std::abs(round.affine.scale - 2.5) <= 1e-14 && std::abs(round.affine.offset - Complex(5, -5)) <= 1e-13 &&
                std::abs(round.alpha() - 1.0) <= 1e-15,
            "decomposing the shifted lift does not return it");
  o.detail << (o.pass ? "" : "; ") << "max reconstruction error " << worst_rec;
  return o;
}

Outcome four_qubit_recovery() {
  Outcome o;
  support::Rng rng(2003);
  double worst = 0, worst_triple = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_triangle_point(rng);
    const auto s = apply_symmetric(support::random_map(rng), four_qubit_family(p));
    const auto f = canonical_4(s);
    worst = std::max(worst, param_gap(f.params, p));
    const auto sites = cluster_roots(majorana_roots(s));
    if (sites.sites.size() != 4) {
      o.require(false, "mapped family state lost a site");
      continue;
    }
    const auto ref = four_qubit_parameter_for_triple(sites, {0, 1, 2});
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
          if (i == j || j == k || i == k) continue;
          const auto q = four_qubit_parameter_for_triple(sites, {i, j, k});
          worst_triple = std::max({worst_triple, std::abs(q.theta - ref.theta), std::abs(q.phi - ref.phi)});
        }
      }
    }
  }
  int equivalent = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_triangle_point(rng), q = random_triangle_point(rng);
    equivalent += slocc_equivalent(four_qubit_family(p), four_qubit_family(q)).has_value();
  }
  o.require(worst <= 1e-6, "parameter recovery error " + fmt(worst));
  o.require(worst_triple <= 1e-8, "triple disagreement " + fmt(worst_triple));
  o.require(equivalent == 0, std::to_string(equivalent) + " distinct pairs SLOCC-equivalent");
  o.detail << (o.pass ? "" : "; ") << "recovery error " << worst << ", triple spread " << worst_triple;
  return o;
}

Outcome five_qubit_families(std::vector<std::string>& notes) {
  Outcome o;
  support::Rng rng(2004);

  // Construct-and-recover over the full hemisphere parameter domain.
  int recovered = 0, equivalent_rep = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_hemisphere_point(rng);
    const auto s = apply_symmetric(support::random_map(rng), five_qubit_degenerate_family(p));
    const auto f = canonical_5_degenerate(s);
    recovered += param_gap(f.params, p) <= 1e-6;
    equivalent_rep += slocc_equivalent(s, f.state).has_value();
  }
  o.require(recovered == 200, "sampled parameters recovered for " + std::to_string(recovered) + "/200");
  notes.push_back("returned representative SLOCC-equivalent to the input for " + std::to_string(equivalent_rep) +
                  "/200 of these samples");

  // The same protocol restricted to the triangle sub-domain.
  double worst_sub = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_triangle_point(rng);
    const auto f = canonical_5_degenerate(apply_symmetric(support::random_map(rng), five_qubit_degenerate_family(p)));
    worst_sub = std::max(worst_sub, param_gap(f.params, p));
  }
  notes.push_back("triangle sub-domain [0,pi/2)x[0,2pi/3) u {pi/2}x[0,pi/3]: worst recovery error " +
                  fmt(worst_sub));

  const SpherePointd p2 = to_sphere(ExtendedComplexd(2.0)), q2 = to_sphere(ExtendedComplexd(2.0 * kOmega));
  const bool collide = in_hemisphere_domain(p2) && in_hemisphere_domain(q2) &&
                       slocc_equivalent(five_qubit_degenerate_family(p2), five_qubit_degenerate_family(q2)).has_value();
  if (collide) {
    std::ostringstream line;
    line << "{1,1,w,w^2,2} at (" << p2.theta << ", " << p2.phi << ") and {1,1,w,w^2,2w} at (" << q2.theta << ", "
         << q2.phi << ") are distinct in-domain parameters of one SLOCC class";
    notes.push_back(line.str());
  }

  int equivalent = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_hemisphere_point(rng), q = random_hemisphere_point(rng);
    equivalent += slocc_equivalent(five_qubit_degenerate_family(p), five_qubit_degenerate_family(q)).has_value();
  }
  o.require(equivalent == 0, std::to_string(equivalent) + "/100 random distinct pairs SLOCC-equivalent");

  int generic_ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = support::random_separated_state(rng, 5, 0.1);
    const auto f = representative_5_generic(s);
    const auto w = slocc_equivalent(s, f.state);
    generic_ok += w.has_value() && fidelity(apply_symmetric(w->map, s), f.state) >= 1 - 1e-8;
  }
  o.require(generic_ok == 100, "generic round trip succeeded for " + std::to_string(generic_ok) + "/100");

  const auto a = canonical_5_degenerate(five_qubit_degenerate_family({kPi / 2, 0}));
  const auto b = canonical_5_degenerate(five_qubit_degenerate_family({kPi / 2, kThird}));
  o.require(a.partition == std::vector<int>{3, 1, 1} && partition_of(five_qubit_degenerate_family({kPi / 2, 0})) ==
                                                           std::vector<int>{3, 1, 1},
            "(pi/2, 0) is not D_{3,1,1}");
  o.require(b.partition == std::vector<int>{2, 2, 1} && partition_of(five_qubit_degenerate_family({kPi / 2, kThird})) ==
                                                           std::vector<int>{2, 2, 1},
            "(pi/2, 2pi/3) is not D_{2,2,1}");
  return o;
}

Outcome factorizations() {
  Outcome o;
  support::Rng rng(2005);
  double worst = 0;
  auto angle = [&] {
    return SpherePointd{support::uniform(rng, 0.05, kPi - 0.05), support::uniform(rng, 0, 2 * kPi)};
  };
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = angle(), q = angle();
    const Complex tp = 1.0 / from_sphere(p).value(), tq = 1.0 / from_sphere(q).value();
    worst = std::max(worst, scaled_mismatch(majorana_polynomial(four_qubit_family(p)), family_product({tp})));
    worst = std::max(worst,
                     scaled_mismatch(majorana_polynomial(five_qubit_degenerate_family(p)), family_product({1.0, tp})));
    worst = std::max(worst,
                     scaled_mismatch(majorana_polynomial(five_qubit_generic_family(p, q)), family_product({tp, tq})));
  }
  o.require(worst <= 1e-12, "coefficient mismatch " + fmt(worst));
  o.detail << (o.pass ? "" : "; ") << "max relative coefficient mismatch " << worst;
  return o;
}

Outcome census_and_hierarchy() {
  Outcome o;
  support::Rng rng(2006);
  for (int n : {4, 5}) {
    std::set<std::vector<int>> reached;
    for (int trial = 0; trial < 200; ++trial) {
      const auto all = partitions(n);
      reached.insert(partition_of(state_from_roots(support::random_configuration(rng, all[trial % all.size()]))));
    }
    o.require(static_cast<long>(reached.size()) == partition_count(n),
              "n=" + std::to_string(n) + " reached " + std::to_string(reached.size()) + " partitions");
  }
  o.require(partition_count(4) == 5 && partition_count(5) == 7, "partition counts");

  int violations = 0, locc = 0, slocc = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + trial % 3;
    const auto all = partitions(n);
    const auto s1 = state_from_roots(support::random_configuration(rng, all[rng() % all.size()]));
    SymmetricStated s2 = s1;
    switch (trial % 3) {
      case 0: s2 = apply_symmetric(support::random_rotation(rng), s1); break;
      case 1: s2 = apply_symmetric(support::random_map(rng), s1); break;
      default: s2 = state_from_roots(support::random_configuration(rng, all[rng() % all.size()]));
    }
    const bool l = locc_equivalent(s1, s2).has_value();
    const bool s = slocc_equivalent(s1, s2).has_value();
    locc += l;
    slocc += s;
    violations += (l && !s) || (s && partition_of(s1) != partition_of(s2));
  }
  o.require(violations == 0, std::to_string(violations) + " hierarchy violations");
  o.detail << (o.pass ? "" : "; ") << locc << " locc and " << slocc << " slocc positives, " << violations
           << " violations";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  support::Rng rng(2007);
  double worst = 0;
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 1000; ++trial) {
      const auto s = support::random_state(rng, n);
      const auto m = support::random_map(rng);
      const auto dense = oracle::apply_tensor(m, oracle::expand_full(s));
      worst = std::max(worst, 1 - oracle::overlap(dense, oracle::expand_full(apply_symmetric(m, s))));
    }
  }
  double worst_sym = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 8;
    std::vector<SpherePointd> bloch;
    std::vector<ExtendedComplexd> pts;
    for (int i = 0; i < n; ++i) {
      pts.push_back(support::random_point(rng));
      bloch.push_back(to_sphere(pts.back()));
    }
    const auto reconstructed = oracle::expand_full(state_from_roots(RootMultisetd::from_points(pts)));
    worst_sym = std::max(worst_sym, 1 - oracle::overlap(oracle::symmetrize(bloch), reconstructed));
  }
  o.require(worst <= 1e-8, "map overlap deficit " + fmt(worst));
  o.require(worst_sym <= 1e-8, "symmetrization overlap deficit " + fmt(worst_sym));
  o.detail << (o.pass ? "" : "; ") << "overlap deficits " << worst << " (maps), " << worst_sym << " (symmetrization)";
  return o;
}

Outcome cocircularity() {
  Outcome o;
  const double ring = 2.0;
  std::vector<ExtendedComplexd> pyramid{ExtendedComplexd::infinity()};
  for (int k = 0; k < 4; ++k) pyramid.emplace_back(std::polar(1 / std::tan(ring / 2), k * kPi / 2));
  const std::vector<ExtendedComplexd> bipyramid{ExtendedComplexd::infinity(), ExtendedComplexd(0.0),
                                                ExtendedComplexd(1.0), ExtendedComplexd(kOmega),
                                                ExtendedComplexd(kOmega * kOmega)};
  const auto r1 = RootMultisetd::from_points(pyramid), r2 = RootMultisetd::from_points(bipyramid);
  const auto cert = cocircularity_witness(r1, r2);
  o.require(cert.has_value(), "no cocircularity certificate");
  if (cert) {
    const auto c1 = cert->first.counts(), c2 = cert->second.counts();
    o.require(std::count(c1.begin(), c1.end(), 4) == 1 && std::count(c2.begin(), c2.end(), 4) == 0,
              "unexpected circle counts");
  }
  const auto d = decide_equivalence(state_from_roots(r1), state_from_roots(r2), EquivalenceKind::slocc);
  o.require(!d.witness.has_value(), "slocc_equivalent found a witness");
  o.detail << (o.pass ? "" : "; ") << "decider stage " << to_string(d.stage) << " after " << d.candidates_tried
           << " candidates";
  return o;
}

Outcome moebius_properties() {
  Outcome o;
  support::Rng rng(2009);
  double cr = 0, three = 0, group = 0, fixed = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto pts = support::separated_points(rng, 4, 0.05);
    const auto m = support::random_map(rng);
    const auto before = cross_ratio(pts[0], pts[1], pts[2], pts[3]);
    const auto after = cross_ratio(apply(m, pts[0]), apply(m, pts[1]), apply(m, pts[2]), apply(m, pts[3]));
    cr = std::max(cr, chordal_distance(before, after));
  }
  for (int trial = 0; trial < 1000; ++trial) {
    auto v = support::separated_points(rng, 3, 0.05);
    auto w = support::separated_points(rng, 3, 0.05);
    if (trial % 4 == 1) v[trial % 3] = ExtendedComplexd::infinity();
    if (trial % 4 == 2) w[(trial / 4) % 3] = ExtendedComplexd::infinity();
    if (trial % 4 == 3) {
      v[0] = ExtendedComplexd::infinity();
      w[2] = ExtendedComplexd::infinity();
    }
    const auto m = from_three_points<double>({v[0], v[1], v[2]}, {w[0], w[1], w[2]});
    for (int i = 0; i < 3; ++i) three = std::max(three, chordal_distance(apply(m, v[i]), w[i]));
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = support::random_map(rng), b = support::random_map(rng), c = support::random_map(rng);
    const auto z = support::random_point(rng);
    const auto lhs = compose(compose(a, b), c), rhs = compose(a, compose(b, c));
    if (!projectively_equal(lhs, rhs, 1e-9)) group = 1;
    group = std::max(group, chordal_distance(apply(compose(a, inverse(a)), z), z));
    group = std::max(group, chordal_distance(apply(compose(a, b), z), apply(a, apply(b, z))));
    const auto cls = classify_map(a);
    for (const auto& f : cls.fixed_points) fixed = std::max(fixed, chordal_distance(apply(a, f), f));
  }
  o.require(cr <= 1e-9, "cross-ratio drift " + fmt(cr));
  o.require(three <= 1e-9, "three-point map error " + fmt(three));
  o.require(group <= 1e-9, "group law error " + fmt(group));
  o.require(fixed <= 1e-9, "fixed-point residual " + fmt(fixed));
  o.detail << (o.pass ? "" : "; ") << "worst residuals " << cr << ", " << three << ", " << group << ", " << fixed;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> check;
  };
  std::vector<std::string> notes;
  const std::vector<Criterion> criteria{
      {1, "GHZ roots, z/2 image, LOCC and SLOCC examples", ghz_examples},
      {2, "rotation-affine decomposition", affine_decomposition},
      {3, "4-qubit family construct-and-recover", four_qubit_recovery},
      {4, "degenerate and generic 5-qubit families", [&] { return five_qubit_families(notes); }},
      {5, "family polynomial factorizations", factorizations},
      {6, "partition census and equivalence hierarchy", census_and_hierarchy},
      {7, "root path versus dense tensor-product path", oracle_equivalence},
      {8, "cocircularity certificate", cocircularity},
      {9, "Moebius property suite", moebius_properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s  %s (%s) [%.1fs]\n", c.id, o.pass ? "PASS" : "FAIL", c.title, o.detail.str().c_str(),
                secs);
    if (c.id == 4) {
      for (const auto& n : notes) std::printf("  note: %s\n", n.c_str());
    }
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
