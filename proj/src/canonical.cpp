#include "majorana/canonical.hpp"

#include <cmath>
#include <numbers>

#include "majorana/errors.hpp"

namespace majorana {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kThird = 2 * kPi / 3;

const std::complex<double> kOmega = std::polar(1.0, kThird);

SymmetricStated state_from(std::initializer_list<std::complex<double>> amps) { return make_state<double>(amps); }

CanonicalForm fixed_form(int n, std::vector<int> partition, SymmetricStated state) {
  CanonicalForm f;
  f.n = n;
  f.partition = std::move(partition);
  f.state = std::move(state);
  return f;
}

std::array<ExtendedComplexd, 3> site_triple(const ClusteredRoots& c, const std::array<int, 3>& t) {
  return {c.sites.at(t[0]).point, c.sites.at(t[1]).point, c.sites.at(t[2]).point};
}

MoebiusMapd to_triangle(const std::array<ExtendedComplexd, 3>& source) {
  return from_three_points<double>(source, TriangleFrame::vertices(), 0.0);
}

double distance_to_triangle(const ExtendedComplexd& p, int& nearest) {
  const auto v = TriangleFrame::vertices();
  double best = 0;
  for (int i = 0; i < 3; ++i) {
    const double d = chordal_distance(p, v[i]);
    if (i == 0 || d < best) {
      best = d;
      nearest = i;
    }
  }
  return best;
}

int index_with_multiplicity(const ClusteredRoots& c, int multiplicity) {
  for (size_t i = 0; i < c.sites.size(); ++i) {
    if (c.sites[i].multiplicity == multiplicity) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

std::array<ExtendedComplexd, 3> TriangleFrame::vertices() {
  return {ExtendedComplexd(1.0), ExtendedComplexd(kOmega), ExtendedComplexd(kOmega * kOmega)};
}

std::array<MoebiusMapd, 6> TriangleFrame::fold_group() {
  using C = std::complex<double>;
  const C w = kOmega, w2 = kOmega * kOmega;
  return {MoebiusMapd(C(1), C(0), C(0), C(1)), MoebiusMapd(w, C(0), C(0), C(1)),
          MoebiusMapd(w2, C(0), C(0), C(1)),   MoebiusMapd(C(0), C(1), C(1), C(0)),
          MoebiusMapd(C(0), w, C(1), C(0)),    MoebiusMapd(C(0), w2, C(1), C(0))};
}

SymmetricStated four_qubit_family(const SpherePointd& p) {
  const auto t = family_parameter(p);
  const auto s = t(0), c = t(1);
  return state_from({2.0 * c, s, 0.0, c, 2.0 * s});
}

SymmetricStated five_qubit_degenerate_family(const SpherePointd& p) {
  const auto t = family_parameter(p);
  const auto s = t(0), c = t(1);
  const double r10 = std::sqrt(10.0), r2 = std::sqrt(2.0);
  return state_from({r10 * c, r2 * (c + s), s, c, r2 * (c + s), r10 * s});
}

SymmetricStated five_qubit_generic_family(const SpherePointd& p1, const SpherePointd& p2) {
  const auto t1 = family_parameter(p1);
  const auto t2 = family_parameter(p2);
  const auto prod = t1(0) * t2(0);
  const auto one = t1(1) * t2(1);
  const auto sum = t1(0) * t2(1) + t1(1) * t2(0);
  const double r10 = std::sqrt(10.0), r2 = std::sqrt(2.0);
  return state_from({r10 * one, r2 * sum, prod, one, r2 * sum, r10 * prod});
}

bool in_triangle_domain(const SpherePointd& p, double slack) {
  if (p.theta < kPi / 2 - slack) return p.phi >= 0 && p.phi < kThird - slack;
  if (std::abs(p.theta - kPi / 2) <= slack) return p.phi >= -slack && p.phi <= kPi / 3 + slack;
  return false;
}

bool in_hemisphere_domain(const SpherePointd& p, double slack) {
  if (p.theta < kPi / 2 - slack) return p.phi >= 0 && p.phi < 2 * kPi;
  if (std::abs(p.theta - kPi / 2) <= slack) return p.phi >= -slack && p.phi <= kPi + slack;
  return false;
}

SpherePointd fold_into_triangle_domain(const ExtendedComplexd& p, double slack) {
  auto sp = to_sphere(p);
  double theta = sp.theta, phi = sp.phi;
  if (theta > kPi / 2 + slack) {  // z -> 1/z
    theta = kPi - theta;
    phi = phi == 0 ? 0 : 2 * kPi - phi;
  }
  const bool equator = std::abs(theta - kPi / 2) <= slack;
  if (equator) theta = kPi / 2;
  if (theta == 0) return {0.0, 0.0};
  double r = std::fmod(phi, kThird);  // z -> w^k z
  if (r < 0) r += kThird;
  if (r > kThird - slack) r = 0;
  if (equator) {
    if (r > kPi / 3 + slack) r = kThird - r;  // z -> w^k / z
    if (std::abs(r - kPi / 3) <= slack) r = kPi / 3;
    if (r <= slack) r = 0;
  }
  return {theta, r};
}

SpherePointd fold_into_hemisphere(const ExtendedComplexd& p, double slack) {
  auto sp = to_sphere(p);
  double theta = sp.theta, phi = sp.phi;
  if (theta > kPi / 2 + slack) {
    theta = kPi - theta;
    phi = phi == 0 ? 0 : 2 * kPi - phi;
  }
  if (std::abs(theta - kPi / 2) <= slack) {
    theta = kPi / 2;
    if (phi > kPi + slack) phi = 2 * kPi - phi;
    if (phi > 2 * kPi - slack) phi = 0;
  }
  if (theta == 0) phi = 0;
  return {theta, phi};
}

SymmetricStated representative_small(int n, const DegeneracyConfiguration& dc) {
  using P = std::vector<int>;
  if (dc.n() != n) throw DomainError("representative_small: partition does not sum to n");
  if (n == 2) {
    if (dc.partition == P{2}) return dicke(2, 0);
    if (dc.partition == P{1, 1}) return dicke(2, 1);
  } else if (n == 3) {
    if (dc.partition == P{3}) return dicke(3, 0);
    if (dc.partition == P{2, 1}) return dicke(3, 1);
    if (dc.partition == P{1, 1, 1}) return state_from({1.0, 0.0, 0.0, 1.0});
  } else {
    throw DomainError("representative_small: n must be 2 or 3");
  }
  throw DomainError("representative_small: invalid partition " + dc.label());
}

SpherePointd four_qubit_parameter_for_triple(const ClusteredRoots& sites, const std::array<int, 3>& triple) {
  if (sites.sites.size() != 4) throw DomainError("four_qubit_parameter_for_triple: diversity must be 4");
  int fourth = 0 + 1 + 2 + 3 - triple[0] - triple[1] - triple[2];
  const auto g = to_triangle(site_triple(sites, triple));
  return fold_into_triangle_domain(apply(g, sites.sites.at(fourth).point));
}

CanonicalForm canonical_4(const SymmetricStated& s, double tol) {
  using P = std::vector<int>;
  if (s.n() != 4) throw DomainError("canonical_4: state must have n = 4");
  const auto sites = cluster_roots(majorana_roots(s), tol);
  const auto dc = sites.configuration();
  if (dc.partition == P{4}) return fixed_form(4, dc.partition, dicke(4, 0));
  if (dc.partition == P{3, 1}) return fixed_form(4, dc.partition, dicke(4, 1));
  if (dc.partition == P{2, 2}) return fixed_form(4, dc.partition, dicke(4, 2));

  const SpherePointd vertex_edge{kPi / 2, 0.0};
  SpherePointd param = vertex_edge;
  P label{2, 1, 1};
  if (dc.partition == P{1, 1, 1, 1}) {
    const auto g = to_triangle(site_triple(sites, {0, 1, 2}));
    const auto fourth = apply(g, sites.sites[3].point);
    int nearest = 0;
    if (distance_to_triangle(fourth, nearest) > tol) {
      param = fold_into_triangle_domain(fourth);
      label = dc.partition;
    }
  }
  CanonicalForm f = fixed_form(4, label, four_qubit_family(param));
  f.params = {param.theta, param.phi};
  return f;
}

std::vector<SpherePointd> five_qubit_degenerate_candidates(const SymmetricStated& s, double tol) {
  if (s.n() != 5) throw DomainError("five_qubit_degenerate_candidates: state must have n = 5");
  const auto sites = cluster_roots(majorana_roots(s), tol);
  if (sites.configuration().partition != std::vector<int>{2, 1, 1, 1}) {
    throw DomainError("five_qubit_degenerate_candidates: partition must be (2,1,1,1)");
  }
  const int doubled = index_with_multiplicity(sites, 2);
  std::vector<int> singles;
  for (int i = 0; i < 4; ++i) {
    if (i != doubled) singles.push_back(i);
  }
  std::vector<SpherePointd> out;
  for (int a : singles) {
    for (int b : singles) {
      if (a == b) continue;
      const int rest = 0 + 1 + 2 + 3 - doubled - a - b;
      const auto g = to_triangle(site_triple(sites, {doubled, a, b}));
      out.push_back(fold_into_hemisphere(apply(g, sites.sites[rest].point)));
    }
  }
  return out;
}

CanonicalForm canonical_5_degenerate(const SymmetricStated& s, double tol) {
  using P = std::vector<int>;
  if (s.n() != 5) throw DomainError("canonical_5_degenerate: state must have n = 5");
  const auto sites = cluster_roots(majorana_roots(s), tol);
  const auto dc = sites.configuration();
  if (dc.diversity() == 5) throw DomainError("canonical_5_degenerate: state has no degeneracy (diversity 5)");
  if (dc.partition == P{5}) return fixed_form(5, dc.partition, dicke(5, 0));
  if (dc.partition == P{4, 1}) return fixed_form(5, dc.partition, dicke(5, 1));
  if (dc.partition == P{3, 2}) return fixed_form(5, dc.partition, dicke(5, 2));

  SpherePointd param;
  P label = dc.partition;
  if (dc.partition == P{3, 1, 1}) {
    param = {kPi / 2, 0.0};
  } else if (dc.partition == P{2, 2, 1}) {
    param = {kPi / 2, kThird};
  } else {
    // (2,1,1,1): doubled site -> 1, two singles -> (w, w^2).
    const int doubled = index_with_multiplicity(sites, 2);
    int a = -1, b = -1, rest = -1;
    for (int i = 0; i < 4; ++i) {
      if (i == doubled) continue;
      if (a < 0) {
        a = i;
      } else if (b < 0) {
        b = i;
      } else {
        rest = i;
      }
    }
    const auto g = to_triangle(site_triple(sites, {doubled, a, b}));
    const auto moving = apply(g, sites.sites[rest].point);
    int nearest = 0;
    if (distance_to_triangle(moving, nearest) <= tol) {
      if (nearest == 0) {
        label = {3, 1, 1};
        param = {kPi / 2, 0.0};
      } else {
        label = {2, 2, 1};
        param = {kPi / 2, kThird};
      }
    } else {
      // The doubled site can trade places with any single through a Moebius
      // involution of the four sites, so the full triangle fold applies here.
      param = fold_into_triangle_domain(moving);
    }
  }
  CanonicalForm f = fixed_form(5, label, five_qubit_degenerate_family(param));
  f.params = {param.theta, param.phi};
  return f;
}

CanonicalForm representative_5_generic(const SymmetricStated& s, double tol, const std::array<int, 3>& triple) {
  if (s.n() != 5) throw DomainError("representative_5_generic: state must have n = 5");
  const auto sites = cluster_roots(majorana_roots(s), tol);
  if (sites.sites.size() != 5) throw DomainError("representative_5_generic: diversity must be 5");
  for (int i : triple) {
    if (i < 0 || i > 4) throw DomainError("representative_5_generic: triple index out of range");
  }
  if (triple[0] == triple[1] || triple[0] == triple[2] || triple[1] == triple[2]) {
    throw DomainError("representative_5_generic: triple indices must be distinct");
  }
  std::vector<int> rest;
  for (int i = 0; i < 5; ++i) {
    if (i != triple[0] && i != triple[1] && i != triple[2]) rest.push_back(i);
  }
  const auto g = to_triangle(site_triple(sites, triple));
  auto p4 = apply(g, sites.sites[rest[0]].point);
  auto p5 = apply(g, sites.sites[rest[1]].point);
  if (to_sphere(p4).theta > kPi / 2) {
    const auto flip = MoebiusMapd::inversion();
    p4 = apply(flip, p4);
    p5 = apply(flip, p5);
  }
  const double phi5 = to_sphere(p5).phi;
  const int k = static_cast<int>(std::floor(phi5 / kThird));
  if (k > 0) {
    // z -> w^k z lowers the azimuth by k * 2pi/3.
    const auto rot = MoebiusMapd::rotation_z(k * kThird);
    p4 = apply(rot, p4);
    p5 = apply(rot, p5);
  }
  auto sp4 = to_sphere(p4);
  auto sp5 = to_sphere(p5);
  if (sp5.phi >= kThird) sp5.phi = 0;  // rounding at the wrap
  CanonicalForm f;
  f.n = 5;
  f.partition = {1, 1, 1, 1, 1};
  f.params = {sp4.theta, sp4.phi, sp5.theta, sp5.phi};
  f.state = five_qubit_generic_family(sp4, sp5);
  f.unique = false;
  return f;
}

CanonicalForm canonicalize(const SymmetricStated& s, double tol) {
  const int n = s.n();
  if (n == 1) return fixed_form(1, {1}, dicke(1, 0));
  if (n == 2 || n == 3) {
    const auto dc = cluster_roots(majorana_roots(s), tol).configuration();
    return fixed_form(n, dc.partition, representative_small(n, dc));
  }
  if (n == 4) return canonical_4(s, tol);
  if (n == 5) {
    const auto dc = cluster_roots(majorana_roots(s), tol).configuration();
    return dc.diversity() == 5 ? representative_5_generic(s, tol) : canonical_5_degenerate(s, tol);
  }
  throw DomainError("canonicalize: only n <= 5 is supported");
}

}  // namespace majorana
