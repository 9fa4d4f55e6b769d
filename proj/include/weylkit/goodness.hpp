#pragma once

// Good levels, classified two independent ways.
//
// A level is good when every finite standard parabolic of the integral
// Weyl group is the exact dot-stabilizer of some antidominant weight,
// possibly after an integral shift of the level. Under mu = -lambda - rho
// the candidate weights for one simple factor become the lattice points of
// the simplex
//
//   { mu : mu_i >= 0,  sum_i c_i mu_i <= P },
//
// where c_i are the simple-coroot coefficients of the dominant coroot the
// affine node reflects in, and the scale P runs over the positive
// representatives of -p mod q. Parabolics correspond to faces, weights on
// exactly the face's walls to relative interior points, so goodness is a
// per-face integer feasibility question. The fast classification is a
// coprimality test against the primes of the c_i; the certificate oracle
// below searches the faces directly and the two must agree.

#include "weylkit/integral_weyl.hpp"
#include "weylkit/level.hpp"
#include "weylkit/root_datum.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wk {

namespace detail {

// Simple-coroot coefficients of the coroot of the given root, restricted
// to that root's factor and indexed by the factor's node positions.
inline std::vector<Int> factor_coroot_coefficients(const RootDatum& rd, int root_idx) {
  std::optional<VecI> y = coroot_coordinates(rd, rd.root(root_idx).cowt);
  if (!y) throw std::logic_error("a coroot left the coroot lattice");
  int f = rd.root(root_idx).factor;
  std::vector<Int> out;
  for (int k = 0; k < rd.ss_rank(); ++k)
    if (rd.ss_factor(k) == f) out.push_back((*y)[k]);
  return out;
}

inline std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  for (Int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace detail

// Product of the distinct primes dividing a simple-coroot coefficient of
// either dominant coroot. A factor admits bad denominators exactly at
// these primes.
inline Int bad_prime_product(const RootDatum& rd, std::size_t f) {
  if (rd.factor(f).torus)
    throw std::invalid_argument("torus factors have no bad primes");
  std::vector<Int> coeffs =
      detail::factor_coroot_coefficients(rd, rd.highest_root_index(f));
  std::vector<Int> more =
      detail::factor_coroot_coefficients(rd, rd.highest_short_root_index(f));
  coeffs.insert(coeffs.end(), more.begin(), more.end());
  Int out = 1;
  for (Int c : coeffs)
    for (Int p : detail::prime_factors(c))
      if (out % p != 0) out *= p;
  return out;
}

// Coprimality classification: irrational factors are always good, a
// rational offset p/q is good iff gcd(q, bad primes) = 1. Not defined at
// the critical level.
inline bool is_good(const RootDatum& rd, const Level& level) {
  validate_level(rd, level);
  for (std::size_t f = 0; f < rd.num_factors(); ++f) {
    if (rd.factor(f).torus) continue;
    const ExactScalar& o = level.offset[f];
    if (classify_offset(o) == LevelSign::critical)
      throw std::domain_error("goodness is not defined at the critical level");
    if (!o.is_rational()) continue;
    Int q = to_int_checked(den(o.rational_part()));
    if (std::gcd(q, bad_prime_product(rd, f)) != 1) return false;
  }
  return true;
}

// Alcove of one simple factor at a chosen scale. Vertices are the origin
// and (P / c_i) omega_i in full-rank weight coordinates.
struct AlcoveModel {
  std::size_t factor = 0;
  Int scale = 0;              // P > 0
  std::vector<int> nodes;     // global ss node indices of the factor
  std::vector<Int> coeff;     // c_i per node, wall normal of the affine face
  std::vector<VecQ> vertices; // origin first, then one per node
};

// The coefficients come from the coroot the integral affine node reflects
// in: the highest root when gcd(q, lacing) = 1, the highest short root
// when the lacing number divides q.
inline std::vector<Int> alcove_coefficients(const RootDatum& rd, std::size_t f, Int q) {
  Int r = rd.lacing(f);
  int hr = std::gcd(q, r) == 1 ? rd.highest_root_index(f)
                               : rd.highest_short_root_index(f);
  return detail::factor_coroot_coefficients(rd, hr);
}

inline AlcoveModel alcove_model(const RootDatum& rd, const Level& level,
                                std::size_t f, Int scale) {
  if (rd.factor(f).torus || !level.offset.at(f).is_rational())
    throw std::invalid_argument("alcoves require a rational non-torus factor");
  if (scale <= 0) throw std::invalid_argument("alcove scale must be positive");
  RationalOffset off = rational_offset(level, f);
  AlcoveModel out;
  out.factor = f;
  out.scale = scale;
  out.coeff = alcove_coefficients(rd, f, off.q);
  for (int k = 0; k < rd.ss_rank(); ++k)
    if (rd.ss_factor(k) == static_cast<int>(f)) out.nodes.push_back(k);
  out.vertices.emplace_back(rd.rank(), Rat(0));
  for (std::size_t i = 0; i < out.nodes.size(); ++i) {
    VecQ v(rd.rank(), Rat(0));
    v[rd.ss_coord(out.nodes[i])] = Rat(scale) / Rat(out.coeff[i]);
    out.vertices.push_back(std::move(v));
  }
  return out;
}

enum class FaceStatus { witnessed, impossible, inconclusive };

struct FaceReport {
  std::size_t factor = 0;
  // Stabilizer of the face interior, as node positions within the factor;
  // rank_f means the factor's affine node.
  std::vector<int> parabolic;
  FaceStatus status = FaceStatus::inconclusive;
  Int scale = 0;    // P used by the witness
  Int shift = 0;    // integral offset making the witness antidominant
  VecI witness;     // alcove-side lattice point, full rank
  VecQ weight;      // antidominant side, -witness - rho
  std::string note; // obstruction for impossible faces
};

struct GoodnessReport {
  bool good = false;
  bool decided = false;
  std::vector<FaceReport> faces;
};

namespace detail {

// Positive integers u_i, supported on the chosen nodes, with
// sum u_i c_i = target (or < target when slack is allowed). Greedy-free
// exact search: dynamic program over achievable sums, smallest indices
// preferred on reconstruction.
inline std::optional<std::vector<Int>> face_witness(const std::vector<Int>& coeff,
                                                    const std::vector<int>& support,
                                                    Int target, bool exact) {
  std::vector<Int> u(coeff.size(), 0);
  Int base = 0;
  for (int i : support) {
    u[i] = 1;
    base += coeff[i];
  }
  if (exact) {
    if (base > target) return std::nullopt;
    Int rest = target - base;
    // reachable sums by adding extra copies of the supported coefficients
    std::vector<int> via(rest + 1, -2);
    via[0] = -1;
    for (Int v = 1; v <= rest; ++v)
      for (int i : support)
        if (coeff[i] <= v && via[v - coeff[i]] != -2) {
          via[v] = i;
          break;
        }
    if (via[rest] == -2) return std::nullopt;
    for (Int v = rest; v > 0; v -= coeff[via[v]]) u[via[v]] += 1;
    return u;
  }
  if (base >= target) return std::nullopt;
  return u;
}

}  // namespace detail

// Direct per-face search over scales P = P0 + kq, k < width. Decides
// goodness independently of the coprimality table: good iff every face of
// every rational factor's alcove admits a relative-interior lattice point.
// Impossible faces carry an exact congruence obstruction; a face neither
// witnessed nor obstructed within the width leaves the report undecided.
inline GoodnessReport good_level_certificate(const RootDatum& rd, const Level& level,
                                             Int width = 0) {
  validate_level(rd, level);
  GoodnessReport report;
  report.good = true;
  report.decided = true;
  const VecI rho = rd.rho();
  for (std::size_t f = 0; f < rd.num_factors(); ++f) {
    if (rd.factor(f).torus) continue;
    const ExactScalar& o = level.offset[f];
    if (classify_offset(o) == LevelSign::critical)
      throw std::domain_error("goodness is not defined at the critical level");

    std::vector<int> nodes;
    for (int k = 0; k < rd.ss_rank(); ++k)
      if (rd.ss_factor(k) == static_cast<int>(f)) nodes.push_back(k);
    int m = static_cast<int>(nodes.size());

    if (!o.is_rational()) {
      // no affine walls: every subset of the finite nodes is a stabilizer
      for (unsigned sub = 0; sub < (1u << m); ++sub) {
        FaceReport face;
        face.factor = f;
        face.weight.assign(rd.rank(), Rat(0));
        for (int c = 0; c < rd.rank(); ++c) face.weight[c] -= rho[c];
        for (int i = 0; i < m; ++i) {
          if (sub & (1u << i))
            face.parabolic.push_back(i);
          else
            face.weight[rd.ss_coord(nodes[i])] -= 1;
        }
        face.status = FaceStatus::witnessed;
        report.faces.push_back(std::move(face));
      }
      continue;
    }

    RationalOffset off = rational_offset(level, f);
    Int q = off.q;
    // scales are the positive representatives of -p; a positive offset is
    // classified through its mirror -p/q, which has the same walls
    Int p0 = ((-off.p) % q + q) % q;
    if (p0 == 0) p0 = q;
    std::vector<Int> coeff = alcove_coefficients(rd, f, q);
    Int coeff_sum = 0;
    for (Int c : coeff) coeff_sum += c;
    // the full-support faces need scales past sum(c_i), so the default
    // width covers that range on top of one sweep of residue multiples
    Int reps = width > 0 ? width : q * (m + 2) + coeff_sum;

    // supports: bit m = origin vertex, bit i < m = vertex (P/c_i) omega_i
    for (unsigned sub = 1; sub < (1u << (m + 1)); ++sub) {
      bool with_origin = (sub >> m) & 1u;
      std::vector<int> support;
      for (int i = 0; i < m; ++i)
        if (sub & (1u << i)) support.push_back(i);

      FaceReport face;
      face.factor = f;
      for (int i = 0; i < m; ++i)
        if (!(sub & (1u << i))) face.parabolic.push_back(i);
      if (!with_origin) face.parabolic.push_back(m);

      if (!with_origin) {
        // all attainable wall sums are congruent to sum(c_i) modulo the
        // gcd of the supported coefficients; scales are fixed mod q
        Int g = 0, base = 0;
        for (int i : support) {
          g = std::gcd(g, coeff[i]);
          base += coeff[i];
        }
        Int d = std::gcd(g, q);
        if ((p0 - base) % d != 0) {
          face.status = FaceStatus::impossible;
          face.note = "no scale in " + std::to_string(p0) + " + " + std::to_string(q) +
                      "Z meets " + std::to_string(base) + " + " + std::to_string(g) +
                      "Z: obstruction mod " + std::to_string(d);
        }
      }

      for (Int k = 0; k < reps && face.status == FaceStatus::inconclusive; ++k) {
        Int scale = p0 + k * q;
        std::optional<std::vector<Int>> u =
            detail::face_witness(coeff, support, scale, !with_origin);
        if (!u) continue;
        face.status = FaceStatus::witnessed;
        face.scale = scale;
        face.shift = (-scale - off.p) / q;
        face.witness.assign(rd.rank(), 0);
        for (int i = 0; i < m; ++i) face.witness[rd.ss_coord(nodes[i])] = (*u)[i];
        face.weight.assign(rd.rank(), Rat(0));
        for (int c = 0; c < rd.rank(); ++c)
          face.weight[c] = Rat(-face.witness[c] - rho[c]);
      }

      if (face.status == FaceStatus::impossible) report.good = false;
      if (face.status == FaceStatus::inconclusive) report.decided = false;
      report.faces.push_back(std::move(face));
    }
  }
  if (!report.decided) report.good = false;
  return report;
}

// An antidominant weight whose dot-stabilizer is exactly the requested
// set of integral Weyl generators, together with the integral shift that
// makes the weight antidominant. The generators must span a finite group:
// on each rational factor at least one extended node must be omitted.
struct StabilizerWitness {
  VecQ weight;
  std::vector<Int> shift;  // integral offset added per factor
  Level shifted;           // input level plus the shift
};

inline StabilizerWitness antidominant_weight_with_stabilizer(
    const IntegralWeyl& iw, const std::vector<int>& parabolic, Int width = 0) {
  const AffineWeyl& aw = iw.ambient();
  const RootDatum& rd = aw.datum();
  std::vector<bool> in_parabolic(iw.num_generators(), false);
  for (int g : parabolic) {
    if (g < 0 || g >= iw.num_generators())
      throw std::invalid_argument("generator index out of range");
    in_parabolic[g] = true;
  }
  std::vector<int> affine_node_of(rd.num_factors(), -1);
  for (int g = iw.num_finite_generators(); g < iw.num_generators(); ++g)
    affine_node_of[iw.generator_factor(g)] = g;

  StabilizerWitness out;
  out.weight.assign(rd.rank(), Rat(0));
  out.shift.assign(rd.num_factors(), 0);
  const VecI rho = rd.rho();

  for (std::size_t f = 0; f < rd.num_factors(); ++f) {
    if (rd.factor(f).torus) continue;
    const ExactScalar& o = iw.level().offset[f];
    if (classify_offset(o) == LevelSign::critical)
      throw std::domain_error("goodness is not defined at the critical level");

    std::vector<int> nodes;
    for (int k = 0; k < rd.ss_rank(); ++k)
      if (rd.ss_factor(k) == static_cast<int>(f)) nodes.push_back(k);
    int m = static_cast<int>(nodes.size());

    if (!o.is_rational()) {
      // rho is subtracted for all factors at once below
      for (int i = 0; i < m; ++i)
        out.weight[rd.ss_coord(nodes[i])] =
            in_parabolic[nodes[i]] ? Rat(0) : Rat(-1);
      continue;
    }

    bool want_affine = in_parabolic[affine_node_of[f]];
    if (want_affine) {
      bool all = true;
      for (int i = 0; i < m; ++i) all = all && in_parabolic[nodes[i]];
      if (all)
        throw std::invalid_argument(
            "the full extended node set of a factor is not finite");
    }

    RationalOffset off = rational_offset(iw.level(), f);
    Int q = off.q;
    Int p0 = ((-off.p) % q + q) % q;
    if (p0 == 0) p0 = q;
    std::vector<Int> coeff = alcove_coefficients(rd, f, q);
    Int coeff_sum = 0;
    for (Int c : coeff) coeff_sum += c;
    Int reps = width > 0 ? width : q * (m + 2) + coeff_sum;
    std::vector<int> support;
    for (int i = 0; i < m; ++i)
      if (!in_parabolic[nodes[i]]) support.push_back(i);

    std::optional<std::vector<Int>> u;
    Int scale = 0;
    for (Int k = 0; k < reps && !u; ++k) {
      scale = p0 + k * q;
      u = detail::face_witness(coeff, support, scale, want_affine);
    }
    if (!u) {
      std::string face = "{";
      for (std::size_t i = 0; i < support.size(); ++i)
        face += (i ? "," : "") + std::to_string(support[i]);
      throw std::runtime_error("no witness for the face with free nodes " + face +
                               "} of factor " + std::to_string(f) + " within " +
                               std::to_string(reps) + " scales");
    }
    for (int i = 0; i < m; ++i)
      out.weight[rd.ss_coord(nodes[i])] = Rat(-(*u)[i]);
    out.shift[f] = (-scale - off.p) / q;
  }
  for (int c = 0; c < rd.rank(); ++c) out.weight[c] -= rho[c];

  out.shifted = iw.level();
  for (std::size_t f = 0; f < rd.num_factors(); ++f)
    if (out.shift[f] != 0)
      out.shifted.offset[f] = out.shifted.offset[f] + ExactScalar(Rat(out.shift[f]));

  // the stabilizer of an antidominant weight is generated by the simple
  // reflections fixing it, so checking generators checks the subgroup
  IntegralWeyl check(aw, out.shifted);
  if (!is_antidominant(check, out.weight))
    throw std::logic_error("stabilizer witness is not antidominant");
  for (int g = 0; g < iw.num_generators(); ++g) {
    bool fixed =
        dot_act(aw, out.shifted, check.generator(g), out.weight) == out.weight;
    if (fixed != in_parabolic[g])
      throw std::logic_error("stabilizer witness fixes the wrong walls");
  }
  return out;
}

}  // namespace wk
