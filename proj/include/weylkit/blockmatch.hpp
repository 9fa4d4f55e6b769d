// Block combinatorics for the extended affine Weyl group: the coweight
// dictionary for left W_f-cosets, double-coset windows of a reflection
// subgroup with their Bruhat-minimal elements and parabolic stabilizers,
// the stabilizer comparison across level duality, and the parahoric
// double-coset characterizations.

#pragma once

#include "weylkit/duality.hpp"
#include "weylkit/goodness.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace wk {

// -- the coweight dictionary -----------------------------------------------------

// Left action of w t^lam on coset labels: translations subtract their
// coweight, the finite part acts through the rho-shifted action. Acting on
// -rho identifies cosets x W_f with coweights.
inline VecI coset_act(const AffineWeyl& aw, const AffineElement& x, const VecI& mu) {
  const RootDatum& rd = aw.datum();
  const VecI rho = rd.rho();  // ones on the nodes, read here as a coweight
  VecI v = mu;
  for (int c = 0; c < rd.rank(); ++c) v[c] += rho[c] - x.t[c];
  VecI out = aw.finite().act_coweight(x.w, v);
  for (int c = 0; c < rd.rank(); ++c) out[c] -= rho[c];
  return out;
}

// The label of x W_f itself: x acting on -rho, which comes out as
// -w(lam) - rho for x = w t^lam.
inline VecI weight_of(const AffineWeyl& aw, const AffineElement& x) {
  const RootDatum& rd = aw.datum();
  VecI out = aw.finite().act_coweight(x.w, x.t);
  const VecI rho = rd.rho();
  for (int c = 0; c < rd.rank(); ++c) out[c] = -out[c] - rho[c];
  return out;
}

// Coefficients of a weight-side vector in the simple root basis of its
// datum; empty when the vector leaves the root span (torus coordinates).
inline std::optional<VecQ> root_basis_coefficients(const RootDatum& rd,
                                                   const VecQ& delta) {
  for (int c = 0; c < rd.rank(); ++c)
    if (rd.coord_ss(c) < 0 && delta[c] != 0) return std::nullopt;
  int m = rd.ss_rank();
  VecQ rhs(m, Rat(0));
  for (int k = 0; k < m; ++k) rhs[k] = delta[rd.ss_coord(k)];
  return rd.cartan_inverse() * rhs;
}

// -- double-coset windows ---------------------------------------------------------

struct BlockDescriptor {
  AffineElement minimal_element;
  std::vector<AffineElement> coset_window;  // ball elements of the same window
  std::vector<int> stabilizer;              // subgroup generators g with y^-1 s_g y finite
  VecI weight;                              // label of the minimal coset
};

// Unique Bruhat-minimal element of the double coset (subgroup) x (finite):
// each descent step strictly drops the ambient length, and an element with
// no descents on either side is below the whole coset.
inline AffineElement block_minimum(const IntegralWeyl& iw, AffineElement x) {
  const AffineWeyl& aw = iw.ambient();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int g = 0; g < iw.num_generators(); ++g)
      if (iw.is_left_descent(g, x)) {
        x = iw.left_mul(g, x);
        moved = true;
        break;
      }
    if (moved) continue;
    for (int g = 0; g < aw.datum().ss_rank(); ++g)
      if (aw.is_right_descent(x, g)) {
        x = aw.right_mul(x, g);
        moved = true;
        break;
      }
  }
  return x;
}

inline std::vector<int> coset_stabilizer_generators(const IntegralWeyl& iw,
                                                    const AffineElement& y) {
  const AffineWeyl& aw = iw.ambient();
  AffineElement yi = aw.inverse(y);
  std::vector<int> out;
  for (int g = 0; g < iw.num_generators(); ++g) {
    AffineElement z = aw.multiply(aw.multiply(yi, iw.generator(g)), y);
    bool finite = true;
    for (Int t : z.t) finite = finite && t == 0;
    if (finite) out.push_back(g);
  }
  return out;
}

// Partition of the radius-L ball into double-coset windows, one descriptor
// per window, ordered by weight label.
inline std::vector<BlockDescriptor> enumerate_blocks(const IntegralWeyl& iw,
                                                     Int bound) {
  const AffineWeyl& aw = iw.ambient();
  std::map<VecI, BlockDescriptor> windows;
  for (const AffineElement& x : aw.ball(bound)) {
    AffineElement y = block_minimum(iw, x);
    VecI label = weight_of(aw, y);
    auto [it, fresh] = windows.try_emplace(std::move(label));
    if (fresh) {
      it->second.minimal_element = y;
      it->second.stabilizer = coset_stabilizer_generators(iw, y);
      it->second.weight = it->first;
    }
    it->second.coset_window.push_back(x);
  }
  std::vector<BlockDescriptor> out;
  out.reserve(windows.size());
  for (auto& [label, d] : windows) out.push_back(std::move(d));
  return out;
}

// -- order compatibility ----------------------------------------------------------

struct BruhatDominanceTriple {
  bool coset_order;      // x W_f below s x W_f through minimal representatives
  bool weight_order;     // label of x below label of s x in dominance order
  bool coroot_positive;  // x^-1 of the reflection coroot is positive or finite
};

// One reflection of the dual-level subgroup, transported back, tested
// three ways against an element of the ambient group. The three answers
// agree; tests enforce it.
inline BruhatDominanceTriple bruhat_dominance_check(const LevelDuality& dual,
                                                    const AffineElement& x,
                                                    const AffineCoroot& alpha) {
  const AffineWeyl& aw = dual.source().ambient();
  const RootDatum& rd = aw.datum();
  const RootDatum& drd = dual.dual_datum();
  if (!dual.target().is_integral(alpha))
    throw std::invalid_argument("coroot is not integral for the dual level");

  AffineElement s = dual.unmap(dual.dual_weyl().reflection(alpha));
  int groot = rd.root_index(drd.root(alpha.root).cowt);
  if (groot < 0) throw std::logic_error("dual coroot has no matching root");
  const VecI& gcowt = rd.root(groot).cowt;
  Int m = 0;
  for (int c = 0; c < rd.rank(); ++c)
    if (gcowt[c] != 0) {
      if (s.t[c] % gcowt[c] != 0)
        throw std::logic_error("transported reflection is not a coroot reflection");
      m = s.t[c] / gcowt[c];
      break;
    }
  if (!(s == aw.reflection({groot, m})))
    throw std::logic_error("transported reflection is not a coroot reflection");

  BruhatDominanceTriple out;
  AffineElement sx = aw.multiply(s, x);
  out.coset_order =
      aw.bruhat_leq(aw.min_coset_rep(x), aw.min_coset_rep(sx));

  // All three legs are read against the positive functional of the
  // transported reflection. Not always {groot, m}: the transport negates
  // levels, and the input coroot carries its own sign.
  AffineCoroot pos{groot, m};
  if (!aw.is_positive(pos)) pos = {rd.negate_root(pos.root), -pos.level};

  // Label order: s moves the label along the coweight line of pos, and
  // upward means a nonnegative multiple of that coweight. For level-one
  // functionals the line runs through a negative coroot; comparing against
  // nonnegative spans of positive coroots alone would get the direction
  // wrong on exactly those.
  VecI lo = weight_of(aw, x), hi = weight_of(aw, sx);
  const VecI& line = rd.root(pos.root).cowt;
  Rat ratio(0);
  for (int c = 0; c < rd.rank(); ++c)
    if (line[c] != 0) {
      ratio = Rat(hi[c] - lo[c]) / line[c];
      break;
    }
  for (int c = 0; c < rd.rank(); ++c)
    if (Rat(hi[c] - lo[c]) != ratio * line[c])
      throw std::logic_error("label difference left the coweight line");
  out.weight_order = ratio >= 0;

  out.coroot_positive = aw.act(aw.inverse(x), pos).level >= 0;
  return out;
}

// -- stabilizer matching across duality -------------------------------------------

struct BlockMatchEntry {
  VecI weight;
  AffineElement minimal_element;
  std::vector<int> window_stabilizer;  // subgroup generators fixing the coset
  std::vector<int> dual_stabilizer;    // dual generators fixing the label dot-wise
  bool antidominant = false;  // label sits in the closed dual antidominant alcove
  bool match = false;
};

struct BlockMatchReport {
  std::vector<BlockMatchEntry> entries;
  bool all_match = true;
};

// For every window in the ball: the parabolic attached to its minimal
// element on one side, and the dot-action stabilizer of its label computed
// on the dual side from scratch, compared through the transport of
// generators. Wants a good negative level.
inline BlockMatchReport match_blocks(const AffineWeyl& aw, const Level& level,
                                     Int bound) {
  const RootDatum& rd = aw.datum();
  validate_level(rd, level);
  for (std::size_t f = 0; f < rd.num_factors(); ++f) {
    if (rd.factor(f).torus) continue;
    LevelSign sign = classify_offset(level.offset[f]);
    if (sign == LevelSign::critical)
      throw std::domain_error("matching is undefined at the critical level");
    if (sign == LevelSign::positive)
      throw std::domain_error(
          "positive level: mirror to the negative side and match there");
  }
  for (std::size_t f = 0; f < rd.num_factors(); ++f) {
    if (rd.factor(f).torus || !level.offset[f].is_rational()) continue;
    Int q = to_int_checked(den(level.offset[f].rational_part()));
    if (std::gcd(q, bad_prime_product(rd, f)) != 1)
      throw std::domain_error("level is not good on simple factor " +
                              std::to_string(f));
  }

  LevelDuality dual(aw, level);
  const IntegralWeyl& tgt = dual.target();
  const AffineWeyl& daw = dual.dual_weyl();

  BlockMatchReport report;
  for (const BlockDescriptor& block : enumerate_blocks(dual.source(), bound)) {
    BlockMatchEntry entry;
    entry.weight = block.weight;
    entry.minimal_element = block.minimal_element;
    entry.window_stabilizer = block.stabilizer;

    VecQ theta = to_rational(block.weight);  // label, read as a dual-side weight
    entry.antidominant = is_antidominant(tgt, theta);
    for (int g = 0; g < tgt.num_generators(); ++g) {
      VecQ moved = dot_act(daw, tgt.level(), tgt.generator(g), theta);
      if (moved == theta) entry.dual_stabilizer.push_back(g);
    }

    std::vector<int> transported;
    entry.match = true;
    for (int g : entry.window_stabilizer) {
      int h = dual.generator_image(g);
      if (h < 0) entry.match = false;
      transported.push_back(h);
    }
    std::sort(transported.begin(), transported.end());
    entry.match = entry.match && transported == entry.dual_stabilizer;
    report.all_match = report.all_match && entry.match;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

// -- parahoric double cosets ------------------------------------------------------

struct ParahoricReport {
  // the same subset of the ball, characterized three ways
  std::vector<AffineElement> via_descents;      // levi left, all finite right, levi cosets drop
  std::vector<AffineElement> via_labels;        // finite-coset form of the label descents
  std::vector<AffineElement> via_coset_maxima;  // unique maxima with disjoint levi coroots
  bool equal = false;
  std::vector<AffineElement> tied_cosets;  // minima of cosets whose maximum is not unique
};

namespace detail {

inline AffineElement levi_min(const AffineWeyl& aw, const std::vector<int>& levi,
                              AffineElement x) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j : levi)
      if (aw.is_left_descent(j, x)) {
        x = aw.left_mul(j, x);
        moved = true;
        break;
      }
  }
  return x;
}

}  // namespace detail

// Cross-checks three descriptions of the same subset of the radius-L ball
// for a subset of the finite nodes: descent conditions, their coset
// reformulation, and maximal-length double-coset representatives whose
// coset keeps the finite coroots away from the levi part.
inline ParahoricReport parahoric_subset_check(const AffineWeyl& aw,
                                              const std::vector<int>& levi,
                                              Int bound) {
  const RootDatum& rd = aw.datum();
  const FiniteWeyl& fw = aw.finite();
  for (int j : levi)
    if (j < 0 || j >= rd.ss_rank())
      throw std::invalid_argument("levi node index out of range");

  // the levi subgroup of the finite group, and the roots it spans
  std::vector<int> levi_elems{fw.identity()};
  std::unordered_set<int> levi_seen{fw.identity()};
  for (std::size_t head = 0; head < levi_elems.size(); ++head)
    for (int j : levi) {
      int w = fw.right_mul(levi_elems[head], j);
      if (levi_seen.insert(w).second) levi_elems.push_back(w);
    }
  std::unordered_set<int> levi_roots;
  for (int r = 0; r < rd.num_roots(); ++r) {
    std::optional<VecI> coeff = coroot_coordinates(rd, rd.root(r).cowt);
    if (!coeff) continue;
    bool inside = true;
    for (int k = 0; k < rd.ss_rank(); ++k)
      if ((*coeff)[k] != 0 &&
          std::find(levi.begin(), levi.end(), k) == levi.end())
        inside = false;
    if (inside) levi_roots.insert(r);
  }

  ParahoricReport report;
  struct CosetFacts {
    AffineElement maximum;
    bool tied = false;
    bool clean = false;  // finite coroots stay off the levi ones
  };
  std::unordered_map<AffineElement, CosetFacts, AffineElementHash> cosets;

  for (const AffineElement& x : aw.ball(bound)) {
    bool levi_left = true;
    for (int j : levi) levi_left = levi_left && aw.is_left_descent(j, x);
    bool finite_right = true;
    for (int g = 0; g < rd.ss_rank(); ++g)
      finite_right = finite_right && aw.is_right_descent(x, g);

    if (levi_left && finite_right) {
      AffineElement xm = detail::levi_min(aw, levi, x);
      bool coset_drop = true;
      for (int g = 0; g < rd.ss_rank(); ++g) {
        AffineElement ym = detail::levi_min(aw, levi, aw.right_mul(x, g));
        coset_drop = coset_drop && aw.length(ym) < aw.length(xm);
      }
      if (coset_drop) report.via_descents.push_back(x);

      AffineElement xc = aw.min_coset_rep(x);
      bool label_drop = true;
      for (int j : levi) {
        AffineElement yc = aw.min_coset_rep(aw.left_mul(j, x));
        label_drop = label_drop && aw.length(yc) < aw.length(xc);
      }
      if (label_drop) report.via_labels.push_back(x);
    }

    AffineElement key = detail::levi_min(aw, levi, aw.min_coset_rep(x));
    auto it = cosets.find(key);
    if (it == cosets.end()) {
      CosetFacts facts;
      std::unordered_set<AffineElement, AffineElementHash> members;
      Int best = -1;
      for (int wj : levi_elems) {
        AffineElement left = aw.multiply({wj, VecI(rd.rank(), 0)}, key);
        for (std::size_t wf = 0; wf < fw.size(); ++wf) {
          AffineElement z =
              aw.multiply(left, {static_cast<int>(wf), VecI(rd.rank(), 0)});
          if (!members.insert(z).second) continue;
          Int l = aw.length(z);
          if (l > best) {
            best = l;
            facts.maximum = z;
            facts.tied = false;
          } else if (l == best) {
            facts.tied = true;
          }
        }
      }
      facts.clean = true;
      for (int r = 0; r < rd.num_roots(); ++r) {
        AffineCoroot moved = aw.act(key, AffineCoroot{r, 0});
        if (moved.level == 0 && levi_roots.count(moved.root)) facts.clean = false;
      }
      if (facts.tied && facts.clean) report.tied_cosets.push_back(key);
      it = cosets.emplace(key, std::move(facts)).first;
    }
    if (!it->second.tied && it->second.clean && x == it->second.maximum)
      report.via_coset_maxima.push_back(x);
  }

  report.equal = report.via_descents == report.via_labels &&
                 report.via_labels == report.via_coset_maxima;
  return report;
}

// -- contragredient weight map ----------------------------------------------------

// Highest weight of the dual Verma module, lam to -lam - 2 rho.
inline VecI verma_duality_weight(const RootDatum& rd, const VecI& lam) {
  VecI out = lam;
  const VecI rho = rd.rho();
  for (int c = 0; c < rd.rank(); ++c) out[c] = -out[c] - 2 * rho[c];
  return out;
}

// Cohomological shift of the duality, twice the pairing of the two rhos,
// summed as root heights so the result stays integral.
inline Int verma_duality_shift(const RootDatum& rd) {
  Int out = 0;
  for (int i = 0; i < rd.num_positive(); ++i)
    out += rd.pair_root_coweight(i, rd.rho());
  return out;
}

}  // namespace wk
