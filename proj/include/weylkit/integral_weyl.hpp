#pragma once

// The subgroup of the affine Weyl group generated by reflections whose
// walls are walls of the dot action at a fixed level. An affine coroot
// (betacheck, n) qualifies iff n * offset * d_beta is an integer, so for a
// rational offset p/q the condition is q / gcd(q, d_beta) | n, and for a
// non-rational offset only n = 0 survives.
//
// With the finite simple reflections this subgroup is again a Coxeter
// group. Its extra simple generator per factor reflects either in the
// highest long root (when gcd(q, lacing) = 1) or in the highest short root
// (when the lacing number divides q); the lacing number is prime, so the
// two cases are exhaustive.

#include "weylkit/affine_weyl.hpp"
#include "weylkit/level.hpp"
#include "weylkit/root_datum.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace wk {

enum class AffineNodeKind { none, long_root, short_root };

class IntegralWeyl {
 public:
  IntegralWeyl(const AffineWeyl& aw, Level level)
      : aw_(aw), level_(std::move(level)) {
    const RootDatum& rd = aw_.datum();
    validate_level(rd, level_);
    lattice_ = integral_translation_lattice(rd, level_);
    for (std::size_t f = 0; f < rd.num_factors(); ++f) {
      if (rd.factor(f).torus) continue;
      const ExactScalar& o = level_.offset[f];
      if (!o.is_rational()) continue;  // only the finite reflections remain
      Int q = to_int_checked(den(o.rational_part()));
      Int r = rd.lacing(f);
      Int g = std::gcd(q, r);
      AffineNodeKind kind;
      int hr;
      Int n;
      if (g == 1) {
        kind = AffineNodeKind::long_root;
        hr = rd.highest_root_index(f);
        n = q;
      } else if (g == r) {
        kind = AffineNodeKind::short_root;
        hr = rd.highest_short_root_index(f);
        n = q / r;
      } else {
        throw std::logic_error("lacing number is prime, gcd must be 1 or it");
      }
      node_kind_.push_back(kind);
      node_factor_.push_back(static_cast<int>(f));
      node_coroot_.push_back(AffineCoroot{rd.negate_root(hr), n});
    }
  }

  const AffineWeyl& ambient() const { return aw_; }
  const Level& level() const { return level_; }
  const TranslationLattice& translations() const { return lattice_; }

  // -- generators ---------------------------------------------------------------

  int num_finite_generators() const { return aw_.datum().ss_rank(); }
  int num_generators() const {
    return num_finite_generators() + static_cast<int>(node_coroot_.size());
  }
  bool is_affine_node(int g) const { return g >= num_finite_generators(); }

  AffineCoroot simple_coroot(int g) const {
    checkGen(g);
    if (!is_affine_node(g)) return {g, 0};
    return node_coroot_[g - num_finite_generators()];
  }

  AffineElement generator(int g) const { return aw_.reflection(simple_coroot(g)); }

  AffineNodeKind node_kind(int g) const {
    checkGen(g);
    if (!is_affine_node(g)) return AffineNodeKind::none;
    return node_kind_[g - num_finite_generators()];
  }

  int generator_factor(int g) const {
    checkGen(g);
    if (!is_affine_node(g))
      return aw_.datum().ss_factor(g);
    return node_factor_[g - num_finite_generators()];
  }

  // -- membership and lengths ---------------------------------------------------

  bool is_integral(const AffineCoroot& a) const {
    const Root& r = aw_.datum().root(a.root);
    const ExactScalar& o = level_.offset[r.factor];
    if (!o.is_rational()) return a.level == 0;
    Int q = to_int_checked(den(o.rational_part()));
    Int qb = q / std::gcd(q, r.d);
    return a.level % qb == 0;
  }

  // Membership in the reflection subgroup: any finite part, translation in
  // the integral lattice.
  bool contains(const AffineElement& x) const {
    return lattice_contains(aw_.datum(), lattice_, x.t);
  }

  // Coxeter length inside the subgroup: integral inversions.
  Int length(const AffineElement& x) const {
    const RootDatum& rd = aw_.datum();
    Int count = 0;
    for (int idx = 0; idx < rd.num_roots(); ++idx) {
      Int bound = std::abs(rd.pair_root_coweight(idx, x.t)) + 1;
      for (Int n = rd.is_positive_index(idx) ? 0 : 1; n <= bound; ++n) {
        AffineCoroot a{idx, n};
        if (is_integral(a) && !aw_.is_positive(aw_.act(x, a))) ++count;
      }
    }
    return count;
  }

  bool is_right_descent(const AffineElement& x, int g) const {
    return !aw_.is_positive(aw_.act(x, simple_coroot(g)));
  }
  bool is_left_descent(int g, const AffineElement& x) const {
    return !aw_.is_positive(aw_.act(aw_.inverse(x), simple_coroot(g)));
  }

  AffineElement right_mul(const AffineElement& x, int g) const {
    return aw_.multiply(x, generator(g));
  }
  AffineElement left_mul(int g, const AffineElement& x) const {
    return aw_.multiply(generator(g), x);
  }

  // -- words and order ------------------------------------------------------------

  std::vector<int> word(AffineElement x) const {
    if (!contains(x))
      throw std::domain_error("element lies outside the integral subgroup");
    std::vector<int> out;
    while (!(x == aw_.identity())) {
      int g = leastRightDescent(x);
      out.push_back(g);
      x = right_mul(x, g);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  AffineElement from_word(const std::vector<int>& gens) const {
    AffineElement x = aw_.identity();
    for (int g : gens) x = right_mul(x, g);
    return x;
  }

  bool bruhat_leq(const AffineElement& x, const AffineElement& y) const {
    if (x == y) return true;
    Int lx = length(x), ly = length(y);
    if (lx >= ly) return false;
    VecI k;
    k.reserve(2 * aw_.datum().rank() + 2);
    k.push_back(x.w);
    k.insert(k.end(), x.t.begin(), x.t.end());
    k.push_back(y.w);
    k.insert(k.end(), y.t.begin(), y.t.end());
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    int g = leastRightDescent(y);
    AffineElement ys = right_mul(y, g);
    bool ans = is_right_descent(x, g) ? bruhat_leq(right_mul(x, g), ys)
                                      : bruhat_leq(x, ys);
    cache_.emplace(std::move(k), ans);
    return ans;
  }

  // Elements of subgroup length <= radius, deterministic order
  // (length, finite part, translation).
  std::vector<AffineElement> ball(Int radius, std::size_t cap = 1000000) const {
    std::vector<AffineElement> out{aw_.identity()};
    std::unordered_set<AffineElement, AffineElementHash> seen{aw_.identity()};
    std::size_t head = 0;
    while (head < out.size()) {
      AffineElement x = out[head++];
      Int lx = length(x);
      if (lx == radius) continue;
      for (int g = 0; g < num_generators(); ++g) {
        AffineElement y = right_mul(x, g);
        if (length(y) != lx + 1 || seen.count(y)) continue;
        if (seen.size() >= cap)
          throw std::runtime_error("integral ball exceeds the element cap");
        seen.insert(y);
        out.push_back(y);
      }
    }
    std::vector<std::pair<VecI, std::size_t>> keyed;
    keyed.reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      VecI k;
      k.reserve(aw_.datum().rank() + 2);
      k.push_back(length(out[i]));
      k.push_back(out[i].w);
      k.insert(k.end(), out[i].t.begin(), out[i].t.end());
      keyed.emplace_back(std::move(k), i);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<AffineElement> sorted;
    sorted.reserve(out.size());
    for (const auto& [k, i] : keyed) sorted.push_back(std::move(out[i]));
    return sorted;
  }

 private:
  int leastRightDescent(const AffineElement& x) const {
    for (int g = 0; g < num_generators(); ++g)
      if (is_right_descent(x, g)) return g;
    throw std::logic_error("integral element of positive length has no descent");
  }

  void checkGen(int g) const {
    if (g < 0 || g >= num_generators())
      throw std::invalid_argument("generator index out of range");
  }

  const AffineWeyl& aw_;
  Level level_;
  TranslationLattice lattice_;
  std::vector<AffineNodeKind> node_kind_;
  std::vector<int> node_factor_;
  std::vector<AffineCoroot> node_coroot_;
  mutable std::unordered_map<VecI, bool, VecIHash> cache_;
};

// -- the dot action --------------------------------------------------------------

// x acts on a weight by translating with the level pairing, then applying
// the rho-shifted finite action: first lambda + (kappa - kappa_c)(t_x),
// then w(. + rho) - rho. Rational offsets only.
inline VecQ dot_act(const AffineWeyl& aw, const Level& level,
                    const AffineElement& x, const VecQ& lambda) {
  const RootDatum& rd = aw.datum();
  VecX shift = shifted_pairing_weight(rd, level, x.t);
  VecQ nu = lambda;
  for (int c = 0; c < rd.rank(); ++c) {
    if (!shift[c].is_rational())
      throw std::domain_error("dot action needs a rational offset");
    nu[c] += shift[c].rational_part();
  }
  const VecI& rho = rd.rho();
  for (int c = 0; c < rd.rank(); ++c) nu[c] += rho[c];
  VecQ out = aw.finite().act_weight(x.w, nu);
  for (int c = 0; c < rd.rank(); ++c) out[c] -= rho[c];
  return out;
}

inline VecQ dot_act(const AffineWeyl& aw, const Level& level,
                    const AffineElement& x, const VecI& lambda) {
  return dot_act(aw, level, x, to_rational(lambda));
}

// Signed distance of a weight from the reflection wall of an affine
// coroot: <lambda + rho, betacheck> + n * offset * d_beta. Zero on the
// wall. Rational offsets only.
inline Rat dot_wall_value(const AffineWeyl& aw, const Level& level,
                          const VecQ& lambda, const AffineCoroot& a) {
  const RootDatum& rd = aw.datum();
  const Root& r = rd.root(a.root);
  const ExactScalar& o = level.offset.at(r.factor);
  if (a.level != 0 && !o.is_rational())
    throw std::domain_error("wall values need a rational offset");
  VecQ nu = lambda;
  const VecI& rho = rd.rho();
  for (int c = 0; c < rd.rank(); ++c) nu[c] += rho[c];
  Rat v = rd.pair_weight_coroot(nu, a.root);
  if (a.level != 0) v += Rat(a.level) * o.rational_part() * Rat(r.d);
  return v;
}

inline bool on_wall(const AffineWeyl& aw, const Level& level, const VecQ& lambda,
                    const AffineCoroot& a) {
  return dot_wall_value(aw, level, lambda, a) == Rat(0);
}

// Antidominance for the negative-side chamber: <lambda+rho, alphacheck_i> <= 0
// on every node, and on each factor with a negative rational offset p/q the
// affine wall bound <lambda+rho, thetacheck> >= p for the integral affine
// node's highest root theta. Positive rational offsets are outside this
// library's chamber conventions and throw.
inline bool is_antidominant(const IntegralWeyl& iw, const VecQ& lambda) {
  const AffineWeyl& aw = iw.ambient();
  const RootDatum& rd = aw.datum();
  for (std::size_t f = 0; f < rd.num_factors(); ++f)
    if (!rd.factor(f).torus &&
        classify_offset(iw.level().offset[f]) == LevelSign::positive)
      throw std::domain_error("antidominance here means the negative chamber");
  for (int k = 0; k < rd.ss_rank(); ++k)
    if (dot_wall_value(aw, iw.level(), lambda, AffineCoroot{k, 0}) > 0) return false;
  for (int g = iw.num_finite_generators(); g < iw.num_generators(); ++g) {
    AffineCoroot a = iw.simple_coroot(g);
    // value of the affine node wall: reflected side is negative
    if (dot_wall_value(aw, iw.level(), lambda, a) > 0) return false;
  }
  return true;
}

}  // namespace wk
