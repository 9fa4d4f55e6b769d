#pragma once

#include "weylkit/integral_weyl.hpp"

#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace wk {

// Transport between the level-integral groups of a datum and of its
// Langlands dual at the reciprocal level. Finite parts correspond through
// their canonical words; a translation by lambda goes to the translation by
// |offset| * kappa_b(lambda), which lands exactly on the dual side's
// translation lattice. The absolute value implements the usual reading of a
// negative level through its mirror: both cut out the same subgroup, and
// only the mirror keeps the standard alcove walls aligned across the two
// sides, so that simple generators transport to simple generators.
class LevelDuality {
 public:
  LevelDuality(const AffineWeyl& aw, const Level& level)
      : aw_(aw),
        level_(level),
        dual_datum_(aw.datum().langlands_dual()),
        dual_aw_(dual_datum_),
        source_(aw, level),
        target_(dual_aw_, wk::dual_level(aw.datum(), level)) {
    const RootDatum& rd = aw_.datum();
    scale_.assign(rd.num_factors(), Rat(0));
    for (std::size_t f = 0; f < rd.num_factors(); ++f) {
      if (rd.factor(f).torus || !level.offset[f].is_rational()) continue;
      RationalOffset off = rational_offset(level, f);
      scale_[f] = Rat(off.p < 0 ? -off.p : off.p, off.q);
    }
  }
  LevelDuality(const LevelDuality&) = delete;
  LevelDuality& operator=(const LevelDuality&) = delete;

  const RootDatum& dual_datum() const { return dual_datum_; }
  const AffineWeyl& dual_weyl() const { return dual_aw_; }
  const Level& dual_level() const { return target_.level(); }
  const IntegralWeyl& source() const { return source_; }
  const IntegralWeyl& target() const { return target_; }

  // per-factor rescaling of translation coordinates, before the d_k weights
  Rat translation_scale(std::size_t f) const { return scale_.at(f); }

  AffineElement map(const AffineElement& x) const {
    if (!source_.contains(x))
      throw std::invalid_argument("element is not integral for the level");
    const RootDatum& rd = aw_.datum();
    AffineElement out;
    out.w = dual_datum_.weyl().from_word(rd.weyl().word(x.w));
    out.t.assign(rd.rank(), 0);
    for (int k = 0; k < rd.ss_rank(); ++k) {
      int c = rd.ss_coord(k);
      if (x.t[c] == 0) continue;
      Rat v = scale_[rd.ss_factor(k)] * Rat(rd.simple_d(k) * x.t[c]);
      if (!is_integer(v))
        throw std::logic_error("translation image left the dual lattice");
      out.t[c] = to_int_checked(v);
    }
    return out;
  }

  AffineElement unmap(const AffineElement& y) const {
    if (!target_.contains(y))
      throw std::invalid_argument("element is not integral for the dual level");
    const RootDatum& rd = aw_.datum();
    AffineElement out;
    out.w = rd.weyl().from_word(dual_datum_.weyl().word(y.w));
    out.t.assign(rd.rank(), 0);
    for (int k = 0; k < rd.ss_rank(); ++k) {
      int c = rd.ss_coord(k);
      if (y.t[c] == 0) continue;
      Rat v = Rat(y.t[c]) / (scale_[rd.ss_factor(k)] * Rat(rd.simple_d(k)));
      if (!is_integer(v))
        throw std::logic_error("translation preimage left the lattice");
      out.t[c] = to_int_checked(v);
    }
    return out;
  }

  // target generator index the g-th source generator lands on, -1 if the
  // image is not a simple generator of the dual side
  int generator_image(int g) const {
    AffineElement image = map(source_.generator(g));
    for (int h = 0; h < target_.num_generators(); ++h)
      if (target_.generator(h) == image) return h;
    return -1;
  }

 private:
  const AffineWeyl& aw_;
  Level level_;
  RootDatum dual_datum_;
  AffineWeyl dual_aw_;
  IntegralWeyl source_;
  IntegralWeyl target_;
  std::vector<Rat> scale_;
};

namespace detail {

// order of s_i s_j, 0 encoding infinity. Distinct reflections along
// parallel walls (same root line) give an infinite dihedral group; crossing
// walls meet at a crystallographic angle, so iteration stops by 6.
inline Int generator_pair_order(const IntegralWeyl& iw, int i, int j) {
  if (i == j) return 1;
  const AffineWeyl& aw = iw.ambient();
  AffineCoroot a = iw.simple_coroot(i);
  AffineCoroot b = iw.simple_coroot(j);
  AffineElement si = iw.generator(i);
  AffineElement sj = iw.generator(j);
  if (b.root == a.root || b.root == aw.datum().negate_root(a.root))
    return si == sj ? 1 : 0;
  AffineElement z = aw.multiply(si, sj);
  AffineElement cur = z;
  Int order = 1;
  while (!(cur == aw.identity())) {
    cur = aw.multiply(cur, z);
    ++order;
    if (order > 6)
      throw std::logic_error("crossing reflections must have order at most 6");
  }
  return order;
}

}  // namespace detail

struct CoxeterIsoReport {
  bool ok = false;
  std::vector<int> generator_image;  // -1 where an image is not simple
  bool generators_match = false;     // every generator maps to its own slot
  MatI coxeter_source;               // pairwise product orders, 0 = infinite
  MatI coxeter_target;
  bool coxeter_equal = false;
  bool lattice_basis_match = false;  // lattice basis lands on the dual basis
  Int ball_radius = 0;
  bool ball_bijection = false;
  bool lengths_match = false;        // intrinsic lengths agree across the ball
};

// Two-sided check that transport is an isomorphism of Coxeter systems: the
// dual group's generators and lattice are computed on the dual datum from
// scratch and compared against the transported data.
inline CoxeterIsoReport verify_coxeter_iso(const AffineWeyl& aw, const Level& level,
                                           Int ball) {
  LevelDuality dual(aw, level);
  const IntegralWeyl& src = dual.source();
  const IntegralWeyl& tgt = dual.target();
  const RootDatum& rd = aw.datum();
  const RootDatum& drd = dual.dual_datum();

  CoxeterIsoReport report;
  report.ball_radius = ball;

  int n = src.num_generators();
  report.generators_match = tgt.num_generators() == n;
  for (int g = 0; g < n; ++g) {
    report.generator_image.push_back(dual.generator_image(g));
    if (report.generator_image.back() != g) report.generators_match = false;
  }

  if (tgt.num_generators() == n) {
    report.coxeter_source = MatI(n, n);
    report.coxeter_target = MatI(n, n);
    report.coxeter_equal = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        report.coxeter_source(i, j) = detail::generator_pair_order(src, i, j);
        report.coxeter_target(i, j) = detail::generator_pair_order(tgt, i, j);
        if (report.coxeter_source(i, j) != report.coxeter_target(i, j))
          report.coxeter_equal = false;
      }
  }

  report.lattice_basis_match = true;
  const TranslationLattice& slat = src.translations();
  const TranslationLattice& tlat = tgt.translations();
  for (int k = 0; k < rd.ss_rank(); ++k) {
    const VecI& sc = rd.simple_coroot_cowt(k);
    const VecI& tc = drd.simple_coroot_cowt(k);
    // transport is diagonal in coweight coordinates, weighted per coordinate
    for (int j = 0; j < rd.ss_rank(); ++j) {
      int c = rd.ss_coord(j);
      Rat s = dual.translation_scale(rd.ss_factor(j)) * Rat(rd.simple_d(j));
      if (s * Rat(slat.coeff[k] * sc[c]) != Rat(tlat.coeff[k] * tc[c]))
        report.lattice_basis_match = false;
    }
  }

  std::vector<AffineElement> sball = src.ball(ball);
  std::vector<AffineElement> tball = tgt.ball(ball);
  report.ball_bijection = sball.size() == tball.size();
  report.lengths_match = true;
  std::unordered_set<AffineElement, AffineElementHash> seen;
  std::unordered_set<AffineElement, AffineElementHash> expect(tball.begin(),
                                                              tball.end());
  for (const AffineElement& x : sball) {
    AffineElement y = dual.map(x);
    if (!seen.insert(y).second || expect.count(y) == 0) report.ball_bijection = false;
    if (src.length(x) != tgt.length(y)) report.lengths_match = false;
  }

  report.ok = report.generators_match && report.coxeter_equal &&
              report.lattice_basis_match && report.ball_bijection &&
              report.lengths_match;
  return report;
}

}  // namespace wk
