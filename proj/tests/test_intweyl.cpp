#include "weylkit/integral_weyl.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

using namespace wk;

namespace {

struct Setup {
  RootDatum rd;
  AffineWeyl aw;
  Level level;
  Setup(const char* type, const char* level_text)
      : rd(RootDatum::parse(type)), aw(rd), level(parse_level(aw.datum(), level_text)) {}
  IntegralWeyl integral() const { return IntegralWeyl(aw, level); }
};

std::set<std::pair<int, VecI>> as_set(const std::vector<AffineElement>& v) {
  std::set<std::pair<int, VecI>> out;
  for (const auto& x : v) out.emplace(x.w, x.t);
  return out;
}

}  // namespace

TEST_CASE("integral affine coroots") {
  Setup s("A1", "-h-1/3");
  IntegralWeyl iw = s.integral();
  CHECK(iw.is_integral({0, 0}));
  CHECK(iw.is_integral({0, 3}));
  CHECK(iw.is_integral({0, -3}));
  CHECK_FALSE(iw.is_integral({0, 1}));
  CHECK_FALSE(iw.is_integral({0, 2}));
  CHECK(iw.is_integral({1, 6}));  // negative root, level divisible

  Setup b("B2", "-h-1/2");
  IntegralWeyl bw = b.integral();
  const RootDatum& rd = b.aw.datum();
  for (int idx = 0; idx < rd.num_roots(); ++idx) {
    // long roots need even level, short roots take any level
    Int qb = rd.root(idx).d == 1 ? 2 : 1;
    CHECK(bw.is_integral({idx, qb}));
    if (qb == 2) CHECK_FALSE(bw.is_integral({idx, 1}));
  }

  Setup irr("A2", "irr");
  IntegralWeyl iirr = irr.integral();
  CHECK(iirr.num_generators() == iirr.num_finite_generators());
  CHECK(iirr.is_integral({0, 0}));
  CHECK_FALSE(iirr.is_integral({0, 1}));
}

TEST_CASE("affine node selection") {
  struct Example {
    const char* type;
    const char* level;
    AffineNodeKind kind;
    Int node_level;
  };
  const Example kExamples[] = {
      {"A1", "-h-1/3", AffineNodeKind::long_root, 3},
      {"A2", "-h-2/5", AffineNodeKind::long_root, 5},
      {"B2", "-h-1/2", AffineNodeKind::short_root, 1},
      {"B2", "-h-1/3", AffineNodeKind::long_root, 3},
      {"B2", "-h-1/4", AffineNodeKind::short_root, 2},
      {"G2", "-h-1/2", AffineNodeKind::long_root, 2},
      {"G2", "-h-1/3", AffineNodeKind::short_root, 1},
      {"G2", "-h-1/6", AffineNodeKind::short_root, 2},
      {"C3", "-h-1/2", AffineNodeKind::short_root, 1},
      {"F4", "-h-1/2", AffineNodeKind::short_root, 1},
  };
  for (const auto& ex : kExamples) {
    INFO(ex.type << " at " << ex.level);
    Setup s(ex.type, ex.level);
    IntegralWeyl iw = s.integral();
    REQUIRE(iw.num_generators() == iw.num_finite_generators() + 1);
    int g = iw.num_finite_generators();
    CHECK(iw.node_kind(g) == ex.kind);
    AffineCoroot a = iw.simple_coroot(g);
    CHECK(a.level == ex.node_level);
    const RootDatum& rd = s.aw.datum();
    int hr = ex.kind == AffineNodeKind::long_root ? rd.highest_root_index(0)
                                                  : rd.highest_short_root_index(0);
    CHECK(a.root == rd.negate_root(hr));
  }
}

TEST_CASE("integer levels recover the full affine group") {
  for (const char* type : {"A2", "B2", "G2"}) {
    Setup s(type, "-h-1");
    IntegralWeyl iw = s.integral();
    REQUIRE(iw.num_generators() == s.aw.num_generators());
    for (int g = 0; g < iw.num_generators(); ++g)
      CHECK(iw.generator(g) == s.aw.generator(g));
    // every affine element of the coroot-translation part is a member
    for (const auto& x : s.aw.ball(4))
      if (s.aw.omega_index(x) == 0) {
        CHECK(iw.contains(x));
        CHECK(iw.length(x) == s.aw.length(x));
      }
  }
}

TEST_CASE("only the denominator matters") {
  Setup a("B2", "-h-1/2"), b("B2", "-h+3/2"), c("B2", "-h+1/2");
  IntegralWeyl x = a.integral(), y = b.integral(), z = c.integral();
  REQUIRE(x.num_generators() == y.num_generators());
  for (int g = 0; g < x.num_generators(); ++g) {
    CHECK(x.generator(g) == y.generator(g));
    CHECK(x.generator(g) == z.generator(g));
    CHECK(x.node_kind(g) == y.node_kind(g));
  }
}

TEST_CASE("membership") {
  Setup s("A1", "-h-1/3");
  IntegralWeyl iw = s.integral();
  CHECK(iw.contains(s.aw.translation(VecI{6})));   // 3 coroots
  CHECK_FALSE(iw.contains(s.aw.translation(VecI{2})));
  CHECK(iw.contains(s.aw.from_finite(1)));
  CHECK(iw.contains(s.aw.identity()));

  Setup m("A1xT1", "-h-1/3,2");
  IntegralWeyl mw = m.integral();
  CHECK(mw.contains(m.aw.translation(VecI{6, 0})));
  CHECK_FALSE(mw.contains(m.aw.translation(VecI{6, 1})));
}

TEST_CASE("generators are simple") {
  struct Probe {
    const char* type;
    const char* level;
  };
  const Probe kProbes[] = {
      {"A1", "-h-1/2"}, {"A1", "-h-1/3"}, {"A2", "-h-1/2"}, {"A2", "-h-2/3"},
      {"B2", "-h-1/2"}, {"B2", "-h-1/3"}, {"B2", "-h-1/4"}, {"G2", "-h-1/2"},
      {"G2", "-h-1/3"}, {"G2", "-h-1/6"}, {"C3", "-h-1/2"}, {"F4", "-h-1/2"},
  };
  for (const auto& p : kProbes) {
    INFO(p.type << " at " << p.level);
    Setup s(p.type, p.level);
    IntegralWeyl iw = s.integral();
    for (int g = 0; g < iw.num_generators(); ++g) {
      AffineElement gen = iw.generator(g);
      CHECK(iw.contains(gen));
      CHECK(iw.length(gen) == 1);
      CHECK(s.aw.multiply(gen, gen) == s.aw.identity());
    }
  }
}

TEST_CASE("rank one integral balls are dihedral") {
  for (const char* level : {"-h-1/2", "-h-1/3", "-h-2/5"}) {
    Setup s("A1", level);
    IntegralWeyl iw = s.integral();
    for (Int radius : {0, 1, 2, 4}) {
      INFO(level << " radius " << radius);
      CHECK(iw.ball(radius).size() == static_cast<std::size_t>(1 + 2 * radius));
    }
  }
}

TEST_CASE("balls enumerate the subgroup exactly") {
  Setup s("B2", "-h-1/2");
  IntegralWeyl iw = s.integral();
  std::vector<AffineElement> inner = iw.ball(3);
  Int ambient_reach = 0;
  for (const auto& x : inner) ambient_reach = std::max(ambient_reach, s.aw.length(x));
  std::set<std::pair<int, VecI>> expect;
  for (const auto& x : s.aw.ball(ambient_reach))
    if (iw.contains(x) && iw.length(x) <= 3) expect.emplace(x.w, x.t);
  CHECK(as_set(inner) == expect);

  for (const auto& x : inner)
    for (int g = 0; g < iw.num_generators(); ++g) {
      Int d = iw.length(iw.right_mul(x, g)) - iw.length(x);
      CHECK((d == 1 || d == -1));
      CHECK((d < 0) == iw.is_right_descent(x, g));
      Int dl = iw.length(iw.left_mul(g, x)) - iw.length(x);
      CHECK((dl < 0) == iw.is_left_descent(g, x));
    }
}

TEST_CASE("integral words round trip") {
  Setup s("B2", "-h-1/2");
  IntegralWeyl iw = s.integral();
  for (const auto& x : iw.ball(4)) {
    std::vector<int> gens = iw.word(x);
    CHECK(static_cast<Int>(gens.size()) == iw.length(x));
    CHECK(iw.from_word(gens) == x);
  }
  CHECK_THROWS_AS(iw.word(s.aw.translation(VecI{1, 0})), std::domain_error);
}

TEST_CASE("integral bruhat order") {
  Setup a("A1", "-h-1/3");
  IntegralWeyl ia = a.integral();
  std::vector<AffineElement> ball = ia.ball(4);
  for (const auto& x : ball)
    for (const auto& y : ball) {
      bool expect = x == y || ia.length(x) < ia.length(y);
      CHECK(ia.bruhat_leq(x, y) == expect);
    }

  Setup b("B2", "-h-1/2");
  IntegralWeyl ib = b.integral();
  std::vector<AffineElement> bball = ib.ball(4);
  for (const auto& y : bball) {
    std::vector<int> gens = ib.word(y);
    std::set<std::pair<int, VecI>> below;
    for (unsigned mask = 0; mask < (1u << gens.size()); ++mask) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (mask & (1u << i)) sub.push_back(gens[i]);
      AffineElement z = ib.from_word(sub);
      below.emplace(z.w, z.t);
    }
    for (const auto& x : bball) {
      INFO(b.aw.str(x) << " <= " << b.aw.str(y));
      CHECK(ib.bruhat_leq(x, y) == below.count({x.w, x.t}));
    }
  }
}

TEST_CASE("dot action") {
  Setup s("A1", "-h-1/3");
  IntegralWeyl iw = s.integral();

  // translations shift by the level pairing: t^alphacheck moves lambda by
  // (-1/3) * kappa_b(alphacheck) = (-1/3) * alpha
  VecQ moved = dot_act(s.aw, s.level, s.aw.translation(VecI{2}), VecQ{Rat(0)});
  CHECK(moved == VecQ{Rat(-2, 3)});

  // the affine node generator reflects across the wall at value p = -1
  AffineElement a0 = iw.generator(1);
  CHECK(dot_act(s.aw, s.level, a0, VecQ{Rat(-1)}) == VecQ{Rat(-3)});
  CHECK(dot_act(s.aw, s.level, a0, VecQ{Rat(-3)}) == VecQ{Rat(-1)});
  CHECK(dot_act(s.aw, s.level, a0, VecQ{Rat(-2)}) == VecQ{Rat(-2)});  // on the wall
  CHECK(on_wall(s.aw, s.level, VecQ{Rat(-2)}, iw.simple_coroot(1)));
  CHECK_FALSE(on_wall(s.aw, s.level, VecQ{Rat(-1)}, iw.simple_coroot(1)));

  // a group action
  Setup b("B2", "-h-2/3");
  std::vector<VecQ> probes = {{Rat(0), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(2), Rat(-5)}};
  IntegralWeyl ib = b.integral();
  std::vector<AffineElement> ball = ib.ball(3);
  for (const auto& x : ball)
    for (const auto& y : ball)
      for (const auto& lam : probes)
        CHECK(dot_act(b.aw, b.level, b.aw.multiply(x, y), lam) ==
              dot_act(b.aw, b.level, x, dot_act(b.aw, b.level, y, lam)));

  // reflections fix exactly their walls
  for (int g = 0; g < ib.num_generators(); ++g)
    for (const auto& lam : probes) {
      bool fixed = dot_act(b.aw, b.level, ib.generator(g), lam) == lam;
      CHECK(fixed == on_wall(b.aw, b.level, lam, ib.simple_coroot(g)));
    }

  Setup irr("A1", "irr");
  CHECK_THROWS_AS(dot_act(irr.aw, irr.level, irr.aw.translation(VecI{2}), VecQ{Rat(0)}),
                  std::domain_error);
}

TEST_CASE("antidominance") {
  Setup s("A1", "-h-1/3");
  IntegralWeyl iw = s.integral();
  CHECK(is_antidominant(iw, VecQ{Rat(-1)}));
  CHECK(is_antidominant(iw, VecQ{Rat(-2)}));
  CHECK_FALSE(is_antidominant(iw, VecQ{Rat(-3)}));
  CHECK_FALSE(is_antidominant(iw, VecQ{Rat(0)}));
  // non-integral weights can sit strictly inside
  CHECK(is_antidominant(iw, VecQ{Rat(-3, 2)}));

  Setup b("B2", "-h-1/2");
  IntegralWeyl ib = b.integral();
  CHECK(is_antidominant(ib, VecQ{Rat(-1), Rat(-1)}));
  CHECK(is_antidominant(ib, VecQ{Rat(-1), Rat(-2)}));
  CHECK_FALSE(is_antidominant(ib, VecQ{Rat(-1), Rat(-3)}));
  CHECK_FALSE(is_antidominant(ib, VecQ{Rat(0), Rat(-2)}));

  Setup irr("G2", "irr");
  IntegralWeyl girr = irr.integral();
  CHECK(is_antidominant(girr, VecQ{Rat(-1), Rat(-1)}));
  CHECK(is_antidominant(girr, VecQ{Rat(-100), Rat(-50)}));
  CHECK_FALSE(is_antidominant(girr, VecQ{Rat(0), Rat(1)}));

  Setup pos("A1", "-h+1/3");
  IntegralWeyl ipos = pos.integral();
  CHECK_THROWS_AS(is_antidominant(ipos, VecQ{Rat(-1)}), std::domain_error);
}
