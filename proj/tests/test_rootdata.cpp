#include "weylkit/root_datum.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace wk;

namespace {

struct TypeFacts {
  const char* type;
  int npos;
  Int h, hdual, lacing;
  Int det;
  long long weyl;
  Int ht_short;  // height of the highest short root
};

// Classical values, frozen independently of the derivation code.
const TypeFacts kFacts[] = {
    {"A1", 1, 2, 2, 1, 2, 2, 1},
    {"A2", 3, 3, 3, 1, 3, 6, 2},
    {"A3", 6, 4, 4, 1, 4, 24, 3},
    {"A4", 10, 5, 5, 1, 5, 120, 4},
    {"B2", 4, 4, 3, 2, 2, 8, 2},
    {"B3", 9, 6, 5, 2, 2, 48, 3},
    {"B4", 16, 8, 7, 2, 2, 384, 4},
    {"C2", 4, 4, 3, 2, 2, 8, 2},
    {"C3", 9, 6, 4, 2, 2, 48, 4},
    {"C4", 16, 8, 5, 2, 2, 384, 6},
    {"D3", 6, 4, 4, 1, 4, 24, 3},
    {"D4", 12, 6, 6, 1, 4, 192, 5},
    {"D5", 20, 8, 8, 1, 4, 1920, 7},
    {"G2", 6, 6, 4, 3, 1, 12, 3},
    {"F4", 24, 12, 9, 2, 1, 1152, 8},
    {"E6", 36, 12, 12, 1, 3, 51840, 11},
    {"E7", 63, 18, 18, 1, 2, 2903040, 17},
    {"E8", 120, 30, 30, 1, 1, 696729600, 29},
};

}  // namespace

TEST_CASE("classical invariants per type") {
  for (const auto& f : kFacts) {
    INFO(f.type);
    RootDatum rd = RootDatum::parse(f.type);
    CHECK(rd.num_positive() == f.npos);
    CHECK(rd.coxeter_number(0) == f.h);
    CHECK(rd.dual_coxeter_number(0) == f.hdual);
    CHECK(rd.lacing(0) == f.lacing);
    CHECK(determinant(to_rational(rd.cartan())) == Rat(f.det));
    CHECK(rd.finite_weyl_order() == BigInt(f.weyl));
    // highest roots sit at the documented heights
    CHECK(rd.highest_root(0).height == f.h - 1);
    CHECK(rd.highest_short_root(0).height == f.ht_short);
  }
}

TEST_CASE("marks and comarks") {
  auto marks = [](const char* t) { return RootDatum::parse(t).marks(0); };
  auto comarks = [](const char* t) { return RootDatum::parse(t).comarks(0); };
  auto long_comarks = [](const char* t) { return RootDatum::parse(t).long_comarks(0); };

  CHECK(marks("A3") == VecI{1, 1, 1});
  CHECK(comarks("A3") == VecI{1, 1, 1});
  CHECK(marks("B2") == VecI{1, 2});
  CHECK(comarks("B2") == VecI{1, 1});
  CHECK(long_comarks("B2") == VecI{2, 1});
  CHECK(marks("C2") == VecI{2, 1});
  CHECK(comarks("C2") == VecI{1, 1});
  CHECK(long_comarks("C2") == VecI{1, 2});
  CHECK(marks("B3") == VecI{1, 2, 2});
  CHECK(comarks("B3") == VecI{1, 2, 1});
  CHECK(marks("G2") == VecI{3, 2});
  CHECK(comarks("G2") == VecI{1, 2});
  CHECK(long_comarks("G2") == VecI{2, 3});
  CHECK(marks("F4") == VecI{2, 3, 4, 2});
  CHECK(comarks("F4") == VecI{2, 3, 2, 1});
  CHECK(long_comarks("F4") == VecI{2, 4, 3, 2});
  CHECK(marks("E6") == VecI{1, 2, 2, 3, 2, 1});
  CHECK(marks("E8") == VecI{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(comarks("E8") == VecI{2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("short root d values") {
  RootDatum g2 = RootDatum::parse("G2");
  CHECK(g2.simple_d(0) == 3);  // alpha_1 short
  CHECK(g2.simple_d(1) == 1);
  int nshort = 0;
  for (int i = 0; i < g2.num_positive(); ++i)
    if (g2.root(i).d == 3) ++nshort;
  CHECK(nshort == 3);  // G2 has 3 positive short roots

  RootDatum b3 = RootDatum::parse("B3");
  CHECK(b3.simple_d(0) == 1);
  CHECK(b3.simple_d(2) == 2);  // alpha_3 short
  RootDatum c3 = RootDatum::parse("C3");
  CHECK(c3.simple_d(0) == 2);
  CHECK(c3.simple_d(2) == 1);  // alpha_3 long
}

TEST_CASE("pairing duality on the fundamental bases") {
  RootDatum rd = RootDatum::parse("B3");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      VecI ei(3, 0);
      ei[i] = 1;
      CHECK(rd.pair_weight_coroot(ei, j) == (i == j ? 1 : 0));
      CHECK(rd.pair_root_coweight(j, ei) == (i == j ? 1 : 0));
      // <alpha_j, alphacheck_i> is the Cartan entry
      CHECK(rd.pair_root_coweight(j, rd.simple_coroot_cowt(i)) == rd.cartan()(i, j));
    }
  // <omega_i, omegacheck_j> is the inverse Cartan, transposed indexing
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      VecQ wi(3, Rat(0)), cj(3, Rat(0));
      wi[i] = 1;
      cj[j] = 1;
      CHECK(rd.pairing(wi, cj) == rd.cartan_inverse()(j, i));
    }
}

TEST_CASE("reflections") {
  RootDatum rd = RootDatum::parse("A2");
  VecI rho = rd.rho();
  CHECK(rd.reflect_weight(0, rho) == rho - rd.simple_root_wt(0));
  CHECK(rd.reflect_weight(0, rd.reflect_weight(0, rho)) == rho);
  // s_theta(rho) = rho - <rho, thetacheck> theta, <rho, thetacheck> = hdual - 1
  int theta = rd.highest_root_index(0);
  CHECK(rd.reflect_weight_by_root(theta, rho) ==
        rho - scaled(rd.root(theta).wt, rd.dual_coxeter_number(0) - 1));
  // coweight side
  VecI rhoc = rd.rho_check();
  CHECK(rd.reflect_coweight(1, rhoc) == rhoc - rd.simple_coroot_cowt(1));
}

TEST_CASE("highest root coordinates") {
  RootDatum a2 = RootDatum::parse("A2");
  CHECK(a2.highest_root(0).wt == VecI{1, 1});
  RootDatum b2 = RootDatum::parse("B2");
  CHECK(b2.highest_root(0).wt == VecI{0, 2});
  CHECK(b2.highest_root(0).cowt == VecI{0, 1});
  CHECK(b2.highest_short_root(0).wt == VecI{1, 0});
  RootDatum g2 = RootDatum::parse("G2");
  CHECK(g2.highest_root(0).wt == VecI{0, 1});
  CHECK(g2.highest_short_root(0).wt == VecI{1, 0});
}

TEST_CASE("finite Weyl group registry") {
  for (const char* t : {"A1", "A2", "B2", "G2", "A3", "B3"}) {
    INFO(t);
    RootDatum rd = RootDatum::parse(t);
    const FiniteWeyl& w = rd.weyl();
    CHECK(BigInt(w.size()) == rd.finite_weyl_order());
    CHECK(w.length(w.longest()) == rd.num_positive());
    // longest element sends rho to -rho
    CHECK(w.act_weight(w.longest(), rd.rho()) == -rd.rho());
    // involution and inverse consistency on every element
    for (int x = 0; x < static_cast<int>(w.size()); ++x) {
      CHECK(w.multiply(x, w.inverse(x)) == w.identity());
      CHECK(w.length(x) == w.length(w.inverse(x)));
      CHECK(static_cast<Int>(w.word(x).size()) == w.length(x));
      CHECK(w.from_word(w.word(x)) == x);
    }
  }
}

TEST_CASE("braid relations have the right order") {
  auto order_of_product = [](const RootDatum& rd, int i, int j) {
    const FiniteWeyl& w = rd.weyl();
    int z = w.right_mul(w.right_mul(w.identity(), i), j);
    int x = z;
    int order = 1;
    while (x != w.identity()) {
      x = w.multiply(x, z);
      ++order;
    }
    return order;
  };
  CHECK(order_of_product(RootDatum::parse("A2"), 0, 1) == 3);
  CHECK(order_of_product(RootDatum::parse("B2"), 0, 1) == 4);
  CHECK(order_of_product(RootDatum::parse("G2"), 0, 1) == 6);
  CHECK(order_of_product(RootDatum::parse("A1xA1"), 0, 1) == 2);
}

TEST_CASE("Weyl group order matches the rho orbit") {
  // The orbit of rho has trivial stabilizer, so its size is an
  // enumeration-free check of the registry order.
  for (const char* t : {"A2", "B2", "G2", "B3"}) {
    RootDatum rd = RootDatum::parse(t);
    std::set<VecI> orbit{rd.rho()};
    std::vector<VecI> queue{rd.rho()};
    while (!queue.empty()) {
      VecI v = queue.back();
      queue.pop_back();
      for (int k = 0; k < rd.ss_rank(); ++k) {
        VecI img = rd.reflect_weight(k, v);
        if (orbit.insert(img).second) queue.push_back(img);
      }
    }
    CHECK(BigInt(orbit.size()) == rd.finite_weyl_order());
  }
}

TEST_CASE("root permutation agrees with matrix action") {
  RootDatum rd = RootDatum::parse("B2");
  const FiniteWeyl& w = rd.weyl();
  for (int x = 0; x < static_cast<int>(w.size()); ++x)
    for (int r = 0; r < rd.num_roots(); ++r)
      CHECK(w.act_weight(x, rd.root(r).wt) == rd.root(w.permute_root(x, r)).wt);
}

TEST_CASE("registry refuses oversized groups") {
  RootDatum e7 = RootDatum::parse("E7");
  CHECK(e7.num_positive() == 63);  // datum itself is fine
  CHECK_THROWS_AS(e7.weyl(), std::domain_error);
  CHECK_THROWS_AS(RootDatum::parse("E8").weyl(), std::domain_error);
}

TEST_CASE("products") {
  RootDatum rd = RootDatum::parse("A1xG2");
  CHECK(rd.rank() == 3);
  CHECK(rd.num_positive() == 7);
  CHECK(rd.num_factors() == 2);
  CHECK(rd.coxeter_number(0) == 2);
  CHECK(rd.coxeter_number(1) == 6);
  CHECK(rd.finite_weyl_order() == 24);
  CHECK(rd.weyl().size() == 24);
  CHECK(rd.type_string() == "A1xG2");
  // factor blocks do not interact
  CHECK(rd.cartan()(0, 1) == 0);
  CHECK(rd.highest_root(1).wt == VecI{0, 0, 1});
}

TEST_CASE("torus factors") {
  RootDatum rd = RootDatum::parse("A1xT2xA1");
  CHECK(rd.rank() == 4);
  CHECK(rd.ss_rank() == 2);
  CHECK(rd.has_torus());
  CHECK(rd.num_positive() == 2);
  // reflections fix torus coordinates
  VecI v{3, 5, 7, 2};
  VecI img = rd.reflect_weight(1, v);  // second A1 factor, coordinate 3
  CHECK(img[1] == 5);
  CHECK(img[2] == 7);
  CHECK(img[3] == -2);
  // pairing includes the torus dot product
  CHECK(rd.pairing(VecQ{Rat(0), Rat(1), Rat(2), Rat(0)}, VecQ{Rat(0), Rat(3), Rat(1), Rat(0)}) ==
        Rat(5));
  // basic Gram carries the torus identity block, trace form vanishes there
  CHECK(rd.basic_gram()(1, 1) == Rat(1));
  CHECK(rd.trace_gram()(1, 1) == Rat(0));
  CHECK(rd.trace_gram()(0, 0) == Rat(2));  // A1: both roots contribute 1^2
}

TEST_CASE("explicit torus gram") {
  std::vector<FactorSpec> fs = parse_type_string("T2");
  MatQ gram{{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
  RootDatum rd(fs, {}, {gram});
  CHECK(rd.basic_gram() == gram);
  RootDatum dual = rd.langlands_dual();
  CHECK(dual.basic_gram() == inverse(gram));
  CHECK_THROWS_AS(RootDatum(fs, {}, {MatQ{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}}),
                  std::invalid_argument);
}

TEST_CASE("langlands duality") {
  // B and C swap, with node numbering preserved
  RootDatum b3 = RootDatum::parse("B3");
  RootDatum dual = b3.langlands_dual();
  CHECK(dual.type_string() == "C3");
  CHECK(dual.cartan() == RootDatum::parse("C3").cartan());
  CHECK(dual.cartan() == b3.cartan().transposed());

  // duals keep node numbering: for G2 and F4 the matrix is the transpose,
  // which differs from the table labeling by the diagram flip
  RootDatum g2 = RootDatum::parse("G2");
  CHECK(g2.langlands_dual().cartan() == g2.cartan().transposed());
  CHECK(g2.langlands_dual().type_string() == "G2");
  CHECK(g2.langlands_dual().simple_d(0) == 1);  // node 1 is long in the dual

  // double dual restores the original matrix
  for (const char* t : {"A2", "B2", "G2", "F4", "B3"}) {
    RootDatum rd = RootDatum::parse(t);
    CHECK(rd.langlands_dual().langlands_dual().cartan() == rd.cartan());
  }

  // the dual's coroots are the original's roots, coordinatewise
  for (const char* t : {"B2", "G2", "F4"}) {
    RootDatum rd = RootDatum::parse(t);
    RootDatum dd = rd.langlands_dual();
    std::set<VecI> roots, dual_coroots;
    for (const Root& r : rd.roots()) roots.insert(r.wt);
    for (const Root& r : dd.roots()) dual_coroots.insert(r.cowt);
    CHECK(roots == dual_coroots);
    CHECK(rd.dual_coxeter_number(0) ==
          dd.highest_short_root(0).height + 1);  // hdual is self-dual-consistent
  }
}

TEST_CASE("type parsing rejects malformed strings") {
  CHECK_THROWS_AS(RootDatum::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::parse("F3"), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::parse("G3"), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::parse("B1"), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::parse("D2"), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::parse("A0"), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::parse("A1x"), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::parse("xA1"), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::parse("H3"), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(RootDatum::parse("A"), std::invalid_argument);
  CHECK(RootDatum::parse("a2xb2").type_string() == "A2xB2");  // case-insensitive
}
