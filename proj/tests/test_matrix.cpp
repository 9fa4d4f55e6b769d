#include "weylkit/matrix.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace wk;

TEST_CASE("rational helpers") {
  CHECK(is_integer(Rat(4, 2)));
  CHECK_FALSE(is_integer(Rat(3, 2)));
  CHECK(rat_floor(Rat(7, 2)) == 3);
  CHECK(rat_floor(Rat(-7, 2)) == -4);
  CHECK(rat_ceil(Rat(-7, 2)) == -3);
  CHECK(rat_floor(Rat(-4, 2)) == -2);
  CHECK(to_int_checked(Rat(10, 5)) == 2);
  CHECK_THROWS(to_int_checked(Rat(1, 3)));
}

TEST_CASE("matrix product and transpose") {
  MatI a{{1, 2}, {3, 4}};
  MatI b{{0, 1}, {1, 0}};
  MatI ab = a * b;
  CHECK(ab == MatI{{2, 1}, {4, 3}});
  CHECK(a.transposed() == MatI{{1, 3}, {2, 4}});
  CHECK(MatI::identity(2) * a == a);

  VecI v{5, 7};
  CHECK(a * v == VecI{19, 43});
}

TEST_CASE("vector arithmetic") {
  VecQ a{Rat(1, 2), Rat(3)};
  VecQ b{Rat(1, 2), Rat(-3)};
  CHECK(a + b == VecQ{Rat(1), Rat(0)});
  CHECK(is_zero(a - a));
  CHECK(dot(a, b) == Rat(1, 4) - 9);
  CHECK(scaled(a, Rat(2)) == VecQ{Rat(1), Rat(6)});
  CHECK(-a == VecQ{Rat(-1, 2), Rat(-3)});
}

TEST_CASE("exact inverse round-trips") {
  MatQ m{{Rat(2), Rat(1), Rat(0)},
         {Rat(1), Rat(3), Rat(1)},
         {Rat(0), Rat(1), Rat(1)}};
  MatQ inv = inverse(m);
  CHECK(m * inv == MatQ::identity(3));
  CHECK(inv * m == MatQ::identity(3));

  // Needs a row swap to pivot.
  MatQ swap_needed{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  CHECK(inverse(swap_needed) == swap_needed);

  MatQ singular{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK_THROWS_AS(inverse(singular), std::domain_error);
}

TEST_CASE("determinant") {
  CHECK(determinant(MatQ{{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}}) == Rat(3));
  CHECK(determinant(MatQ{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}) == Rat(-1));
  CHECK(determinant(MatQ{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == Rat(0));
  CHECK(determinant(MatQ::identity(4)) == Rat(1));
}

TEST_CASE("block diagonal assembly") {
  MatI a{{1, 2}, {3, 4}};
  MatI b{{5}};
  MatI d = block_diagonal<Int>({a, b});
  CHECK(d == MatI{{1, 2, 0}, {3, 4, 0}, {0, 0, 5}});
}

TEST_CASE("integral conversions") {
  VecQ v{Rat(2), Rat(-1)};
  CHECK(is_integral(v));
  CHECK(to_integral(v) == VecI{2, -1});
  CHECK(to_rational(VecI{1, 0}) == VecQ{Rat(1), Rat(0)});
  CHECK_FALSE(is_integral(VecQ{Rat(1, 2)}));
}
