#include "weylkit/scalar.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace wk;

TEST_CASE("rational scalars behave like Rat") {
  ExactScalar a(Rat(1, 2));
  ExactScalar b(Rat(1, 3));
  CHECK((a + b).rational_part() == Rat(5, 6));
  CHECK((a * b).rational_part() == Rat(1, 6));
  CHECK(a.is_rational());
  CHECK((a - a).is_zero());
  CHECK(a.inverse() == ExactScalar(Rat(2)));
  CHECK(b.less_than(a));
}

TEST_CASE("xi terms combine by exponent") {
  ExactScalar x = ExactScalar::xi_power(Rat(2, 3), 1);
  ExactScalar y = ExactScalar::xi_power(Rat(1, 3), 1);
  CHECK(x + y == ExactScalar::xi_power(Rat(1), 1));
  CHECK((x - x).is_zero());
  CHECK_THROWS_AS(x + ExactScalar::xi_power(Rat(1), 2), std::domain_error);
}

TEST_CASE("xi exponent zero folds into the rational part") {
  CHECK(ExactScalar::xi_power(Rat(3), 0) == ExactScalar(Rat(3)));
  CHECK(ExactScalar::xi_power(Rat(3), 0).is_rational());
}

TEST_CASE("products stay inside the ring when defined") {
  ExactScalar x = ExactScalar::xi_power(Rat(2), 1);
  ExactScalar y = ExactScalar::xi_power(Rat(3), -1);
  CHECK(x * y == ExactScalar(Rat(6)));
  CHECK(x * ExactScalar(Rat(1, 2)) == ExactScalar::xi_power(Rat(1), 1));

  ExactScalar mixed(Rat(1), Rat(1), 1);  // 1 + xi
  // (1 + xi)(1 + xi) = 1 + 2 xi + xi^2: three powers, unrepresentable.
  CHECK_THROWS_AS(mixed * mixed, std::domain_error);
  // (1 + xi) * xi^-1 = xi^-1 + 1: representable.
  CHECK(mixed * ExactScalar::xi_power(Rat(1), -1) == ExactScalar(Rat(1), Rat(1), -1));
}

TEST_CASE("inverses of pure terms") {
  CHECK(ExactScalar::xi_power(Rat(2, 5), 3).inverse() == ExactScalar::xi_power(Rat(5, 2), -3));
  CHECK_THROWS_AS(ExactScalar(Rat(0)).inverse(), std::domain_error);
  CHECK_THROWS_AS(ExactScalar(Rat(1), Rat(1), 1).inverse(), std::domain_error);
}

TEST_CASE("order is only defined on rationals") {
  ExactScalar x = ExactScalar::xi_power(Rat(1), 1);
  CHECK_THROWS_AS(x.less_than(ExactScalar(Rat(0))), std::domain_error);
}

TEST_CASE("printing") {
  CHECK(ExactScalar(Rat(-3, 5)).str() == "-3/5");
  CHECK(ExactScalar::xi_power(Rat(2, 3), -1).str() == "2/3*xi^-1");
  CHECK(ExactScalar(Rat(1), Rat(1), 1).str() == "1+1*xi");
}
