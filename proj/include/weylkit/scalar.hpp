#pragma once

// Scalars of the form  a + b*xi^e  with a, b rational and e a nonzero
// integer, where xi is a fixed formal transcendental. This is the smallest
// ring extension of Q closed under the operations the library performs on
// generic (non-rational) level parameters: Q-linear combinations, products
// where one factor is rational or both are pure xi-terms, and inversion of
// pure terms. Anything that would leave the representable set throws.

#include "weylkit/rational.hpp"

#include <stdexcept>
#include <string>

namespace wk {

class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(Rat rational) : base_(std::move(rational)) {}            // NOLINT: implicit
  ExactScalar(Int rational) : base_(rational) {}                       // NOLINT: implicit
  ExactScalar(Rat a, Rat b, Int e) : base_(std::move(a)), coef_(std::move(b)), exp_(e) {
    normalize();
  }

  static ExactScalar xi_power(Rat coefficient, Int exponent) {
    return ExactScalar(Rat(0), std::move(coefficient), exponent);
  }

  const Rat& rational_part() const { return base_; }
  const Rat& xi_coefficient() const { return coef_; }
  Int xi_exponent() const { return exp_; }

  bool is_rational() const { return coef_ == 0; }
  bool is_zero() const { return base_ == 0 && coef_ == 0; }
  bool is_pure_xi() const { return base_ == 0 && coef_ != 0; }

  bool operator==(const ExactScalar&) const = default;

  ExactScalar operator-() const { return ExactScalar(-base_, -coef_, exp_); }

  ExactScalar& operator+=(const ExactScalar& o) {
    base_ += o.base_;
    if (o.coef_ != 0) {
      if (coef_ == 0) {
        coef_ = o.coef_;
        exp_ = o.exp_;
      } else if (exp_ == o.exp_) {
        coef_ += o.coef_;
      } else {
        throw std::domain_error("sum of xi-terms with distinct exponents");
      }
    }
    normalize();
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& o) { return *this += -o; }

  ExactScalar operator*(const ExactScalar& o) const {
    // Powers present in the product: collect and require at most one
    // nonconstant power to survive.
    Rat a = base_ * o.base_;
    Rat b = 0;
    Int e = 0;
    auto add_term = [&](const Rat& c, Int ex) {
      if (c == 0) return;
      if (ex == 0) {
        a += c;
      } else if (b == 0) {
        b = c;
        e = ex;
      } else if (e == ex) {
        b += c;
      } else {
        throw std::domain_error("product leaves the a + b*xi^e scalar ring");
      }
    };
    add_term(base_ * o.coef_, o.exp_);
    add_term(o.base_ * coef_, exp_);
    add_term(coef_ * o.coef_, exp_ + o.exp_);
    return ExactScalar(a, b, e);
  }

  ExactScalar inverse() const {
    if (is_rational()) {
      if (base_ == 0) throw std::domain_error("inverse of zero");
      return ExactScalar(Rat(1) / base_);
    }
    if (is_pure_xi()) return xi_power(Rat(1) / coef_, -exp_);
    throw std::domain_error("inverse of mixed a + b*xi^e scalar");
  }

  // Total order only on the rational subring.
  bool less_than(const ExactScalar& o) const {
    if (!is_rational() || !o.is_rational())
      throw std::domain_error("order comparison of non-rational scalars");
    return base_ < o.base_;
  }

  std::string str() const {
    if (is_rational()) return base_.str();
    std::string xi_part = coef_.str() + "*xi";
    if (exp_ != 1) xi_part += "^" + std::to_string(exp_);
    if (base_ == 0) return xi_part;
    return base_.str() + (coef_ > 0 ? "+" : "") + xi_part;
  }

 private:
  void normalize() {
    if (coef_ == 0) {
      exp_ = 0;
    } else if (exp_ == 0) {
      base_ += coef_;
      coef_ = 0;
    }
  }

  Rat base_ = 0;
  Rat coef_ = 0;
  Int exp_ = 0;
};

inline ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
inline ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }

}  // namespace wk
