#include "cdelab/ratfunc.hpp"

#include "cdelab/errors.hpp"

namespace cdelab {

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.is_constant()) {
    if (!den_.is_one()) {
      num_ = num_.scaled(den_.leading().inverse());
      den_ = Poly(1);
    }
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = Poly::exact_quotient(num_, g);
    den_ = Poly::exact_quotient(den_, g);
  }
  if (!den_.leading().is_one()) {
    const Cyclo s = den_.leading().inverse();
    num_ = num_.scaled(s);
    den_ = den_.scaled(s);
  }
}

Cyclo RatFunc::constant_value() const {
  if (!is_constant()) throw InternalError("rational function is not constant: " + to_string());
  return num_.at_zero();
}

Cyclo RatFunc::reduce_at_zero() const {
  const Cyclo d = den_.at_zero();
  if (d.is_zero()) throw NonIntegralError("element is not R-integral: " + to_string());
  if (d.is_one()) return num_.at_zero();
  return num_.at_zero() / d;
}

int RatFunc::valuation() const {
  if (num_.is_zero()) return kInfiniteValuation;
  return num_.order_at_zero() - den_.order_at_zero();
}

Cyclo RatFunc::leading_unit() const {
  if (num_.is_zero()) return Cyclo();
  return num_.coefficient(num_.order_at_zero()) / den_.coefficient(den_.order_at_zero());
}

RatFunc RatFunc::shifted(int k) const {
  if (k == 0 || is_zero()) return *this;
  if (k > 0) return RatFunc(num_ * Poly::monomial(Cyclo(1), k), den_);
  return RatFunc(num_, den_ * Poly::monomial(Cyclo(1), -k));
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw DivisionByZeroError("inverse of zero rational function");
  RatFunc r;
  r.num_ = den_;
  r.den_ = num_;
  if (!r.den_.leading().is_one()) {
    const Cyclo s = r.den_.leading().inverse();
    r.num_ = r.num_.scaled(s);
    r.den_ = r.den_.scaled(s);
  }
  return r;
}

RatFunc RatFunc::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  RatFunc result(1);
  RatFunc base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

RatFunc& RatFunc::operator+=(const RatFunc& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_.is_one() && other.den_.is_one()) {
    num_ += other.num_;
    return *this;
  }
  if (den_ == other.den_) {
    num_ += other.num_;
    canonicalize();
    return *this;
  }
  num_ = num_ * other.den_ + other.num_ * den_;
  den_ = den_ * other.den_;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& other) { return *this += -other; }

RatFunc& RatFunc::operator*=(const RatFunc& other) {
  if (is_zero()) return *this;
  if (other.is_zero()) return *this = RatFunc();
  if (den_.is_one() && other.den_.is_one()) {
    num_ = num_ * other.num_;
    return *this;
  }
  // Cross-cancel before multiplying to keep degrees small.
  const Poly g1 = Poly::gcd(num_, other.den_);
  const Poly g2 = Poly::gcd(other.num_, den_);
  num_ = Poly::exact_quotient(num_, g1) * Poly::exact_quotient(other.num_, g2);
  den_ = Poly::exact_quotient(den_, g2) * Poly::exact_quotient(other.den_, g1);
  if (!den_.leading().is_one()) {
    const Cyclo s = den_.leading().inverse();
    num_ = num_.scaled(s);
    den_ = den_.scaled(s);
  }
  return *this;
}

std::string RatFunc::to_string() const {
  const std::string n = num_.to_string();
  if (den_.is_one()) return n;
  const bool wrap_num = num_.coefficients().size() > 1 ||
                        (!num_.is_zero() && !num_.leading().is_rational());
  const bool wrap_den = den_.coefficients().size() > 1 || !den_.leading().is_rational();
  return (wrap_num ? "(" + n + ")" : n) + "/" + (wrap_den ? "(" + den_.to_string() + ")" : den_.to_string());
}

int pivot_cost(const RatFunc& x) {
  int cost = 0;
  for (const auto& c : x.numerator().coefficients()) cost += c.is_zero() ? 0 : pivot_cost(c);
  for (const auto& c : x.denominator().coefficients()) cost += c.is_zero() ? 0 : pivot_cost(c);
  return cost;
}

}  // namespace cdelab
