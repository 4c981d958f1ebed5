#pragma once

#include <climits>
#include <string>

#include "cdelab/poly.hpp"

namespace cdelab {

// Valuation of zero.
inline constexpr int kInfiniteValuation = INT_MAX;

// Element of K = k(t). Canonical form: gcd(num, den) = 1 and den monic, so
// equality is coefficient-wise. The local ring R is the subring of elements
// with den(0) != 0.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}              // NOLINT(google-explicit-constructor)
  RatFunc(const Cyclo& c) : num_(c), den_(1) {}     // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(Cyclo(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& p) : num_(p), den_(1) {}      // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& num, const Poly& den);

  static RatFunc t() { return RatFunc(Poly::variable()); }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  // Constant value; throws InternalError unless is_constant().
  Cyclo constant_value() const;

  bool is_integral() const { return !den_.at_zero().is_zero(); }
  // num(0)/den(0); throws NonIntegralError if den(0) = 0.
  Cyclo reduce_at_zero() const;
  // ord_t(num) - ord_t(den); kInfiniteValuation for zero.
  int valuation() const;
  // Reduction of x * t^(-valuation(x)); zero for x = 0.
  Cyclo leading_unit() const;
  // Multiply by t^k (k may be negative).
  RatFunc shifted(int k) const;
  RatFunc inverse() const;
  RatFunc pow(long exponent) const;
  // Apply f to every coefficient of numerator and denominator.
  template <class F>
  RatFunc map_coefficients(F f) const;

  std::string to_string() const;

  RatFunc& operator+=(const RatFunc& other);
  RatFunc& operator-=(const RatFunc& other);
  RatFunc& operator*=(const RatFunc& other);
  RatFunc& operator/=(const RatFunc& other) { return *this *= other.inverse(); }
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(RatFunc a) {
    a.num_ = -a.num_;
    return a;
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

 private:
  void canonicalize();
  Poly num_;
  Poly den_;
};

template <class F>
RatFunc RatFunc::map_coefficients(F f) const {
  std::vector<Cyclo> n, d;
  for (const auto& c : num_.coefficients()) n.push_back(f(c));
  for (const auto& c : den_.coefficients()) d.push_back(f(c));
  return RatFunc(Poly(std::move(n)), Poly(std::move(d)));
}

int pivot_cost(const RatFunc& x);

}  // namespace cdelab
