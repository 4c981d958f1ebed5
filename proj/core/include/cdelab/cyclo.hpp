#pragma once

#include <complex>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cdelab {

using Rational = mpq_class;

// Largest supported extension degree [Q(zeta_n) : Q].
inline constexpr int kMaxCyclotomicDegree = 16;

int euler_phi(int n);

// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int n);

// Throws InputError unless 1 <= n and phi(n) <= kMaxCyclotomicDegree.
void require_supported_order(int n);

// Exact element of Q(zeta_n), stored as the unique representative of degree
// < phi(n) modulo the n-th cyclotomic polynomial. Orders with phi(n) = 1 are
// normalized to order 1. Mixed-order arithmetic embeds both operands into
// Q(zeta_lcm).
class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(int value) : c0_(value) {}        // NOLINT(google-explicit-constructor)
  Cyclo(long value) : c0_(value) {}       // NOLINT(google-explicit-constructor)
  Cyclo(const Rational& value) : c0_(value) { c0_.canonicalize(); }  // NOLINT(google-explicit-constructor)

  static Cyclo zeta(int order);
  static Cyclo from_coefficients(int order, const std::vector<Rational>& coefficients);

  int order() const { return order_; }
  int degree() const { return static_cast<int>(hi_.size()) + 1; }
  const Rational& coefficient(int i) const { return i == 0 ? c0_ : hi_[i - 1]; }
  std::vector<Rational> coefficients() const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Value of a rational element; throws InternalError otherwise.
  const Rational& rational_value() const;

  Cyclo embed(int order) const;
  Cyclo inverse() const;
  Cyclo pow(long exponent) const;
  // Image under the Galois automorphism zeta -> zeta^a (gcd(a, n) = 1).
  Cyclo galois(int a) const;
  // Complex value under zeta -> exp(2 pi i a / n).
  std::complex<long double> evaluate(int a = 1) const;

  std::string to_string() const;

  Cyclo& operator+=(const Cyclo& other);
  Cyclo& operator-=(const Cyclo& other);
  Cyclo& operator*=(const Cyclo& other);
  Cyclo& operator/=(const Cyclo& other) { return *this *= other.inverse(); }

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
  friend Cyclo operator-(Cyclo a);
  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  // Lexicographic order on coefficient vectors in a common field.
  friend int compare(const Cyclo& a, const Cyclo& b);

 private:
  void reduce_from(std::vector<Rational> poly);
  static int common_order(const Cyclo& a, const Cyclo& b);

  int order_ = 1;
  Rational c0_;
  std::vector<Rational> hi_;  // coefficients of zeta^1 .. zeta^(phi-1)
};

// Elimination pivots prefer entries with fewer terms.
int pivot_cost(const Cyclo& x);

std::string to_string(const Rational& x);

}  // namespace cdelab
