#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cdelab/cyclo.hpp"

namespace cdelab {

// Dense univariate polynomial over Q(zeta_n), constant term first, with no
// trailing zero coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(const Cyclo& c);  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Cyclo(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Cyclo> coefficients);

  static Poly monomial(const Cyclo& c, int degree);
  static Poly variable() { return monomial(Cyclo(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Cyclo>& coefficients() const { return c_; }
  Cyclo coefficient(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Cyclo(); }
  const Cyclo& leading() const { return c_.back(); }

  Cyclo at_zero() const { return c_.empty() ? Cyclo() : c_[0]; }
  // Order of vanishing at 0; -1 for the zero polynomial.
  int order_at_zero() const;
  Cyclo evaluate(const Cyclo& x) const;
  Poly derivative() const;
  Poly monic() const;
  Poly scaled(const Cyclo& s) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Euclidean division; throws DivisionByZeroError for a zero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Monic greatest common divisor (zero iff both inputs are zero).
  static Poly gcd(Poly a, Poly b);
  // Exact quotient, assuming b divides a.
  static Poly exact_quotient(const Poly& a, const Poly& b);

  std::string to_string(char variable = 't') const;

 private:
  void trim();
  std::vector<Cyclo> c_;
};

}  // namespace cdelab
