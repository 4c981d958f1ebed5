#pragma once

#include <string>
#include <vector>

#include "cdelab/poly.hpp"
#include "cdelab/ratfunc.hpp"

namespace cdelab {

// Residue in k[t]/t^N, stored as exactly N coefficients.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int precision = 1);
  TruncatedSeries(int precision, const Cyclo& constant);
  // Taylor expansion of an R-integral element; throws NonIntegralError otherwise.
  static TruncatedSeries from_ratfunc(const RatFunc& x, int precision);

  int precision() const { return static_cast<int>(c_.size()); }
  const std::vector<Cyclo>& coefficients() const { return c_; }
  const Cyclo& coefficient(int i) const { return c_[i]; }
  void set_coefficient(int i, const Cyclo& v) { c_[i] = v; }

  bool is_zero() const;
  // Smallest i with a nonzero coefficient; precision() if zero.
  int valuation() const;
  // Same residue at a different precision (padding with zeros when raising).
  TruncatedSeries with_precision(int precision) const;
  TruncatedSeries inverse() const;
  Poly to_poly() const { return Poly(c_); }
  std::string to_string() const { return to_poly().to_string(); }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries& operator*=(const TruncatedSeries& other) { return *this = *this * other; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

 private:
  void require_same_precision(const TruncatedSeries& other) const;
  std::vector<Cyclo> c_;
};

}  // namespace cdelab
