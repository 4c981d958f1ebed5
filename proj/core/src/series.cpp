#include "cdelab/series.hpp"

#include <algorithm>

#include "cdelab/errors.hpp"

namespace cdelab {

TruncatedSeries::TruncatedSeries(int precision) {
  if (precision < 1) throw InputError("series precision must be at least 1");
  c_.assign(precision, Cyclo());
}

TruncatedSeries::TruncatedSeries(int precision, const Cyclo& constant) : TruncatedSeries(precision) {
  c_[0] = constant;
}

TruncatedSeries TruncatedSeries::from_ratfunc(const RatFunc& x, int precision) {
  if (!x.is_integral()) throw NonIntegralError("cannot expand non-integral element: " + x.to_string());
  TruncatedSeries num(precision);
  const auto& nc = x.numerator().coefficients();
  for (int i = 0; i < std::min<int>(precision, nc.size()); ++i) num.c_[i] = nc[i];
  if (x.denominator().is_one()) return num;
  TruncatedSeries den(precision);
  const auto& dc = x.denominator().coefficients();
  for (int i = 0; i < std::min<int>(precision, dc.size()); ++i) den.c_[i] = dc[i];
  return num * den.inverse();
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Cyclo& c) { return c.is_zero(); });
}

int TruncatedSeries::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return static_cast<int>(i);
  }
  return precision();
}

TruncatedSeries TruncatedSeries::with_precision(int precision) const {
  TruncatedSeries r(precision);
  for (int i = 0; i < std::min(precision, this->precision()); ++i) r.c_[i] = c_[i];
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (c_[0].is_zero()) throw DivisionByZeroError("series with zero constant term is not invertible");
  const int n = precision();
  TruncatedSeries r(n);
  const Cyclo inv0 = c_[0].inverse();
  r.c_[0] = inv0;
  for (int i = 1; i < n; ++i) {
    Cyclo acc;
    for (int j = 1; j <= i; ++j) {
      if (!c_[j].is_zero() && !r.c_[i - j].is_zero()) acc += c_[j] * r.c_[i - j];
    }
    r.c_[i] = -(acc * inv0);
  }
  return r;
}

void TruncatedSeries::require_same_precision(const TruncatedSeries& other) const {
  if (precision() != other.precision()) throw InternalError("series precision mismatch");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_same_precision(other);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_same_precision(other);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= other.c_[i];
  return *this;
}

TruncatedSeries operator-(TruncatedSeries a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_same_precision(b);
  const int n = a.precision();
  TruncatedSeries r(n);
  for (int i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j < n; ++j) {
      if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

}  // namespace cdelab
