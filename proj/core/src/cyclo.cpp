#include "cdelab/cyclo.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <utility>

#include "cdelab/errors.hpp"

namespace cdelab {
namespace {

constexpr int kMaxOrder = 60;  // largest n with phi(n) <= 16

using IntPoly = std::vector<long>;

IntPoly int_poly_divide(IntPoly num, const IntPoly& den) {
  // Exact division by a monic polynomial.
  const long dd = static_cast<long>(den.size()) - 1;
  IntPoly quot(num.size() - dd, 0);
  for (long i = static_cast<long>(num.size()) - 1; i >= dd; --i) {
    const long c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (long k = 0; k <= dd; ++k) num[i - dd + k] -= c * den[k];
  }
  return quot;
}

const std::array<IntPoly, kMaxOrder + 1>& cyclotomic_table() {
  static const std::array<IntPoly, kMaxOrder + 1> table = [] {
    std::array<IntPoly, kMaxOrder + 1> t{};
    for (int n = 1; n <= kMaxOrder; ++n) {
      IntPoly p(n + 1, 0);
      p[0] = -1;
      p[n] = 1;
      for (int d = 1; d < n; ++d) {
        if (n % d == 0) p = int_poly_divide(p, t[d]);
      }
      t[n] = p;
    }
    return t;
  }();
  return table;
}

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by b over Q.
std::pair<QPoly, QPoly> qpoly_divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, 0);
  const Rational lead_inv = 1 / b.back();
  for (std::size_t i = a.size(); i-- > b.size() - 1;) {
    if (a[i] == 0) continue;
    const Rational c = a[i] * lead_inv;
    const std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= c * b[k];
  }
  trim(a);
  return {q, a};
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly qpoly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

void require_supported_order(int n) {
  if (n < 1 || n > kMaxOrder || euler_phi(n) > kMaxCyclotomicDegree) {
    throw InputError("unsupported cyclotomic order " + std::to_string(n) +
                     " (need phi(n) <= " + std::to_string(kMaxCyclotomicDegree) + ")");
  }
}

const std::vector<long>& cyclotomic_polynomial(int n) {
  require_supported_order(n);
  return cyclotomic_table()[n];
}

std::string to_string(const Rational& x) { return x.get_str(); }

Cyclo Cyclo::zeta(int order) {
  require_supported_order(order);
  std::vector<Rational> c(2, 0);
  c[1] = 1;
  return from_coefficients(order, c);
}

Cyclo Cyclo::from_coefficients(int order, const std::vector<Rational>& coefficients) {
  require_supported_order(order);
  Cyclo r;
  r.order_ = order;
  r.reduce_from(coefficients);
  return r;
}

void Cyclo::reduce_from(std::vector<Rational> poly) {
  const auto& phi_poly = cyclotomic_table()[order_];
  const std::size_t deg = phi_poly.size() - 1;
  for (auto& c : poly) c.canonicalize();
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (poly[i] == 0) continue;
    const Rational c = poly[i];
    const std::size_t shift = i - deg;
    for (std::size_t k = 0; k <= deg; ++k) {
      if (phi_poly[k] != 0) poly[shift + k] -= c * phi_poly[k];
    }
  }
  poly.resize(deg, 0);
  if (deg == 1) {
    order_ = 1;
    c0_ = poly[0];
    hi_.clear();
    return;
  }
  c0_ = poly[0];
  hi_.assign(poly.begin() + 1, poly.end());
}

std::vector<Rational> Cyclo::coefficients() const {
  std::vector<Rational> c;
  c.reserve(hi_.size() + 1);
  c.push_back(c0_);
  c.insert(c.end(), hi_.begin(), hi_.end());
  return c;
}

bool Cyclo::is_zero() const {
  if (c0_ != 0) return false;
  for (const auto& c : hi_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclo::is_rational() const {
  for (const auto& c : hi_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclo::is_one() const { return c0_ == 1 && is_rational(); }

const Rational& Cyclo::rational_value() const {
  if (!is_rational()) throw InternalError("cyclotomic number " + to_string() + " is not rational");
  return c0_;
}

Cyclo Cyclo::embed(int order) const {
  if (order == order_ || (order_ == 1 && euler_phi(order) == 1)) return *this;
  require_supported_order(order);
  if (order % order_ != 0) {
    throw InternalError("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                        std::to_string(order) + ")");
  }
  if (order_ == 1) {
    Cyclo r;
    r.order_ = order;
    r.c0_ = c0_;
    r.hi_.assign(euler_phi(order) - 1, 0);
    if (r.hi_.empty()) r.order_ = 1;
    return r;
  }
  const int step = order / order_;
  std::vector<Rational> poly((degree() - 1) * step + 1, 0);
  for (int i = 0; i < degree(); ++i) poly[i * step] = coefficient(i);
  Cyclo r;
  r.order_ = order;
  r.reduce_from(std::move(poly));
  return r;
}

int Cyclo::common_order(const Cyclo& a, const Cyclo& b) {
  if (a.order_ == b.order_) return a.order_;
  if (a.order_ == 1) return b.order_;
  if (b.order_ == 1) return a.order_;
  const int l = std::lcm(a.order_, b.order_);
  require_supported_order(l);
  return l;
}

Cyclo& Cyclo::operator+=(const Cyclo& other) {
  if (order_ == other.order_) {
    c0_ += other.c0_;
    for (std::size_t i = 0; i < hi_.size(); ++i) hi_[i] += other.hi_[i];
    return *this;
  }
  const int l = common_order(*this, other);
  *this = embed(l);
  return *this += other.embed(l);
}

Cyclo& Cyclo::operator-=(const Cyclo& other) {
  if (order_ == other.order_) {
    c0_ -= other.c0_;
    for (std::size_t i = 0; i < hi_.size(); ++i) hi_[i] -= other.hi_[i];
    return *this;
  }
  const int l = common_order(*this, other);
  *this = embed(l);
  return *this -= other.embed(l);
}

Cyclo& Cyclo::operator*=(const Cyclo& other) {
  if (order_ == 1 && other.order_ == 1) {
    c0_ *= other.c0_;
    return *this;
  }
  if (other.order_ == 1) {
    c0_ *= other.c0_;
    for (auto& c : hi_) c *= other.c0_;
    return *this;
  }
  if (order_ == 1) {
    const Rational s = c0_;
    *this = other;
    c0_ *= s;
    for (auto& c : hi_) c *= s;
    return *this;
  }
  if (order_ != other.order_) {
    const int l = common_order(*this, other);
    *this = embed(l);
    return *this *= other.embed(l);
  }
  const int d = degree();
  std::vector<Rational> prod(2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    const Rational& a = coefficient(i);
    if (a == 0) continue;
    for (int j = 0; j < d; ++j) {
      const Rational& b = other.coefficient(j);
      if (b != 0) prod[i + j] += a * b;
    }
  }
  reduce_from(std::move(prod));
  return *this;
}

Cyclo operator-(Cyclo a) {
  a.c0_ = -a.c0_;
  for (auto& c : a.hi_) c = -c;
  return a;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.order_ == b.order_) return a.c0_ == b.c0_ && a.hi_ == b.hi_;
  if (a.is_rational() && b.is_rational()) return a.c0_ == b.c0_;
  if (a.order_ == 1 || b.order_ == 1) return false;
  const int l = Cyclo::common_order(a, b);
  const Cyclo x = a.embed(l);
  const Cyclo y = b.embed(l);
  return x.c0_ == y.c0_ && x.hi_ == y.hi_;
}

int compare(const Cyclo& a, const Cyclo& b) {
  const int l = Cyclo::common_order(a, b);
  const Cyclo x = a.embed(l);
  const Cyclo y = b.embed(l);
  for (int i = 0; i < x.degree(); ++i) {
    const int c = cmp(x.coefficient(i), y.coefficient(i));
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw DivisionByZeroError("division by zero in Q(zeta_" + std::to_string(order_) + ")");
  if (is_rational()) {
    Cyclo r = *this;
    r.c0_ = 1 / c0_;
    for (auto& c : r.hi_) c = 0;
    return r;
  }
  // Extended Euclid: find u with u * a = 1 mod Phi_n.
  const auto& phi_int = cyclotomic_table()[order_];
  QPoly m(phi_int.begin(), phi_int.end());
  QPoly a = coefficients();
  trim(a);
  QPoly r0 = m, r1 = a;
  QPoly s0, s1{1};  // coefficients of a
  while (!(r1.size() == 1)) {
    if (r1.empty()) throw InternalError("cyclotomic polynomial is reducible");
    auto [q, r] = qpoly_divmod(r0, r1);
    QPoly s2 = qpoly_sub(s0, qpoly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const Rational c = 1 / r1[0];
  for (auto& x : s1) x *= c;
  return from_coefficients(order_, s1);
}

Cyclo Cyclo::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Cyclo result(1);
  Cyclo base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Cyclo Cyclo::galois(int a) const {
  if (order_ == 1) return *this;
  const int n = order_;
  a = ((a % n) + n) % n;
  if (std::gcd(a, n) != 1) throw InternalError("galois exponent not coprime to the order");
  std::vector<Rational> poly(n, 0);
  for (int i = 0; i < degree(); ++i) poly[(static_cast<long>(i) * a) % n] += coefficient(i);
  return from_coefficients(n, poly);
}

std::complex<long double> Cyclo::evaluate(int a) const {
  std::complex<long double> z(static_cast<long double>(c0_.get_d()), 0.0L);
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  for (int i = 1; i < degree(); ++i) {
    const Rational& c = hi_[i - 1];
    if (c == 0) continue;
    const long k = ((static_cast<long>(a) * i) % order_ + order_) % order_;
    const long double angle = two_pi * static_cast<long double>(k) / static_cast<long double>(order_);
    z += static_cast<long double>(c.get_d()) * std::complex<long double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

std::string Cyclo::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i < degree(); ++i) {
    const Rational& c = coefficient(i);
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    std::string term;
    if (i == 0) {
      term = magnitude.get_str();
    } else {
      const std::string power = i == 1 ? "z" : "z^" + std::to_string(i);
      term = magnitude == 1 ? power : magnitude.get_str() + "*" + power;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

int pivot_cost(const Cyclo& x) {
  int cost = 0;
  for (int i = 0; i < x.degree(); ++i) {
    const Rational& c = x.coefficient(i);
    if (c == 0) continue;
    cost += 2;
    if (c != 1 && c != -1) cost += 1 + static_cast<int>(mpz_sizeinbase(c.get_num_mpz_t(), 2) / 32) +
                                  static_cast<int>(mpz_sizeinbase(c.get_den_mpz_t(), 2) / 32);
  }
  return cost;
}

}  // namespace cdelab
