#include "cdelab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "cdelab/errors.hpp"

namespace cdelab {
namespace {

using Complex = std::complex<long double>;

// Aberth-Ehrlich iteration for all roots of a polynomial with simple roots.
std::vector<Complex> complex_roots(const std::vector<Complex>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1) return {};
  const Complex lead = coeffs[n];
  long double bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(coeffs[i] / lead));
  const long double radius = 1 + bound;
  std::vector<Complex> z(n);
  for (int i = 0; i < n; ++i) {
    const long double angle = 2 * std::numbers::pi_v<long double> * (i + 0.25L) / n + 0.4L;
    z[i] = std::polar(radius * (0.5L + 0.5L * (i + 1) / n), angle);
  }
  auto eval = [&](Complex x, Complex& p, Complex& dp) {
    p = coeffs[n];
    dp = 0;
    for (int i = n - 1; i >= 0; --i) {
      dp = dp * x + p;
      p = p * x + coeffs[i];
    }
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double max_step = 0;
    for (int i = 0; i < n; ++i) {
      Complex p, dp;
      eval(z[i], p, dp);
      if (p == Complex(0)) continue;
      const Complex ratio = p / dp;
      Complex sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      }
      const Complex step = ratio / (1.0L - ratio * sum);
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / (1 + std::abs(z[i])));
    }
    if (max_step < 1e-17L) break;
  }
  // Newton polish.
  for (auto& x : z) {
    for (int k = 0; k < 3; ++k) {
      Complex p, dp;
      eval(x, p, dp);
      if (dp != Complex(0)) x -= p / dp;
    }
  }
  return z;
}

// Smallest-denominator rational within tol of x, via continued fractions.
bool recognize_rational(long double x, long double tol, Rational& out) {
  if (!std::isfinite(x)) return false;
  long double r = x;
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int step = 0; step < 40; ++step) {
    const long double a = std::floor(r);
    if (std::fabs(a) > 1e18L) return false;
    const mpz_class ai(static_cast<double>(a));
    const mpz_class h2 = ai * h1 + h0;
    const mpz_class k2 = ai * k1 + k0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const long double approx = static_cast<long double>(h1.get_d()) / static_cast<long double>(k1.get_d());
    if (std::fabs(approx - x) <= tol) {
      out = Rational(h1, k1);
      out.canonicalize();
      return true;
    }
    if (k1 > 1000000000) return false;
    const long double frac = r - a;
    if (frac < 1e-30L) return false;
    r = 1 / frac;
  }
  return false;
}

// Solves the complex linear system a x = b by Gaussian elimination with
// partial pivoting.
std::vector<Complex> complex_solve(std::vector<std::vector<Complex>> a, std::vector<Complex> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    }
    std::swap(a[c], a[p]);
    std::swap(b[c], b[p]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const Complex f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<Complex> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Complex s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

}  // namespace

namespace {
std::vector<Cyclo> roots_pass(const Poly& f, int order);
}  // namespace

Poly squarefree_part(const Poly& f) {
  if (f.degree() <= 0) return f.monic();
  const Poly g = Poly::gcd(f, f.derivative());
  return Poly::exact_quotient(f, g).monic();
}

std::vector<Cyclo> roots_in_field(const Poly& f, int order) {
  std::vector<Cyclo> found = roots_pass(f, order);
  // Deflate by the roots found so far and search the better-conditioned quotient.
  Poly rest = squarefree_part(f);
  while (!found.empty() && static_cast<int>(found.size()) < rest.degree()) {
    Poly q = rest;
    for (const auto& r : found) q = Poly::exact_quotient(q, Poly({-r, Cyclo(1)}));
    const auto more = roots_pass(q, order);
    if (more.empty()) break;
    found.insert(found.end(), more.begin(), more.end());
  }
  std::sort(found.begin(), found.end(), [](const Cyclo& a, const Cyclo& b) { return compare(a, b) < 0; });
  return found;
}

namespace {

std::vector<Cyclo> roots_pass(const Poly& f, int order) {
  require_supported_order(order);
  if (f.is_zero()) throw InputError("roots of the zero polynomial");
  const Poly g = squarefree_part(f);
  const int deg = g.degree();
  std::vector<Cyclo> found;
  if (deg <= 0) return found;
  if (deg == 1) {
    found.push_back(-g.coefficient(0) / g.coefficient(1));
    return found;
  }
  for (const auto& c : g.coefficients()) {
    if (c.order() != 1) order = std::lcm(order, c.order());
  }
  require_supported_order(order);
  const int phi = euler_phi(order);
  if (phi == 1) order = 1;

  // Embeddings a in (Z/n)^* up to complex conjugation.
  std::vector<int> units;
  for (int a = 1; a < std::max(order, 2); ++a) {
    if (std::gcd(a, order) == 1 && (order <= 2 || 2 * a < order)) units.push_back(a);
  }
  if (order == 1) units = {1};

  std::vector<std::vector<Complex>> roots_per_embedding;
  for (int a : units) {
    std::vector<Complex> c;
    for (const auto& x : g.coefficients()) c.push_back(x.embed(order).evaluate(a));
    roots_per_embedding.push_back(complex_roots(c));
  }

  // Real Vandermonde-type system: for each chosen embedding a, the value
  // sum_i c_i w^(a i) gives two real equations (one when the embedding is real).
  const long double two_pi = 2 * std::numbers::pi_v<long double>;
  std::size_t combos = 1;
  for (std::size_t e = 0; e < units.size(); ++e) {
    combos *= static_cast<std::size_t>(deg);
    if (combos > 2000000) throw UnsupportedError("root finding search space too large");
  }
  std::vector<std::size_t> pick(units.size(), 0);
  for (std::size_t combo = 0; combo < combos; ++combo) {
    std::size_t rest = combo;
    for (std::size_t e = 0; e < units.size(); ++e) {
      pick[e] = rest % deg;
      rest /= deg;
    }
    std::vector<Rational> coords(phi);
    bool ok = true;
    if (phi == 1) {
      const Complex r = roots_per_embedding[0][pick[0]];
      if (std::fabs(r.imag()) > 1e-8L * (1 + std::abs(r))) continue;
      // Candidates are verified exactly below, so looser tolerances only cost time.
      ok = false;
      for (const long double tol : {1e-12L, 1e-8L, 1e-5L}) {
        if (recognize_rational(r.real(), tol * (1 + std::fabs(r.real())), coords[0]) &&
            g.evaluate(Cyclo(coords[0])).is_zero()) {
          ok = true;
          break;
        }
      }
    } else {
      // Build the full set of phi complex equations using conjugate pairs.
      std::vector<std::vector<Complex>> mat;
      std::vector<Complex> rhs;
      for (std::size_t e = 0; e < units.size(); ++e) {
        const Complex r = roots_per_embedding[e][pick[e]];
        for (int sign : {1, -1}) {
          const int a = sign * units[e];
          std::vector<Complex> row(phi);
          for (int i = 0; i < phi; ++i) {
            row[i] = std::polar(1.0L, two_pi * static_cast<long double>(((a * i) % order + order) % order) / order);
          }
          mat.push_back(row);
          rhs.push_back(sign == 1 ? r : std::conj(r));
        }
      }
      const auto x = complex_solve(mat, rhs);
      long double scale = 1;
      for (const auto& v : x) scale = std::max(scale, std::abs(v));
      for (int i = 0; i < phi && ok; ++i) {
        if (std::fabs(x[i].imag()) > 1e-7L * scale) ok = false;
        else ok = recognize_rational(x[i].real(), 1e-11L * scale, coords[i]);
      }
    }
    if (!ok) continue;
    const Cyclo candidate = Cyclo::from_coefficients(order, coords);
    if (!g.evaluate(candidate).is_zero()) continue;
    if (std::none_of(found.begin(), found.end(), [&](const Cyclo& y) { return y == candidate; })) {
      found.push_back(candidate);
      if (static_cast<int>(found.size()) == deg) break;
    }
  }
  std::sort(found.begin(), found.end(), [](const Cyclo& a, const Cyclo& b) { return compare(a, b) < 0; });
  return found;
}

}  // namespace

}  // namespace cdelab
