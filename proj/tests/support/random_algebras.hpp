#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cdelab/algebra.hpp"
#include "cdelab/matrix.hpp"

namespace cdelab::testing {

// Split algebra over R together with its K-simples, assembled from pieces
// whose generic fibre is known by construction.
struct DeformedAlgebra {
  std::string description;
  std::shared_ptr<const Algebra<RatFunc>> over_r;
  std::shared_ptr<const Algebra<RatFunc>> over_K;
  std::vector<Representation<RatFunc>> simples;
};

// Unvalidated structure constants and K-simple actions in some basis.
struct RawAlgebra {
  std::string description;
  int order = 1;
  std::size_t dim = 0;
  std::size_t unit = 0;
  std::vector<Vec<RatFunc>> products;
  std::vector<std::vector<Matrix<RatFunc>>> simples;
};

inline Vec<RatFunc> raw_multiply(const RawAlgebra& a, const Vec<RatFunc>& x, const Vec<RatFunc>& y) {
  Vec<RatFunc> r(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.dim; ++j) {
      if (y[j].is_zero()) continue;
      r = add(r, scale(a.products[i * a.dim + j], x[i] * y[j]));
    }
  }
  return r;
}

// R[x]/prod (x - roots_i) with basis 1, x, ..., x^(n-1).
inline RawAlgebra truncated_polynomial(const std::vector<RatFunc>& roots, int order) {
  const std::size_t n = roots.size();
  std::vector<RatFunc> f{RatFunc(1)};  // monic, low degree first
  for (const auto& r : roots) {
    std::vector<RatFunc> g(f.size() + 1);
    for (std::size_t i = 0; i < f.size(); ++i) {
      g[i + 1] += f[i];
      g[i] -= r * f[i];
    }
    f = std::move(g);
  }
  // powers[m] = x^m reduced, for m < 2n - 1
  std::vector<Vec<RatFunc>> powers;
  for (std::size_t m = 0; m < 2 * n - 1; ++m) {
    Vec<RatFunc> v(n);
    if (m < n) {
      v[m] = RatFunc(1);
    } else {
      const Vec<RatFunc>& prev = powers[m - 1];
      for (std::size_t k = 0; k + 1 < n; ++k) v[k + 1] = prev[k];
      for (std::size_t k = 0; k < n; ++k) v[k] -= prev[n - 1] * f[k];
    }
    powers.push_back(std::move(v));
  }
  RawAlgebra a;
  a.description = "truncated polynomial of degree " + std::to_string(n);
  a.order = order;
  a.dim = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a.products.push_back(powers[i + j]);
  }
  for (const auto& r : roots) {
    std::vector<Matrix<RatFunc>> act;
    for (std::size_t i = 0; i < n; ++i) act.push_back(Matrix<RatFunc>::from_rows({{r.pow(static_cast<long>(i))}}));
    a.simples.push_back(std::move(act));
  }
  return a;
}

// The order of 2x2 matrices with (1,2) entry in t^a R and (2,1) entry in
// t^b R, a + b >= 0, basis 1, E11, t^a E12, t^b E21.
inline RawAlgebra graduated_order(int a, int b, int order) {
  const RatFunc ta = RatFunc(1).shifted(a), tb = RatFunc(1).shifted(b);
  std::vector<Matrix<RatFunc>> basis(4, Matrix<RatFunc>(2, 2));
  basis[0] = Matrix<RatFunc>::identity(2);
  basis[1](0, 0) = RatFunc(1);
  basis[2](0, 1) = ta;
  basis[3](1, 0) = tb;
  auto coords = [&](const Matrix<RatFunc>& m) {
    return Vec<RatFunc>{m(1, 1), m(0, 0) - m(1, 1), m(0, 1) / ta, m(1, 0) / tb};
  };
  RawAlgebra r;
  r.description = "graduated order (" + std::to_string(a) + "," + std::to_string(b) + ")";
  r.order = order;
  r.dim = 4;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) r.products.push_back(coords(basis[i] * basis[j]));
  }
  r.simples.push_back(basis);
  return r;
}

// Direct product with basis (1, 1), the non-unit basis of a, then 1_b and
// the non-unit basis of b.
inline RawAlgebra product(const RawAlgebra& a, const RawAlgebra& b) {
  RawAlgebra r;
  r.description = a.description + " x " + b.description;
  r.order = std::lcm(a.order, b.order);
  r.dim = a.dim + b.dim;
  // Concatenated coordinates of each new basis element.
  std::vector<Vec<RatFunc>> cols;
  std::vector<std::size_t> a_rest, b_rest;
  Vec<RatFunc> u(r.dim);
  u[a.unit] = RatFunc(1);
  u[a.dim + b.unit] = RatFunc(1);
  cols.push_back(u);
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (i == a.unit) continue;
    Vec<RatFunc> v(r.dim);
    v[i] = RatFunc(1);
    cols.push_back(v);
  }
  for (std::size_t j = 0; j < b.dim; ++j) {
    Vec<RatFunc> v(r.dim);
    v[a.dim + j] = RatFunc(1);
    cols.push_back(v);
  }
  const Matrix<RatFunc> p = Matrix<RatFunc>::from_columns(cols, r.dim);
  const Matrix<RatFunc> p_inv = inverse(p);
  auto raw = [&](const Vec<RatFunc>& x, const Vec<RatFunc>& y) {
    Vec<RatFunc> xa(x.begin(), x.begin() + a.dim), ya(y.begin(), y.begin() + a.dim);
    Vec<RatFunc> xb(x.begin() + a.dim, x.end()), yb(y.begin() + a.dim, y.end());
    Vec<RatFunc> out = raw_multiply(a, xa, ya);
    const Vec<RatFunc> ob = raw_multiply(b, xb, yb);
    out.insert(out.end(), ob.begin(), ob.end());
    return out;
  };
  for (std::size_t i = 0; i < r.dim; ++i) {
    for (std::size_t j = 0; j < r.dim; ++j) r.products.push_back(p_inv * raw(cols[i], cols[j]));
  }
  auto extend = [&](const std::vector<Matrix<RatFunc>>& act, bool first) {
    const std::size_t n = act[0].rows();
    std::vector<Matrix<RatFunc>> out;
    for (const auto& c : cols) {
      Matrix<RatFunc> m(n, n);
      const std::size_t off = first ? 0 : a.dim;
      const std::size_t len = first ? a.dim : b.dim;
      for (std::size_t k = 0; k < len; ++k) {
        if (!c[off + k].is_zero()) m = m + act[k] * c[off + k];
      }
      out.push_back(std::move(m));
    }
    return out;
  };
  for (const auto& s : a.simples) r.simples.push_back(extend(s, true));
  for (const auto& s : b.simples) r.simples.push_back(extend(s, false));
  return r;
}

// New basis given by the columns of p (in GL_d(R), fixing the unit).
inline RawAlgebra change_basis(const RawAlgebra& a, const Matrix<RatFunc>& p) {
  RawAlgebra r = a;
  const Matrix<RatFunc> p_inv = inverse(p);
  r.products.clear();
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < a.dim; ++j) r.products.push_back(p_inv * raw_multiply(a, p.column(i), p.column(j)));
  }
  r.simples.clear();
  for (const auto& s : a.simples) {
    std::vector<Matrix<RatFunc>> out;
    for (std::size_t i = 0; i < a.dim; ++i) {
      Matrix<RatFunc> m(s[0].rows(), s[0].cols());
      for (std::size_t k = 0; k < a.dim; ++k) {
        if (!p(k, i).is_zero()) m = m + s[k] * p(k, i);
      }
      out.push_back(std::move(m));
    }
    r.simples.push_back(std::move(out));
  }
  return r;
}

inline DeformedAlgebra finish(const RawAlgebra& raw) {
  DeformedAlgebra d;
  d.description = raw.description;
  d.over_r = std::make_shared<const Algebra<RatFunc>>(ScalarRing::R, raw.order, raw.products, raw.unit);
  d.over_K = extend_to_K(*d.over_r);
  for (std::size_t j = 0; j < raw.simples.size(); ++j) {
    d.simples.emplace_back(d.over_K, raw.simples[j], ModuleKind::simple, "M" + std::to_string(j + 1));
  }
  return d;
}

// Random roots c + d t + e t^2 with constant terms drawn from a small set
// so that several roots collide at t = 0.
inline std::vector<RatFunc> random_roots(std::mt19937& rng, std::size_t n, int order) {
  std::uniform_int_distribution<int> small(-1, 1), big(-3, 3);
  std::vector<RatFunc> roots;
  while (roots.size() < n) {
    RatFunc c = order > 1 && small(rng) > 0 ? RatFunc(Cyclo::zeta(order)) : RatFunc(small(rng));
    RatFunc r = c + RatFunc::t() * RatFunc(big(rng)) + RatFunc::t().pow(2) * RatFunc(big(rng));
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  }
  return roots;
}

inline Matrix<RatFunc> random_unimodular(std::mt19937& rng, std::size_t d, std::size_t unit, int order) {
  std::uniform_int_distribution<int> coin(0, 2), small(-2, 2);
  const RatFunc z = RatFunc(Cyclo::zeta(order));
  Matrix<RatFunc> p = Matrix<RatFunc>::identity(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (j != unit && coin(rng) == 0) p(i, j) = RatFunc(small(rng)) * z + RatFunc(small(rng)) * RatFunc::t();
    }
    if (i != unit && coin(rng) == 0) p(i, i) = RatFunc(1) + RatFunc::t();
  }
  return p;
}

// The i-th member of a deterministic family of split deformed algebras of
// dimension at most 8.
inline DeformedAlgebra random_deformed_algebra(std::mt19937& rng, int i) {
  const int order = i % 3 == 2 ? 3 : 1;
  std::uniform_int_distribution<int> exponent(-1, 2);
  RawAlgebra raw;
  switch (i % 5) {
    case 0:
      raw = truncated_polynomial(random_roots(rng, 1 + static_cast<std::size_t>(i) % 8, order), order);
      break;
    case 1: {
      const int a = exponent(rng);
      raw = graduated_order(a, std::max(-a, exponent(rng)), order);
      break;
    }
    case 2: {
      const int a = exponent(rng);
      raw = product(graduated_order(a, std::max(-a, exponent(rng)), order),
                    truncated_polynomial(random_roots(rng, 1 + static_cast<std::size_t>(i) % 4, order), order));
      break;
    }
    case 3:
      raw = product(truncated_polynomial(random_roots(rng, 2 + static_cast<std::size_t>(i) % 3, order), order),
                    truncated_polynomial(random_roots(rng, 1 + static_cast<std::size_t>(i) % 4, order), order));
      break;
    default:
      raw = product(graduated_order(0, 1, order), graduated_order(1, exponent(rng) + 1, order));
      break;
  }
  if (i % 2 == 1) {
    raw = change_basis(raw, random_unimodular(rng, raw.dim, raw.unit, order));
    raw.description += " (basis change)";
  }
  return finish(raw);
}

}  // namespace cdelab::testing
