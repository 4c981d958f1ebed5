#include "cdelab/lattice.hpp"

#include <algorithm>

#include "cdelab/errors.hpp"
#include "cdelab/structure.hpp"

namespace cdelab {
namespace {

using RVec = Vec<RatFunc>;

RatFunc t_power(int v) { return RatFunc(1).shifted(v); }

}  // namespace

std::vector<RVec> dvr_basis(const std::vector<RVec>& vectors, std::size_t ambient) {
  std::vector<RVec> rows;
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw InternalError("dvr_basis: vector length mismatch");
    if (!is_zero_vector(v)) rows.push_back(v);
  }
  std::vector<RVec> out;
  for (std::size_t c = 0; c < ambient && !rows.empty(); ++c) {
    std::size_t best = rows.size();
    int best_val = kInfiniteValuation;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const int v = rows[i][c].valuation();
      if (v < best_val) {
        best = i;
        best_val = v;
      }
    }
    if (best == rows.size()) continue;
    RVec pivot = std::move(rows[best]);
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
    pivot = scale(pivot, t_power(best_val) / pivot[c]);
    std::vector<RVec> rest;
    for (auto& r : rows) {
      if (!r[c].is_zero()) r = sub(r, scale(pivot, r[c] / pivot[c]));
      if (!is_zero_vector(r)) rest.push_back(std::move(r));
    }
    rows = std::move(rest);
    out.push_back(std::move(pivot));
  }
  return out;
}

bool dvr_contains(const std::vector<RVec>& basis, RVec v) {
  std::size_t col = 0;
  for (const auto& b : basis) {
    std::size_t p = 0;
    while (b[p].is_zero()) ++p;
    for (; col < p; ++col) {
      if (!v[col].is_zero()) return false;
    }
    if (!v[p].is_zero()) {
      const RatFunc c = v[p] / b[p];
      if (!c.is_integral()) return false;
      v = sub(v, scale(b, c));
    }
  }
  return is_zero_vector(v);
}

std::vector<RVec> saturate(const std::vector<RVec>& vectors, std::size_t ambient) {
  std::vector<RVec> rows;
  for (const auto& v : vectors) {
    if (!is_zero_vector(v)) rows.push_back(v);
  }
  std::vector<std::size_t> pivots;
  for (std::size_t s = 0; s < rows.size(); ++s) {
    std::size_t bi = rows.size(), bc = 0;
    int best_val = kInfiniteValuation;
    for (std::size_t i = s; i < rows.size(); ++i) {
      for (std::size_t c = 0; c < ambient; ++c) {
        const int v = rows[i][c].valuation();
        if (v < best_val) {
          best_val = v;
          bi = i;
          bc = c;
        }
      }
    }
    if (bi == rows.size()) {
      rows.resize(s);
      break;
    }
    std::swap(rows[s], rows[bi]);
    rows[s] = scale(rows[s], rows[s][bc].inverse());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != s && !rows[i][bc].is_zero()) rows[i] = sub(rows[i], scale(rows[s], rows[i][bc]));
    }
    pivots.push_back(bc);
  }
  for (const auto& r : rows) {
    for (const auto& x : r) {
      if (!x.is_integral()) throw InternalError("saturation produced a non-integral vector");
    }
  }
  return rows;
}

Lattice::Lattice(const Representation<RatFunc>& ambient, Matrix<RatFunc> basis,
                 std::shared_ptr<const Algebra<RatFunc>> algebra_over_r)
    : basis_(std::move(basis)),
      module_([&] {
        const Matrix<RatFunc> inv = inverse(basis_);
        std::vector<Matrix<RatFunc>> actions;
        for (const auto& a : ambient.actions()) {
          Matrix<RatFunc> x = inv * a * basis_;
          for (std::size_t i = 0; i < x.rows(); ++i) {
            for (std::size_t j = 0; j < x.cols(); ++j) {
              if (!x(i, j).is_integral()) throw InternalError("lattice basis is not action-stable");
            }
          }
          actions.push_back(std::move(x));
        }
        return Representation<RatFunc>(std::move(algebra_over_r), std::move(actions), ambient.kind(),
                                       ambient.label());
      }()) {}

Lattice spin_lattice(const Representation<RatFunc>& m, const std::vector<RVec>& seeds,
                     std::shared_ptr<const Algebra<RatFunc>> algebra_over_r) {
  const std::size_t n = m.dimension();
  std::vector<RVec> basis = dvr_basis(seeds, n);
  for (;;) {
    std::vector<RVec> images;
    for (const auto& a : m.actions()) {
      for (const auto& b : basis) {
        RVec w = a * b;
        if (!dvr_contains(basis, w)) images.push_back(std::move(w));
      }
    }
    if (images.empty()) break;
    images.insert(images.begin(), basis.begin(), basis.end());
    basis = dvr_basis(images, n);
  }
  if (basis.size() < n) {
    throw SeedsDoNotSpanError("seed vectors span a submodule of rank " + std::to_string(basis.size()) +
                              " < " + std::to_string(n));
  }
  return Lattice(m, Matrix<RatFunc>::from_columns(basis, n), std::move(algebra_over_r));
}

Lattice spin_lattice(const Representation<RatFunc>& m, std::shared_ptr<const Algebra<RatFunc>> algebra_over_r) {
  std::vector<RVec> seeds;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    RVec e(m.dimension());
    e[i] = RatFunc(1);
    seeds.push_back(std::move(e));
  }
  return spin_lattice(m, seeds, std::move(algebra_over_r));
}

Lattice regular_lattice(std::shared_ptr<const Algebra<RatFunc>> algebra_over_r) {
  const auto reg = regular_module(algebra_over_r);
  return Lattice(reg, Matrix<RatFunc>::identity(algebra_over_r->dimension()), algebra_over_r);
}

Representation<Cyclo> reduce_lattice(const Lattice& lattice, std::shared_ptr<const Algebra<Cyclo>> reduced_algebra) {
  std::vector<Matrix<Cyclo>> actions;
  for (const auto& a : lattice.module().actions()) {
    actions.push_back(a.map([](const RatFunc& x) { return x.reduce_at_zero(); }));
  }
  return Representation<Cyclo>(std::move(reduced_algebra), std::move(actions), ModuleKind::unmarked,
                               lattice.module().label());
}

std::vector<Matrix<RatFunc>> hom_lattice(const Lattice& p, const Lattice& m) {
  const auto k_basis = hom_space(p.module(), m.module());
  const std::size_t rows = m.rank();
  const std::size_t cols = p.rank();
  std::vector<RVec> flat;
  for (const auto& f : k_basis) {
    RVec v;
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) v.push_back(f(i, j));
    }
    flat.push_back(std::move(v));
  }
  std::vector<Matrix<RatFunc>> out;
  for (const auto& v : saturate(flat, rows * cols)) {
    Matrix<RatFunc> f(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) f(i, j) = v[i * cols + j];
    }
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

using SVec = std::vector<TruncatedSeries>;

SVec series_multiply(const std::vector<std::vector<SVec>>& table, const SVec& x, const SVec& y, int precision) {
  const std::size_t d = x.size();
  SVec r(d, TruncatedSeries(precision));
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const TruncatedSeries c = x[i] * y[j];
      for (std::size_t k = 0; k < d; ++k) {
        if (!table[i][j][k].is_zero()) r[k] += c * table[i][j][k];
      }
    }
  }
  return r;
}

}  // namespace

IdempotentLift lift_idempotent_trunc(const Vec<Cyclo>& idempotent, const Algebra<RatFunc>& algebra, int precision) {
  if (precision < 1) throw InputError("precision must be at least 1");
  const std::size_t d = algebra.dimension();
  if (idempotent.size() != d) throw InputError("idempotent has the wrong number of coordinates");
  const auto reduced = reduce_to_k(algebra);
  if (reduced->multiply(idempotent, idempotent) != idempotent) {
    throw NotIdempotentError("the given element of the reduced algebra is not idempotent");
  }
  // Structure constants expanded to the full precision.
  std::vector<std::vector<SVec>> full(d, std::vector<SVec>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        full[i][j].push_back(TruncatedSeries::from_ratfunc(algebra.constant(i, j, k), precision));
      }
    }
  }
  auto table_at = [&](int p) {
    std::vector<std::vector<SVec>> t(d, std::vector<SVec>(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) t[i][j].push_back(full[i][j][k].with_precision(p));
      }
    }
    return t;
  };

  SVec e;
  for (const auto& c : idempotent) e.emplace_back(1, c);
  int p = 1;
  while (p < precision) {
    p = std::min(2 * p, precision);
    for (auto& c : e) c = c.with_precision(p);
    const auto table = table_at(p);
    const SVec e2 = series_multiply(table, e, e, p);
    const SVec e3 = series_multiply(table, e2, e, p);
    for (std::size_t k = 0; k < d; ++k) {
      e[k] = e2[k] * TruncatedSeries(p, Cyclo(3)) - e3[k] * TruncatedSeries(p, Cyclo(2));
    }
  }

  IdempotentLift out;
  out.precision = precision;
  out.coordinates = e;
  Vec<RatFunc> exact;
  for (const auto& c : e) exact.emplace_back(c.to_poly());
  const Vec<RatFunc> defect = sub(algebra.multiply(exact, exact), exact);
  out.certified = true;
  for (const auto& x : defect) {
    const int v = x.valuation();
    out.defect_valuations.push_back(v);
    if (v < precision) out.certified = false;
  }
  return out;
}

}  // namespace cdelab
