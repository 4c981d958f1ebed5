#include "cdelab/structure.hpp"

#include <algorithm>
#include <numeric>

#include "cdelab/errors.hpp"
#include "cdelab/roots.hpp"

namespace cdelab {

template <class T>
std::vector<Vec<T>> radical(const Algebra<T>& algebra) {
  const std::size_t d = algebra.dimension();
  Vec<T> traces(d);
  for (std::size_t k = 0; k < d; ++k) traces[k] = trace(algebra.left(k));
  Matrix<T> gram(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Vec<T>& p = algebra.product(i, j);
      T s;
      for (std::size_t k = 0; k < d; ++k) {
        if (!p[k].is_zero() && !traces[k].is_zero()) s += p[k] * traces[k];
      }
      gram(i, j) = s;
    }
  }
  return kernel(gram);
}

template <class T>
Poly minimal_polynomial(const Algebra<T>& algebra, const Vec<T>& x, const Vec<T>& e) {
  std::vector<Vec<T>> powers{e};
  for (;;) {
    powers.push_back(algebra.multiply(x, powers.back()));
    const auto ker = kernel(Matrix<T>::from_columns(powers));
    if (ker.empty()) continue;
    const Vec<T>& c = ker[0];
    std::vector<Cyclo> coeffs;
    if constexpr (std::is_same_v<T, Cyclo>) {
      coeffs = c;
    } else {
      for (const auto& v : c) coeffs.push_back(v.constant_value());
    }
    return Poly(std::move(coeffs)).monic();
  }
}

namespace {

using CVec = Vec<Cyclo>;

CVec scaled(const CVec& v, const Cyclo& s) { return scale(v, s); }

bool in_span_of(const CVec& x, const CVec& e) {
  EchelonBasis<Cyclo> b(e.size());
  b.insert(e);
  return b.contains(x);
}

std::size_t span_rank(const std::vector<CVec>& vectors, std::size_t n) {
  EchelonBasis<Cyclo> b(n);
  for (const auto& v : vectors) b.insert(v);
  return b.size();
}

// Lagrange spectral idempotents of y in the corner with identity e, given
// the distinct roots of its (squarefree) minimal polynomial.
std::vector<CVec> spectral_idempotents(const Algebra<Cyclo>& a, const CVec& y, const CVec& e,
                                       const std::vector<Cyclo>& roots) {
  std::vector<CVec> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    CVec p = e;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j == i) continue;
      const CVec factor = scaled(sub(y, scaled(e, roots[j])), (roots[i] - roots[j]).inverse());
      p = a.multiply(p, factor);
    }
    out.push_back(std::move(p));
  }
  return out;
}

// Splits e (an idempotent of the commutative algebra z) into primitive
// idempotents of the corner.
void split_center(const Algebra<Cyclo>& b, const std::vector<CVec>& center, const CVec& e,
                  std::vector<CVec>& out) {
  for (const auto& z : center) {
    const CVec y = b.multiply(e, z);
    if (in_span_of(y, e)) continue;
    const Poly mu = minimal_polynomial(b, y, e);
    const auto roots = roots_in_field(mu, b.cyclotomic_order());
    if (static_cast<int>(roots.size()) < mu.degree()) {
      throw NonSplitError("center of the semisimple quotient is not split over Q(zeta_" +
                          std::to_string(b.cyclotomic_order()) + "): minimal polynomial " + mu.to_string('x'));
    }
    for (const auto& f : spectral_idempotents(b, y, e, roots)) split_center(b, center, f, out);
    return;
  }
  out.push_back(e);
}

// Right identity u of the left ideal spanned by ideal (so that l u = l).
std::optional<CVec> right_identity(const Algebra<Cyclo>& b, const std::vector<CVec>& ideal) {
  const std::size_t s = ideal.size();
  const std::size_t m = b.dimension();
  Matrix<Cyclo> sys(s * m, s);
  CVec rhs(s * m);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      const CVec p = b.multiply(ideal[i], ideal[j]);
      for (std::size_t k = 0; k < m; ++k) sys(i * m + k, j) = p[k];
    }
    for (std::size_t k = 0; k < m; ++k) rhs[i * m + k] = ideal[i][k];
  }
  const auto c = solve(sys, rhs);
  if (!c) return std::nullopt;
  CVec u(m);
  for (std::size_t j = 0; j < s; ++j) u = add(u, scaled(ideal[j], (*c)[j]));
  return u;
}

// Splits an idempotent e of a simple block into primitive idempotents.
void refine_block(const Algebra<Cyclo>& b, const CVec& e, std::vector<CVec>& out) {
  const std::size_t m = b.dimension();
  std::vector<CVec> corner;
  EchelonBasis<Cyclo> corner_span(m);
  for (std::size_t i = 0; i < m; ++i) {
    CVec x = b.multiply(b.multiply(e, b.basis_vector(i)), e);
    if (corner_span.insert(x)) corner.push_back(std::move(x));
  }
  if (corner.size() == 1) {
    out.push_back(e);
    return;
  }
  std::vector<CVec> candidates = corner;
  for (std::size_t i = 0; i < corner.size(); ++i) {
    for (std::size_t j = i + 1; j < corner.size(); ++j) candidates.push_back(add(corner[i], corner[j]));
  }
  for (std::size_t i = 0; i < corner.size(); ++i) {
    for (std::size_t j = 0; j < corner.size(); ++j) {
      if (i != j) candidates.push_back(b.multiply(corner[i], corner[j]));
    }
  }
  for (const auto& a : candidates) {
    if (in_span_of(a, e)) continue;
    const Poly mu = minimal_polynomial(b, a, e);
    const auto roots = roots_in_field(mu, b.cyclotomic_order());
    if (roots.empty()) continue;
    // a - r e is a nonzero non-invertible element of the corner.
    const CVec w = sub(a, scaled(e, roots[0]));
    std::vector<CVec> ideal;
    EchelonBasis<Cyclo> ideal_span(m);
    for (const auto& c : corner) {
      CVec x = b.multiply(c, w);
      if (ideal_span.insert(x)) ideal.push_back(std::move(x));
    }
    if (ideal.empty() || ideal.size() == corner.size()) continue;
    const auto u = right_identity(b, ideal);
    if (!u || b.multiply(*u, *u) != *u) throw InternalError("left ideal has no idempotent generator");
    refine_block(b, *u, out);
    refine_block(b, sub(e, *u), out);
    return;
  }
  throw NonSplitError("simple component of the semisimple quotient is not split over Q(zeta_" +
                      std::to_string(b.cyclotomic_order()) + ")");
}

// Newton iteration e <- 3e^2 - 2e^3 until e^2 = e.
CVec newton_idempotent(const Algebra<Cyclo>& a, CVec e) {
  for (int iter = 0; iter < 64; ++iter) {
    const CVec e2 = a.multiply(e, e);
    if (e2 == e) return e;
    const CVec e3 = a.multiply(e2, e);
    e = sub(scaled(e2, Cyclo(3)), scaled(e3, Cyclo(2)));
  }
  throw InternalError("idempotent lifting did not stabilize within 64 iterations");
}

struct Quotient {
  std::shared_ptr<const Algebra<Cyclo>> b;
  std::vector<CVec> complement;  // preimages in A of the basis of B
};

Quotient semisimple_quotient(const Algebra<Cyclo>& a, const std::vector<CVec>& rad) {
  const std::size_t d = a.dimension();
  EchelonBasis<Cyclo> span(d);
  for (const auto& v : rad) span.insert(v);
  std::vector<CVec> complement;
  std::vector<std::size_t> order{a.unit_index()};
  for (std::size_t i = 0; i < d; ++i) {
    if (i != a.unit_index()) order.push_back(i);
  }
  for (std::size_t i : order) {
    CVec v = a.basis_vector(i);
    if (span.insert(v)) complement.push_back(std::move(v));
  }
  const std::size_t m = complement.size();
  std::vector<CVec> cols = complement;
  cols.insert(cols.end(), rad.begin(), rad.end());
  const Matrix<Cyclo> inv = inverse(Matrix<Cyclo>::from_columns(cols));
  std::vector<CVec> products;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const CVec full = inv * a.multiply(complement[i], complement[j]);
      products.emplace_back(full.begin(), full.begin() + m);
    }
  }
  return {std::make_shared<const Algebra<Cyclo>>(ScalarRing::k, a.cyclotomic_order(), std::move(products), 0),
          std::move(complement)};
}

std::vector<CVec> center_of(const Algebra<Cyclo>& b) {
  const std::size_t m = b.dimension();
  const auto& gens = b.generators();
  Matrix<Cyclo> sys(gens.size() * m, m);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (std::size_t j = 0; j < m; ++j) {
      const CVec d = sub(b.product(j, gens[g]), b.product(gens[g], j));
      for (std::size_t k = 0; k < m; ++k) sys(g * m + k, j) = d[k];
    }
  }
  return kernel(sys);
}

struct UnorderedSplit {
  std::vector<std::vector<CVec>> blocks;  // primitive idempotents of A, per block
};

UnorderedSplit split_algebra(const Algebra<Cyclo>& a, const std::vector<CVec>& rad) {
  const Quotient q = semisimple_quotient(a, rad);
  const Algebra<Cyclo>& b = *q.b;
  std::vector<CVec> central;
  split_center(b, center_of(b), b.unit_vector(), central);
  std::vector<std::vector<CVec>> block_idempotents;
  for (const auto& c : central) {
    std::vector<CVec> corner;
    for (std::size_t i = 0; i < b.dimension(); ++i) corner.push_back(b.multiply(c, b.basis_vector(i)));
    const std::size_t dim = span_rank(corner, b.dimension());
    std::size_t r = 1;
    while (r * r < dim) ++r;
    if (r * r != dim) {
      throw NonSplitError("simple component of dimension " + std::to_string(dim) + " is not a full matrix algebra");
    }
    std::vector<CVec> prim;
    refine_block(b, c, prim);
    if (prim.size() != r) throw NonSplitError("simple component is not split over the base field");
    block_idempotents.push_back(std::move(prim));
  }

  // Lift orthogonally into A.
  const std::size_t d = a.dimension();
  auto lift = [&](const CVec& x) {
    CVec v(d);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!x[i].is_zero()) v = add(v, scaled(q.complement[i], x[i]));
    }
    return v;
  };
  std::size_t total = 0;
  for (const auto& blk : block_idempotents) total += blk.size();
  UnorderedSplit out;
  out.blocks.resize(block_idempotents.size());
  CVec rest = a.unit_vector();
  std::size_t done = 0;
  for (std::size_t bi = 0; bi < block_idempotents.size(); ++bi) {
    for (const auto& eps : block_idempotents[bi]) {
      CVec e;
      if (++done == total) {
        e = rest;
      } else {
        e = newton_idempotent(a, a.multiply(a.multiply(rest, lift(eps)), rest));
      }
      rest = sub(rest, e);
      out.blocks[bi].push_back(std::move(e));
    }
  }
  return out;
}

Representation<Cyclo> left_ideal_module(std::shared_ptr<const Algebra<Cyclo>> a, const CVec& e,
                                        ModuleKind kind) {
  const std::size_t d = a->dimension();
  std::vector<CVec> cols;
  EchelonBasis<Cyclo> span(d);
  for (std::size_t i = 0; i < d; ++i) {
    CVec v = a->left(i) * e;
    if (span.insert(v)) cols.push_back(std::move(v));
  }
  const Representation<Cyclo> reg = regular_module(a);
  return subrepresentation(reg, Matrix<Cyclo>::from_columns(cols, d), kind);
}

Representation<Cyclo> top_with_radical(const Representation<Cyclo>& p, const std::vector<CVec>& rad) {
  const std::size_t n = p.dimension();
  std::vector<CVec> cols;
  EchelonBasis<Cyclo> span(n);
  for (const auto& j : rad) {
    const Matrix<Cyclo> m = p.act(j);
    for (std::size_t c = 0; c < n; ++c) {
      CVec v = m.column(c);
      if (span.insert(v)) cols.push_back(std::move(v));
    }
  }
  return quotient_representation(p, Matrix<Cyclo>::from_columns(cols, n), ModuleKind::simple);
}

std::vector<Cyclo> trace_vector(const Representation<Cyclo>& m) {
  std::vector<Cyclo> t;
  for (const auto& a : m.actions()) t.push_back(trace(a));
  return t;
}

bool trace_less(const std::vector<Cyclo>& a, const std::vector<Cyclo>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

SplitAlgebra::SplitAlgebra(std::shared_ptr<const Algebra<Cyclo>> algebra) : algebra_(std::move(algebra)) {
  radical_ = radical(*algebra_);
  UnorderedSplit split = split_algebra(*algebra_, radical_);
  struct Block {
    std::vector<CVec> idempotents;
    Representation<Cyclo> projective;
    Representation<Cyclo> simple;
    std::vector<Cyclo> traces;
  };
  std::vector<Block> blocks;
  for (auto& idem : split.blocks) {
    Representation<Cyclo> p = left_ideal_module(algebra_, idem[0], ModuleKind::projective_indecomposable);
    Representation<Cyclo> s = top_with_radical(p, radical_);
    auto tv = trace_vector(s);
    blocks.push_back({std::move(idem), std::move(p), std::move(s), std::move(tv)});
  }
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const Block& x, const Block& y) { return trace_less(x.traces, y.traces); });
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto& blk = blocks[i];
    idempotents_.representative.push_back(idempotents_.idempotents.size());
    CVec sum(algebra_->dimension());
    for (auto& e : blk.idempotents) {
      sum = add(sum, e);
      idempotents_.idempotents.push_back(e);
      idempotents_.simple_of.push_back(i);
    }
    idempotents_.block_sums.push_back(std::move(sum));
    const std::string label = "S" + std::to_string(i + 1);
    simples_.push_back(blk.simple.with_kind(ModuleKind::simple, label));
    projectives_.push_back(blk.projective.with_kind(ModuleKind::projective_indecomposable, "P" + std::to_string(i + 1)));
  }
}

IdempotentSet primitive_idempotents(const Algebra<Cyclo>& algebra) {
  return SplitAlgebra(std::make_shared<const Algebra<Cyclo>>(algebra)).idempotents();
}

std::vector<Representation<Cyclo>> indecomposable_projectives(std::shared_ptr<const Algebra<Cyclo>> algebra) {
  return SplitAlgebra(std::move(algebra)).projectives();
}

Representation<Cyclo> top(const Representation<Cyclo>& projective) {
  return top_with_radical(projective, radical(projective.algebra()));
}

template <class T>
std::vector<Matrix<T>> hom_space(const Representation<T>& m, const Representation<T>& n) {
  const std::size_t dm = m.dimension();
  const std::size_t dn = n.dimension();
  if (dm == 0 || dn == 0) return {};
  const auto& gens = m.algebra().generators();
  const std::size_t unknowns = dn * dm;
  EchelonBasis<T> equations(unknowns);
  for (std::size_t g : gens) {
    const Matrix<T>& am = m.action(g);
    const Matrix<T>& an = n.action(g);
    for (std::size_t r = 0; r < dn; ++r) {
      for (std::size_t c = 0; c < dm; ++c) {
        // (X am)(r, c) - (an X)(r, c)
        Vec<T> row(unknowns);
        for (std::size_t s = 0; s < dm; ++s) {
          if (!am(s, c).is_zero()) row[r * dm + s] += am(s, c);
        }
        for (std::size_t s = 0; s < dn; ++s) {
          if (!an(r, s).is_zero()) row[s * dm + c] -= an(r, s);
        }
        if (!is_zero_vector(row)) equations.insert(row);
      }
    }
  }
  const auto ker = kernel(Matrix<T>::from_rows(equations.vectors(), unknowns));
  std::vector<Matrix<T>> out;
  for (const auto& v : ker) {
    Matrix<T> x(dn, dm);
    for (std::size_t r = 0; r < dn; ++r) {
      for (std::size_t c = 0; c < dm; ++c) x(r, c) = v[r * dm + c];
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::size_t jh_multiplicity(const SplitAlgebra& split, const Representation<Cyclo>& n, std::size_t i) {
  if (n.dimension() == 0) return 0;
  const auto& idem = split.idempotents();
  return rank(n.act(idem.idempotents[idem.representative.at(i)]));
}

std::vector<std::size_t> composition_series_oracle(const SplitAlgebra& split, const Representation<Cyclo>& n) {
  const std::size_t dim = n.dimension();
  std::vector<std::size_t> counts(split.simple_count(), 0);
  if (dim == 0) return counts;
  std::vector<Matrix<Cyclo>> rad_actions;
  for (const auto& j : split.radical_basis()) rad_actions.push_back(n.act(j));
  std::vector<Matrix<Cyclo>> block_actions;
  for (const auto& c : split.idempotents().block_sums) block_actions.push_back(n.act(c));

  std::vector<CVec> layer;  // basis of the current N_s
  for (std::size_t i = 0; i < dim; ++i) {
    CVec e(dim);
    e[i] = Cyclo(1);
    layer.push_back(std::move(e));
  }
  while (!layer.empty()) {
    std::vector<CVec> next;
    EchelonBasis<Cyclo> next_span(dim);
    for (const auto& j : rad_actions) {
      for (const auto& v : layer) {
        CVec w = j * v;
        if (next_span.insert(w)) next.push_back(std::move(w));
      }
    }
    if (next.size() == layer.size()) throw InternalError("radical filtration does not descend");
    for (std::size_t b = 0; b < block_actions.size(); ++b) {
      EchelonBasis<Cyclo> span = next_span;
      for (const auto& v : layer) span.insert(block_actions[b] * v);
      const std::size_t layer_dim = span.size() - next_span.size();
      const std::size_t sd = split.simple(b).dimension();
      if (layer_dim % sd != 0) throw InternalError("semisimple layer has fractional multiplicity");
      counts[b] += layer_dim / sd;
    }
    layer = std::move(next);
  }
  return counts;
}

template <class T>
Matrix<T> combine(const std::vector<Matrix<T>>& basis, const Vec<T>& x) {
  Matrix<T> m(basis.at(0).rows(), basis.at(0).cols());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!x[i].is_zero()) m += basis[i] * x[i];
  }
  return m;
}

template <class T>
MatrixAlgebra<T> matrix_algebra(std::vector<Matrix<T>> basis, int cyclotomic_order, ScalarRing ring) {
  const std::size_t m = basis.size();
  if (m == 0) throw InternalError("empty matrix algebra");
  const std::size_t rows = basis[0].rows();
  const std::size_t cols = basis[0].cols();
  auto flatten = [&](const Matrix<T>& x) {
    Vec<T> v;
    v.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) v.push_back(x(r, c));
    }
    return v;
  };
  std::vector<Vec<T>> flat;
  for (const auto& x : basis) flat.push_back(flatten(x));
  Matrix<T> a = Matrix<T>::from_columns(flat);

  // Put the identity at index 0, replacing a basis element it involves.
  const auto id = solve(a, flatten(Matrix<T>::identity(rows)));
  if (!id) throw InternalError("matrix algebra does not contain the identity");
  std::size_t swap_with = 0;
  while ((*id)[swap_with].is_zero()) ++swap_with;
  basis.erase(basis.begin() + swap_with);
  basis.insert(basis.begin(), Matrix<T>::identity(rows));
  flat.clear();
  for (const auto& x : basis) flat.push_back(flatten(x));
  a = Matrix<T>::from_columns(flat);

  // Solve on a set of independent rows.
  const auto pivot_rows = independent_columns(a.transpose());
  if (pivot_rows.size() != m) throw InternalError("matrix algebra basis is dependent");
  Matrix<T> square(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) square(i, j) = a(pivot_rows[i], j);
  }
  const Matrix<T> inv = inverse(square);
  std::vector<Vec<T>> products;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Matrix<T> p = basis[i] * basis[j];
      Vec<T> picked(m);
      for (std::size_t k = 0; k < m; ++k) picked[k] = p(pivot_rows[k] / cols, pivot_rows[k] % cols);
      Vec<T> coords = inv * picked;
      if (combine(basis, coords) != p) throw InternalError("matrix span is not closed under products");
      products.push_back(std::move(coords));
    }
  }
  auto alg = std::make_shared<const Algebra<T>>(ring, cyclotomic_order, std::move(products), 0);
  return {std::move(alg), std::move(basis)};
}

template <class T>
MatrixAlgebra<T> endomorphism_algebra(const Representation<T>& m) {
  if (m.dimension() == 0) throw InputError("endomorphism algebra of the zero module");
  const ScalarRing ring = std::is_same_v<T, Cyclo> ? ScalarRing::k : ScalarRing::K;
  return matrix_algebra(hom_space(m, m), m.algebra().cyclotomic_order(), ring);
}

bool is_local_endoring(const Representation<Cyclo>& m) {
  const auto end = endomorphism_algebra(m);
  const std::size_t d = end.algebra->dimension();
  if (radical(*end.algebra).size() + 1 == d) return true;
  return primitive_idempotents(*end.algebra).idempotents.size() == 1;
}

template std::vector<Vec<Cyclo>> radical(const Algebra<Cyclo>&);
template std::vector<Vec<RatFunc>> radical(const Algebra<RatFunc>&);
template Poly minimal_polynomial(const Algebra<Cyclo>&, const Vec<Cyclo>&, const Vec<Cyclo>&);
template std::vector<Matrix<Cyclo>> hom_space(const Representation<Cyclo>&, const Representation<Cyclo>&);
template std::vector<Matrix<RatFunc>> hom_space(const Representation<RatFunc>&, const Representation<RatFunc>&);
template MatrixAlgebra<Cyclo> matrix_algebra(std::vector<Matrix<Cyclo>>, int, ScalarRing);
template MatrixAlgebra<RatFunc> matrix_algebra(std::vector<Matrix<RatFunc>>, int, ScalarRing);
template MatrixAlgebra<Cyclo> endomorphism_algebra(const Representation<Cyclo>&);
template MatrixAlgebra<RatFunc> endomorphism_algebra(const Representation<RatFunc>&);
template Matrix<Cyclo> combine(const std::vector<Matrix<Cyclo>>&, const Vec<Cyclo>&);
template Matrix<RatFunc> combine(const std::vector<Matrix<RatFunc>>&, const Vec<RatFunc>&);

}  // namespace cdelab
