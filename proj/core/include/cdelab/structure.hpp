#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "cdelab/algebra.hpp"

namespace cdelab {

// Jacobson radical in characteristic 0: the kernel of the trace form
// (x, y) -> tr(L_{xy}).
template <class T>
std::vector<Vec<T>> radical(const Algebra<T>& algebra);

// Minimal polynomial of x in the corner algebra with identity e (x in eAe).
template <class T>
Poly minimal_polynomial(const Algebra<T>& algebra, const Vec<T>& x, const Vec<T>& e);

// Complete set of orthogonal primitive idempotents of an algebra over k.
struct IdempotentSet {
  std::vector<Vec<Cyclo>> idempotents;
  // Simple-module index of each idempotent.
  std::vector<std::size_t> simple_of;
  // Per simple: position of the first idempotent belonging to it.
  std::vector<std::size_t> representative;
  // Per simple: sum of its idempotents (a lift of the central block idempotent).
  std::vector<Vec<Cyclo>> block_sums;
  std::size_t simple_count() const { return representative.size(); }
};

// Everything the split theory needs about an algebra over k. Simples are
// ordered lexicographically by their trace vectors (tr rho(e_1), ...).
class SplitAlgebra {
 public:
  explicit SplitAlgebra(std::shared_ptr<const Algebra<Cyclo>> algebra);

  const Algebra<Cyclo>& algebra() const { return *algebra_; }
  std::shared_ptr<const Algebra<Cyclo>> algebra_ptr() const { return algebra_; }
  const std::vector<Vec<Cyclo>>& radical_basis() const { return radical_; }
  const IdempotentSet& idempotents() const { return idempotents_; }
  std::size_t simple_count() const { return simples_.size(); }
  const Representation<Cyclo>& simple(std::size_t i) const { return simples_[i]; }
  const Representation<Cyclo>& projective(std::size_t i) const { return projectives_[i]; }
  const std::vector<Representation<Cyclo>>& simples() const { return simples_; }
  const std::vector<Representation<Cyclo>>& projectives() const { return projectives_; }

 private:
  std::shared_ptr<const Algebra<Cyclo>> algebra_;
  std::vector<Vec<Cyclo>> radical_;
  IdempotentSet idempotents_;
  std::vector<Representation<Cyclo>> simples_;
  std::vector<Representation<Cyclo>> projectives_;
};

// Throws NonSplitError when the semisimple quotient is not split over k.
IdempotentSet primitive_idempotents(const Algebra<Cyclo>& algebra);

// P = A e_i, one per simple class, marked projective-indecomposable.
std::vector<Representation<Cyclo>> indecomposable_projectives(std::shared_ptr<const Algebra<Cyclo>> algebra);

// P / JP, marked simple.
Representation<Cyclo> top(const Representation<Cyclo>& projective);

// Basis of the intertwiners f with f rho_M(a) = rho_N(a) f, as dim N x dim M matrices.
template <class T>
std::vector<Matrix<T>> hom_space(const Representation<T>& m, const Representation<T>& n);

// [N : simple i] = dim Hom(P_i, N) = rank rho_N(e_i).
std::size_t jh_multiplicity(const SplitAlgebra& split, const Representation<Cyclo>& n, std::size_t i);

// Multiplicity of every simple, from the radical filtration N > JN > J^2 N > ...
// with layers split by the block idempotents.
std::vector<std::size_t> composition_series_oracle(const SplitAlgebra& split, const Representation<Cyclo>& n);

// End(M) has no idempotents besides 0 and 1.
bool is_local_endoring(const Representation<Cyclo>& m);

template <class T>
struct MatrixAlgebra {
  std::shared_ptr<const Algebra<T>> algebra;
  // basis[i] is the matrix of the i-th algebra basis element; basis[0] = 1.
  std::vector<Matrix<T>> basis;
};

// Algebra structure on the span of matrices closed under products and
// containing the identity; the identity becomes basis element 0.
template <class T>
MatrixAlgebra<T> matrix_algebra(std::vector<Matrix<T>> basis, int cyclotomic_order, ScalarRing ring);

template <class T>
MatrixAlgebra<T> endomorphism_algebra(const Representation<T>& m);

// Matrix of sum_i x_i basis[i].
template <class T>
Matrix<T> combine(const std::vector<Matrix<T>>& basis, const Vec<T>& x);

}  // namespace cdelab
