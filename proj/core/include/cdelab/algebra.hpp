#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "cdelab/matrix.hpp"

namespace cdelab {

// Which ring of the tower k, R, K the scalars live in.
enum class ScalarRing { k, R, K };

std::string to_string(ScalarRing ring);

// Finite-dimensional associative unital algebra given by structure
// constants: e_i e_j = sum_k a_ij^k e_k. Algebra<Cyclo> is over k,
// Algebra<RatFunc> is over R or K depending on ring().
template <class T>
class Algebra {
 public:
  // products[i * d + j] holds the coordinate vector of e_i e_j.
  Algebra(ScalarRing ring, int cyclotomic_order, std::vector<Vec<T>> products, std::size_t unit = 0,
          std::vector<std::string> labels = {});

  // Skips the unit and associativity checks. For algebras derived from a
  // validated one by a ring homomorphism on the constants.
  struct Unchecked {};
  Algebra(Unchecked, ScalarRing ring, int cyclotomic_order, std::vector<Vec<T>> products, std::size_t unit = 0,
          std::vector<std::string> labels = {});

  ScalarRing ring() const { return ring_; }
  int cyclotomic_order() const { return order_; }
  std::size_t dimension() const { return d_; }
  std::size_t unit_index() const { return unit_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const Vec<T>& product(std::size_t i, std::size_t j) const { return products_[i * d_ + j]; }
  const T& constant(std::size_t i, std::size_t j, std::size_t k) const { return products_[i * d_ + j][k]; }
  // Left multiplication by e_i: L_i(k, j) = a_ij^k.
  const Matrix<T>& left(std::size_t i) const { return left_[i]; }
  Matrix<T> left_multiplication(const Vec<T>& x) const;
  Vec<T> multiply(const Vec<T>& x, const Vec<T>& y) const;
  Vec<T> basis_vector(std::size_t i) const;
  Vec<T> unit_vector() const { return basis_vector(unit_); }
  // Basis indices generating the algebra, chosen greedily in index order.
  const std::vector<std::size_t>& generators() const { return generators_; }

 private:
  void validate() const;
  void compute_generators();

  ScalarRing ring_;
  int order_;
  std::size_t d_;
  std::size_t unit_;
  std::vector<std::string> labels_;
  std::vector<Vec<T>> products_;
  std::vector<Matrix<T>> left_;
  std::vector<std::size_t> generators_;
};

enum class ModuleKind { unmarked, simple, projective_indecomposable };

// Left module given by one action matrix per algebra basis element, acting
// on column vectors.
template <class T>
class Representation {
 public:
  Representation(std::shared_ptr<const Algebra<T>> algebra, std::vector<Matrix<T>> actions,
                  ModuleKind kind = ModuleKind::unmarked, std::string label = {});

  const Algebra<T>& algebra() const { return *algebra_; }
  std::shared_ptr<const Algebra<T>> algebra_ptr() const { return algebra_; }
  std::size_t dimension() const { return dim_; }
  const Matrix<T>& action(std::size_t i) const { return actions_[i]; }
  const std::vector<Matrix<T>>& actions() const { return actions_; }
  Matrix<T> act(const Vec<T>& x) const;
  ModuleKind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  Representation with_kind(ModuleKind kind, std::string label = {}) const;

 private:
  std::shared_ptr<const Algebra<T>> algebra_;
  std::size_t dim_;
  std::vector<Matrix<T>> actions_;
  ModuleKind kind_;
  std::string label_;
};

template <class T>
Representation<T> regular_module(std::shared_ptr<const Algebra<T>> algebra);

// Same structure constants over K.
std::shared_ptr<const Algebra<RatFunc>> extend_to_K(const Algebra<RatFunc>& algebra);
// Structure constants reduced at t = 0.
std::shared_ptr<const Algebra<Cyclo>> reduce_to_k(const Algebra<RatFunc>& algebra);

// Subrepresentation on the invariant subspace spanned by the columns of
// basis (which must be linearly independent).
template <class T>
Representation<T> subrepresentation(const Representation<T>& m, const Matrix<T>& basis,
                                    ModuleKind kind = ModuleKind::unmarked);
// Quotient by the invariant subspace spanned by the columns of basis.
template <class T>
Representation<T> quotient_representation(const Representation<T>& m, const Matrix<T>& basis,
                                           ModuleKind kind = ModuleKind::unmarked);

template <class T>
Representation<T> direct_sum(const Representation<T>& a, const Representation<T>& b);

// Definitions live in algebra.cpp, instantiated for Cyclo and RatFunc.
extern template class Algebra<Cyclo>;
extern template class Algebra<RatFunc>;
extern template class Representation<Cyclo>;
extern template class Representation<RatFunc>;

}  // namespace cdelab
