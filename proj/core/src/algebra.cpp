#include "cdelab/algebra.hpp"

#include <type_traits>
#include <utility>

#include "cdelab/errors.hpp"

namespace cdelab {

std::string to_string(ScalarRing ring) {
  switch (ring) {
    case ScalarRing::k:
      return "k";
    case ScalarRing::R:
      return "R";
    case ScalarRing::K:
      return "K";
  }
  return "?";
}

template <class T>
Algebra<T>::Algebra(ScalarRing ring, int cyclotomic_order, std::vector<Vec<T>> products, std::size_t unit,
                    std::vector<std::string> labels)
    : Algebra(Unchecked{}, ring, cyclotomic_order, std::move(products), unit, std::move(labels)) {
  validate();
}

template <class T>
Algebra<T>::Algebra(Unchecked, ScalarRing ring, int cyclotomic_order, std::vector<Vec<T>> products, std::size_t unit,
                    std::vector<std::string> labels)
    : ring_(ring), order_(cyclotomic_order), unit_(unit), labels_(std::move(labels)), products_(std::move(products)) {
  require_supported_order(order_);
  std::size_t d = 0;
  while (d * d < products_.size()) ++d;
  if (d == 0 || d * d != products_.size()) throw InputError("structure constants must form a d x d x d array");
  d_ = d;
  for (const auto& p : products_) {
    if (p.size() != d_) throw InputError("structure constants must form a d x d x d array");
  }
  if (unit_ >= d_) throw InputError("unit index out of range");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < d_; ++i) labels_.push_back("e" + std::to_string(i + 1));
  }
  if (labels_.size() != d_) throw InputError("number of labels must equal the dimension");
  if constexpr (std::is_same_v<T, Cyclo>) {
    if (ring_ != ScalarRing::k) throw InternalError("Algebra<Cyclo> must be over k");
  } else {
    if (ring_ == ScalarRing::k) throw InternalError("Algebra<RatFunc> must be over R or K");
    if (ring_ == ScalarRing::R) {
      for (std::size_t i = 0; i < d_; ++i) {
        for (std::size_t j = 0; j < d_; ++j) {
          for (std::size_t k = 0; k < d_; ++k) {
            if (!products_[i * d_ + j][k].is_integral()) {
              throw NonIntegralError("structure constant a_{" + std::to_string(i + 1) + std::to_string(j + 1) +
                                     "}^" + std::to_string(k + 1) + " = " + products_[i * d_ + j][k].to_string() +
                                     " is not R-integral");
            }
          }
        }
      }
    }
  }
  left_.assign(d_, Matrix<T>(d_, d_));
  for (std::size_t i = 0; i < d_; ++i) {
    for (std::size_t j = 0; j < d_; ++j) {
      for (std::size_t k = 0; k < d_; ++k) left_[i](k, j) = products_[i * d_ + j][k];
    }
  }
  compute_generators();
}

namespace {

template <class S>
void check_associativity(const std::vector<Vec<S>>& products, std::size_t d) {
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Vec<S>& ij = products[i * d + j];
      for (std::size_t k = 0; k < d; ++k) {
        const Vec<S>& jk = products[j * d + k];
        Vec<S> lhs(d, S(0)), rhs(d, S(0));
        for (std::size_t m = 0; m < d; ++m) {
          if (!ij[m].is_zero()) {
            const Vec<S>& mk = products[m * d + k];
            for (std::size_t l = 0; l < d; ++l) {
              if (!mk[l].is_zero()) lhs[l] = lhs[l] + ij[m] * mk[l];
            }
          }
          if (!jk[m].is_zero()) {
            const Vec<S>& im = products[i * d + m];
            for (std::size_t l = 0; l < d; ++l) {
              if (!im[l].is_zero()) rhs[l] = rhs[l] + jk[m] * im[l];
            }
          }
        }
        for (std::size_t l = 0; l < d; ++l) {
          if (!(lhs[l] == rhs[l])) throw AssociativityError(i, j, k, l);
        }
      }
    }
  }
}

}  // namespace

template <class T>
void Algebra<T>::validate() const {
  for (std::size_t j = 0; j < d_; ++j) {
    for (std::size_t k = 0; k < d_; ++k) {
      const bool delta = j == k;
      const T& a = products_[unit_ * d_ + j][k];
      const T& b = products_[j * d_ + unit_][k];
      if ((delta ? !a.is_one() : !a.is_zero()) || (delta ? !b.is_one() : !b.is_zero())) {
        throw UnitLawError("unit law fails for basis element " + std::to_string(j + 1));
      }
    }
  }
  // (e_i e_j) e_k = e_i (e_j e_k), compared coefficient by coefficient.
  if constexpr (std::is_same_v<T, RatFunc>) {
    // Cleared denominators: both sides scale by the same square.
    Poly common(1);
    for (const auto& v : products_) {
      for (const auto& x : v) {
        const Poly& den = x.denominator();
        common = Poly::exact_quotient(common * den, Poly::gcd(common, den));
      }
    }
    std::vector<Vec<Poly>> table;
    for (const auto& v : products_) {
      Vec<Poly> w;
      for (const auto& x : v) w.push_back(x.numerator() * Poly::exact_quotient(common, x.denominator()));
      table.push_back(std::move(w));
    }
    check_associativity(table, d_);
  } else {
    check_associativity(products_, d_);
  }
}

template <class T>
void Algebra<T>::compute_generators() {
  EchelonBasis<T> span(d_);
  span.insert(unit_vector());
  std::vector<Vec<T>> members{unit_vector()};
  for (std::size_t g = 0; g < d_; ++g) {
    if (span.contains(basis_vector(g))) continue;
    generators_.push_back(g);
    // Close the span under left multiplication by all generators.
    std::vector<Vec<T>> frontier = members;
    while (!frontier.empty()) {
      std::vector<Vec<T>> next;
      for (const auto& v : frontier) {
        for (std::size_t h : generators_) {
          Vec<T> w = left_[h] * v;
          if (span.insert(w)) {
            members.push_back(w);
            next.push_back(std::move(w));
          }
        }
      }
      frontier = std::move(next);
    }
  }
}

template <class T>
Matrix<T> Algebra<T>::left_multiplication(const Vec<T>& x) const {
  Matrix<T> m(d_, d_);
  for (std::size_t i = 0; i < d_; ++i) {
    if (!x[i].is_zero()) m += left_[i] * x[i];
  }
  return m;
}

template <class T>
Vec<T> Algebra<T>::multiply(const Vec<T>& x, const Vec<T>& y) const {
  Vec<T> r(d_);
  for (std::size_t i = 0; i < d_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d_; ++j) {
      if (y[j].is_zero()) continue;
      const T c = x[i] * y[j];
      const Vec<T>& p = products_[i * d_ + j];
      for (std::size_t k = 0; k < d_; ++k) {
        if (!p[k].is_zero()) r[k] += c * p[k];
      }
    }
  }
  return r;
}

template <class T>
Vec<T> Algebra<T>::basis_vector(std::size_t i) const {
  Vec<T> v(d_);
  v[i] = T(1);
  return v;
}

template <class T>
Representation<T>::Representation(std::shared_ptr<const Algebra<T>> algebra, std::vector<Matrix<T>> actions,
                                   ModuleKind kind, std::string label)
    : algebra_(std::move(algebra)), actions_(std::move(actions)), kind_(kind), label_(std::move(label)) {
  const auto& a = *algebra_;
  const std::size_t n = a.dimension();
  if (actions_.size() != n) throw RepresentationError("need one action matrix per algebra basis element");
  dim_ = actions_[0].rows();
  for (const auto& m : actions_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw RepresentationError("action matrices must be square of equal size");
  }
  if (!actions_[a.unit_index()].is_identity()) throw RepresentationError("unit must act as the identity");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix<T> rhs(dim_, dim_);
      const Vec<T>& p = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (!p[k].is_zero()) rhs += actions_[k] * p[k];
      }
      if (actions_[i] * actions_[j] != rhs) {
        throw RepresentationError("action does not respect e_" + std::to_string(i + 1) + " e_" +
                                  std::to_string(j + 1));
      }
    }
  }
}

template <class T>
Matrix<T> Representation<T>::act(const Vec<T>& x) const {
  Matrix<T> m(dim_, dim_);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) m += actions_[i] * x[i];
  }
  return m;
}

template <class T>
Representation<T> Representation<T>::with_kind(ModuleKind kind, std::string label) const {
  Representation r = *this;
  r.kind_ = kind;
  if (!label.empty()) r.label_ = std::move(label);
  return r;
}

template <class T>
Representation<T> regular_module(std::shared_ptr<const Algebra<T>> algebra) {
  std::vector<Matrix<T>> actions;
  for (std::size_t i = 0; i < algebra->dimension(); ++i) actions.push_back(algebra->left(i));
  return Representation<T>(std::move(algebra), std::move(actions), ModuleKind::unmarked, "regular");
}

namespace {

std::vector<Vec<RatFunc>> products_of(const Algebra<RatFunc>& a) {
  std::vector<Vec<RatFunc>> p;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = 0; j < a.dimension(); ++j) p.push_back(a.product(i, j));
  }
  return p;
}

}  // namespace

std::shared_ptr<const Algebra<RatFunc>> extend_to_K(const Algebra<RatFunc>& algebra) {
  return std::shared_ptr<const Algebra<RatFunc>>(new Algebra<RatFunc>(
      Algebra<RatFunc>::Unchecked{}, ScalarRing::K, algebra.cyclotomic_order(), products_of(algebra),
      algebra.unit_index(), algebra.labels()));
}

std::shared_ptr<const Algebra<Cyclo>> reduce_to_k(const Algebra<RatFunc>& algebra) {
  if (algebra.ring() != ScalarRing::R) throw InternalError("reduction at t = 0 needs an algebra over R");
  std::vector<Vec<Cyclo>> p;
  for (const auto& v : products_of(algebra)) {
    Vec<Cyclo> w;
    for (const auto& x : v) w.push_back(x.reduce_at_zero());
    p.push_back(std::move(w));
  }
  return std::shared_ptr<const Algebra<Cyclo>>(new Algebra<Cyclo>(Algebra<Cyclo>::Unchecked{}, ScalarRing::k,
                                                                   algebra.cyclotomic_order(), std::move(p),
                                                                   algebra.unit_index(), algebra.labels()));
}

template <class T>
Representation<T> subrepresentation(const Representation<T>& m, const Matrix<T>& basis, ModuleKind kind) {
  const std::size_t r = basis.cols();
  if (r == 0) {
    std::vector<Matrix<T>> actions(m.algebra().dimension(), Matrix<T>(0, 0));
    return Representation<T>(m.algebra_ptr(), std::move(actions), kind);
  }
  // Restrict to a set of rows on which the basis is invertible.
  const auto rows = independent_columns(basis.transpose());
  if (rows.size() != r) throw InternalError("subrepresentation basis is not independent");
  Matrix<T> square(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) square(i, j) = basis(rows[i], j);
  }
  const Matrix<T> inv = inverse(square);
  std::vector<Matrix<T>> actions;
  for (const auto& a : m.actions()) {
    const Matrix<T> image = a * basis;
    Matrix<T> picked(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) picked(i, j) = image(rows[i], j);
    }
    Matrix<T> x = inv * picked;
    if (basis * x != image) throw InternalError("subspace is not invariant");
    actions.push_back(std::move(x));
  }
  return Representation<T>(m.algebra_ptr(), std::move(actions), kind);
}

template <class T>
Representation<T> quotient_representation(const Representation<T>& m, const Matrix<T>& basis, ModuleKind kind) {
  const std::size_t n = m.dimension();
  // Complete the subspace basis by standard vectors.
  EchelonBasis<T> span(n);
  for (std::size_t j = 0; j < basis.cols(); ++j) span.insert(basis.column(j));
  std::vector<Vec<T>> complement;
  for (std::size_t i = 0; i < n; ++i) {
    Vec<T> e(n);
    e[i] = T(1);
    if (span.insert(e)) complement.push_back(std::move(e));
  }
  const std::size_t q = complement.size();
  Matrix<T> full = Matrix<T>::hstack(basis, Matrix<T>::from_columns(complement, n));
  const Matrix<T> inv = inverse(full);
  std::vector<Matrix<T>> actions;
  const Matrix<T> comp = Matrix<T>::from_columns(complement, n);
  for (const auto& a : m.actions()) {
    const Matrix<T> coords = inv * (a * comp);
    Matrix<T> x(q, q);
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = 0; j < q; ++j) x(i, j) = coords(basis.cols() + i, j);
    }
    actions.push_back(std::move(x));
  }
  return Representation<T>(m.algebra_ptr(), std::move(actions), kind);
}

template <class T>
Representation<T> direct_sum(const Representation<T>& a, const Representation<T>& b) {
  const std::size_t n = a.dimension() + b.dimension();
  std::vector<Matrix<T>> actions;
  for (std::size_t i = 0; i < a.algebra().dimension(); ++i) {
    Matrix<T> m(n, n);
    for (std::size_t r = 0; r < a.dimension(); ++r) {
      for (std::size_t c = 0; c < a.dimension(); ++c) m(r, c) = a.action(i)(r, c);
    }
    for (std::size_t r = 0; r < b.dimension(); ++r) {
      for (std::size_t c = 0; c < b.dimension(); ++c) m(a.dimension() + r, a.dimension() + c) = b.action(i)(r, c);
    }
    actions.push_back(std::move(m));
  }
  return Representation<T>(a.algebra_ptr(), std::move(actions));
}

template class Algebra<Cyclo>;
template class Algebra<RatFunc>;
template class Representation<Cyclo>;
template class Representation<RatFunc>;

#define CDELAB_INSTANTIATE(T)                                                                              \
  template Representation<T> regular_module(std::shared_ptr<const Algebra<T>>);                            \
  template Representation<T> subrepresentation(const Representation<T>&, const Matrix<T>&, ModuleKind);    \
  template Representation<T> quotient_representation(const Representation<T>&, const Matrix<T>&, ModuleKind); \
  template Representation<T> direct_sum(const Representation<T>&, const Representation<T>&);

CDELAB_INSTANTIATE(Cyclo)
CDELAB_INSTANTIATE(RatFunc)

}  // namespace cdelab
