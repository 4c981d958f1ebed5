#include "cdelab/hecke.hpp"

#include "cdelab/errors.hpp"

namespace cdelab {
namespace {

using RMat = Matrix<RatFunc>;

std::vector<Vec<RatFunc>> products_from_left(const std::vector<RMat>& left) {
  const std::size_t d = left.size();
  std::vector<Vec<RatFunc>> products;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) products.push_back(left[i].column(j));
  }
  return products;
}

}  // namespace

HeckeType parse_hecke_type(const std::string& name) {
  if (name == "A1") return HeckeType::A1;
  if (name == "A2") return HeckeType::A2;
  throw InputError("unknown Hecke type '" + name + "' (expected A1 or A2)");
}

std::string to_string(HeckeType type) { return type == HeckeType::A1 ? "A1" : "A2"; }

std::shared_ptr<const Algebra<RatFunc>> hecke_algebra(const HeckeSpec& spec) {
  const RatFunc& q = spec.q;
  if (!q.is_integral()) throw NonIntegralError("Hecke parameter q = " + q.to_string() + " is not R-integral");
  const RatFunc qm1 = q - RatFunc(1);
  if (spec.type == HeckeType::A1) {
    RMat ls(2, 2);
    ls(1, 0) = RatFunc(1);
    ls(0, 1) = q;
    ls(1, 1) = qm1;
    return std::make_shared<const Algebra<RatFunc>>(ScalarRing::R, spec.cyclotomic_order,
                                                    products_from_left({RMat::identity(2), ls}), 0,
                                                    std::vector<std::string>{"1", "s"});
  }
  // Basis 0:1 1:s 2:t 3:st 4:ts 5:sts; column j of L_x is x * b_j.
  RMat ls(6, 6), lt(6, 6);
  ls(1, 0) = RatFunc(1);
  ls(0, 1) = q;
  ls(1, 1) = qm1;
  ls(3, 2) = RatFunc(1);
  ls(2, 3) = q;
  ls(3, 3) = qm1;
  ls(5, 4) = RatFunc(1);
  ls(4, 5) = q;
  ls(5, 5) = qm1;

  lt(2, 0) = RatFunc(1);
  lt(4, 1) = RatFunc(1);
  lt(0, 2) = q;
  lt(2, 2) = qm1;
  lt(5, 3) = RatFunc(1);
  lt(1, 4) = q;
  lt(4, 4) = qm1;
  lt(3, 5) = q;
  lt(5, 5) = qm1;

  const std::vector<RMat> left{RMat::identity(6), ls, lt, ls * lt, lt * ls, ls * lt * ls};
  return std::make_shared<const Algebra<RatFunc>>(ScalarRing::R, spec.cyclotomic_order, products_from_left(left), 0,
                                                  std::vector<std::string>{"1", "s", "t", "st", "ts", "sts"});
}

std::vector<Representation<RatFunc>> hecke_k_simples(const HeckeSpec& spec,
                                                     std::shared_ptr<const Algebra<RatFunc>> algebra) {
  const RatFunc& q = spec.q;
  const RatFunc one(1);
  if (q == -one) throw DegenerateParameterError("q = -1: the Hecke algebra over K is not semisimple");
  auto scalar = [](const RatFunc& x) {
    RMat m(1, 1);
    m(0, 0) = x;
    return m;
  };
  std::vector<Representation<RatFunc>> out;
  if (spec.type == HeckeType::A1) {
    out.emplace_back(algebra, std::vector<RMat>{scalar(one), scalar(q)}, ModuleKind::simple, "index");
    out.emplace_back(algebra, std::vector<RMat>{scalar(one), scalar(-one)}, ModuleKind::simple, "sign");
    return out;
  }
  if (q.is_zero()) throw DegenerateParameterError("q = 0: the Hecke algebra over K is not semisimple");
  if ((q * q + q + one).is_zero()) {
    throw DegenerateParameterError("q is a primitive cube root of unity: the Hecke algebra over K is not semisimple");
  }
  auto one_dim = [&](const RatFunc& x, const std::string& label) {
    const RMat s = scalar(x);
    return Representation<RatFunc>(algebra, {scalar(one), s, s, s * s, s * s, s * s * s}, ModuleKind::simple, label);
  };
  out.push_back(one_dim(-one, "sign"));
  out.push_back(one_dim(q, "index"));
  RMat s(2, 2), t(2, 2);
  s(0, 0) = -one;
  s(1, 0) = q;
  s(1, 1) = q;
  t(0, 0) = q;
  t(0, 1) = one;
  t(1, 1) = -one;
  out.emplace_back(algebra, std::vector<RMat>{RMat::identity(2), s, t, s * t, t * s, s * t * s}, ModuleKind::simple,
                   "reflection");
  return out;
}

std::vector<std::size_t> dynkin_permutation() { return {0, 2, 1, 4, 3, 5}; }

template <class T>
bool is_basis_automorphism(const Algebra<T>& algebra, const std::vector<std::size_t>& p) {
  const std::size_t d = algebra.dimension();
  if (p.size() != d || p[algebra.unit_index()] != algebra.unit_index()) return false;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        if (algebra.constant(p[i], p[j], p[k]) != algebra.constant(i, j, k)) return false;
      }
    }
  }
  return true;
}

template bool is_basis_automorphism(const Algebra<Cyclo>&, const std::vector<std::size_t>&);
template bool is_basis_automorphism(const Algebra<RatFunc>&, const std::vector<std::size_t>&);

}  // namespace cdelab
