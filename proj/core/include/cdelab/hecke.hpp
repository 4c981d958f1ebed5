#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cdelab/algebra.hpp"

namespace cdelab {

enum class HeckeType { A1, A2 };

HeckeType parse_hecke_type(const std::string& name);
std::string to_string(HeckeType type);

struct HeckeSpec {
  HeckeType type = HeckeType::A2;
  RatFunc q;
  int cyclotomic_order = 1;
};

// Iwahori-Hecke algebra over R with relations (s - q)(s + 1) = 0 and, for
// A2, the braid relation sts = tst. Basis orders: A1 {1, s}; A2 {1, s, t,
// st, ts, sts}. Throws NonIntegralError if q is not R-integral.
std::shared_ptr<const Algebra<RatFunc>> hecke_algebra(const HeckeSpec& spec);

// The split K-simples of the generic fiber: A1 [s -> q, s -> -1];
// A2 [sign (s,t -> -1), index (s,t -> q), the 2-dimensional reflection
// module]. Throws DegenerateParameterError when q makes the algebra over K
// non-semisimple.
std::vector<Representation<RatFunc>> hecke_k_simples(const HeckeSpec& spec,
                                                     std::shared_ptr<const Algebra<RatFunc>> algebra_over_k_field);

// Basis permutation induced by the diagram automorphism s <-> t of A2.
std::vector<std::size_t> dynkin_permutation();

// True if the basis permutation p is an algebra automorphism.
template <class T>
bool is_basis_automorphism(const Algebra<T>& algebra, const std::vector<std::size_t>& p);

}  // namespace cdelab
