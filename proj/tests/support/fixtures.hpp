#pragma once

#include <memory>
#include <string>

#include "cdelab/hecke.hpp"
#include "cdelab/parse.hpp"
#include "cdelab/structure.hpp"

namespace cdelab::testing {

inline HeckeSpec hecke_spec(HeckeType type, const std::string& q, int order) {
  return HeckeSpec{type, parse_scalar(q, order), order};
}

inline std::shared_ptr<const Algebra<Cyclo>> hecke_over_k(HeckeType type, const std::string& q, int order) {
  return reduce_to_k(*hecke_algebra(hecke_spec(type, q, order)));
}

// Algebra over k from a multiplication rule on basis indices.
template <class F>
std::shared_ptr<const Algebra<Cyclo>> algebra_from_rule(std::size_t d, int order, F rule) {
  std::vector<Vec<Cyclo>> products;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) products.push_back(rule(i, j));
  }
  return std::make_shared<const Algebra<Cyclo>>(ScalarRing::k, order, std::move(products), 0);
}

// k x k with basis 1, p where p = (1, 0).
inline std::shared_ptr<const Algebra<Cyclo>> product_kk() {
  return algebra_from_rule(2, 1, [](std::size_t i, std::size_t j) {
    Vec<Cyclo> v(2);
    if (i == 0 && j == 0) v[0] = 1;
    else v[1] = 1;
    return v;
  });
}

// Quadratic extension k[x]/(x^2 - c).
inline std::shared_ptr<const Algebra<Cyclo>> quadratic(int order, long c) {
  return algebra_from_rule(2, order, [c](std::size_t i, std::size_t j) {
    Vec<Cyclo> v(2);
    if (i + j == 0) v[0] = 1;
    else if (i + j == 1) v[1] = 1;
    else v[0] = Cyclo(c);
    return v;
  });
}

// Rational quaternions with basis 1, i, j, k.
inline std::shared_ptr<const Algebra<Cyclo>> quaternions(int order) {
  // sign and index of e_a e_b
  static const int table[4][4][2] = {{{1, 0}, {1, 1}, {1, 2}, {1, 3}},
                                     {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
                                     {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
                                     {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}};
  return algebra_from_rule(4, order, [](std::size_t i, std::size_t j) {
    Vec<Cyclo> v(4);
    v[table[i][j][1]] = Cyclo(table[i][j][0]);
    return v;
  });
}

}  // namespace cdelab::testing
