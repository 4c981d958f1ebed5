#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "cdelab/algebra.hpp"
#include "cdelab/structure.hpp"

namespace cdelab {

using IntMatrix = std::vector<std::vector<long>>;

std::string to_string(const IntMatrix& m);
IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

struct SimpleDescriptor {
  std::size_t dimension = 0;
  std::string label;
  // Dimension of the projective cover (k-simples only).
  std::size_t projective_dimension = 0;
};

struct Audit {
  std::string name;
  bool passed = false;
  std::string lhs;
  std::string rhs;
  bool operator==(const Audit&) const = default;
};

struct CdeReport {
  std::vector<SimpleDescriptor> K_simples;
  std::vector<SimpleDescriptor> k_simples;
  // k_order[i] is the index in SplitAlgebra order of the i-th k-simple.
  std::vector<std::size_t> k_order;
  IntMatrix D;  // k-simples x K-simples
  IntMatrix C;  // k-simples x k-simples
  IntMatrix E;  // K-simples x k-simples
  std::vector<Audit> audits;
  bool passed() const;
};

// Checks that the K-simples are absolutely irreducible, pairwise
// non-isomorphic and exhaust the algebra (sum of squared dimensions).
// Throws IncompleteSimplesError otherwise.
void check_k_simples(const Algebra<RatFunc>& algebra_over_K, const std::vector<Representation<RatFunc>>& simples);

// D in SplitAlgebra order: D[i][j] = [reduction of a lattice in M_j : simple i].
IntMatrix decomposition_matrix(std::shared_ptr<const Algebra<RatFunc>> algebra_over_r,
                               const std::vector<Representation<RatFunc>>& k_field_simples,
                               const SplitAlgebra& split);

// C[i][j] = dim Hom(P_i, P_j) in SplitAlgebra order.
IntMatrix cartan_matrix(const SplitAlgebra& split);

// k-simples ordered by first appearance in the reductions of the K-simples
// taken in order; simples first appearing together keep SplitAlgebra order.
std::vector<std::size_t> first_appearance_order(const IntMatrix& d);

// D, C, E := D^t and the three audits. Does not throw on audit failure.
CdeReport cde_report(std::shared_ptr<const Algebra<RatFunc>> algebra_over_r,
                     const std::vector<Representation<RatFunc>>& k_field_simples);

// As cde_report, throwing AuditFailure naming the first failed identity.
CdeReport cde_verify(std::shared_ptr<const Algebra<RatFunc>> algebra_over_r,
                     const std::vector<Representation<RatFunc>>& k_field_simples);

}  // namespace cdelab
