#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "cdelab/algebra.hpp"
#include "cdelab/series.hpp"

namespace cdelab {

// Echelon R-basis of the R-span of vectors over K. Columns are processed from
// the left; the pivot is an entry of minimal valuation (lowest row on ties)
// and is normalized to a power of t.
std::vector<Vec<RatFunc>> dvr_basis(const std::vector<Vec<RatFunc>>& vectors, std::size_t ambient);

// Membership of v in the R-span of an echelon basis from dvr_basis.
bool dvr_contains(const std::vector<Vec<RatFunc>>& basis, Vec<RatFunc> v);

// R-basis of (K-span of vectors) intersected with R^n.
std::vector<Vec<RatFunc>> saturate(const std::vector<Vec<RatFunc>>& vectors, std::size_t ambient);

// An R-form of a K-representation: basis columns B and the R-integral
// action matrices B^-1 rho(e_i) B, packaged as a representation of the
// algebra over R.
class Lattice {
 public:
  Lattice(const Representation<RatFunc>& ambient, Matrix<RatFunc> basis,
          std::shared_ptr<const Algebra<RatFunc>> algebra_over_r);

  const Matrix<RatFunc>& basis() const { return basis_; }
  const Representation<RatFunc>& module() const { return module_; }
  std::size_t rank() const { return basis_.cols(); }

 private:
  Matrix<RatFunc> basis_;
  Representation<RatFunc> module_;
};

// R-span of the seeds closed under every basis element of the R-algebra.
// Throws SeedsDoNotSpanError if the result has rank below dim M.
Lattice spin_lattice(const Representation<RatFunc>& m, const std::vector<Vec<RatFunc>>& seeds,
                     std::shared_ptr<const Algebra<RatFunc>> algebra_over_r);

// Standard basis seeds.
Lattice spin_lattice(const Representation<RatFunc>& m, std::shared_ptr<const Algebra<RatFunc>> algebra_over_r);

// The regular lattice: the algebra over R as a module over itself.
Lattice regular_lattice(std::shared_ptr<const Algebra<RatFunc>> algebra_over_r);

// Action matrices reduced at t = 0.
Representation<Cyclo> reduce_lattice(const Lattice& lattice, std::shared_ptr<const Algebra<Cyclo>> reduced_algebra);

// R-basis of intertwiners whose matrices in the two lattice bases are R-integral.
std::vector<Matrix<RatFunc>> hom_lattice(const Lattice& p, const Lattice& m);

struct IdempotentLift {
  int precision = 0;
  // Coordinates of e_N in k[t]/t^N.
  std::vector<TruncatedSeries> coordinates;
  // Valuation of each coordinate of e_N^2 - e_N computed exactly in the algebra over R.
  std::vector<int> defect_valuations;
  bool certified = false;
};

// Newton iteration e <- 3e^2 - 2e^3 with precision doubling, starting from an
// idempotent of the reduced algebra. Throws NotIdempotentError if e^2 != e.
IdempotentLift lift_idempotent_trunc(const Vec<Cyclo>& idempotent, const Algebra<RatFunc>& algebra_over_r,
                                     int precision);

}  // namespace cdelab
