#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdelab/algebra.hpp"
#include "cdelab/matrix.hpp"

namespace cdelab {

// Weights gamma - 2j for gamma in Gamma and 0 <= j <= depth, indexed by
// slots. With deform set, each gamma is gammabar + t.
class WeightWindow {
 public:
  // Throws CongruenceViolationError when two retained weights of different
  // chains are congruent mod t, or when two chains lie in the same coset of
  // 2Z (their untruncated weight sets would collide).
  WeightWindow(std::vector<Cyclo> gammas, bool deform, int depth);

  const std::vector<Cyclo>& gammas() const { return gammas_; }
  bool deformed() const { return deform_; }
  int depth() const { return depth_; }
  std::size_t chain_count() const { return gammas_.size(); }
  std::size_t slot_count() const { return gammas_.size() * static_cast<std::size_t>(depth_ + 1); }
  std::size_t slot(std::size_t chain, int j) const { return chain * static_cast<std::size_t>(depth_ + 1) + j; }
  std::size_t chain_of(std::size_t s) const { return s / static_cast<std::size_t>(depth_ + 1); }
  int depth_of(std::size_t s) const { return static_cast<int>(s % static_cast<std::size_t>(depth_ + 1)); }
  // Slot of weight + 2, resp. weight - 2.
  std::optional<std::size_t> up(std::size_t s) const;
  std::optional<std::size_t> down(std::size_t s) const;
  RatFunc weight(std::size_t s) const;
  Cyclo reduced_weight(std::size_t s) const;
  // Throws WeightOutsideWindowError.
  std::size_t find(const RatFunc& w) const;
  std::size_t find_reduced(const Cyclo& w) const;

 private:
  std::vector<Cyclo> gammas_;
  bool deform_;
  int depth_;
};

std::shared_ptr<const WeightWindow> validate_window(const std::vector<Cyclo>& gammas, bool deform, int depth);

// Basis data of P(lambda) = U(n-) (x) Q(lambda): per slot, the pairs (a, m)
// of the basis vectors f^a (x) e^m v in order.
struct ProjectiveInfo {
  std::size_t slot = 0;
  int top = 0;  // Q(lambda) has rank top + 1
  std::vector<std::vector<std::pair<int, int>>> basis;
};

// Weight-graded module: free of rank ranks[s] on slot s, e maps slot s to
// up(s), f maps s to down(s), h acts on slot s by its weight. Scalars are
// RatFunc over R or K and Cyclo over k.
template <class T>
class GradedModule {
 public:
  GradedModule(ScalarRing ring, std::shared_ptr<const WeightWindow> window, std::vector<std::size_t> ranks,
               std::vector<Matrix<T>> e, std::vector<Matrix<T>> f, std::string label = {});

  ScalarRing ring() const { return ring_; }
  const WeightWindow& window() const { return *window_; }
  std::shared_ptr<const WeightWindow> window_ptr() const { return window_; }
  std::size_t slot_count() const { return ranks_.size(); }
  std::size_t rank(std::size_t s) const { return ranks_[s]; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  std::size_t total_rank() const;
  const Matrix<T>& e(std::size_t s) const { return e_[s]; }
  const Matrix<T>& f(std::size_t s) const { return f_[s]; }
  T weight(std::size_t s) const;
  const std::string& label() const { return label_; }
  const std::optional<ProjectiveInfo>& projective() const { return projective_; }
  void set_projective(ProjectiveInfo info) { projective_ = std::move(info); }

 private:
  ScalarRing ring_;
  std::shared_ptr<const WeightWindow> window_;
  std::vector<std::size_t> ranks_;
  std::vector<Matrix<T>> e_, f_;
  std::string label_;
  std::optional<ProjectiveInfo> projective_;
};

// [e, f] = h on every slot above the bottom of the window. The relations
// with h hold by construction of the grading.
template <class T>
bool brackets_hold(const GradedModule<T>& m);

// Verma module Z(lambda) over R (RatFunc) or k (Cyclo), truncated at the window depth.
template <class T>
GradedModule<T> verma(std::shared_ptr<const WeightWindow> window, std::size_t slot);

// P(lambda): Q(lambda) spans the weights lambda + 2m still inside the window.
template <class T>
GradedModule<T> build_projective(std::shared_ptr<const WeightWindow> window, std::size_t slot);

// Slots of the successive Verma quotients of P(lambda), highest weight first.
std::vector<std::size_t> verma_filtration(const ProjectiveInfo& info);

GradedModule<RatFunc> extend_to_K(const GradedModule<RatFunc>& m);
GradedModule<Cyclo> reduce_mod_t(const GradedModule<RatFunc>& m);

// Graded intertwiners: one block per slot (rank N(s) x rank M(s)) commuting with e and f.
template <class T>
std::vector<std::vector<Matrix<T>>> graded_hom(const GradedModule<T>& m, const GradedModule<T>& n);

// R-basis of the intertwiners with R-integral blocks between modules over R.
std::vector<std::vector<Matrix<RatFunc>>> graded_hom_lattice(const GradedModule<RatFunc>& m,
                                                             const GradedModule<RatFunc>& n);

// Submodule spanned per slot by the columns of basis[s].
template <class T>
GradedModule<T> graded_submodule(const GradedModule<T>& m, const std::vector<Matrix<T>>& basis);

template <class T>
GradedModule<T> direct_sum(const GradedModule<T>& a, const GradedModule<T>& b);

// Weight-wise dual with e and f exchanged by the Chevalley involution.
template <class T>
GradedModule<T> graded_dual(const GradedModule<T>& m);

struct VermaCount {
  std::size_t slot = 0;
  RatFunc weight;
  std::size_t count = 0;
};

// Multiplicities of Vermas in a module over K in a deformed window, from the
// character and confirmed by the dimension of ker e on each slot. Throws
// NonIntegralSolutionError when either step fails.
std::vector<VermaCount> generic_verma_multiplicities(const GradedModule<RatFunc>& m);

// Gram determinant of the contravariant form on the depth-j weight space of
// a Verma, computed as the scalar by which e^j f^j acts on the top vector.
template <class T>
T contravariant_gram(const GradedModule<T>& verma_module, int j);

// Endomorphism algebra of a projective over k in the basis f^n e^n x of its
// top weight space (x the generator); the unit is the first basis element.
std::shared_ptr<const Algebra<Cyclo>> projective_endomorphisms(const GradedModule<Cyclo>& p);

struct ProjectiveSummand {
  std::size_t label = 0;            // slot of the top weight
  std::vector<std::size_t> layers;  // slots of its Verma quotients
  Vec<Cyclo> idempotent;            // in the basis of projective_endomorphisms
  GradedModule<Cyclo> module;
};

// Indecomposable summands of a projective over k, ordered by label.
std::vector<ProjectiveSummand> decompose_projective(const GradedModule<Cyclo>& p);

// The summand of P(mu) with top weight mu, from the R-form reduced mod t.
ProjectiveSummand indecomposable_projective(std::shared_ptr<const WeightWindow> window, std::size_t mu_slot);

// dim Hom(I(mu), Z) for a module over k.
std::size_t o_jh_multiplicity(const GradedModule<Cyclo>& z, std::size_t mu_slot);

struct DualityCell {
  std::size_t lambda = 0;  // slots
  std::size_t mu = 0;
  long lhs = 0;
  long rhs = 0;
  bool equal() const { return lhs == rhs; }
};

struct DualityReport {
  std::shared_ptr<const WeightWindow> window;
  std::vector<DualityCell> cells;  // all slot pairs, lambda major
  // Every Verma of the window has nonzero Gram determinants over K at every depth.
  bool generic_gram_nonzero = false;
  // Verma multiplicities of each P(lambda) over K agree with its filtration.
  bool generic_filtration_match = false;
  bool all_equal() const;
};

// Does not throw on disagreement.
DualityReport duality_table(const std::vector<Cyclo>& gammas, int depth, bool deform = true);

// As duality_table, throwing AuditFailure listing every disagreeing pair.
DualityReport duality_report(const std::vector<Cyclo>& gammas, int depth, bool deform = true);

}  // namespace cdelab
