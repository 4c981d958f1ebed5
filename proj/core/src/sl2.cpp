#include "cdelab/sl2.hpp"

#include <algorithm>
#include <numeric>
#include <type_traits>

#include "cdelab/errors.hpp"
#include "cdelab/lattice.hpp"
#include "cdelab/structure.hpp"

namespace cdelab {

WeightWindow::WeightWindow(std::vector<Cyclo> gammas, bool deform, int depth)
    : gammas_(std::move(gammas)), deform_(deform), depth_(depth) {
  if (depth_ < 1) throw InputError("window depth must be at least 1");
  if (gammas_.empty()) throw InputError("window needs at least one weight");
  for (std::size_t g = 0; g < gammas_.size(); ++g) {
    for (std::size_t h = g + 1; h < gammas_.size(); ++h) {
      const Cyclo diff = gammas_[g] - gammas_[h];
      if (!diff.is_rational()) continue;
      const Rational half = diff.rational_value() / 2;
      if (half.get_den() != 1) continue;
      // gamma_g - 2k = gamma_h with k = diff / 2.
      const long k = half.get_num().get_si();
      const std::size_t a = k >= 0 ? g : h;
      const std::size_t b = k >= 0 ? h : g;
      const long j = k >= 0 ? k : -k;
      throw CongruenceViolationError("weights " + gammas_[a].to_string() + " - " + std::to_string(2 * j) + " and " +
                                     gammas_[b].to_string() + " - 0 are congruent mod t");
    }
  }
}

std::optional<std::size_t> WeightWindow::up(std::size_t s) const {
  if (depth_of(s) == 0) return std::nullopt;
  return s - 1;
}

std::optional<std::size_t> WeightWindow::down(std::size_t s) const {
  if (depth_of(s) == depth_) return std::nullopt;
  return s + 1;
}

RatFunc WeightWindow::weight(std::size_t s) const {
  RatFunc w(reduced_weight(s));
  if (deform_) w += RatFunc::t();
  return w;
}

Cyclo WeightWindow::reduced_weight(std::size_t s) const {
  return gammas_[chain_of(s)] - Cyclo(2L * depth_of(s));
}

std::size_t WeightWindow::find(const RatFunc& w) const {
  for (std::size_t s = 0; s < slot_count(); ++s) {
    if (weight(s) == w) return s;
  }
  throw WeightOutsideWindowError("weight " + w.to_string() + " is not in the window");
}

std::size_t WeightWindow::find_reduced(const Cyclo& w) const {
  for (std::size_t s = 0; s < slot_count(); ++s) {
    if (reduced_weight(s) == w) return s;
  }
  throw WeightOutsideWindowError("weight " + w.to_string() + " is not in the window");
}

std::shared_ptr<const WeightWindow> validate_window(const std::vector<Cyclo>& gammas, bool deform, int depth) {
  return std::make_shared<const WeightWindow>(gammas, deform, depth);
}

namespace {

template <class T>
constexpr ScalarRing ring_of() {
  if constexpr (std::is_same_v<T, Cyclo>) {
    return ScalarRing::k;
  } else {
    return ScalarRing::R;
  }
}

template <class T>
T window_weight(const WeightWindow& w, std::size_t s) {
  if constexpr (std::is_same_v<T, Cyclo>) {
    return w.reduced_weight(s);
  } else {
    return w.weight(s);
  }
}

int window_order(const WeightWindow& w) {
  int order = 1;
  for (const auto& g : w.gammas()) order = std::lcm(order, g.order());
  return order;
}

void check_slot(const WeightWindow& w, std::size_t s) {
  if (s >= w.slot_count()) throw WeightOutsideWindowError("slot " + std::to_string(s) + " is outside the window");
}

// U(n-) (x) Q with Q spanned by e^m v, 0 <= m <= top, truncated at the window depth.
template <class T>
GradedModule<T> induced(std::shared_ptr<const WeightWindow> window, std::size_t slot, int top, std::string label) {
  const WeightWindow& w = *window;
  check_slot(w, slot);
  const std::size_t chain = w.chain_of(slot);
  const int i = w.depth_of(slot);
  const T lambda = window_weight<T>(w, slot);
  const std::size_t n = w.slot_count();
  ProjectiveInfo info;
  info.slot = slot;
  info.top = top;
  info.basis.resize(n);
  std::vector<int> lo(n, 0);
  std::vector<std::size_t> ranks(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (w.chain_of(s) != chain) continue;
    const int d = w.depth_of(s);
    lo[s] = std::max(0, i - d);
    for (int m = lo[s]; m <= top; ++m) info.basis[s].emplace_back(d - i + m, m);
    ranks[s] = info.basis[s].size();
  }
  std::vector<Matrix<T>> e, f;
  for (std::size_t s = 0; s < n; ++s) {
    const auto u = w.up(s);
    const auto dn = w.down(s);
    Matrix<T> es(u ? ranks[*u] : 0, ranks[s]);
    Matrix<T> fs(dn ? ranks[*dn] : 0, ranks[s]);
    for (std::size_t c = 0; c < ranks[s]; ++c) {
      const auto [a, m] = info.basis[s][c];
      if (u) {
        if (m + 1 <= top) es(static_cast<std::size_t>(m + 1 - lo[*u]), c) = T(1);
        if (a >= 1) es(static_cast<std::size_t>(m - lo[*u]), c) = T(a) * (lambda + T(2 * m - a + 1));
      }
      if (dn) fs(static_cast<std::size_t>(m - lo[*dn]), c) = T(1);
    }
    e.push_back(std::move(es));
    f.push_back(std::move(fs));
  }
  GradedModule<T> out(ring_of<T>(), std::move(window), std::move(ranks), std::move(e), std::move(f), std::move(label));
  out.set_projective(std::move(info));
  return out;
}

template <class T>
Vec<T> apply_e(const GradedModule<T>& m, std::size_t& s, const Vec<T>& v) {
  const auto u = m.window().up(s);
  if (!u) throw InternalError("e applied on the top slot");
  Vec<T> r = m.e(s) * v;
  s = *u;
  return r;
}

template <class T>
Vec<T> apply_f(const GradedModule<T>& m, std::size_t& s, const Vec<T>& v) {
  const auto d = m.window().down(s);
  if (!d) throw InternalError("f applied on the bottom slot");
  Vec<T> r = m.f(s) * v;
  s = *d;
  return r;
}

template <class T>
std::string weight_string(const WeightWindow& w, std::size_t s) {
  return window_weight<T>(w, s).to_string();
}

}  // namespace

template <class T>
GradedModule<T>::GradedModule(ScalarRing ring, std::shared_ptr<const WeightWindow> window,
                              std::vector<std::size_t> ranks, std::vector<Matrix<T>> e, std::vector<Matrix<T>> f,
                              std::string label)
    : ring_(ring),
      window_(std::move(window)),
      ranks_(std::move(ranks)),
      e_(std::move(e)),
      f_(std::move(f)),
      label_(std::move(label)) {
  const std::size_t n = window_->slot_count();
  if (ranks_.size() != n || e_.size() != n || f_.size() != n) {
    throw InputError("graded module data must have one entry per window slot");
  }
  for (std::size_t s = 0; s < n; ++s) {
    const auto u = window_->up(s);
    const auto d = window_->down(s);
    if (e_[s].rows() != (u ? ranks_[*u] : 0) || e_[s].cols() != ranks_[s] || f_[s].rows() != (d ? ranks_[*d] : 0) ||
        f_[s].cols() != ranks_[s]) {
      throw InputError("action map shapes do not match the graded ranks at slot " + std::to_string(s));
    }
  }
}

template <class T>
std::size_t GradedModule<T>::total_rank() const {
  return std::accumulate(ranks_.begin(), ranks_.end(), std::size_t{0});
}

template <class T>
T GradedModule<T>::weight(std::size_t s) const {
  return window_weight<T>(*window_, s);
}

template <class T>
bool brackets_hold(const GradedModule<T>& m) {
  const WeightWindow& w = m.window();
  for (std::size_t s = 0; s < m.slot_count(); ++s) {
    const auto d = w.down(s);
    if (!d) continue;
    Matrix<T> lhs = m.e(*d) * m.f(s);
    if (const auto u = w.up(s)) lhs = lhs - m.f(*u) * m.e(s);
    if (lhs != Matrix<T>::identity(m.rank(s)) * m.weight(s)) return false;
  }
  return true;
}

template <class T>
GradedModule<T> verma(std::shared_ptr<const WeightWindow> window, std::size_t slot) {
  check_slot(*window, slot);
  const std::string label = "Z(" + weight_string<T>(*window, slot) + ")";
  return induced<T>(std::move(window), slot, 0, label);
}

template <class T>
GradedModule<T> build_projective(std::shared_ptr<const WeightWindow> window, std::size_t slot) {
  check_slot(*window, slot);
  const int top = window->depth_of(slot);
  const std::string label = "P(" + weight_string<T>(*window, slot) + ")";
  return induced<T>(std::move(window), slot, top, label);
}

std::vector<std::size_t> verma_filtration(const ProjectiveInfo& info) {
  std::vector<std::size_t> out;
  for (int m = info.top; m >= 0; --m) out.push_back(info.slot - static_cast<std::size_t>(m));
  return out;
}

GradedModule<RatFunc> extend_to_K(const GradedModule<RatFunc>& m) {
  std::vector<Matrix<RatFunc>> e, f;
  for (std::size_t s = 0; s < m.slot_count(); ++s) {
    e.push_back(m.e(s));
    f.push_back(m.f(s));
  }
  GradedModule<RatFunc> out(ScalarRing::K, m.window_ptr(), m.ranks(), std::move(e), std::move(f), m.label());
  if (m.projective()) out.set_projective(*m.projective());
  return out;
}

GradedModule<Cyclo> reduce_mod_t(const GradedModule<RatFunc>& m) {
  if (m.ring() != ScalarRing::R) throw InputError("reduction mod t needs a module over R");
  auto red = [](const Matrix<RatFunc>& a) { return a.map([](const RatFunc& x) { return x.reduce_at_zero(); }); };
  std::vector<Matrix<Cyclo>> e, f;
  for (std::size_t s = 0; s < m.slot_count(); ++s) {
    e.push_back(red(m.e(s)));
    f.push_back(red(m.f(s)));
  }
  GradedModule<Cyclo> out(ScalarRing::k, m.window_ptr(), m.ranks(), std::move(e), std::move(f), m.label());
  if (m.projective()) out.set_projective(*m.projective());
  return out;
}

template <class T>
std::vector<std::vector<Matrix<T>>> graded_hom(const GradedModule<T>& m, const GradedModule<T>& n) {
  const WeightWindow& w = m.window();
  if (m.slot_count() != n.slot_count()) throw InputError("graded modules live on different windows");
  const std::size_t slots = m.slot_count();
  std::vector<std::size_t> off(slots + 1, 0);
  for (std::size_t s = 0; s < slots; ++s) off[s + 1] = off[s] + n.rank(s) * m.rank(s);
  const std::size_t unknowns = off[slots];
  auto var = [&](std::size_t s, std::size_t r, std::size_t c) { return off[s] + r * m.rank(s) + c; };

  std::vector<Vec<T>> rows;
  // X_t A^M_s - A^N_s X_s = 0 for A = e (t = up s) and A = f (t = down s).
  auto add_equations = [&](std::size_t s, std::size_t t, const Matrix<T>& am, const Matrix<T>& an) {
    for (std::size_t r = 0; r < n.rank(t); ++r) {
      for (std::size_t c = 0; c < m.rank(s); ++c) {
        Vec<T> row(unknowns);
        bool nonzero = false;
        for (std::size_t k = 0; k < m.rank(t); ++k) {
          if (!am(k, c).is_zero()) {
            row[var(t, r, k)] += am(k, c);
            nonzero = true;
          }
        }
        for (std::size_t k = 0; k < n.rank(s); ++k) {
          if (!an(r, k).is_zero()) {
            row[var(s, k, c)] -= an(r, k);
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  };
  for (std::size_t s = 0; s < slots; ++s) {
    if (m.rank(s) == 0) continue;
    if (const auto u = w.up(s)) add_equations(s, *u, m.e(s), n.e(s));
    if (const auto d = w.down(s)) add_equations(s, *d, m.f(s), n.f(s));
  }
  std::vector<Vec<T>> basis;
  if (rows.empty()) {
    for (std::size_t v = 0; v < unknowns; ++v) {
      Vec<T> x(unknowns);
      x[v] = T(1);
      basis.push_back(std::move(x));
    }
  } else {
    basis = kernel(Matrix<T>::from_rows(rows, unknowns));
  }
  std::vector<std::vector<Matrix<T>>> out;
  for (const auto& x : basis) {
    std::vector<Matrix<T>> blocks;
    for (std::size_t s = 0; s < slots; ++s) {
      Matrix<T> b(n.rank(s), m.rank(s));
      for (std::size_t r = 0; r < n.rank(s); ++r) {
        for (std::size_t c = 0; c < m.rank(s); ++c) b(r, c) = x[var(s, r, c)];
      }
      blocks.push_back(std::move(b));
    }
    out.push_back(std::move(blocks));
  }
  return out;
}

std::vector<std::vector<Matrix<RatFunc>>> graded_hom_lattice(const GradedModule<RatFunc>& m,
                                                             const GradedModule<RatFunc>& n) {
  const auto k_basis = graded_hom(extend_to_K(m), extend_to_K(n));
  std::size_t length = 0;
  for (std::size_t s = 0; s < m.slot_count(); ++s) length += n.rank(s) * m.rank(s);
  std::vector<Vec<RatFunc>> flat;
  for (const auto& blocks : k_basis) {
    Vec<RatFunc> v;
    for (const auto& b : blocks) {
      for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) v.push_back(b(r, c));
      }
    }
    flat.push_back(std::move(v));
  }
  std::vector<std::vector<Matrix<RatFunc>>> out;
  for (const auto& v : saturate(flat, length)) {
    std::vector<Matrix<RatFunc>> blocks;
    std::size_t at = 0;
    for (std::size_t s = 0; s < m.slot_count(); ++s) {
      Matrix<RatFunc> b(n.rank(s), m.rank(s));
      for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) b(r, c) = v[at++];
      }
      blocks.push_back(std::move(b));
    }
    out.push_back(std::move(blocks));
  }
  return out;
}

template <class T>
GradedModule<T> graded_submodule(const GradedModule<T>& m, const std::vector<Matrix<T>>& basis) {
  const WeightWindow& w = m.window();
  std::vector<std::size_t> ranks;
  for (const auto& b : basis) ranks.push_back(b.cols());
  auto restrict = [&](const Matrix<T>& a, std::size_t s, std::optional<std::size_t> t) {
    if (!t) return Matrix<T>(0, ranks[s]);
    const auto x = solve(basis[*t], a * basis[s]);
    if (!x) throw InternalError("subspace is not invariant under the sl2 action");
    return *x;
  };
  std::vector<Matrix<T>> e, f;
  for (std::size_t s = 0; s < m.slot_count(); ++s) {
    e.push_back(restrict(m.e(s), s, w.up(s)));
    f.push_back(restrict(m.f(s), s, w.down(s)));
  }
  return GradedModule<T>(m.ring(), m.window_ptr(), std::move(ranks), std::move(e), std::move(f));
}

template <class T>
GradedModule<T> direct_sum(const GradedModule<T>& a, const GradedModule<T>& b) {
  const WeightWindow& w = a.window();
  std::vector<std::size_t> ranks;
  for (std::size_t s = 0; s < a.slot_count(); ++s) ranks.push_back(a.rank(s) + b.rank(s));
  auto block = [&](const Matrix<T>& x, const Matrix<T>& y, std::optional<std::size_t> t, std::size_t s) {
    Matrix<T> r(t ? ranks[*t] : 0, ranks[s]);
    for (std::size_t i = 0; i < x.rows(); ++i) {
      for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j);
    }
    for (std::size_t i = 0; i < y.rows(); ++i) {
      for (std::size_t j = 0; j < y.cols(); ++j) r(x.rows() + i, x.cols() + j) = y(i, j);
    }
    return r;
  };
  std::vector<Matrix<T>> e, f;
  for (std::size_t s = 0; s < a.slot_count(); ++s) {
    e.push_back(block(a.e(s), b.e(s), w.up(s), s));
    f.push_back(block(a.f(s), b.f(s), w.down(s), s));
  }
  return GradedModule<T>(a.ring(), a.window_ptr(), std::move(ranks), std::move(e), std::move(f),
                         a.label() + " + " + b.label());
}

template <class T>
GradedModule<T> graded_dual(const GradedModule<T>& m) {
  const WeightWindow& w = m.window();
  std::vector<Matrix<T>> e, f;
  for (std::size_t s = 0; s < m.slot_count(); ++s) {
    const auto u = w.up(s);
    const auto d = w.down(s);
    e.push_back(u ? m.f(*u).transpose() : Matrix<T>(0, m.rank(s)));
    f.push_back(d ? m.e(*d).transpose() : Matrix<T>(0, m.rank(s)));
  }
  return GradedModule<T>(m.ring(), m.window_ptr(), m.ranks(), std::move(e), std::move(f), m.label() + "*");
}

std::vector<VermaCount> generic_verma_multiplicities(const GradedModule<RatFunc>& m) {
  const WeightWindow& w = m.window();
  std::vector<VermaCount> out;
  for (std::size_t s = 0; s < m.slot_count(); ++s) {
    const auto u = w.up(s);
    const long above = u ? static_cast<long>(m.rank(*u)) : 0;
    const long n = static_cast<long>(m.rank(s)) - above;
    if (n < 0) {
      throw NonIntegralSolutionError("negative Verma multiplicity at weight " + w.weight(s).to_string());
    }
    const std::size_t highest = u ? m.rank(s) - rank(m.e(s)) : m.rank(s);
    if (highest != static_cast<std::size_t>(n)) {
      throw NonIntegralSolutionError("weight " + w.weight(s).to_string() + " has " + std::to_string(highest) +
                                     " highest-weight vectors, the character predicts " + std::to_string(n));
    }
    if (n > 0) out.push_back({s, w.weight(s), static_cast<std::size_t>(n)});
  }
  return out;
}

template <class T>
T contravariant_gram(const GradedModule<T>& z, int j) {
  if (!z.projective() || z.projective()->top != 0) throw InputError("contravariant_gram expects a Verma module");
  if (j < 0 || j > z.window().depth() - z.window().depth_of(z.projective()->slot)) {
    throw InputError("depth " + std::to_string(j) + " is outside the truncated Verma");
  }
  std::size_t s = z.projective()->slot;
  Vec<T> v{T(1)};
  for (int k = 0; k < j; ++k) v = apply_f(z, s, v);
  for (int k = 0; k < j; ++k) v = apply_e(z, s, v);
  return v[0];
}

std::shared_ptr<const Algebra<Cyclo>> projective_endomorphisms(const GradedModule<Cyclo>& p) {
  if (!p.projective() || p.projective()->top != p.window().depth_of(p.projective()->slot)) {
    throw InputError("projective_endomorphisms expects a module from build_projective");
  }
  const std::size_t slot = p.projective()->slot;
  const std::size_t d = p.rank(slot);
  std::vector<Vec<Cyclo>> products;
  for (std::size_t a = 0; a < d; ++a) {
    Vec<Cyclo> x(d);
    x[a] = Cyclo(1);
    for (std::size_t b = 0; b < d; ++b) {
      std::size_t s = slot;
      Vec<Cyclo> v = x;
      for (std::size_t k = 0; k < b; ++k) v = apply_e(p, s, v);
      for (std::size_t k = 0; k < b; ++k) v = apply_f(p, s, v);
      products.push_back(std::move(v));
    }
  }
  return std::make_shared<const Algebra<Cyclo>>(ScalarRing::k, window_order(p.window()), std::move(products), 0);
}

std::vector<ProjectiveSummand> decompose_projective(const GradedModule<Cyclo>& p) {
  const auto end = projective_endomorphisms(p);
  const ProjectiveInfo& info = *p.projective();
  const WeightWindow& w = p.window();
  const int i = w.depth_of(info.slot);
  const SplitAlgebra split(end);
  std::vector<ProjectiveSummand> out;
  std::vector<int> owner(static_cast<std::size_t>(info.top) + 1, -1);
  for (const auto& eps : split.idempotents().idempotents) {
    // psi(f^a e^m x) = f^a e^m eps, slot by slot.
    std::vector<Matrix<Cyclo>> basis;
    for (std::size_t s = 0; s < p.slot_count(); ++s) {
      std::vector<Vec<Cyclo>> cols;
      for (const auto& [a, m] : info.basis[s]) {
        std::size_t at = info.slot;
        Vec<Cyclo> v = eps;
        for (int k = 0; k < m; ++k) v = apply_e(p, at, v);
        for (int k = 0; k < a; ++k) v = apply_f(p, at, v);
        cols.push_back(std::move(v));
      }
      const Matrix<Cyclo> image = Matrix<Cyclo>::from_columns(cols, p.rank(s));
      std::vector<Vec<Cyclo>> independent;
      for (std::size_t c : independent_columns(image)) independent.push_back(image.column(c));
      basis.push_back(Matrix<Cyclo>::from_columns(independent, p.rank(s)));
    }
    ProjectiveSummand summand{0, {}, eps, graded_submodule(p, basis)};
    // eps acts on the layer generated by e^m x by the coefficient of e^m x in e^m eps.
    for (int m = info.top; m >= 0; --m) {
      std::size_t at = info.slot;
      Vec<Cyclo> v = eps;
      for (int k = 0; k < m; ++k) v = apply_e(p, at, v);
      const Cyclo c = v[0];
      if (c.is_one()) {
        if (owner[static_cast<std::size_t>(m)] != -1) throw InternalError("layer claimed by two summands");
        owner[static_cast<std::size_t>(m)] = static_cast<int>(out.size());
        summand.layers.push_back(w.slot(w.chain_of(info.slot), i - m));
      } else if (!c.is_zero()) {
        throw InternalError("idempotent does not act by 0 or 1 on a Verma layer");
      }
    }
    if (summand.layers.empty()) throw InternalError("summand without Verma layers");
    summand.label = summand.layers.back();
    out.push_back(std::move(summand));
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) throw InternalError("unattributed Verma layer");
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
  return out;
}

ProjectiveSummand indecomposable_projective(std::shared_ptr<const WeightWindow> window, std::size_t mu_slot) {
  check_slot(*window, mu_slot);
  const auto p = reduce_mod_t(build_projective<RatFunc>(window, mu_slot));
  for (auto& s : decompose_projective(p)) {
    if (s.label == mu_slot) return std::move(s);
  }
  throw InternalError("no summand of P(mu) has top weight mu");
}

std::size_t o_jh_multiplicity(const GradedModule<Cyclo>& z, std::size_t mu_slot) {
  const auto summand = indecomposable_projective(z.window_ptr(), mu_slot);
  return graded_hom(summand.module, z).size();
}

bool DualityReport::all_equal() const {
  return std::all_of(cells.begin(), cells.end(), [](const DualityCell& c) { return c.equal(); });
}

DualityReport duality_table(const std::vector<Cyclo>& gammas, int depth, bool deform) {
  DualityReport report;
  report.window = validate_window(gammas, deform, depth);
  const auto& w = *report.window;
  const std::size_t n = w.slot_count();

  std::vector<ProjectiveSummand> tops;
  report.generic_filtration_match = true;
  for (std::size_t mu = 0; mu < n; ++mu) {
    const auto p = build_projective<RatFunc>(report.window, mu);
    for (auto& s : decompose_projective(reduce_mod_t(p))) {
      if (s.label == mu) tops.push_back(std::move(s));
    }
    if (tops.size() != mu + 1) throw InternalError("no summand of P(mu) has top weight mu");
    try {
      std::vector<std::size_t> generic;
      for (const auto& c : generic_verma_multiplicities(extend_to_K(p))) generic.insert(generic.end(), c.count, c.slot);
      std::vector<std::size_t> filtration = verma_filtration(*p.projective());
      std::sort(generic.begin(), generic.end());
      std::sort(filtration.begin(), filtration.end());
      if (generic != filtration) report.generic_filtration_match = false;
    } catch (const NonIntegralSolutionError&) {
      report.generic_filtration_match = false;
    }
  }

  report.generic_gram_nonzero = true;
  for (std::size_t lambda = 0; lambda < n; ++lambda) {
    const auto z = verma<RatFunc>(report.window, lambda);
    for (int j = 0; j <= w.depth() - w.depth_of(lambda); ++j) {
      if (contravariant_gram(z, j).is_zero()) report.generic_gram_nonzero = false;
    }
    const auto zbar = reduce_mod_t(z);
    for (std::size_t mu = 0; mu < n; ++mu) {
      DualityCell cell;
      cell.lambda = lambda;
      cell.mu = mu;
      cell.lhs = static_cast<long>(graded_hom(tops[mu].module, zbar).size());
      cell.rhs = static_cast<long>(std::count(tops[mu].layers.begin(), tops[mu].layers.end(), lambda));
      report.cells.push_back(cell);
    }
  }
  return report;
}

DualityReport duality_report(const std::vector<Cyclo>& gammas, int depth, bool deform) {
  DualityReport report = duality_table(gammas, depth, deform);
  std::string bad;
  for (const auto& c : report.cells) {
    if (c.equal()) continue;
    bad += " (" + report.window->reduced_weight(c.lambda).to_string() + ", " +
           report.window->reduced_weight(c.mu).to_string() + "): " + std::to_string(c.lhs) + " vs " +
           std::to_string(c.rhs) + ";";
  }
  if (!bad.empty()) throw AuditFailure("duality fails at" + bad);
  return report;
}

template class GradedModule<Cyclo>;
template class GradedModule<RatFunc>;
template bool brackets_hold(const GradedModule<Cyclo>&);
template bool brackets_hold(const GradedModule<RatFunc>&);
template GradedModule<Cyclo> verma(std::shared_ptr<const WeightWindow>, std::size_t);
template GradedModule<RatFunc> verma(std::shared_ptr<const WeightWindow>, std::size_t);
template GradedModule<Cyclo> build_projective(std::shared_ptr<const WeightWindow>, std::size_t);
template GradedModule<RatFunc> build_projective(std::shared_ptr<const WeightWindow>, std::size_t);
template std::vector<std::vector<Matrix<Cyclo>>> graded_hom(const GradedModule<Cyclo>&, const GradedModule<Cyclo>&);
template std::vector<std::vector<Matrix<RatFunc>>> graded_hom(const GradedModule<RatFunc>&,
                                                              const GradedModule<RatFunc>&);
template GradedModule<Cyclo> graded_submodule(const GradedModule<Cyclo>&, const std::vector<Matrix<Cyclo>>&);
template GradedModule<RatFunc> graded_submodule(const GradedModule<RatFunc>&, const std::vector<Matrix<RatFunc>>&);
template GradedModule<Cyclo> direct_sum(const GradedModule<Cyclo>&, const GradedModule<Cyclo>&);
template GradedModule<RatFunc> direct_sum(const GradedModule<RatFunc>&, const GradedModule<RatFunc>&);
template GradedModule<Cyclo> graded_dual(const GradedModule<Cyclo>&);
template GradedModule<RatFunc> graded_dual(const GradedModule<RatFunc>&);
template Cyclo contravariant_gram(const GradedModule<Cyclo>&, int);
template RatFunc contravariant_gram(const GradedModule<RatFunc>&, int);

}  // namespace cdelab
