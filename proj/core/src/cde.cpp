#include "cdelab/cde.hpp"

#include <algorithm>
#include <sstream>

#include "cdelab/errors.hpp"
#include "cdelab/lattice.hpp"

namespace cdelab {

std::string to_string(const IntMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out << ',';
    out << '[';
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) out << ',';
      out << m[i][j];
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return {};
  IntMatrix t(m[0].size(), std::vector<long>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix r(a.size(), std::vector<long>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw InternalError("integer matrix shapes do not match");
    for (std::size_t k = 0; k < inner; ++k) {
      for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  }
  return r;
}

bool CdeReport::passed() const {
  return std::all_of(audits.begin(), audits.end(), [](const Audit& a) { return a.passed; });
}

void check_k_simples(const Algebra<RatFunc>& algebra, const std::vector<Representation<RatFunc>>& simples) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < simples.size(); ++i) {
    const auto& m = simples[i];
    if (m.dimension() == 0) throw IncompleteSimplesError("K-simple " + std::to_string(i + 1) + " is zero");
    if (m.algebra().dimension() != algebra.dimension()) {
      throw IncompleteSimplesError("K-simple " + std::to_string(i + 1) + " belongs to another algebra");
    }
    total += m.dimension() * m.dimension();
    // Absolutely irreducible iff the action spans all matrices.
    std::vector<Vec<RatFunc>> flat;
    for (const auto& a : m.actions()) {
      Vec<RatFunc> v;
      for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) v.push_back(a(r, c));
      }
      flat.push_back(std::move(v));
    }
    if (rank(Matrix<RatFunc>::from_rows(flat, m.dimension() * m.dimension())) != m.dimension() * m.dimension()) {
      throw IncompleteSimplesError("K-simple " + std::to_string(i + 1) + " is not absolutely irreducible");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (simples[j].dimension() == m.dimension() && !hom_space(simples[j], m).empty()) {
        throw IncompleteSimplesError("K-simples " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                     " are isomorphic");
      }
    }
  }
  if (total != algebra.dimension()) {
    throw IncompleteSimplesError("sum of squared K-simple dimensions is " + std::to_string(total) +
                                 ", algebra dimension is " + std::to_string(algebra.dimension()));
  }
}

IntMatrix decomposition_matrix(std::shared_ptr<const Algebra<RatFunc>> algebra_over_r,
                               const std::vector<Representation<RatFunc>>& simples, const SplitAlgebra& split) {
  IntMatrix d(split.simple_count(), std::vector<long>(simples.size(), 0));
  for (std::size_t j = 0; j < simples.size(); ++j) {
    const auto reduced = reduce_lattice(spin_lattice(simples[j], algebra_over_r), split.algebra_ptr());
    for (std::size_t i = 0; i < split.simple_count(); ++i) {
      d[i][j] = static_cast<long>(jh_multiplicity(split, reduced, i));
    }
  }
  return d;
}

IntMatrix cartan_matrix(const SplitAlgebra& split) {
  const std::size_t n = split.simple_count();
  IntMatrix c(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      c[i][j] = static_cast<long>(hom_space(split.projective(i), split.projective(j)).size());
    }
  }
  return c;
}

std::vector<std::size_t> first_appearance_order(const IntMatrix& d) {
  std::vector<std::size_t> order;
  std::vector<bool> placed(d.size(), false);
  const std::size_t cols = d.empty() ? 0 : d[0].size();
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!placed[i] && d[i][j] != 0) {
        placed[i] = true;
        order.push_back(i);
      }
    }
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!placed[i]) order.push_back(i);
  }
  return order;
}

namespace {

std::string to_string(const std::vector<long>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ']';
  return out.str();
}

}  // namespace

CdeReport cde_report(std::shared_ptr<const Algebra<RatFunc>> algebra_over_r,
                     const std::vector<Representation<RatFunc>>& simples) {
  if (algebra_over_r->ring() != ScalarRing::R) throw InputError("cde_report expects an algebra over R");
  check_k_simples(*extend_to_K(*algebra_over_r), simples);
  const SplitAlgebra split(reduce_to_k(*algebra_over_r));

  const IntMatrix d_split = decomposition_matrix(algebra_over_r, simples, split);
  const IntMatrix c_split = cartan_matrix(split);

  CdeReport report;
  report.k_order = first_appearance_order(d_split);
  const auto& order = report.k_order;
  const std::size_t n = order.size();
  report.D.assign(n, {});
  report.C.assign(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    report.D[i] = d_split[order[i]];
    for (std::size_t j = 0; j < n; ++j) report.C[i][j] = c_split[order[i]][order[j]];
  }
  report.E = transpose(report.D);

  for (const auto& m : simples) report.K_simples.push_back({m.dimension(), m.label(), 0});
  for (std::size_t i = 0; i < n; ++i) {
    report.k_simples.push_back({split.simple(order[i]).dimension(), "L" + std::to_string(i + 1),
                                split.projective(order[i]).dimension()});
  }

  const IntMatrix de = multiply(report.D, report.E);
  report.audits.push_back({"C = D E", de == report.C, to_string(report.C), to_string(de)});

  // Rank audit: dim P_i from the K side through E and from the k side through C.
  std::vector<long> p_dims, via_e(n, 0), via_c(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    p_dims.push_back(static_cast<long>(report.k_simples[i].projective_dimension));
    for (std::size_t j = 0; j < simples.size(); ++j) {
      via_e[i] += report.E[j][i] * static_cast<long>(simples[j].dimension());
    }
    for (std::size_t r = 0; r < n; ++r) {
      via_c[i] += report.C[r][i] * static_cast<long>(report.k_simples[r].dimension);
    }
  }
  report.audits.push_back({"rank", p_dims == via_e && p_dims == via_c, to_string(p_dims),
                           to_string(via_e) + " " + to_string(via_c)});

  long k_side = 0, bar_side = 0;
  for (const auto& m : simples) k_side += static_cast<long>(m.dimension() * m.dimension());
  for (const auto& s : report.k_simples) bar_side += static_cast<long>(s.dimension * s.projective_dimension);
  const long dim = static_cast<long>(algebra_over_r->dimension());
  report.audits.push_back({"regular", k_side == dim && bar_side == dim, std::to_string(dim),
                           std::to_string(k_side) + " " + std::to_string(bar_side)});
  return report;
}

CdeReport cde_verify(std::shared_ptr<const Algebra<RatFunc>> algebra_over_r,
                     const std::vector<Representation<RatFunc>>& simples) {
  CdeReport report = cde_report(std::move(algebra_over_r), simples);
  for (const auto& a : report.audits) {
    if (!a.passed) throw AuditFailure("audit '" + a.name + "' failed: " + a.lhs + " vs " + a.rhs);
  }
  return report;
}

}  // namespace cdelab
