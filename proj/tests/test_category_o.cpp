#include <doctest.h>

#include <algorithm>
#include <map>

#include "cdelab/errors.hpp"
#include "cdelab/sl2.hpp"

using namespace cdelab;

namespace {

using Window = std::shared_ptr<const WeightWindow>;

Window window_of(long gamma, int depth, bool deform = true) { return validate_window({Cyclo(gamma)}, deform, depth); }

std::size_t slot_of(const Window& w, long reduced) { return w->find_reduced(Cyclo(reduced)); }

// Singular-vector oracle: [Z(l) : V(m)] over k for integral l, from e v_j = j(l - j + 1) v_{j-1}.
long composition_oracle(long lambda, long mu) {
  if (mu == lambda) return 1;
  return lambda >= 0 && mu == -lambda - 2 ? 1 : 0;
}

template <class T>
bool same_action(const GradedModule<T>& a, const GradedModule<T>& b) {
  if (a.ranks() != b.ranks()) return false;
  for (std::size_t s = 0; s < a.slot_count(); ++s) {
    if (a.e(s) != b.e(s) || a.f(s) != b.f(s)) return false;
  }
  return true;
}

std::vector<long> reduced_layers(const Window& w, const ProjectiveSummand& s) {
  std::vector<long> out;
  for (std::size_t slot : s.layers) out.push_back(w->reduced_weight(slot).rational_value().get_num().get_si());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("weight windows validate congruences") {
  const auto w = window_of(2, 8);
  CHECK(w->slot_count() == 9);
  for (int j = 0; j <= 8; ++j) CHECK(w->weight(static_cast<std::size_t>(j)) == RatFunc(2 - 2 * j) + RatFunc::t());
  CHECK_FALSE(w->up(0));
  CHECK(*w->down(0) == 1);
  CHECK_FALSE(w->down(8));
  CHECK_THROWS_AS(validate_window({Cyclo(2), Cyclo(0)}, true, 2), CongruenceViolationError);
  CHECK_NOTHROW(validate_window({Cyclo(1)}, true, 5));
  CHECK_THROWS_AS(validate_window({Cyclo(1)}, true, 0), InputError);
  CHECK_THROWS_AS(w->find_reduced(Cyclo(4)), WeightOutsideWindowError);
  CHECK_THROWS_AS(w->find(RatFunc(2)), WeightOutsideWindowError);
  CHECK(w->find(RatFunc(-4) + RatFunc::t()) == 3);

  const auto two = validate_window({Cyclo(0), Cyclo::zeta(3)}, true, 3);
  CHECK(two->slot_count() == 8);
  CHECK(two->chain_of(5) == 1);
  CHECK(two->depth_of(5) == 1);
  CHECK(two->reduced_weight(5) == Cyclo::zeta(3) - Cyclo(2));
  // Odd difference: the chains never meet.
  CHECK_NOTHROW(validate_window({Cyclo(1), Cyclo(0)}, true, 4));
  // Congruent below the truncation depth is still rejected.
  CHECK_THROWS_AS(validate_window({Cyclo(0), Cyclo(-8)}, true, 2), CongruenceViolationError);
}

TEST_CASE("verma action matches the closed formula") {
  const auto w = window_of(2, 8);
  const auto z = verma<RatFunc>(w, 0);
  CHECK(z.e(3)(0, 0) == RatFunc(3) * RatFunc::t());
  for (std::size_t j = 1; j <= 8; ++j) {
    const RatFunc lambda = RatFunc(2) + RatFunc::t();
    CHECK(z.e(j)(0, 0) == RatFunc(static_cast<int>(j)) * (lambda - RatFunc(static_cast<int>(j)) + RatFunc(1)));
    CHECK(z.f(j - 1)(0, 0) == RatFunc(1));
  }
  const auto zbar = verma<Cyclo>(w, 0);
  CHECK(zbar.e(3)(0, 0).is_zero());
  CHECK(zbar.e(2)(0, 0) == Cyclo(2));

  const auto wm = window_of(-1, 6, false);
  const auto zm = verma<Cyclo>(wm, 0);
  for (std::size_t j = 1; j <= 6; ++j) CHECK(zm.e(j)(0, 0) == Cyclo(-static_cast<long>(j * j)));

  const auto lower = verma<RatFunc>(w, 5);
  CHECK(lower.rank(4) == 0);
  CHECK(lower.rank(5) == 1);
  CHECK(lower.total_rank() == 4);
  CHECK_THROWS_AS(verma<RatFunc>(w, 9), WeightOutsideWindowError);
}

TEST_CASE("projectives by two-step induction") {
  const auto w = window_of(2, 8);
  const auto p2 = build_projective<RatFunc>(w, 0);
  CHECK(same_action(p2, verma<RatFunc>(w, 0)));
  CHECK(verma_filtration(*p2.projective()) == std::vector<std::size_t>{0});

  const std::size_t m4 = slot_of(w, -4);
  const auto p = build_projective<RatFunc>(w, m4);
  CHECK(p.rank(m4) == 4);
  const auto filt = verma_filtration(*p.projective());
  CHECK(filt == std::vector<std::size_t>{0, 1, 2, 3});

  const auto w0 = window_of(0, 5);
  CHECK(verma_filtration(*build_projective<RatFunc>(w0, 0).projective()) == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(build_projective<RatFunc>(w, 20), WeightOutsideWindowError);

  // Character bookkeeping: ranks of P(lambda) are the sums over its filtration.
  for (const long gamma : {2L, -1L, 3L}) {
    const auto win = window_of(gamma, 7);
    for (std::size_t s = 0; s < win->slot_count(); ++s) {
      const auto ps = build_projective<RatFunc>(win, s);
      std::vector<std::size_t> ranks(win->slot_count(), 0);
      for (std::size_t top : verma_filtration(*ps.projective())) {
        const auto z = verma<RatFunc>(win, top);
        for (std::size_t r = 0; r < ranks.size(); ++r) ranks[r] += z.rank(r);
      }
      CHECK(ranks == ps.ranks());
    }
  }
}

TEST_CASE("bracket relations on every constructed module") {
  const std::vector<Window> windows = {window_of(2, 8), window_of(-3, 6), window_of(0, 5, false),
                                       validate_window({Cyclo(1), Cyclo::zeta(3)}, true, 4)};
  for (const auto& w : windows) {
    for (std::size_t s = 0; s < w->slot_count(); ++s) {
      const auto z = verma<RatFunc>(w, s);
      const auto p = build_projective<RatFunc>(w, s);
      CHECK(brackets_hold(z));
      CHECK(brackets_hold(p));
      CHECK(brackets_hold(extend_to_K(p)));
      CHECK(brackets_hold(reduce_mod_t(p)));
      CHECK(brackets_hold(verma<Cyclo>(w, s)));
      CHECK(brackets_hold(graded_dual(p)));
      CHECK(brackets_hold(direct_sum(z, p)));
    }
  }
  // A perturbed module fails the check.
  const auto w = window_of(2, 4);
  const auto z = verma<RatFunc>(w, 0);
  std::vector<Matrix<RatFunc>> e, f;
  for (std::size_t s = 0; s < z.slot_count(); ++s) {
    e.push_back(z.e(s));
    f.push_back(z.f(s));
  }
  e[2](0, 0) = e[2](0, 0) + RatFunc(1);
  CHECK_FALSE(brackets_hold(GradedModule<RatFunc>(ScalarRing::R, w, z.ranks(), e, f)));
  e.pop_back();
  CHECK_THROWS_AS(GradedModule<RatFunc>(ScalarRing::R, w, z.ranks(), e, f), InputError);
}

TEST_CASE("scalar extension and reduction") {
  const auto w = window_of(2, 8);
  const auto z = verma<RatFunc>(w, 0);
  CHECK(extend_to_K(z).ring() == ScalarRing::K);
  const auto zbar = reduce_mod_t(z);
  CHECK(zbar.ring() == ScalarRing::k);
  CHECK(zbar.weight(0) == Cyclo(2));
  CHECK(same_action(zbar, verma<Cyclo>(w, 0)));
  const auto p = build_projective<RatFunc>(w, 3);
  CHECK(reduce_mod_t(p).ranks() == p.ranks());
  CHECK_THROWS_AS(reduce_mod_t(extend_to_K(p)), InputError);
}

TEST_CASE("generic verma multiplicities") {
  const auto w = window_of(2, 8);
  const auto z = extend_to_K(verma<RatFunc>(w, 0));
  const auto one = generic_verma_multiplicities(z);
  REQUIRE(one.size() == 1);
  CHECK(one[0].slot == 0);
  CHECK(one[0].weight == RatFunc(2) + RatFunc::t());
  CHECK(one[0].count == 1);

  const auto two = generic_verma_multiplicities(direct_sum(z, z));
  REQUIRE(two.size() == 1);
  CHECK(two[0].count == 2);

  const std::size_t m4 = slot_of(w, -4);
  const auto p = extend_to_K(build_projective<RatFunc>(w, m4));
  const auto counts = generic_verma_multiplicities(p);
  std::map<std::size_t, std::size_t> got;
  for (const auto& c : counts) got[c.slot] = c.count;
  CHECK(got == std::map<std::size_t, std::size_t>{{0, 1}, {1, 1}, {2, 1}, {3, 1}});

  // Undeformed, Z(2) has a singular vector at depth 3 the character does not predict.
  const auto flat = window_of(2, 8, false);
  CHECK_THROWS_AS(generic_verma_multiplicities(extend_to_K(verma<RatFunc>(flat, 0))), NonIntegralSolutionError);
}

TEST_CASE("contravariant gram") {
  const auto w = window_of(2, 8);
  const auto z = extend_to_K(verma<RatFunc>(w, 0));
  const RatFunc t = RatFunc::t();
  CHECK(contravariant_gram(z, 3) == RatFunc(6) * (t + RatFunc(2)) * (t + RatFunc(1)) * t);
  CHECK(contravariant_gram(z, 0) == RatFunc(1));
  CHECK(contravariant_gram(verma<Cyclo>(w, 0), 3).is_zero());
  CHECK(contravariant_gram(verma<Cyclo>(w, 0), 2) == Cyclo(4));
  CHECK_THROWS_AS(contravariant_gram(z, 9), InputError);
  CHECK_THROWS_AS(contravariant_gram(build_projective<RatFunc>(w, 2), 1), InputError);
  // Product formula at every window weight and depth.
  for (const long gamma : {-3L, 0L, 4L}) {
    const auto win = window_of(gamma, 6);
    for (std::size_t s = 0; s < win->slot_count(); ++s) {
      const auto zs = verma<RatFunc>(win, s);
      const RatFunc lambda = win->weight(s);
      RatFunc expected(1);
      for (int j = 0; j <= 6 - win->depth_of(s); ++j) {
        if (j > 0) expected = expected * RatFunc(j) * (lambda - RatFunc(j) + RatFunc(1));
        CHECK(contravariant_gram(zs, j) == expected);
        CHECK_FALSE(contravariant_gram(zs, j).is_zero());
      }
    }
  }
}

TEST_CASE("graded dual") {
  const auto w = window_of(2, 8);
  const auto z = verma<RatFunc>(w, 0);
  const auto p = build_projective<RatFunc>(w, 4);
  CHECK(same_action(graded_dual(graded_dual(p)), p));
  CHECK(same_action(graded_dual(graded_dual(z)), z));
  CHECK(graded_dual(extend_to_K(z)).ranks() == z.ranks());
  const auto zbar = reduce_mod_t(z);
  const auto top = indecomposable_projective(w, 0);
  CHECK(graded_hom(top.module, graded_dual(zbar)).size() == 1);
}

TEST_CASE("decomposition of reduced projectives") {
  const auto w = window_of(2, 8);
  const auto p2 = decompose_projective(reduce_mod_t(build_projective<RatFunc>(w, 0)));
  REQUIRE(p2.size() == 1);
  CHECK(same_action(p2[0].module, verma<Cyclo>(w, 0)));

  const std::size_t m4 = slot_of(w, -4);
  const auto p = reduce_mod_t(build_projective<RatFunc>(w, m4));
  const auto parts = decompose_projective(p);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].label == slot_of(w, -2));
  CHECK(parts[1].label == m4);
  CHECK(reduced_layers(w, parts[0]) == std::vector<long>{-2, 0});
  CHECK(reduced_layers(w, parts[1]) == std::vector<long>{-4, 2});
  std::size_t total = 0;
  for (const auto& part : parts) {
    CHECK(brackets_hold(part.module));
    total += part.module.total_rank();
  }
  CHECK(total == p.total_rank());

  const auto w1 = window_of(1, 6);
  const auto i3 = indecomposable_projective(w1, slot_of(w1, -3));
  CHECK(reduced_layers(w1, i3) == std::vector<long>{-3, 1});
  CHECK(indecomposable_projective(w1, slot_of(w1, -1)).layers.size() == 1);
  CHECK_THROWS_AS(projective_endomorphisms(verma<Cyclo>(w1, 1)), InputError);
}

TEST_CASE("composition multiplicities over k") {
  const auto w = window_of(2, 8);
  const auto z2 = verma<Cyclo>(w, 0);
  CHECK(o_jh_multiplicity(z2, 0) == 1);
  CHECK(o_jh_multiplicity(z2, slot_of(w, -4)) == 1);
  CHECK(o_jh_multiplicity(z2, slot_of(w, 0)) == 0);
  CHECK_THROWS_AS(o_jh_multiplicity(z2, 9), WeightOutsideWindowError);
}

TEST_CASE("hom finiteness and rank stability in the depth") {
  const std::vector<long> weights = {2, 0, -2, -4};
  std::map<std::pair<long, long>, std::size_t> first;
  for (int depth = 8; depth <= 11; ++depth) {
    const auto w = window_of(2, depth);
    for (const long lambda : weights) {
      const auto z = reduce_mod_t(verma<RatFunc>(w, slot_of(w, lambda)));
      for (const long mu : weights) {
        const std::size_t m = o_jh_multiplicity(z, slot_of(w, mu));
        const auto [it, fresh] = first.emplace(std::make_pair(lambda, mu), m);
        CHECK(it->second == m);
        CHECK(m == static_cast<std::size_t>(composition_oracle(lambda, mu)));
      }
    }
  }
}

TEST_CASE("hom lattices have the same rank over R, K and k") {
  for (const long gamma : {2L, -1L, 1L}) {
    const auto w = window_of(gamma, 6);
    std::vector<GradedModule<RatFunc>> targets;
    for (std::size_t s = 0; s < w->slot_count(); s += 2) {
      targets.push_back(verma<RatFunc>(w, s));
      targets.push_back(build_projective<RatFunc>(w, s));
    }
    targets.push_back(direct_sum(targets[0], targets[3]));
    for (const std::size_t s : {std::size_t{0}, std::size_t{3}, std::size_t{5}}) {
      const auto p = build_projective<RatFunc>(w, s);
      for (const auto& m : targets) {
        const std::size_t over_r = graded_hom_lattice(p, m).size();
        const std::size_t over_k_field = graded_hom(extend_to_K(p), extend_to_K(m)).size();
        const std::size_t over_k = graded_hom(reduce_mod_t(p), reduce_mod_t(m)).size();
        CHECK(over_r == over_k_field);
        CHECK(over_r == over_k);
        // Projectivity: maps out of P(lambda) are its lambda-weight vectors.
        CHECK(over_r == m.rank(s));
      }
    }
  }
}

TEST_CASE("duality examples") {
  const auto check_table = [](long gamma, int depth) {
    const auto report = duality_report({Cyclo(gamma)}, depth);
    CHECK(report.all_equal());
    CHECK(report.generic_gram_nonzero);
    CHECK(report.generic_filtration_match);
    const auto& w = *report.window;
    CHECK(report.cells.size() == w.slot_count() * w.slot_count());
    for (const auto& c : report.cells) {
      const long lambda = w.reduced_weight(c.lambda).rational_value().get_num().get_si();
      const long mu = w.reduced_weight(c.mu).rational_value().get_num().get_si();
      CHECK(c.lhs == composition_oracle(lambda, mu));
    }
    return report;
  };
  check_table(2, 8);
  check_table(0, 6);
  const auto diag = check_table(-1, 6);
  for (const auto& c : diag.cells) CHECK(c.lhs == (c.lambda == c.mu ? 1 : 0));

  const auto flat = duality_table({Cyclo(2)}, 4, false);
  CHECK_FALSE(flat.generic_gram_nonzero);
  CHECK_FALSE(flat.generic_filtration_match);
  CHECK_THROWS_AS(duality_report({Cyclo(2), Cyclo(0)}, 2), CongruenceViolationError);

  const auto mixed = duality_report({Cyclo(1), Cyclo::zeta(3)}, 4);
  CHECK(mixed.all_equal());
}

TEST_CASE("duality for singleton windows") {
  for (long n = -3; n <= 4; ++n) {
    for (int depth = 1; depth <= 12; ++depth) {
      CAPTURE(n);
      CAPTURE(depth);
      const auto report = duality_table({Cyclo(n)}, depth);
      CHECK(report.all_equal());
      CHECK(report.generic_gram_nonzero);
      CHECK(report.generic_filtration_match);
    }
  }
}
