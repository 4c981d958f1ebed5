#include <doctest.h>

#include <random>

#include "cdelab/errors.hpp"
#include "support/fixtures.hpp"

using namespace cdelab;
using cdelab::testing::hecke_over_k;
using cdelab::testing::hecke_spec;

namespace {

std::shared_ptr<const Algebra<Cyclo>> trivial_k() {
  return std::make_shared<const Algebra<Cyclo>>(ScalarRing::k, 1, std::vector<Vec<Cyclo>>{{Cyclo(1)}}, 0);
}

void check_complete_orthogonal(const Algebra<Cyclo>& a, const IdempotentSet& set) {
  Vec<Cyclo> sum(a.dimension());
  for (std::size_t i = 0; i < set.idempotents.size(); ++i) {
    sum = add(sum, set.idempotents[i]);
    for (std::size_t j = 0; j < set.idempotents.size(); ++j) {
      const auto p = a.multiply(set.idempotents[i], set.idempotents[j]);
      if (i == j) CHECK(p == set.idempotents[i]);
      else CHECK(is_zero_vector(p));
    }
  }
  CHECK(sum == a.unit_vector());
}

void check_split_invariants(const SplitAlgebra& s) {
  const auto& a = s.algebra();
  check_complete_orthogonal(a, s.idempotents());
  std::size_t regular = 0;
  for (std::size_t i = 0; i < s.simple_count(); ++i) {
    regular += s.simple(i).dimension() * s.projective(i).dimension();
    CHECK(is_local_endoring(s.projective(i)));
    const auto t = top(s.projective(i));
    for (std::size_t j = 0; j < s.simple_count(); ++j) {
      CHECK(hom_space(t, s.simple(j)).size() == (i == j ? 1u : 0u));
    }
  }
  CHECK(regular == a.dimension());
  const auto reg = regular_module(s.algebra_ptr());
  const auto oracle = composition_series_oracle(s, reg);
  std::size_t by_layers = 0;
  for (std::size_t i = 0; i < s.simple_count(); ++i) by_layers += oracle[i] * s.simple(i).dimension();
  CHECK(by_layers == a.dimension());
  for (std::size_t i = 0; i < s.simple_count(); ++i) {
    CHECK(jh_multiplicity(s, reg, i) == oracle[i]);
    const auto po = composition_series_oracle(s, s.projective(i));
    for (std::size_t j = 0; j < s.simple_count(); ++j) CHECK(jh_multiplicity(s, s.projective(i), j) == po[j]);
  }
}

}  // namespace

TEST_CASE("make_algebra: trivial, Hecke A1, broken constants") {
  CHECK(trivial_k()->dimension() == 1);
  const auto a1 = hecke_algebra(hecke_spec(HeckeType::A1, "-1+t", 1));
  CHECK(a1->dimension() == 2);
  CHECK(a1->ring() == ScalarRing::R);

  const auto a2 = hecke_algebra(hecke_spec(HeckeType::A2, "z+t", 3));
  std::vector<Vec<RatFunc>> products;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) products.push_back(a2->product(i, j));
  }
  products[1 * 6 + 2] = scale(products[1 * 6 + 2], RatFunc(2));  // s t = 2 st
  CHECK_THROWS_AS(Algebra<RatFunc>(ScalarRing::R, 3, products, 0), AssociativityError);

  std::vector<Vec<Cyclo>> bad_unit{{Cyclo(1), Cyclo()}, {Cyclo(1), Cyclo(1)}, {Cyclo(), Cyclo(1)}, {Cyclo(1), Cyclo()}};
  CHECK_THROWS_AS(Algebra<Cyclo>(ScalarRing::k, 1, bad_unit, 0), UnitLawError);

  std::vector<Vec<RatFunc>> non_integral{{RatFunc(1), RatFunc()}, {RatFunc(), RatFunc(1)},
                                         {RatFunc(), RatFunc(1)}, {parse_scalar("1/t", 1), RatFunc()}};
  CHECK_THROWS_AS(Algebra<RatFunc>(ScalarRing::R, 1, non_integral, 0), NonIntegralError);
  CHECK_NOTHROW(Algebra<RatFunc>(ScalarRing::K, 1, non_integral, 0));
}

TEST_CASE("associativity error names the failing indices") {
  // Two-dimensional algebra with x^2 = x but a non-associative twist is impossible,
  // so break a 3-dimensional one: 1, x, y with xy = x and yx = 0, x^2 = y^2 = 0.
  std::vector<Vec<Cyclo>> p(9, Vec<Cyclo>(3));
  for (std::size_t j = 0; j < 3; ++j) {
    p[0 * 3 + j][j] = 1;
    p[j * 3 + 0][j] = 1;
  }
  p[1 * 3 + 2][1] = 1;
  try {
    Algebra<Cyclo>(ScalarRing::k, 1, p, 0);
    FAIL("expected an associativity error");
  } catch (const AssociativityError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("(i,j,k,l)") != std::string::npos);
  }
}

TEST_CASE("extend_scalars") {
  const auto a1 = hecke_algebra(hecke_spec(HeckeType::A1, "-1+t", 1));
  const auto a1k = reduce_to_k(*a1);
  CHECK(a1k->product(1, 1) == Vec<Cyclo>{Cyclo(-1), Cyclo(-2)});  // s^2 = -2 s - 1
  const auto a2 = hecke_algebra(hecke_spec(HeckeType::A2, "z+t", 3));
  const auto a2K = extend_to_K(*a2);
  CHECK(a2K->ring() == ScalarRing::K);
  CHECK(a2K->dimension() == 6);
  CHECK(reduce_to_k(Algebra<RatFunc>(ScalarRing::R, 1, {{RatFunc(1)}}, 0))->dimension() == 1);
}

TEST_CASE("regular_module") {
  CHECK(regular_module(trivial_k()).action(0).is_identity());
  const auto a1 = hecke_algebra(hecke_spec(HeckeType::A1, "-1+t", 1));
  const auto reg = regular_module(std::shared_ptr<const Algebra<RatFunc>>(a1));
  const RatFunc q = parse_scalar("-1+t", 1);
  const auto& s = reg.action(1);
  CHECK(s(0, 0).is_zero());
  CHECK(s(0, 1) == q);
  CHECK(s(1, 0).is_one());
  CHECK(s(1, 1) == q - RatFunc(1));
  const auto a2 = hecke_algebra(hecke_spec(HeckeType::A2, "z+t", 3));
  CHECK(regular_module(std::shared_ptr<const Algebra<RatFunc>>(a2)).dimension() == 6);
}

TEST_CASE("radical") {
  const auto a1 = hecke_over_k(HeckeType::A1, "-1+t", 1);
  const auto j = radical(*a1);
  REQUIRE(j.size() == 1);
  CHECK(j[0][0] == j[0][1]);  // spanned by 1 + s
  CHECK(radical(*extend_to_K(*hecke_algebra(hecke_spec(HeckeType::A2, "z+t", 3)))).empty());
  CHECK(radical(*trivial_k()).empty());
}

TEST_CASE("primitive idempotents") {
  const auto a1 = hecke_over_k(HeckeType::A1, "-1+t", 1);
  const auto s1 = primitive_idempotents(*a1);
  REQUIRE(s1.idempotents.size() == 1);
  CHECK(s1.idempotents[0] == a1->unit_vector());

  const auto kk = testing::product_kk();
  const auto s2 = primitive_idempotents(*kk);
  CHECK(s2.idempotents.size() == 2);
  check_complete_orthogonal(*kk, s2);

  const auto a2 = hecke_over_k(HeckeType::A2, "z+t", 3);
  const SplitAlgebra split(a2);
  CHECK(split.simple_count() == 2);
  CHECK(split.projective(0).dimension() == 3);
  CHECK(split.projective(1).dimension() == 3);
  check_split_invariants(split);
}

TEST_CASE("non-split quotients are rejected") {
  CHECK_THROWS_AS(primitive_idempotents(*testing::quadratic(1, -1)), NonSplitError);
  CHECK(primitive_idempotents(*testing::quadratic(4, -1)).idempotents.size() == 2);
  CHECK_THROWS_AS(primitive_idempotents(*testing::quadratic(3, 2)), NonSplitError);
  CHECK_THROWS_AS(primitive_idempotents(*testing::quaternions(1)), NonSplitError);
  const SplitAlgebra h(testing::quaternions(4));
  CHECK(h.simple_count() == 1);
  CHECK(h.simple(0).dimension() == 2);
  CHECK(h.idempotents().idempotents.size() == 2);
  check_split_invariants(h);
}

TEST_CASE("indecomposable projectives") {
  const auto p1 = indecomposable_projectives(hecke_over_k(HeckeType::A1, "-1+t", 1));
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].dimension() == 2);
  CHECK(p1[0].kind() == ModuleKind::projective_indecomposable);

  const auto p3 = indecomposable_projectives(hecke_over_k(HeckeType::A2, "z+t", 3));
  REQUIRE(p3.size() == 2);
  CHECK(p3[0].dimension() == 3);
  CHECK(p3[1].dimension() == 3);

  const auto p0 = indecomposable_projectives(hecke_over_k(HeckeType::A2, "t", 1));
  std::vector<std::size_t> dims;
  for (const auto& p : p0) dims.push_back(p.dimension());
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{1, 1, 2, 2});
}

TEST_CASE("top") {
  const auto a1 = hecke_over_k(HeckeType::A1, "-1+t", 1);
  const auto t = top(regular_module(a1));
  REQUIRE(t.dimension() == 1);
  CHECK(t.action(1)(0, 0) == Cyclo(-1));
  CHECK(t.kind() == ModuleKind::simple);

  const SplitAlgebra split(hecke_over_k(HeckeType::A2, "z+t", 3));
  bool found_sign = false;
  for (const auto& p : split.projectives()) {
    const auto tp = top(p);
    if (tp.action(1)(0, 0) == Cyclo(-1) && tp.action(2)(0, 0) == Cyclo(-1)) found_sign = true;
  }
  CHECK(found_sign);
  CHECK(top(regular_module(trivial_k())).dimension() == 1);
}

TEST_CASE("hom_space and Cartan entries") {
  const SplitAlgebra split(hecke_over_k(HeckeType::A2, "z+t", 3));
  CHECK(hom_space(split.simple(0), split.simple(0)).size() == 1);
  CHECK(hom_space(split.simple(0), split.simple(1)).size() == 0);
  CHECK(hom_space(split.projective(0), split.projective(1)).size() == 1);
  CHECK(hom_space(split.projective(0), split.projective(0)).size() == 2);
  for (const auto& f : hom_space(split.projective(0), split.projective(1))) {
    for (std::size_t g = 0; g < 6; ++g) {
      CHECK(f * split.projective(0).action(g) == split.projective(1).action(g) * f);
    }
  }
}

TEST_CASE("jh_multiplicity and the composition series oracle") {
  const SplitAlgebra a1(hecke_over_k(HeckeType::A1, "-1+t", 1));
  const auto reg = regular_module(a1.algebra_ptr());
  CHECK(jh_multiplicity(a1, reg, 0) == 2);
  CHECK(composition_series_oracle(a1, reg) == std::vector<std::size_t>{2});

  const SplitAlgebra a2(hecke_over_k(HeckeType::A2, "z+t", 3));
  CHECK(jh_multiplicity(a2, a2.projective(0), 0) == 2);
  CHECK(jh_multiplicity(a2, a2.projective(0), 1) == 1);
  CHECK(composition_series_oracle(a2, a2.projective(0)) == std::vector<std::size_t>{2, 1});
  CHECK(composition_series_oracle(a2, a2.simple(1)) == std::vector<std::size_t>{0, 1});

  const Representation<Cyclo> zero(a2.algebra_ptr(), std::vector<Matrix<Cyclo>>(6, Matrix<Cyclo>(0, 0)));
  CHECK(jh_multiplicity(a2, zero, 0) == 0);
}

TEST_CASE("is_local_endoring") {
  const SplitAlgebra a2(hecke_over_k(HeckeType::A2, "z+t", 3));
  CHECK(is_local_endoring(a2.simple(0)));
  CHECK(is_local_endoring(a2.projective(0)));
  CHECK(is_local_endoring(a2.projective(1)));
  CHECK_FALSE(is_local_endoring(direct_sum(a2.simple(0), a2.simple(1))));
  CHECK_FALSE(is_local_endoring(direct_sum(a2.simple(0), a2.simple(0))));
}

TEST_CASE("endomorphism_algebra") {
  const SplitAlgebra a2(hecke_over_k(HeckeType::A2, "z+t", 3));
  CHECK(endomorphism_algebra(a2.simple(0)).algebra->dimension() == 1);
  const auto e11 = endomorphism_algebra(direct_sum(a2.simple(0), a2.simple(0)));
  CHECK(e11.algebra->dimension() == 4);
  CHECK(e11.basis[0].is_identity());
  CHECK(radical(*e11.algebra).empty());
  const auto ep = endomorphism_algebra(a2.projective(0));
  CHECK(ep.algebra->dimension() == 2);
  CHECK(radical(*ep.algebra).size() == 1);
}

TEST_CASE("split invariants on built-in algebras") {
  for (const auto& [type, q, order] : std::vector<std::tuple<HeckeType, std::string, int>>{
           {HeckeType::A1, "-1+t", 1},
           {HeckeType::A1, "t", 1},
           {HeckeType::A2, "z+t", 3},
           {HeckeType::A2, "t", 1},
           {HeckeType::A2, "1", 1},
           {HeckeType::A2, "2+t", 1},
           {HeckeType::A2, "-1+t", 1}}) {
    CAPTURE(q);
    check_split_invariants(SplitAlgebra(hecke_over_k(type, q, order)));
  }
}

TEST_CASE("group algebra of S3 at q = 1") {
  const SplitAlgebra s3(hecke_over_k(HeckeType::A2, "1", 1));
  REQUIRE(s3.simple_count() == 3);
  std::vector<std::size_t> dims;
  for (const auto& s : s3.simples()) dims.push_back(s.dimension());
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{1, 1, 2});
  CHECK(s3.radical_basis().empty());
}

TEST_CASE("jh_multiplicity agrees with the composition-series oracle up to dimension 60") {
  std::mt19937 rng(60);
  std::uniform_int_distribution<int> small(-2, 2);
  for (const auto& [q, order] : {std::pair<const char*, int>{"z", 3}, {"0", 1}}) {
    const SplitAlgebra s(hecke_over_k(HeckeType::A2, q, order));
    std::vector<Representation<Cyclo>> pieces;
    for (std::size_t i = 0; i < s.simple_count(); ++i) {
      pieces.push_back(s.simple(i));
      pieces.push_back(s.projective(i));
    }
    pieces.push_back(regular_module(s.algebra_ptr()));
    for (const std::size_t target : {12u, 30u, 60u}) {
      std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
      Representation<Cyclo> m = s.simple(0);
      while (true) {
        const auto& next = pieces[pick(rng)];
        if (m.dimension() + next.dimension() > target) break;
        m = direct_sum(m, next);
      }
      // Conjugate by a random unitriangular matrix to hide the block structure.
      const std::size_t n = m.dimension();
      Matrix<Cyclo> g = Matrix<Cyclo>::identity(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n && j < i + 4; ++j) g(i, j) = Cyclo(small(rng));
      }
      const Matrix<Cyclo> gi = inverse(g);
      std::vector<Matrix<Cyclo>> actions;
      for (const auto& a : m.actions()) actions.push_back(gi * a * g);
      const Representation<Cyclo> hidden(s.algebra_ptr(), actions);
      CAPTURE(n);
      const auto oracle = composition_series_oracle(s, hidden);
      for (std::size_t i = 0; i < s.simple_count(); ++i) CHECK(jh_multiplicity(s, hidden, i) == oracle[i]);
    }
  }
}
