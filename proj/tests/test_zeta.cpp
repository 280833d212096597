#include <doctest.h>

#include <vector>

#include "cyarith/errors.hpp"
#include "cyarith/zeta.hpp"
#include "oracles.hpp"

using namespace cyarith;
using counting::DiagonalVariety;

TEST_SUITE("zeta") {
  TEST_CASE("quintic local factor at a split prime") {
    const auto lf = zeta::local_factor_middle(DiagonalVariety::fermat(5, 3), 11);
    CHECK(lf.degree() == 204);
    CHECK(lf.coeffs.size() == 205);
    CHECK(lf.coeffs[0] == 1);
    CHECK(lf.cohomology_degree == 3);
    CHECK(lf.complete());
    CHECK(zeta::check_riemann_hypothesis(lf).all_pass);
    const auto fe = zeta::check_functional_equation(lf);
    CHECK(fe.conjugation_closed);
    CHECK((fe.sign == 1 || fe.sign == -1));
  }

  TEST_CASE("degree is the same at every good prime") {
    const auto v = DiagonalVariety::fermat(5, 3);
    for (long p : {2L, 3L, 7L, 11L, 13L, 19L, 29L, 31L}) {
      const auto lf = zeta::local_factor_middle(v, p);
      CHECK(lf.degree() == 204);
      CHECK(zeta::check_riemann_hypothesis(lf).all_pass);
      CHECK(zeta::check_functional_equation(lf).conjugation_closed);
    }
  }

  TEST_CASE("bad reduction is rejected") {
    CHECK_THROWS_AS(zeta::local_factor_middle(DiagonalVariety::fermat(5, 3), 5), BadReductionError);
    CHECK_THROWS_AS(zeta::local_factor_middle(DiagonalVariety::fermat(3, 1), 3), BadReductionError);
  }

  TEST_CASE("quintic at p = 2") {
    const auto z = zeta::congruent_zeta(DiagonalVariety::fermat(5, 3), 2);
    const std::vector<long long> expect{15, 85, 585, 17425};
    for (int r = 1; r <= 4; ++r) CHECK(zeta::predicted_count(z, r) == expect[static_cast<std::size_t>(r - 1)]);
    // All 51 orbits share one beta.
    REQUIRE(z.middle.roots.size() == 1);
    CHECK(z.middle.roots[0].multiplicity == 51);
    CHECK(z.middle.roots[0].t_power == 4);
  }

  TEST_CASE("predicted counts agree with point counts") {
    const auto v = DiagonalVariety::fermat(5, 3);
    for (long p : {2L, 3L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
      const auto z = zeta::congruent_zeta(v, p);
      long q = p;
      for (int r = 1; q <= (1L << 16); ++r, q *= p) {
        const auto f = ffield::make_extension_field(p, r);
        CHECK_MESSAGE(zeta::predicted_count(z, r) == counting::count_projective(v, f), "p=", p, " r=", r);
      }
    }
  }

  TEST_CASE("elliptic curve and K3 surface") {
    const auto cubic = DiagonalVariety::fermat(3, 1);
    for (long p : {7L, 13L, 19L, 31L, 2L, 5L, 11L}) {
      const auto z = zeta::congruent_zeta(cubic, p);
      CHECK(z.middle.degree() == 2);
      CHECK(zeta::predicted_count(z, 1) == oracle::fermat_cubic_points(p));
    }
    const auto k3 = DiagonalVariety::fermat(4, 2);
    for (long p : {3L, 5L, 13L, 17L}) {
      const auto z = zeta::congruent_zeta(k3, p);
      CHECK(z.middle.degree() == 21);
      CHECK(zeta::predicted_count(z, 1) == oracle::projective_count(k3.exponents, p));
      CHECK(zeta::check_riemann_hypothesis(z.middle).all_pass);
    }
  }

  TEST_CASE("hodge numbers and expected degrees") {
    const auto hq = zeta::fermat_hodge_numbers(DiagonalVariety::fermat(5, 3));
    CHECK(hq.h21 == 101);
    CHECK(hq.h11 == 1);
    const auto dq = zeta::expected_degrees(hq, 3);
    CHECK(dq == std::vector<int>{1, 0, 1, 204, 1, 0, 1});
    const auto hk = zeta::fermat_hodge_numbers(DiagonalVariety::fermat(4, 2));
    CHECK(hk.h11 == 20);
    const auto dk = zeta::expected_degrees(hk, 2);
    CHECK(dk == std::vector<int>{1, 0, 22, 0, 1});
    const auto he = zeta::expected_degrees(zeta::fermat_hodge_numbers(DiagonalVariety::fermat(3, 1)), 1);
    CHECK(he == std::vector<int>{1, 2, 1});
    const auto z = zeta::congruent_zeta(DiagonalVariety::fermat(5, 3), 11);
    REQUIRE(z.hodge.has_value());
    CHECK(z.trivial_powers == std::vector<int>{0, 1, 2, 3});
  }

  TEST_CASE("truncated factors") {
    const auto v = DiagonalVariety::fermat(5, 3);
    const auto full = zeta::local_factor_middle(v, 2);
    zeta::LocalFactorOptions opts;
    opts.max_t_degree = 3;
    const auto cut = zeta::local_factor_middle(v, 2, opts);
    CHECK_FALSE(cut.complete());
    CHECK(cut.roots.empty());
    CHECK(cut.omitted_degree == 204);
    CHECK(cut.coeffs == std::vector<BigInt>{1});
    opts.max_t_degree = 8;
    const auto cut8 = zeta::local_factor_middle(v, 2, opts);
    for (std::size_t i = 0; i < cut8.coeffs.size(); ++i) CHECK(cut8.coeffs[i] == full.coeffs[i]);
    CHECK_THROWS_AS(zeta::check_functional_equation(cut8), DomainError);
  }

  TEST_CASE("expand_roots") {
    using cyclo::CycInt;
    const std::vector<zeta::Root> roots{{CycInt::integer(1, 3), 2, 1}, {CycInt::integer(1, -1), 1, 2}};
    // (1 - 3t)^2 (1 + t^2)
    CHECK(zeta::expand_roots(roots) == std::vector<BigInt>{1, -6, 10, -6, 9});
    CHECK(zeta::expand_roots(roots, 2) == std::vector<BigInt>{1, -6, 10});
    const std::vector<zeta::Root> irrational{{CycInt::root_of_unity(5, 1), 1, 1}};
    CHECK_THROWS_AS(zeta::expand_roots(irrational), InvariantViolation);
  }

  TEST_CASE("empty factor passes both checks") {
    zeta::LocalFactor lf;
    lf.p = 7;
    lf.cohomology_degree = 3;
    lf.coeffs = {1};
    CHECK(zeta::check_riemann_hypothesis(lf).all_pass);
    const auto fe = zeta::check_functional_equation(lf);
    CHECK(fe.conjugation_closed);
    CHECK(fe.sign == 1);
  }

  TEST_CASE("riemann hypothesis detects a wrong absolute value") {
    zeta::LocalFactor lf;
    lf.p = 11;
    lf.cohomology_degree = 3;
    lf.roots = {{cyclo::CycInt::integer(1, 1331), 1, 1}, {cyclo::CycInt::integer(1, 36), 1, 1}};
    lf.coeffs = zeta::expand_roots(lf.roots);
    const auto rh = zeta::check_riemann_hypothesis(lf);
    CHECK_FALSE(rh.all_pass);
    CHECK(rh.root_pass == std::vector<bool>{false, false});
  }
}
