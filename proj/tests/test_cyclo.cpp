#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cyarith/cyclo.hpp"
#include "cyarith/errors.hpp"
#include "properties.hpp"

using namespace cyarith;
using cyclo::CycInt;

TEST_SUITE("cyclo") {
  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclo::cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
    CHECK(cyclo::cyclotomic_polynomial(5) == std::vector<long long>{1, 1, 1, 1, 1});
    CHECK(cyclo::cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
    // Phi_105 is the first with a coefficient of absolute value 2.
    const auto& p105 = cyclo::cyclotomic_polynomial(105);
    CHECK(p105.size() == 49);
    CHECK(std::count(p105.begin(), p105.end(), -2) == 2);
  }

  TEST_CASE("roots of unity reduce correctly") {
    for (int m : {3, 4, 5, 8, 12, 15}) {
      const auto xi = CycInt::root_of_unity(m, 1);
      CHECK(xi * CycInt::root_of_unity(m, m - 1) == CycInt::integer(m, 1));
      CHECK(cyclo::pow(xi, static_cast<unsigned>(m)) == CycInt::integer(m, 1));
      CHECK(CycInt::root_of_unity(m, -1) == CycInt::root_of_unity(m, m - 1));
      // Phi_m(xi) = 0.
      CycInt phi(m);
      const auto& coeffs = cyclo::cyclotomic_polynomial(m);
      for (std::size_t e = 0; e < coeffs.size(); ++e) {
        phi += CycInt::root_of_unity(m, static_cast<long>(e)) * BigInt(coeffs[e]);
      }
      CHECK(phi.is_zero());
    }
  }

  TEST_CASE("ring axioms on random triples") {
    for (int m : {3, 4, 5, 8, 12}) {
      const auto t = props::ring_axioms(m, 200, 1000 + static_cast<unsigned>(m));
      CHECK(t.failures == 0);
    }
  }

  TEST_CASE("norm is multiplicative") {
    for (int m : {3, 4, 5, 8, 12}) CHECK(props::norm_multiplicativity(m, 100, 77 + static_cast<unsigned>(m)).failures == 0);
  }

  TEST_CASE("norm examples") {
    CHECK(cyclo::norm(CycInt::integer(5, 1)) == 1);
    CHECK(cyclo::norm(CycInt::root_of_unity(5, 1)) == 1);
    CHECK(cyclo::norm(CycInt::integer(5, 1) - CycInt::root_of_unity(5, 1)) == 5);
    CHECK(cyclo::norm(CycInt::integer(8, 1) - CycInt::root_of_unity(8, 1)) == 2);
    CHECK(cyclo::norm(CycInt::integer(7, 3)) == 729);
  }

  TEST_CASE("galois action composes and is a homomorphism") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
      const auto x = props::random_cycint(5, rng), y = props::random_cycint(5, rng);
      for (long a = 1; a < 5; ++a) {
        CHECK((x * y).galois(a) == x.galois(a) * y.galois(a));
        CHECK((x + y).galois(a) == x.galois(a) + y.galois(a));
        for (long b = 1; b < 5; ++b) CHECK(x.galois(b).galois(a) == x.galois(a * b % 5));
      }
      CHECK(x.conj() == x.galois(4));
      CHECK(x.conj().conj() == x);
    }
    CHECK_THROWS_AS(CycInt::root_of_unity(12, 1).galois(2), DomainError);
  }

  TEST_CASE("conductor mismatch is rejected") {
    CHECK_THROWS_AS(CycInt::integer(5, 1) + CycInt::integer(3, 1), DomainError);
    CHECK_THROWS_AS((void)(CycInt::integer(5, 1) * CycInt::integer(3, 1)), DomainError);
  }

  TEST_CASE("lift preserves arithmetic and embedding") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
      const auto x = props::random_cycint(5, rng), y = props::random_cycint(5, rng);
      CHECK((x * y).lift(15) == x.lift(15) * y.lift(15));
      for (long l : {1L, 2L, 7L}) CHECK(std::abs(x.embed(l) - x.lift(15).embed(l)) < 1e-9);
    }
  }

  TEST_CASE("rational_value") {
    CHECK(CycInt::integer(5, -7).rational_value() == -7);
    CHECK_THROWS_AS((void)CycInt::root_of_unity(5, 1).rational_value(), InvariantViolation);
    const auto x = CycInt::root_of_unity(5, 1) + CycInt::root_of_unity(5, 4);
    CHECK_FALSE(x.is_rational());
    CHECK((x * x + x).is_rational());  // golden ratio relation: t^2 + t = 1
    CHECK((x * x + x).rational_value() == 1);
  }

  TEST_CASE("cyclotomic units") {
    const auto u = cyclo::cyclotomic_unit(5, 2);
    CHECK(u.numeric == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-14));
    CHECK(std::abs(std::abs(u.exact.embed()) - u.numeric) < 1e-12);
    CHECK(cyclo::cyclotomic_unit(3, 2).numeric == doctest::Approx(1.0));
    CHECK(cyclo::cyclotomic_unit(7, 1).exact == CycInt::integer(7, 1));
    CHECK_THROWS_AS(cyclo::cyclotomic_unit(6, 2), DomainError);
    for (int m = 3; m <= 50; ++m) {
      for (int j = 1; j < m; ++j) {
        if (std::gcd(j, m) != 1) continue;
        const auto v = cyclo::cyclotomic_unit(m, j);
        CHECK(std::abs(std::abs(v.exact.embed()) - v.numeric) < 1e-12);
        const auto n = cyclo::norm(v.exact);
        CHECK((n == 1 || n == -1));
      }
    }
  }

  TEST_CASE("s_element") {
    const std::vector<int> zero{0, 0, 0, 0};
    CHECK(cyclo::s_element(zero, 5).is_zero());
    const std::vector<int> ones{1, 1, 1, 1, 1};
    const auto s = cyclo::s_element(ones, 5);
    for (long l = 1; l < 5; ++l) CHECK(s.coefficient_of_inverse(l) == l);
    CHECK(cyclo::hecke_weight(s) == 5);

    // Rank-5 vectors with nonzero entries summing to 0 mod 5 have constant
    // weight 5; their rank-4 truncations (non-integral sum) have weight 3.
    std::set<long> weights5, weights4;
    for (int i = 0; i < 256; ++i) {
      std::vector<int> a(5);
      int x = i, sum = 0;
      for (std::size_t k = 0; k < 4; ++k, x /= 4) {
        a[k] = x % 4 + 1;
        sum += a[k];
      }
      a[4] = (5 - sum % 5) % 5;
      if (a[4] == 0) continue;
      const auto w5 = cyclo::hecke_weight(cyclo::s_element(a, 5));
      const std::vector<int> r4(a.begin(), a.begin() + 4);
      const auto w4 = cyclo::hecke_weight(cyclo::s_element(r4, 5));
      REQUIRE(w5.has_value());
      REQUIRE(w4.has_value());
      weights5.insert(*w5);
      weights4.insert(*w4);
    }
    CHECK(weights5 == std::set<long>{5});
    CHECK(weights4 == std::set<long>{3});
  }

  TEST_CASE("delta determinant") {
    CHECK(cyclo::delta_determinant(5) == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));
    // p = 7: c = (1, 3), k = (2, 3).
    const auto th = [](int c, int k) { return std::sin(c * k * std::numbers::pi / 7) / std::sin(c * std::numbers::pi / 7); };
    const double det7 = std::abs(th(1, 2) * th(3, 3) - th(1, 3) * th(3, 2));
    CHECK(cyclo::delta_determinant(7) == doctest::Approx(det7).epsilon(1e-12));
    for (long p : {11L, 13L, 17L, 19L, 23L}) CHECK(cyclo::delta_determinant(p) > 0);
    CHECK_THROWS_AS(cyclo::delta_determinant(3), DomainError);
    CHECK_THROWS_AS(cyclo::delta_determinant(9), DomainError);
  }

  TEST_CASE("regulator rows of units sum to zero") {
    CHECK(cyclo::real_places(5) == std::vector<long>{1, 2});
    CHECK(cyclo::real_places(12) == std::vector<long>{1, 5});
    const std::vector<CycInt> one{CycInt::integer(5, 1)};
    const auto r1 = cyclo::regulator_matrix(one, 5);
    CHECK(r1[0][0] == doctest::Approx(0.0));
    CHECK(r1[0][1] == doctest::Approx(0.0));
    for (int m : {5, 7, 11, 13, 16, 20}) {
      std::vector<CycInt> units;
      for (int j = 2; 2 * j <= m; ++j) {
        if (std::gcd(j, m) == 1) units.push_back(cyclo::cyclotomic_unit(m, j).exact);
      }
      for (const auto& row : cyclo::regulator_matrix(units, m)) {
        double s = 0;
        for (double x : row) s += x;
        CHECK(std::abs(s) < 1e-10);
      }
    }
    const std::vector<CycInt> bad{CycInt(5)};
    CHECK_THROWS_AS(cyclo::regulator_matrix(bad, 5), DomainError);
  }

  TEST_CASE("formatting") {
    CHECK(CycInt(5).to_string() == "0");
    CHECK(CycInt::root_of_unity(5, 1).to_string() == "z");
    CHECK(CycInt::root_of_unity(5, 4).to_string() == "-1 - z - z^2 - z^3");
  }
}
