#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "cyarith/cft.hpp"
#include "cyarith/errors.hpp"
#include "oracles.hpp"

using namespace cyarith;
using cft::Rational;

TEST_SUITE("cft") {
  TEST_CASE("central charge and conformal weights") {
    const auto d = cft::modular_data(3);
    CHECK(d.c == Rational(9, 5));
    CHECK(d.delta[1] == Rational(3, 20));
    CHECK(d.delta[0] == Rational(0));
    CHECK(cft::modular_data(1).c == Rational(1));
    CHECK_THROWS_AS(cft::modular_data(0), DomainError);
  }

  TEST_CASE("S matrix") {
    const auto s1 = cft::modular_data(1).S;
    const double h = 1 / std::sqrt(2.0);
    CHECK(s1[0][0] == doctest::Approx(h));
    CHECK(s1[0][1] == doctest::Approx(h));
    CHECK(s1[1][1] == doctest::Approx(-h));
    for (int k = 1; k <= 50; ++k) {
      const auto S = cft::modular_data(k).S;
      const std::size_t n = S.size();
      double worst = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          double acc = 0;
          for (std::size_t l = 0; l < n; ++l) acc += S[i][l] * S[l][j];
          worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
          CHECK(S[i][j] == doctest::Approx(S[j][i]));
        }
      }
      CHECK(worst < 1e-12);
    }
  }

  TEST_CASE("N=2 spectrum") {
    const auto sp = cft::n2_spectrum(3);
    for (const auto& st : sp.states) {
      CHECK((st.l + st.q + st.s) % 2 == 0);
      CHECK(std::abs(st.q - st.s) <= st.l);
      CHECK(st.delta == Rational(st.l * (st.l + 2) - st.q * st.q, 20) + Rational(st.s * st.s, 8));
      CHECK(st.charge == Rational(st.q, 5) - Rational(st.s, 2));
    }
    const auto it = std::find_if(sp.states.begin(), sp.states.end(),
                                 [](const auto& st) { return st.l == 1 && st.q == 1 && st.s == 0; });
    REQUIRE(it != sp.states.end());
    CHECK(it->delta == Rational(1, 10));
    CHECK(it->charge == Rational(1, 5));
    CHECK(std::is_sorted(sp.states.begin(), sp.states.end(), [](const auto& a, const auto& b) {
      return std::tie(a.l, a.q, a.s) < std::tie(b.l, b.q, b.s);
    }));
  }

  TEST_CASE("quantum dimensions") {
    CHECK(cft::quantum_dimension(3, 1) == doctest::Approx((1 + std::sqrt(5.0)) / 2));
    CHECK(cft::quantum_dimension(2, 1) == doctest::Approx(std::sqrt(2.0)));
    CHECK(cft::quantum_dimension(5, 0) == doctest::Approx(1.0));
    CHECK(cft::quantum_dimension(5, 5) == doctest::Approx(1.0));
    CHECK_THROWS_AS(cft::quantum_dimension(3, 4), DomainError);
  }

  TEST_CASE("verlinde fusion agrees with the closed form") {
    for (int k = 1; k <= 20; ++k) {
      const auto t = cft::verlinde_fusion(k);
      CHECK(t.max_residual < 1e-9);
      for (int l = 0; l <= k; ++l) {
        for (int m = 0; m <= k; ++m) {
          for (int n = 0; n <= k; ++n) CHECK(t.at(l, m, n) == oracle::su2_fusion(k, l, m, n));
        }
      }
    }
  }

  TEST_CASE("dilogarithm values") {
    const double pi2 = std::numbers::pi * std::numbers::pi;
    CHECK(cft::euler_li2(0.0) == 0.0);
    CHECK(cft::euler_li2(1.0) == doctest::Approx(pi2 / 6).epsilon(1e-14));
    CHECK(cft::euler_li2(-1.0) == doctest::Approx(-pi2 / 12).epsilon(1e-14));
    CHECK(cft::euler_li2(0.5) == doctest::Approx(pi2 / 12 - std::log(2.0) * std::log(2.0) / 2).epsilon(1e-14));
    CHECK(cft::rogers_L(1.0) == doctest::Approx(pi2 / 6).epsilon(1e-14));
    CHECK(cft::rogers_L(0.5) == doctest::Approx(pi2 / 12).epsilon(1e-14));
    CHECK(cft::rogers_L(0.0) == 0.0);
    // Reflection: L(x) + L(1-x) = L(1).
    for (double x : {0.1, 0.3, 0.7, 0.95}) CHECK(cft::rogers_L(x) + cft::rogers_L(1 - x) == doctest::Approx(pi2 / 6));
    const double phi = (std::sqrt(5.0) - 1) / 2;
    CHECK(cft::rogers_L(phi) == doctest::Approx(pi2 / 10).epsilon(1e-13));
    CHECK(cft::rogers_L(2.0) == doctest::Approx(2 * pi2 / 6 - cft::rogers_L(0.5)));
    CHECK_THROWS_AS(cft::euler_li2(1.5), DomainError);
    CHECK_THROWS_AS(cft::rogers_L(-0.5), DomainError);
  }

  TEST_CASE("dilogarithm sum rules") {
    for (int k = 1; k <= 30; ++k) CHECK(cft::check_kr_identity(k) < 1e-9);
    for (int k = 1; k <= 12; ++k) {
      for (int m = 0; m <= k; ++m) {
        const auto r = cft::check_kn_identity(k, m);
        if (!r.skipped()) CHECK_MESSAGE(r.residual < 1e-9, "k=", k, " m=", m);
      }
    }
    const auto skip = cft::check_kn_identity(2, 1);
    CHECK(skip.skipped());
    CHECK(skip.vanishing_l == 1);
    CHECK_FALSE(cft::check_kn_identity(3, 1).skipped());
    CHECK_THROWS_AS(cft::check_kn_identity(3, 4), DomainError);
  }

  TEST_CASE("quantum dimensions lie in the cyclotomic field") {
    for (int k = 1; k <= 20; ++k) {
      const auto r = cft::fusion_field_match(k);
      CHECK(r.matched);
      CHECK(r.conductor == k + 2);
      CHECK(r.max_difference < 1e-12);
      for (const auto& e : r.entries) {
        if (std::gcd(e.l + 1, k + 2) == 1) CHECK(e.unit_index == e.l + 1);
        else CHECK_FALSE(e.unit_index.has_value());
      }
    }
  }

  TEST_CASE("gepner level combinations") {
    CHECK(cft::central_charge_sum({3, 3, 3, 3, 3}) == 9);
    CHECK(cft::central_charge_sum({1, 1, 1, 1, 1, 1, 1, 1, 1}) == 9);
    CHECK(cft::central_charge_sum({1}) == 1);
    CHECK(cft::central_charge_sum({2}) == cft::BigRational(3, 2));
    const auto all = cft::gepner_levels();
    REQUIRE_FALSE(all.empty());
    for (const auto& ks : all) {
      CHECK(cft::central_charge_sum(ks) == 9);
      CHECK(std::is_sorted(ks.begin(), ks.end()));
      CHECK(ks.size() <= 9);
    }
    const auto has = [&](std::vector<int> ks) { return std::find(all.begin(), all.end(), ks) != all.end(); };
    CHECK(has({3, 3, 3, 3, 3}));
    CHECK(has({2, 2, 2, 2, 2, 2}));
    CHECK(has({1, 1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(has({1, 1, 1, 1, 1, 1}) == false);
    CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    }));
    // Integer brute force over four levels <= 40: sum 3k/(k+2) = 9.
    std::vector<std::vector<int>> four;
    for (long long a = 1; a <= 40; ++a) {
      for (long long b = a; b <= 40; ++b) {
        for (long long c = b; c <= 40; ++c) {
          for (long long d = c; d <= 40; ++d) {
            const long long A = a + 2, B = b + 2, C = c + 2, D = d + 2;
            const long long lhs = 3 * (a * B * C * D + b * A * C * D + c * A * B * D + d * A * B * C);
            if (lhs == 9 * A * B * C * D) four.push_back({int(a), int(b), int(c), int(d)});
          }
        }
      }
    }
    REQUIRE_FALSE(four.empty());
    for (const auto& ks : four) CHECK(has(ks));
    CHECK_THROWS_AS(cft::gepner_levels(0), DomainError);
  }
}
