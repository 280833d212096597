#pragma once

// Congruent zeta functions of diagonal hypersurfaces X of dimension n:
//
//   Z(X/F_p, t) = P_n(t)^{(-1)^{n+1}} / prod_{j=0}^{n} (1 - p^j t),
//   P_n(t) = prod over Frobenius orbits O of (1 - beta_O t^{|O|}),
//   beta_O = (-1)^n j_{p^|O|}(alpha), alpha in O.

#include <optional>
#include <vector>

#include "cyarith/bigint.hpp"
#include "cyarith/counting.hpp"
#include "cyarith/cyclo.hpp"
#include "cyarith/ffield.hpp"

namespace cyarith::zeta {

struct Root {
  cyclo::CycInt beta;
  int multiplicity = 1;
  int t_power = 1;  // the root contributes (1 - beta t^f)^multiplicity
};

struct LocalFactor {
  long p = 0;
  int cohomology_degree = 0;
  std::vector<Root> roots;
  std::vector<BigInt> coeffs;  // constant term first
  // Exact modulo t^(max_t_degree+1) when >= 0; otherwise complete.
  int max_t_degree = -1;
  int omitted_degree = 0;  // degree of orbit factors skipped by truncation

  int degree() const;  // sum of multiplicity * t_power over the kept roots
  bool complete() const { return max_t_degree < 0; }
};

struct LocalFactorOptions {
  // Skip orbits with t-power above this (they do not affect lower
  // coefficients); -1 keeps every orbit.
  int max_t_degree = -1;
  long field_bound = ffield::kExtensionFieldBound;
};

LocalFactor local_factor_middle(const counting::DiagonalVariety& v, long p, const LocalFactorOptions& options = {});

// prod (1 - beta t^f)^mult, truncated above max_degree when max_degree >= 0.
// Throws InvariantViolation when a coefficient fails to be rational.
std::vector<BigInt> expand_roots(const std::vector<Root>& roots, int max_degree = -1);

struct HodgeNumbers {
  int h10 = 1;
  int h20 = 1;
  int h11 = 1;
  int h21 = 0;
  int h31 = 0;
  int h22 = 0;
};

// deg P_i for i = 0..2n; n in 1..4.
std::vector<int> expected_degrees(const HodgeNumbers& hodge, int n);

// Fermat hypersurfaces only: primitive h^{n-k,k} counts alpha with
// sum alpha_i = k+1; the hyperplane class adds 1 on the diagonal.
HodgeNumbers fermat_hodge_numbers(const counting::DiagonalVariety& v);

struct CongruentZeta {
  counting::DiagonalVariety variety;
  long p;
  std::vector<int> trivial_powers;  // j with a (1 - p^j t) denominator factor
  LocalFactor middle;
  std::optional<HodgeNumbers> hodge;
};

CongruentZeta congruent_zeta(const counting::DiagonalVariety& v, long p, const LocalFactorOptions& options = {});
CongruentZeta congruent_zeta(const counting::DiagonalVariety& v, LocalFactor middle);

// sum over roots with f | r of multiplicity * f * beta^(r/f); rational.
BigInt power_trace(const LocalFactor& lf, int r);

// N_r = sum_j p^{jr} + (-1)^n power_trace(r).
BigInt predicted_count(const CongruentZeta& z, int r);

struct RiemannReport {
  std::vector<bool> root_pass;
  bool all_pass = true;
};

RiemannReport check_riemann_hypothesis(const LocalFactor& lf);

struct FunctionalEquationReport {
  bool conjugation_closed = false;
  int sign = 0;
};

// Throws InvariantViolation when no sign makes the palindrome identity hold.
FunctionalEquationReport check_functional_equation(const LocalFactor& lf);

}  // namespace cyarith::zeta
