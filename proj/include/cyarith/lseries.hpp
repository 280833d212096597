#pragma once

// Dirichlet coefficients of Hasse-Weil and Hecke L-series from their Euler
// factors, and a diagnostic partial-sum evaluation.

#include <map>
#include <vector>

#include "cyarith/bigint.hpp"
#include "cyarith/counting.hpp"
#include "cyarith/cyclo.hpp"
#include "cyarith/zeta.hpp"

namespace cyarith::lseries {

struct LocalFactorCollection {
  std::map<long, zeta::LocalFactor> factors;
  std::vector<long> bad_primes;
};

// Middle local factors at every prime <= N, each truncated at the largest k
// with p^k <= N. Bad primes are recorded, not computed; primes whose
// residue fields exceed field_bound are left out and become gaps.
LocalFactorCollection collect_local_factors(const counting::DiagonalVariety& v, long N,
                                            long field_bound = ffield::kExtensionFieldBound);

struct PrimeEntry {
  long p = 0;
  int degree = 0;  // degree of the kept local factor
  bool truncated = false;
};

struct HasseWeilSeries {
  long cutoff = 0;
  std::vector<BigInt> a;    // a[n] for n = 0..N; a[0] unused
  std::vector<bool> known;  // false where a prime factor of n has no local factor
  std::vector<PrimeEntry> primes;
  std::vector<long> bad_primes;  // a_{p^k} = 0 by convention
  std::vector<long> gaps;        // primes <= N with no usable local factor
  int weight = 0;                // cohomology degree
  int degree = 0;                // largest local-factor degree
};

// Coefficients of 1/P(t) up to t^max_k; P must have constant term 1.
std::vector<BigInt> invert_series(const std::vector<BigInt>& P, int max_k);

HasseWeilSeries dirichlet_coefficients(const LocalFactorCollection& source, long N);

// The Hecke L-series sum_A J(A) NA^{-s} of the rank-r Jacobi-sum character
// with exponents a over Q(mu_m).
struct HeckeCharacterSpec {
  int m = 0;
  std::vector<int> a;
};

struct HeckeSeries {
  long cutoff = 0;
  int m = 0;
  std::vector<cyclo::CycInt> a;
  std::vector<long> ramified;   // primes dividing m; no Euler factor
  std::vector<long> norms;      // N P <= cutoff of every prime ideal used
};

HeckeSeries dirichlet_coefficients(const HeckeCharacterSpec& spec, long N,
                                   long field_bound = ffield::kExtensionFieldBound);

// Dirichlet product of two coefficient vectors of equal length.
std::vector<cyclo::CycInt> dirichlet_product(const std::vector<cyclo::CycInt>& x,
                                             const std::vector<cyclo::CycInt>& y);

struct PartialSum {
  double value = 0;
  double error_bound = 0;  // bound on |sum_{n > N} a_n n^{-s}|; may be inf
  double log10_error_bound = 0;
};

// Requires s > weight/2 + 1 and no gaps. The tail bound combines
// |a_n| <= d_D(n) n^{w/2} with Rankin's trick.
PartialSum partial_sum_eval(const HasseWeilSeries& series, double s);

}  // namespace cyarith::lseries
