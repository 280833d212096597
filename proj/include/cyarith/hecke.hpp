#pragma once

// Prime ideals of Q(mu_m), power-residue characters and rank-r Jacobi sums
//
//   chi_P(u) = xi^j  with  c^j = u^{(NP-1)/m} in O/P,
//   J_a^(r)(P) = (-1)^{r+1} sum_{u_1+...+u_r = -1, u_i != 0} prod_i chi_P(u_i)^{a_i},
//
// and the comparison of these with the Jacobi sums of a diagonal variety.

#include <memory>
#include <span>
#include <vector>

#include "cyarith/charsum.hpp"
#include "cyarith/counting.hpp"
#include "cyarith/cyclo.hpp"
#include "cyarith/ffield.hpp"

namespace cyarith::hecke {

struct SplittingData {
  int f = 0;  // order of p mod m
  int g = 0;  // number of primes above p
};

// Throws DomainError when p divides m (ramified) or m < 2.
SplittingData splitting_data(long p, int m);

// The prime P above p at which xi reduces to c, an element of exact order m
// in the residue field F_{p^f}. The Frobenius conjugates c^p, c^{p^2}, ...
// label the same ideal; the constructor helpers pick c = zeta0^t with the
// least t in its orbit, zeta0 = g^{(q-1)/m}.
struct PrimeIdeal {
  std::shared_ptr<const ffield::FieldTable> field;
  int m = 0;
  int c = 0;
  long t = 1;  // c = zeta0^t

  long p() const { return field->characteristic(); }
  long norm() const { return field->order(); }
};

// All g ideals above p, sorted by t. field_bound caps p^f.
std::vector<PrimeIdeal> prime_ideals_above(long p, int m, long field_bound = ffield::kExtensionFieldBound);
// As above but requires f = 1; throws DomainError otherwise.
std::vector<PrimeIdeal> split_prime_ideals(long p, int m);

// j in 0..m-1 with chi_P(u) = xi^j; u must be a nonzero field element.
long power_residue_exponent(const PrimeIdeal& ideal, int u);
cyclo::CycInt power_residue_char(const PrimeIdeal& ideal, int u);

// Counts of (u_1..u_r), u_i != 0, sum u_i = -1, binned by dlog u_i mod m
// (coordinate 1 most significant). Shared by every ideal over one field.
struct RankHistogram {
  long field_order = 0;
  int generator = 0;
  int m = 0;
  int rank = 0;
  std::vector<BigInt> counts;
};

RankHistogram rank_histogram(const ffield::FieldTable& f, int m, int r);

// a has length r; entries taken mod m.
cyclo::CycInt ideal_jacobi_sum(const PrimeIdeal& ideal, std::span<const int> a, const RankHistogram& h);
cyclo::CycInt ideal_jacobi_sum(const PrimeIdeal& ideal, std::span<const int> a, int r);

// Ground truth by summing the definition directly; O(q^{r-1}) per call.
cyclo::CycInt ideal_jacobi_sum_direct(const PrimeIdeal& ideal, std::span<const int> a, int r);

// One representative (the least tuple) per orbit of alpha -> t alpha under
// t in (Z/D)^*, D the common denominator.
std::vector<charsum::AlphaTuple> galois_orbit_representatives(std::span<const charsum::AlphaTuple> tuples);

struct HeckeMatchReport {
  long p = 0;
  int m = 0;
  int rank = 0;
  int ideals = 0;
  int representatives = 0;
  std::vector<cyclo::CycInt> hecke_values;  // sorted
  std::vector<cyclo::CycInt> zeta_values;   // sorted j_p(alpha)
  bool matched = false;
  // J-multiset = sign * j-multiset; 0 when neither sign matches.
  int sign = 0;
  bool sign_ambiguous = false;
};

// Split primes only: p = 1 mod the common denominator of the alpha-set.
HeckeMatchReport match_hasse_weil(const counting::DiagonalVariety& v, long p);

}  // namespace cyarith::hecke
