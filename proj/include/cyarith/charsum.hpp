#pragma once

// Character exponent sets of diagonal hypersurfaces and their Jacobi sums
//
//   j_q(alpha) = 1/(q-1) * sum_{u in (F_q^*)^{s+1}, sum u_i = 0} prod_i chi_{alpha_i}(u_i),
//   chi_{alpha_i}(g^t) = exp(2 pi i alpha_i t),
//
// evaluated exactly in Z[mu_m] from a shared ClassHistogram.

#include <compare>
#include <string>
#include <vector>

#include "cyarith/counting.hpp"
#include "cyarith/cyclo.hpp"
#include "cyarith/ffield.hpp"

namespace cyarith::charsum {

// alpha_i = numerators[i] / denominator, each strictly between 0 and 1.
struct AlphaTuple {
  int denominator = 1;
  std::vector<int> numerators;

  // lcm of the reduced denominators: the conductor of the character values.
  int conductor() const;
  bool sums_to_integer() const;
  AlphaTuple conjugate() const;
  // t * alpha mod 1.
  AlphaTuple scaled(long t) const;
  // Same tuple over a multiple of the denominator.
  AlphaTuple over(int new_denominator) const;
  std::vector<std::string> entry_strings() const;
  std::string to_string() const;
  // Accepts "1/5,1/5,1/5,1/5,1/5".
  static AlphaTuple parse(const std::string& text);

  friend bool operator==(const AlphaTuple&, const AlphaTuple&) = default;
  friend auto operator<=>(const AlphaTuple&, const AlphaTuple&) = default;
};

struct AlphaSet {
  counting::DiagonalVariety variety;
  long prime = 0;
  std::vector<int> orders;  // l_i
  int denominator = 1;      // lcm of the l_i
  std::vector<AlphaTuple> tuples;
  // Orbits of alpha -> p alpha mod 1, as indices into tuples, each sorted,
  // listed in order of their smallest member.
  std::vector<std::vector<std::size_t>> frobenius_orbits;
};

// l_i = gcd(n_i, q-1) for the given field.
AlphaSet build_alpha_set(const counting::DiagonalVariety& v, const ffield::FieldTable& f);
// l_i = n_i; orbits under Frobenius at the good prime p.
AlphaSet build_full_alpha_set(const counting::DiagonalVariety& v, long p);
// l_i = n_i with no Frobenius orbits.
AlphaSet build_full_alpha_set(const counting::DiagonalVariety& v);

// ((d-1)^{n+2} + (-1)^{n+2} (d-1)) / d.
long long fermat_alpha_count(int d, int n);

cyclo::CycInt jacobi_sum(const ffield::FieldTable& f, const AlphaTuple& alpha, const counting::ClassHistogram& h);

// One histogram pass shared across the whole set, in tuple order.
std::vector<cyclo::CycInt> jacobi_sums(const ffield::FieldTable& f, const AlphaSet& set);

}  // namespace cyarith::charsum
