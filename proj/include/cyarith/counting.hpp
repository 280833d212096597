#pragma once

// Point counts of diagonal hypersurfaces sum_i x_i^{n_i} = 0 in P_s over a
// tabulated F_q, and the dlog-class histogram of the hyperplane sum_i u_i = 0
// that feeds the Jacobi-sum kernels.

#include <cstdint>
#include <span>
#include <vector>

#include "cyarith/bigint.hpp"
#include "cyarith/ffield.hpp"

namespace cyarith::counting {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 2'000'000'000ULL;

struct DiagonalVariety {
  std::vector<int> exponents;

  // Throws DomainError unless there are >= 3 exponents, all >= 2.
  explicit DiagonalVariety(std::vector<int> exps);
  // Fermat hypersurface of degree d and complex dimension n (n+2 variables).
  static DiagonalVariety fermat(int d, int n);

  int ambient_dim() const { return static_cast<int>(exponents.size()) - 1; }
  int complex_dim() const { return ambient_dim() - 1; }
  bool is_fermat() const;
  // Fermat with d = s+1.
  bool is_calabi_yau() const;
  // Fermat degree (throws unless is_fermat()).
  int degree() const;
  bool has_good_reduction(long p) const;

  friend bool operator==(const DiagonalVariety&, const DiagonalVariety&) = default;
};

// Projective points over F_q via class convolution; O(s q L) with L the lcm
// of gcd(n_i, q-1).
BigInt count_projective(const DiagonalVariety& v, const ffield::FieldTable& f);

// Ground truth: enumerates the first s coordinates and solves for the last.
BigInt count_projective_direct(const DiagonalVariety& v, const ffield::FieldTable& f,
                               std::uint64_t budget = kDefaultEnumerationBudget);

// Affine solutions of sum_i x_i^{n_i} = 0, including the origin.
BigInt count_affine(const DiagonalVariety& v, const ffield::FieldTable& f);

// Counts of (u_0..u_s) in (F_q^*)^{s+1} with sum u_i = 0, binned by
// (dlog u_i mod l_i), l_i = gcd(n_i, q-1). Bins use row-major order with
// coordinate 0 most significant.
struct ClassHistogram {
  long field_order = 0;
  long characteristic = 0;
  int generator = 0;
  std::vector<int> orders;
  std::vector<BigInt> counts;

  std::size_t bin_index(std::span<const int> residues) const;
  std::vector<int> residues(std::size_t index) const;
  BigInt total_mass() const;
};

ClassHistogram class_histogram(const DiagonalVariety& v, const ffield::FieldTable& f);

ClassHistogram class_histogram_direct(const DiagonalVariety& v, const ffield::FieldTable& f,
                                      std::uint64_t budget = kDefaultEnumerationBudget);

// ((q-1)^k + (-1)^k (q-1)) / q: tuples in (F_q^*)^k summing to zero.
BigInt nonzero_hyperplane_count(long q, int k);

}  // namespace cyarith::counting
