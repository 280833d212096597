#pragma once

// Fully tabulated finite fields F_q, q = p^r.
//
// Elements are indexed 0..q-1 by their coefficient vectors in
// F_p[x]/(modulus): index = c_0 + c_1 p + ... + c_{r-1} p^{r-1}. Index 0 is
// zero, index 1 is one, and indices 0..p-1 are the prime subfield. All
// arithmetic goes through exp/log/Zech tables, so every operation is O(1).

#include <cstdint>
#include <span>
#include <vector>

namespace cyarith::ffield {

inline constexpr long kPrimeFieldBound = 100'000;
inline constexpr long kExtensionFieldBound = 1L << 20;

bool is_prime(long n);
std::vector<long> prime_factors(long n);

// Monic polynomial given low degree first, leading coefficient included.
bool is_irreducible(std::span<const int> poly, long p);

class FieldTable {
 public:
  long characteristic() const { return p_; }
  int degree() const { return r_; }
  long order() const { return q_; }
  // Monic modulus, low degree first (length r+1). {0, 1} ("x") when r = 1.
  const std::vector<int>& modulus() const { return modulus_; }
  int generator() const { return g_; }

  int dlog(int x) const;
  int exp(long e) const { return exp_[static_cast<std::size_t>(reduce_exponent(e))]; }

  int add(int x, int y) const;
  int neg(int x) const;
  int sub(int x, int y) const { return add(x, neg(y)); }
  int mul(int x, int y) const;
  int inv(int x) const;
  int pow(int x, long e) const;
  int frobenius(int x) const { return pow(x, p_); }
  long unit_order(int x) const;

  bool in_prime_subfield(int x) const { return x < p_; }
  std::vector<int> coefficients(int x) const;
  int element(std::span<const int> coeffs) const;

  // Raw dlog table (size q, entry 0 is -1); handy for tight kernels.
  std::span<const std::int32_t> log_table() const { return log_; }

  // The same field with a different generator; g must have order q-1.
  FieldTable with_generator(int g) const;

 private:
  friend FieldTable make_prime_field(long p, long bound);
  friend FieldTable make_extension_field(long p, int r, long bound);
  FieldTable(long p, int r, std::vector<int> modulus, int g);

  long reduce_exponent(long e) const {
    long m = e % (q_ - 1);
    return m < 0 ? m + (q_ - 1) : m;
  }

  long p_;
  int r_;
  long q_;
  std::vector<int> modulus_;
  int g_;
  long half_;  // dlog(-1)
  std::vector<std::int32_t> exp_;
  std::vector<std::int32_t> log_;
  std::vector<std::int32_t> zech_;  // dlog(1 + g^n), -1 when 1 + g^n = 0
};

FieldTable make_prime_field(long p, long bound = kPrimeFieldBound);
FieldTable make_extension_field(long p, int r, long bound = kExtensionFieldBound);

inline int dlog(const FieldTable& f, int x) { return f.dlog(x); }

}  // namespace cyarith::ffield
