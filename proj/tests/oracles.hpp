#pragma once

// Slow, independent reference implementations used only by the tests. They
// share no code with the library beyond plain integer types.

#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

inline long powmod(long b, long e, long p) {
  long r = 1 % p;
  b %= p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline long multiplicative_order(long x, long p) {
  long k = 1;
  for (long y = x % p; y != 1; y = y * x % p) ++k;
  return k;
}

inline long least_primitive_root(long p) {
  if (p == 2) return 1;
  for (long g = 2; g < p; ++g) {
    if (multiplicative_order(g, p) == p - 1) return g;
  }
  return 0;
}

// dlog[x] for x in 1..p-1 by walking powers of g.
inline std::vector<long> dlog_table(long p, long g) {
  std::vector<long> out(static_cast<std::size_t>(p), -1);
  long x = 1;
  for (long e = 0; e < p - 1; ++e) {
    out[static_cast<std::size_t>(x)] = e;
    x = x * g % p;
  }
  return out;
}

// Exponent counts c[e] (e mod den) of
//   sum over u in (F_p^*)^{s+1}, sum u_i = 0, of xi_den^{sum num_i dlog u_i},
// not yet divided by p-1. Enumerates u_0..u_{s-1} and solves for u_s.
inline std::vector<long long> jacobi_exponents(long p, long g, const std::vector<int>& num, int den) {
  const auto lg = dlog_table(p, g);
  const std::size_t s1 = num.size();
  std::vector<long long> out(static_cast<std::size_t>(den), 0);
  std::vector<long> u(s1 - 1, 1);
  for (;;) {
    long sum = 0;
    long e = 0;
    for (std::size_t i = 0; i + 1 < s1; ++i) {
      sum += u[i];
      e += num[i] * lg[static_cast<std::size_t>(u[i])];
    }
    const long last = ((-sum) % p + p) % p;
    if (last != 0) {
      e += num.back() * lg[static_cast<std::size_t>(last)];
      ++out[static_cast<std::size_t>(e % den)];
    }
    std::size_t pos = s1 - 1;
    while (pos > 0 && ++u[pos - 1] == p) u[--pos] = 1;
    if (pos == 0) break;
  }
  return out;
}

// Projective points on sum x_i^{n_i} = 0 over F_p from all p^{s+1} affine vectors.
inline long long projective_count(const std::vector<int>& exps, long p) {
  const std::size_t s1 = exps.size();
  std::vector<std::vector<long>> powers(s1, std::vector<long>(static_cast<std::size_t>(p)));
  for (std::size_t i = 0; i < s1; ++i) {
    for (long x = 0; x < p; ++x) powers[i][static_cast<std::size_t>(x)] = powmod(x, exps[i], p);
  }
  long long affine = 0;
  std::vector<long> x(s1, 0);
  for (;;) {
    long sum = 0;
    for (std::size_t i = 0; i < s1; ++i) sum += powers[i][static_cast<std::size_t>(x[i])];
    if (sum % p == 0) ++affine;
    std::size_t pos = s1;
    while (pos > 0 && ++x[pos - 1] == p) x[--pos] = 0;
    if (pos == 0) break;
  }
  return (affine - 1) / (p - 1);
}

// x^3 + y^3 + z^3 = 0 over F_p: the affine chart z = 1 plus the line z = 0.
inline long long fermat_cubic_points(long p) {
  std::vector<long> cube(static_cast<std::size_t>(p));
  for (long x = 0; x < p; ++x) cube[static_cast<std::size_t>(x)] = x * x % p * x % p;
  long long n = 0;
  for (long x = 0; x < p; ++x) {
    for (long y = 0; y < p; ++y) {
      if ((cube[static_cast<std::size_t>(x)] + cube[static_cast<std::size_t>(y)] + 1) % p == 0) ++n;
    }
  }
  // [x : 1 : 0] with x^3 = -1, plus [1 : 0 : 0] is never a point.
  for (long x = 0; x < p; ++x) {
    if ((cube[static_cast<std::size_t>(x)] + 1) % p == 0) ++n;
  }
  return n;
}

// SU(2)_k fusion rule in closed form.
inline int su2_fusion(int k, int l, int m, int n) {
  const int lo = l > m ? l - m : m - l;
  const int hi = std::min(l + m, 2 * k - l - m);
  return (n >= lo && n <= hi && (n - l - m) % 2 == 0) ? 1 : 0;
}

}  // namespace oracle
