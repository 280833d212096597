#include "cyarith/ffield.hpp"

#include <algorithm>
#include <string>

#include "cyarith/errors.hpp"

namespace cyarith::ffield {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

using Poly = std::vector<int>;

// Remainder of a modulo the monic b over F_p.
Poly poly_rem(Poly a, const Poly& b, long p) {
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    const long c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      a[i - db + j] = static_cast<int>(((a[i - db + j] - c * b[j]) % p + p) % p);
    }
  }
  a.resize(std::min(a.size(), db));
  return a;
}

// Product of two residues modulo the monic modulus of degree r.
Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus, long p) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<int>((prod[i + j] + static_cast<long>(a[i]) * b[j]) % p);
    }
  }
  Poly rem = poly_rem(std::move(prod), modulus, p);
  rem.resize(modulus.size() - 1, 0);
  return rem;
}

Poly digits(long index, long p, int r) {
  Poly c(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < r; ++i) {
    c[static_cast<std::size_t>(i)] = static_cast<int>(index % p);
    index /= p;
  }
  return c;
}

long undigits(const Poly& c, long p) {
  long index = 0;
  for (std::size_t i = c.size(); i-- > 0;) index = index * p + c[i];
  return index;
}

Poly pow_mod(Poly base, long e, const Poly& modulus, long p) {
  Poly result(modulus.size() - 1, 0);
  result[0] = 1;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, modulus, p);
    e >>= 1;
    if (e > 0) base = mul_mod(base, base, modulus, p);
  }
  return result;
}

bool has_full_order(long index, long p, int r, long q, const Poly& modulus) {
  if (index == 0) return false;
  if (q == 2) return index == 1;
  const Poly x = digits(index, p, r);
  const Poly one = digits(1, p, r);
  for (long ell : prime_factors(q - 1)) {
    if (pow_mod(x, (q - 1) / ell, modulus, p) == one) return false;
  }
  return true;
}

long checked_power(long p, int r, long bound) {
  long q = 1;
  for (int i = 0; i < r; ++i) {
    if (q > bound / p) {
      throw CapacityError("field F_" + std::to_string(p) + "^" + std::to_string(r) + " exceeds the table bound " +
                          std::to_string(bound));
    }
    q *= p;
  }
  return q;
}

}  // namespace

bool is_irreducible(std::span<const int> poly_span, long p) {
  Poly poly(poly_span.begin(), poly_span.end());
  const int r = static_cast<int>(poly.size()) - 1;
  if (r < 1 || poly.back() != 1) throw DomainError("is_irreducible: expected a monic polynomial of degree >= 1");
  for (int deg = 1; 2 * deg <= r; ++deg) {
    long count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    for (long n = 0; n < count; ++n) {
      Poly divisor = digits(n, p, deg);
      divisor.push_back(1);
      Poly rem = poly_rem(poly, divisor, p);
      if (std::all_of(rem.begin(), rem.end(), [](int c) { return c == 0; })) return false;
    }
  }
  return true;
}

FieldTable::FieldTable(long p, int r, std::vector<int> modulus, int g)
    : p_(p), r_(r), q_(1), modulus_(std::move(modulus)), g_(g) {
  for (int i = 0; i < r; ++i) q_ *= p;
  half_ = (p == 2) ? 0 : (q_ - 1) / 2;
  const std::size_t units = static_cast<std::size_t>(q_ - 1);
  exp_.assign(units, 0);
  log_.assign(static_cast<std::size_t>(q_), -1);

  const Poly gp = digits(g, p, r);
  Poly cur = digits(1, p, r);
  for (std::size_t e = 0; e < units; ++e) {
    const auto idx = static_cast<std::int32_t>(undigits(cur, p));
    if (log_[static_cast<std::size_t>(idx)] != -1) {
      throw DomainError("FieldTable: element " + std::to_string(g) + " does not generate the unit group");
    }
    exp_[e] = idx;
    log_[static_cast<std::size_t>(idx)] = static_cast<std::int32_t>(e);
    if (r == 1) cur[0] = static_cast<int>(static_cast<long>(cur[0]) * g % p);
    else cur = mul_mod(cur, gp, modulus_, p);
  }

  // 1 + x only touches the constant digit of x.
  zech_.assign(units, -1);
  for (std::size_t e = 0; e < units; ++e) {
    const long x = exp_[e];
    const long y = (x % p == p - 1) ? x - (p - 1) : x + 1;
    zech_[e] = log_[static_cast<std::size_t>(y)];
  }
}

int FieldTable::dlog(int x) const {
  if (x <= 0 || x >= q_) throw DomainError("dlog: argument must be a nonzero element index, got " + std::to_string(x));
  return log_[static_cast<std::size_t>(x)];
}

int FieldTable::add(int x, int y) const {
  if (x == 0) return y;
  if (y == 0) return x;
  const long lx = log_[static_cast<std::size_t>(x)];
  const long d = reduce_exponent(log_[static_cast<std::size_t>(y)] - lx);
  const long z = zech_[static_cast<std::size_t>(d)];
  if (z < 0) return 0;
  return exp_[static_cast<std::size_t>(reduce_exponent(lx + z))];
}

int FieldTable::neg(int x) const {
  if (x == 0) return 0;
  return exp_[static_cast<std::size_t>(reduce_exponent(log_[static_cast<std::size_t>(x)] + half_))];
}

int FieldTable::mul(int x, int y) const {
  if (x == 0 || y == 0) return 0;
  return exp_[static_cast<std::size_t>(
      reduce_exponent(static_cast<long>(log_[static_cast<std::size_t>(x)]) + log_[static_cast<std::size_t>(y)]))];
}

int FieldTable::inv(int x) const {
  if (x == 0) throw DomainError("inv: zero has no inverse");
  return exp_[static_cast<std::size_t>(reduce_exponent(-static_cast<long>(log_[static_cast<std::size_t>(x)])))];
}

int FieldTable::pow(int x, long e) const {
  if (x == 0) {
    if (e < 0) throw DomainError("pow: zero to a negative power");
    return e == 0 ? 1 : 0;
  }
  const long lx = log_[static_cast<std::size_t>(x)];
  return exp_[static_cast<std::size_t>(reduce_exponent((lx * reduce_exponent(e)) % (q_ - 1)))];
}

long FieldTable::unit_order(int x) const {
  const long n = q_ - 1;
  const long lx = dlog(x);
  long g = n, a = lx;
  while (a != 0) {
    long t = g % a;
    g = a;
    a = t;
  }
  return n / g;
}

std::vector<int> FieldTable::coefficients(int x) const { return digits(x, p_, r_); }

int FieldTable::element(std::span<const int> coeffs) const {
  if (coeffs.size() != static_cast<std::size_t>(r_)) throw DomainError("element: wrong coefficient count");
  Poly c(coeffs.begin(), coeffs.end());
  for (auto& v : c) v = static_cast<int>(((v % p_) + p_) % p_);
  return static_cast<int>(undigits(c, p_));
}

FieldTable FieldTable::with_generator(int g) const {
  if (g <= 0 || g >= q_ || unit_order(g) != q_ - 1) {
    throw DomainError("with_generator: " + std::to_string(g) + " does not have order q-1");
  }
  return FieldTable(p_, r_, modulus_, g);
}

FieldTable make_prime_field(long p, long bound) {
  if (!is_prime(p)) throw PrimalityError("make_prime_field: " + std::to_string(p) + " is not prime");
  if (p > bound) {
    throw CapacityError("make_prime_field: p=" + std::to_string(p) + " exceeds the table bound " +
                        std::to_string(bound));
  }
  const Poly x{0, 1};
  int g = 1;
  while (!has_full_order(g, p, 1, p, x)) ++g;
  return FieldTable(p, 1, x, g);
}

FieldTable make_extension_field(long p, int r, long bound) {
  if (!is_prime(p)) throw PrimalityError("make_extension_field: " + std::to_string(p) + " is not prime");
  if (r < 1) throw DomainError("make_extension_field: degree must be positive");
  const long q = checked_power(p, r, bound);
  if (r == 1) return make_prime_field(p, bound);

  // Lexicographically smallest monic irreducible, c_0 compared first.
  Poly modulus;
  for (long n = 0; n < q; ++n) {
    Poly c(static_cast<std::size_t>(r) + 1, 0);
    long t = n;
    for (int i = r - 1; i >= 0; --i) {
      c[static_cast<std::size_t>(i)] = static_cast<int>(t % p);
      t /= p;
    }
    c[static_cast<std::size_t>(r)] = 1;
    if (c[0] != 0 && is_irreducible(c, p)) {
      modulus = std::move(c);
      break;
    }
  }
  if (modulus.empty()) throw InvariantViolation("make_extension_field: no irreducible polynomial found");

  int g = 1;
  while (!has_full_order(g, p, r, q, modulus)) ++g;
  return FieldTable(p, r, std::move(modulus), g);
}

}  // namespace cyarith::ffield
