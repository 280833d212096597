#include "cyarith/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "cyarith/errors.hpp"

namespace cyarith::cyclo {

long gcd(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm(long a, long b) { return a / gcd(a, b) * b; }

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

long inverse_mod(long a, long m) {
  long t = 0, new_t = 1, r = m, new_r = mod(a, m);
  while (new_r != 0) {
    long quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  if (r != 1) throw DomainError("inverse_mod: " + std::to_string(a) + " is not a unit mod " + std::to_string(m));
  return mod(t, m);
}

long euler_phi(long m) {
  if (m < 1) throw DomainError("euler_phi: m must be positive");
  long result = m;
  for (long q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      while (m % q == 0) m /= q;
      result -= result / q;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

std::vector<long long> compute_cyclotomic(int m) {
  // x^m - 1 divided by Phi_d for every proper divisor d.
  std::vector<long long> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    const int dn = static_cast<int>(den.size()) - 1;
    const int nn = static_cast<int>(num.size()) - 1;
    std::vector<long long> quot(nn - dn + 1, 0);
    for (int i = nn; i >= dn; --i) {
      long long c = num[i];
      quot[i - dn] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    for (int i = 0; i < dn; ++i) {
      if (num[i] != 0) throw InvariantViolation("cyclotomic_polynomial: inexact division");
    }
    num = std::move(quot);
  }
  return num;
}

// Reduce a polynomial in xi (any length) modulo Phi_m in place; result has
// length phi(m).
void reduce(std::vector<BigInt>& poly, int m) {
  const auto& phi_poly = cyclotomic_polynomial(m);
  const std::size_t deg = phi_poly.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (poly[i].is_zero()) continue;
    BigInt c = poly[i];
    for (std::size_t j = 0; j <= deg; ++j) {
      if (phi_poly[j] != 0) poly[i - deg + j] -= c * phi_poly[j];
    }
  }
  poly.resize(deg);
}

void require_same_conductor(const CycInt& a, const CycInt& b) {
  if (a.conductor() != b.conductor()) {
    throw DomainError("CycInt: conductor mismatch (" + std::to_string(a.conductor()) + " vs " +
                      std::to_string(b.conductor()) + ")");
  }
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int m) {
  if (m < 1) throw DomainError("cyclotomic_polynomial: m must be positive");
  static std::mutex mutex;
  static std::unordered_map<int, std::vector<long long>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  std::vector<long long> poly = m == 1 ? std::vector<long long>{-1, 1} : compute_cyclotomic(m);
  std::lock_guard lock(mutex);
  // unordered_map references stay valid across rehashing.
  return cache.try_emplace(m, std::move(poly)).first->second;
}

CycInt::CycInt(int m) : m_(m) {
  if (m < 1) throw DomainError("CycInt: conductor must be positive");
  coeffs_.assign(static_cast<std::size_t>(euler_phi(m)), BigInt(0));
}

CycInt CycInt::integer(int m, const BigInt& value) {
  CycInt x(m);
  x.coeffs_[0] = value;
  return x;
}

CycInt CycInt::root_of_unity(int m, long exponent) {
  std::vector<BigInt> c(static_cast<std::size_t>(m), BigInt(0));
  c[static_cast<std::size_t>(mod(exponent, m))] = 1;
  return from_exponents(m, std::span<const BigInt>(c));
}

CycInt CycInt::from_exponents(int m, std::span<const BigInt> c) {
  CycInt x(m);
  std::vector<BigInt> poly(std::max<std::size_t>(static_cast<std::size_t>(m), x.coeffs_.size()), BigInt(0));
  for (std::size_t e = 0; e < c.size(); ++e) poly[e % static_cast<std::size_t>(m)] += c[e];
  reduce(poly, m);
  x.coeffs_ = std::move(poly);
  return x;
}

CycInt CycInt::from_exponents(int m, std::span<const long long> c) {
  std::vector<BigInt> big(c.begin(), c.end());
  return from_exponents(m, std::span<const BigInt>(big));
}

CycInt CycInt::from_coefficients(int m, std::vector<BigInt> coeffs) {
  CycInt x(m);
  if (coeffs.size() != x.coeffs_.size()) {
    throw DomainError("CycInt: expected " + std::to_string(x.coeffs_.size()) + " coefficients for conductor " +
                      std::to_string(m));
  }
  x.coeffs_ = std::move(coeffs);
  return x;
}

bool CycInt::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c.is_zero(); });
}

bool CycInt::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const BigInt& c) { return c.is_zero(); });
}

BigInt CycInt::rational_value() const {
  if (!is_rational()) throw InvariantViolation("CycInt: expected a rational integer, got " + to_string());
  return coeffs_[0];
}

CycInt& CycInt::operator+=(const CycInt& rhs) {
  require_same_conductor(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& rhs) {
  require_same_conductor(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator*=(const BigInt& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& rhs) { return *this = *this * rhs; }

CycInt operator*(const CycInt& a, const CycInt& b) {
  require_same_conductor(a, b);
  const std::size_t n = a.coeffs_.size();
  std::vector<BigInt> prod(2 * n - 1, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!b.coeffs_[j].is_zero()) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  reduce(prod, a.m_);
  CycInt out(a.m_);
  out.coeffs_ = std::move(prod);
  return out;
}

CycInt CycInt::operator-() const {
  CycInt out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::strong_ordering operator<=>(const CycInt& a, const CycInt& b) {
  if (auto c = a.m_ <=> b.m_; c != 0) return c;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] < b.coeffs_[i]) return std::strong_ordering::less;
    if (b.coeffs_[i] < a.coeffs_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

CycInt CycInt::galois(long l) const {
  if (gcd(l, m_) != 1) {
    throw DomainError("CycInt::galois: " + std::to_string(l) + " is not coprime to " + std::to_string(m_));
  }
  std::vector<BigInt> c(static_cast<std::size_t>(m_), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    c[static_cast<std::size_t>(mod(static_cast<long>(i) * l, m_))] += coeffs_[i];
  }
  return from_exponents(m_, std::span<const BigInt>(c));
}

CycInt CycInt::lift(int M) const {
  if (M % m_ != 0) throw DomainError("CycInt::lift: target conductor must be a multiple");
  if (M == m_) return *this;
  std::vector<BigInt> c(static_cast<std::size_t>(M), BigInt(0));
  const std::size_t step = static_cast<std::size_t>(M / m_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * step] = coeffs_[i];
  return from_exponents(M, std::span<const BigInt>(c));
}

std::complex<double> CycInt::embed(long l) const {
  std::complex<double> z = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod(static_cast<long>(i) * l, m_)) / m_;
    z += coeffs_[i].convert_to<double>() * std::polar(1.0, angle);
  }
  return z;
}

std::vector<std::string> CycInt::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.str());
  return out;
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << (coeffs_[i] < 0 ? " - " : " + ");
    else if (coeffs_[i] < 0) os << "-";
    first = false;
    BigInt a = abs(coeffs_[i]);
    if (i == 0) os << a;
    else {
      if (a != 1) os << a << "*";
      os << "z" << (i > 1 ? "^" + std::to_string(i) : "");
    }
  }
  if (first) os << "0";
  return os.str();
}

CycInt pow(CycInt base, unsigned exponent) {
  CycInt result = CycInt::integer(base.conductor(), 1);
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

BigInt norm(const CycInt& x) {
  const int m = x.conductor();
  CycInt prod = CycInt::integer(m, 1);
  for (long l = 1; l <= std::max(1, m - 1); ++l) {
    if (gcd(l, m) == 1) prod *= x.galois(l);
  }
  return prod.rational_value();
}

CyclotomicUnit cyclotomic_unit(int m, int j) {
  if (m < 2) throw DomainError("cyclotomic_unit: conductor must be at least 2");
  if (j < 1 || j >= m || gcd(j, m) != 1) {
    throw DomainError("cyclotomic_unit: j=" + std::to_string(j) + " must be in 1..m-1 and coprime to m=" +
                      std::to_string(m));
  }
  std::vector<BigInt> c(static_cast<std::size_t>(j), BigInt(1));
  const double numeric = std::sin(j * std::numbers::pi / m) / std::sin(std::numbers::pi / m);
  return {m, j, CycInt::from_exponents(m, std::span<const BigInt>(c)), numeric};
}

long GroupRingElement::coefficient_of_inverse(long l) const {
  auto it = inverse_coefficients.find(mod(l, m));
  return it == inverse_coefficients.end() ? 0 : it->second;
}

long GroupRingElement::coefficient_of(long t) const { return coefficient_of_inverse(inverse_mod(t, m)); }

bool GroupRingElement::is_zero() const {
  return std::all_of(inverse_coefficients.begin(), inverse_coefficients.end(),
                     [](const auto& kv) { return kv.second == 0; });
}

GroupRingElement s_element(std::span<const int> a, int m) {
  if (m < 1) throw DomainError("s_element: conductor must be positive");
  GroupRingElement s;
  s.m = m;
  for (long l = 1; l <= std::max(1, m - 1); ++l) {
    if (gcd(l, m) != 1) continue;
    // [sum_i <l a_i / m>] = floor(sum_i (l a_i mod m) / m)
    long numer = 0;
    for (int ai : a) numer += mod(l * ai, m);
    s.inverse_coefficients[l % m] = numer / m;
  }
  return s;
}

std::optional<long> hecke_weight(const GroupRingElement& s) {
  std::optional<long> w;
  for (const auto& [l, n] : s.inverse_coefficients) {
    const long total = n + s.coefficient_of_inverse(s.m - l);
    if (w && *w != total) return std::nullopt;
    w = total;
  }
  return w;
}

namespace {

long least_primitive_root(long p) {
  std::vector<long> factors;
  long n = p - 1;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      factors.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) factors.push_back(n);
  auto powmod = [p](long b, long e) {
    long r = 1;
    b %= p;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (long g = 2; g < p; ++g) {
    if (std::all_of(factors.begin(), factors.end(), [&](long q) { return powmod(g, (p - 1) / q) != 1; })) return g;
  }
  return 1;
}

double determinant(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (a[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

}  // namespace

double delta_determinant(long p) {
  if (p < 5) throw DomainError("delta_determinant: p must be an odd prime >= 5");
  for (long q = 2; q * q <= p; ++q) {
    if (p % q == 0) throw PrimalityError("delta_determinant: " + std::to_string(p) + " is not prime");
  }
  const long g = least_primitive_root(p);
  const std::size_t n = static_cast<std::size_t>((p - 3) / 2);
  std::vector<std::vector<double>> m(n, std::vector<double>(n));
  long c = 1;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t col = 0; col < n; ++col) {
      const long k = static_cast<long>(col) + 2;
      m[j][col] = std::sin(static_cast<double>(c * k % (2 * p)) * std::numbers::pi / p) /
                  std::sin(static_cast<double>(c) * std::numbers::pi / p);
    }
    c = c * g % p;
  }
  return std::abs(determinant(std::move(m)));
}

std::vector<long> real_places(int m) {
  std::vector<long> places;
  for (long l = 1; 2 * l <= m; ++l) {
    if (gcd(l, m) == 1) places.push_back(l);
  }
  if (places.empty()) places.push_back(1);
  return places;
}

std::vector<std::vector<double>> regulator_matrix(std::span<const CycInt> units, int m) {
  const auto places = real_places(m);
  std::vector<std::vector<double>> rows;
  rows.reserve(units.size());
  for (const auto& u : units) {
    if (u.conductor() != m) throw DomainError("regulator_matrix: unit has conductor " + std::to_string(u.conductor()));
    if (u.is_zero()) throw DomainError("regulator_matrix: zero is not a unit");
    std::vector<double> row;
    row.reserve(places.size());
    for (long l : places) row.push_back(std::log(std::abs(u.embed(l))));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cyarith::cyclo
