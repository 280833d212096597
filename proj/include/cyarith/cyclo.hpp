#pragma once

// Exact arithmetic in the cyclotomic integer ring Z[mu_m], its Galois
// action, cyclotomic units, and the group-ring data attached to Jacobi sums.

#include <complex>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyarith/bigint.hpp"

namespace cyarith::cyclo {

long euler_phi(long m);
long gcd(long a, long b);
long lcm(long a, long b);
long mod(long a, long m);
// Inverse of a modulo m; a must be a unit.
long inverse_mod(long a, long m);

// Coefficients of the m-th cyclotomic polynomial, low degree first.
// Cached; safe to call concurrently.
const std::vector<long long>& cyclotomic_polynomial(int m);

// An element of Z[xi], xi = exp(2 pi i / m), stored in the power basis
// 1, xi, ..., xi^(phi(m)-1) and kept reduced modulo Phi_m.
class CycInt {
 public:
  CycInt() : CycInt(1) {}
  explicit CycInt(int m);

  static CycInt integer(int m, const BigInt& value);
  static CycInt root_of_unity(int m, long exponent);
  // Sum of c[e] * xi^e for e = 0..c.size()-1; exponents are taken mod m.
  static CycInt from_exponents(int m, std::span<const BigInt> c);
  static CycInt from_exponents(int m, std::span<const long long> c);
  // Power-basis coefficients; length must be phi(m).
  static CycInt from_coefficients(int m, std::vector<BigInt> coeffs);

  int conductor() const { return m_; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  // Throws InvariantViolation unless the element lies in Z.
  BigInt rational_value() const;

  CycInt& operator+=(const CycInt& rhs);
  CycInt& operator-=(const CycInt& rhs);
  CycInt& operator*=(const CycInt& rhs);
  CycInt& operator*=(const BigInt& rhs);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend CycInt operator*(CycInt a, const BigInt& b) { return a *= b; }
  friend CycInt operator*(const BigInt& b, CycInt a) { return a *= b; }
  CycInt operator-() const;

  friend bool operator==(const CycInt& a, const CycInt& b) = default;
  // Total order (conductor, then coefficients) for sorting multisets.
  friend std::strong_ordering operator<=>(const CycInt& a, const CycInt& b);

  // sigma_l : xi -> xi^l, l coprime to m.
  CycInt galois(long l) const;
  CycInt conj() const { return galois(m_ - 1); }
  // Reinterpret in Z[mu_M] for a multiple M of the conductor.
  CycInt lift(int M) const;

  // Complex embedding xi -> exp(2 pi i l / m), double precision.
  std::complex<double> embed(long l = 1) const;

  std::vector<std::string> coefficient_strings() const;
  std::string to_string() const;

 private:
  int m_;
  std::vector<BigInt> coeffs_;
};

CycInt pow(CycInt base, unsigned exponent);

// Product of all Galois conjugates.
BigInt norm(const CycInt& x);

struct CyclotomicUnit {
  int m;
  int j;
  CycInt exact;    // 1 + xi + ... + xi^(j-1) = (1 - xi^j)/(1 - xi)
  double numeric;  // sin(j pi/m)/sin(pi/m)
};

CyclotomicUnit cyclotomic_unit(int m, int j);

// Element of Z[Gal(Q(mu_m)/Q)]. Keys l are units mod m; the stored value at
// key l is the coefficient of sigma_l^{-1}.
struct GroupRingElement {
  int m = 1;
  std::map<long, long> inverse_coefficients;

  long coefficient_of_inverse(long l) const;
  // Coefficient of sigma_t itself (that is, of sigma_{t^{-1}}^{-1}).
  long coefficient_of(long t) const;
  bool is_zero() const;
};

GroupRingElement s_element(std::span<const int> a, int m);

// The common value of n_sigma + n_{conj sigma}, if it is constant.
std::optional<long> hecke_weight(const GroupRingElement& s);

// |det M|, M[j][k] = sin(c_j k pi/p)/sin(c_j pi/p), k = 2..(p-1)/2 and
// c_j = g^j mod p for the first (p-3)/2 powers of the least primitive root g.
double delta_determinant(long p);

// Units mod m in 1..m/2: one representative per pair {l, -l}, i.e. one per
// real place of Q(mu_m)^+.
std::vector<long> real_places(int m);

// Row per unit, column per real place: ln|rho_l(u)|.
std::vector<std::vector<double>> regulator_matrix(std::span<const CycInt> units, int m);

}  // namespace cyarith::cyclo
