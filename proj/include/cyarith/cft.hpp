#pragma once

// SU(2)_k WZW and N=2 minimal-model data: modular S-matrix, spectra,
// quantum dimensions, Verlinde fusion, dilogarithm sum rules, and Gepner
// level combinations.

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace cyarith::cft {

using Rational = boost::rational<long long>;
using BigRational = boost::multiprecision::cpp_rational;

struct ModularData {
  int k = 0;
  std::vector<std::vector<double>> S;  // (k+1) x (k+1), symmetric
  Rational c;                          // 3k/(k+2)
  std::vector<Rational> delta;         // l(l+2)/(4(k+2)), l = 0..k
};

ModularData modular_data(int k);

struct N2State {
  int l = 0;
  int q = 0;
  int s = 0;
  Rational delta;   // (l(l+2) - q^2)/(4(k+2)) + s^2/8
  Rational charge;  // q/(k+2) - s/2
};

// l = 0..k, q = -(k+1)..k+2, s = -1..2, l+q+s even, |q-s| <= l; in that
// lexicographic order.
struct N2Spectrum {
  int k = 0;
  std::vector<N2State> states;
};

N2Spectrum n2_spectrum(int k);

// S_{lm}/S_{0m}.
double quantum_dimension(int k, int l, int m = 0);

// N_{lm}^n from the Verlinde formula, rounded.
struct FusionTensor {
  int k = 0;
  std::vector<int> data;       // index (l*(k+1) + m)*(k+1) + n
  double max_residual = 0;     // largest distance to the rounded integer

  int at(int l, int m, int n) const {
    return data[static_cast<std::size_t>((l * (k + 1) + m) * (k + 1) + n)];
  }
};

// Accepts residuals up to 1e-9; throws InvariantViolation beyond 1e-6.
FusionTensor verlinde_fusion(int k);

// Li_2 on [-1, 1].
double euler_li2(double z);
// Rogers L(x) = Li_2(x) + log(x) log(1-x) / 2 on [0, 1]; 2L(1) - L(1/x) for x > 1.
double rogers_L(double x);

// |sum_{l=1}^k L(1/Q_l^2) / L(1) - 3k/(k+2)|.
double check_kr_identity(int k);

struct KnResult {
  int k = 0;
  int m = 0;
  // The first l in 1..k with Q_{lm} = 0; the identity is not evaluated.
  std::optional<int> vanishing_l;
  double lhs = 0;
  double rhs = 0;  // 3k/(k+2) - 24 Delta^m + 6m
  double residual = 0;

  bool skipped() const { return vanishing_l.has_value(); }
};

KnResult check_kn_identity(int k, int m);

struct FusionFieldEntry {
  int l = 0;
  double quantum_dimension = 0;
  std::optional<int> unit_index;  // j = l+1 when gcd(j, k+2) = 1
  double unit_value = 0;          // |theta_j| from the exact cyclotomic element
  double difference = 0;
};

struct FusionFieldReport {
  int k = 0;
  int conductor = 0;
  std::vector<FusionFieldEntry> entries;
  double max_difference = 0;
  bool matched = false;  // every labelled entry within 1e-12
};

FusionFieldReport fusion_field_match(int k);

// sum_i 3k_i/(k_i+2).
BigRational central_charge_sum(const std::vector<int>& levels);

// Nondecreasing level lists with central_charge_sum = target and at most
// max_factors entries, sorted by length and then lexicographically.
std::vector<std::vector<int>> gepner_levels(const BigRational& target = 9, int max_factors = 9);

}  // namespace cyarith::cft
