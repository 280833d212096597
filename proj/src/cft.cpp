#include "cyarith/cft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "cyarith/cyclo.hpp"
#include "cyarith/errors.hpp"

namespace cyarith::cft {

namespace {

constexpr double kPi = std::numbers::pi;

void require_level(int k, const char* who) {
  if (k < 1) throw DomainError(std::string(who) + ": level must be >= 1");
}

double sine_ratio(int k, int l, int m) {
  const double h = k + 2.0;
  return std::sin((l + 1) * (m + 1) * kPi / h) / std::sin((m + 1) * kPi / h);
}

}  // namespace

ModularData modular_data(int k) {
  require_level(k, "modular_data");
  ModularData md;
  md.k = k;
  md.c = Rational(3 * k, k + 2);
  const double norm = std::sqrt(2.0 / (k + 2));
  md.S.assign(static_cast<std::size_t>(k) + 1, std::vector<double>(static_cast<std::size_t>(k) + 1));
  for (int l = 0; l <= k; ++l) {
    md.delta.emplace_back(l * (l + 2), 4 * (k + 2));
    for (int m = l; m <= k; ++m) {
      const double v = norm * std::sin((l + 1) * (m + 1) * kPi / (k + 2));
      md.S[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)] = v;
      md.S[static_cast<std::size_t>(m)][static_cast<std::size_t>(l)] = v;
    }
  }
  return md;
}

N2Spectrum n2_spectrum(int k) {
  require_level(k, "n2_spectrum");
  N2Spectrum out{k, {}};
  for (int l = 0; l <= k; ++l) {
    for (int q = -(k + 1); q <= k + 2; ++q) {
      for (int s = -1; s <= 2; ++s) {
        if ((l + q + s) % 2 != 0 || std::abs(q - s) > l) continue;
        out.states.push_back(N2State{l, q, s, Rational(l * (l + 2) - q * q, 4 * (k + 2)) + Rational(s * s, 8),
                                     Rational(q, k + 2) - Rational(s, 2)});
      }
    }
  }
  return out;
}

double quantum_dimension(int k, int l, int m) {
  require_level(k, "quantum_dimension");
  if (l < 0 || l > k || m < 0 || m > k) throw DomainError("quantum_dimension: labels must lie in 0..k");
  return sine_ratio(k, l, m);
}

FusionTensor verlinde_fusion(int k) {
  const auto md = modular_data(k);
  const int n = k + 1;
  FusionTensor t{k, std::vector<int>(static_cast<std::size_t>(n) * n * n, 0), 0.0};
  const auto& S = md.S;
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < n; ++m) {
      for (int c = 0; c < n; ++c) {
        double v = 0;
        for (int r = 0; r < n; ++r) {
          const auto R = static_cast<std::size_t>(r);
          // S is real, symmetric and squares to 1, so S^{-1} = S.
          v += S[static_cast<std::size_t>(l)][R] * S[static_cast<std::size_t>(m)][R] * S[static_cast<std::size_t>(c)][R] /
               S[0][R];
        }
        const double rounded = std::round(v);
        const double residual = std::abs(v - rounded);
        if (residual > 1e-6) {
          throw InvariantViolation("verlinde_fusion: non-integral fusion coefficient at k=" + std::to_string(k));
        }
        t.max_residual = std::max(t.max_residual, residual);
        t.data[static_cast<std::size_t>((l * n + m) * n + c)] = static_cast<int>(rounded);
      }
    }
  }
  return t;
}

double euler_li2(double z) {
  if (!(z >= -1.0 && z <= 1.0)) throw DomainError("euler_li2: argument must lie in [-1, 1]");
  if (z == 1.0) return kPi * kPi / 6.0;
  if (z < -0.5) return -euler_li2(z / (z - 1.0)) - 0.5 * std::log1p(-z) * std::log1p(-z);
  if (z > 0.5) return kPi * kPi / 6.0 - std::log(z) * std::log1p(-z) - euler_li2(1.0 - z);
  double sum = 0;
  double power = z;
  for (int n = 1; n < 200; ++n) {
    const double term = power / (static_cast<double>(n) * n);
    sum += term;
    if (std::abs(term) < 1e-18) break;
    power *= z;
  }
  return sum;
}

double rogers_L(double x) {
  if (!(x >= 0.0)) throw DomainError("rogers_L: argument must be nonnegative");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return kPi * kPi / 6.0;
  if (x > 1.0) return 2.0 * rogers_L(1.0) - rogers_L(1.0 / x);
  return euler_li2(x) + 0.5 * std::log(x) * std::log1p(-x);
}

double check_kr_identity(int k) {
  require_level(k, "check_kr_identity");
  double sum = 0;
  for (int l = 1; l <= k; ++l) {
    const double Q = sine_ratio(k, l, 0);
    sum += rogers_L(1.0 / (Q * Q));
  }
  return std::abs(sum / rogers_L(1.0) - 3.0 * k / (k + 2.0));
}

KnResult check_kn_identity(int k, int m) {
  require_level(k, "check_kn_identity");
  if (m < 0 || m > k) throw DomainError("check_kn_identity: m must lie in 0..k");
  KnResult out;
  out.k = k;
  out.m = m;
  out.rhs = 3.0 * k / (k + 2.0) - 24.0 * m * (m + 2) / (4.0 * (k + 2)) + 6.0 * m;
  for (int l = 1; l <= k; ++l) {
    if ((l + 1) * (m + 1) % (k + 2) == 0) {
      out.vanishing_l = l;
      return out;
    }
  }
  double sum = 0;
  for (int l = 1; l <= k; ++l) {
    const double Q = sine_ratio(k, l, m);
    sum += rogers_L(1.0 / (Q * Q));
  }
  out.lhs = sum / rogers_L(1.0);
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

FusionFieldReport fusion_field_match(int k) {
  require_level(k, "fusion_field_match");
  FusionFieldReport report;
  report.k = k;
  report.conductor = k + 2;
  report.matched = true;
  for (int l = 0; l <= k; ++l) {
    FusionFieldEntry e;
    e.l = l;
    e.quantum_dimension = sine_ratio(k, l, 0);
    const int j = l + 1;
    if (std::gcd(j, k + 2) == 1) {
      const auto unit = cyclo::cyclotomic_unit(k + 2, j);
      e.unit_index = j;
      e.unit_value = std::abs(unit.exact.embed(1));
      e.difference = std::abs(e.quantum_dimension - e.unit_value);
      report.max_difference = std::max(report.max_difference, e.difference);
      if (!(e.difference < 1e-12)) report.matched = false;
    }
    report.entries.push_back(e);
  }
  return report;
}

BigRational central_charge_sum(const std::vector<int>& levels) {
  BigRational total = 0;
  for (int k : levels) {
    if (k < 1) throw DomainError("central_charge_sum: levels must be >= 1");
    total += BigRational(3 * k, k + 2);
  }
  return total;
}

namespace {

using boost::multiprecision::cpp_int;

// Extends `prefix` by `left` levels >= lo with sum 1/(k_i+2) = rest.
void search(const BigRational& rest, int left, int lo, std::vector<int>& prefix,
            std::vector<std::vector<int>>& out) {
  if (left == 1) {
    if (numerator(rest) != 1) return;
    const cpp_int den = denominator(rest);
    if (den - 2 >= lo) {
      prefix.push_back(static_cast<int>(den - 2));
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  // 1/(k+2) < rest and left/(k+2) >= rest.
  const cpp_int start = denominator(rest) / numerator(rest) + 1;
  const cpp_int stop = left * denominator(rest) / numerator(rest);
  for (cpp_int h = std::max<cpp_int>(start, lo + 2); h <= stop; ++h) {
    prefix.push_back(static_cast<int>(h - 2));
    search(rest - BigRational(cpp_int(1), h), left - 1, static_cast<int>(h - 2), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> gepner_levels(const BigRational& target, int max_factors) {
  if (target <= 0) throw DomainError("gepner_levels: target must be positive");
  if (max_factors < 1) throw DomainError("gepner_levels: max_factors must be >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  for (int r = 1; r <= max_factors; ++r) {
    // c_i = 3 - 6/(k_i+2), so sum 1/(k_i+2) = (3r - target)/6, each term <= 1/3.
    const BigRational rest = (BigRational(3 * r) - target) / 6;
    if (rest <= 0 || rest * 3 > r) continue;
    search(rest, r, 1, prefix, out);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cyarith::cft
