#include "cyarith/charsum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cyarith/errors.hpp"

namespace cyarith::charsum {

using counting::ClassHistogram;
using counting::DiagonalVariety;
using cyclo::CycInt;
using ffield::FieldTable;

int AlphaTuple::conductor() const {
  long m = 1;
  for (int a : numerators) m = std::lcm(m, static_cast<long>(denominator / std::gcd(a, denominator)));
  return static_cast<int>(m);
}

bool AlphaTuple::sums_to_integer() const {
  long total = 0;
  for (int a : numerators) total += a;
  return total % denominator == 0;
}

AlphaTuple AlphaTuple::conjugate() const {
  AlphaTuple out{denominator, numerators};
  for (auto& a : out.numerators) a = static_cast<int>(cyclo::mod(-a, denominator));
  return out;
}

AlphaTuple AlphaTuple::scaled(long t) const {
  AlphaTuple out{denominator, numerators};
  for (auto& a : out.numerators) a = static_cast<int>(cyclo::mod(static_cast<long>(a) * t, denominator));
  return out;
}

AlphaTuple AlphaTuple::over(int new_denominator) const {
  if (new_denominator % denominator != 0) throw DomainError("AlphaTuple::over: not a multiple of the denominator");
  AlphaTuple out{new_denominator, numerators};
  for (auto& a : out.numerators) a *= new_denominator / denominator;
  return out;
}

std::vector<std::string> AlphaTuple::entry_strings() const {
  std::vector<std::string> out;
  for (int a : numerators) {
    const int g = std::gcd(a, denominator);
    out.push_back(std::to_string(a / g) + "/" + std::to_string(denominator / g));
  }
  return out;
}

std::string AlphaTuple::to_string() const {
  std::string out = "(";
  const auto entries = entry_strings();
  for (std::size_t i = 0; i < entries.size(); ++i) out += (i ? "," : "") + entries[i];
  return out + ")";
}

AlphaTuple AlphaTuple::parse(const std::string& text) {
  std::vector<std::pair<long, long>> fracs;
  std::stringstream ss(text);
  std::string item;
  long den = 1;
  while (std::getline(ss, item, ',')) {
    const auto slash = item.find('/');
    if (slash == std::string::npos) throw DomainError("AlphaTuple::parse: expected a/b entries, got '" + item + "'");
    long a = 0, b = 0;
    try {
      a = std::stol(item.substr(0, slash));
      b = std::stol(item.substr(slash + 1));
    } catch (const std::exception&) {
      throw DomainError("AlphaTuple::parse: malformed entry '" + item + "'");
    }
    if (b <= 0 || a <= 0 || a >= b) throw DomainError("AlphaTuple::parse: entries must lie strictly in (0,1)");
    fracs.emplace_back(a, b);
    den = std::lcm(den, b);
  }
  if (fracs.empty()) throw DomainError("AlphaTuple::parse: empty tuple");
  AlphaTuple out{static_cast<int>(den), {}};
  for (auto [a, b] : fracs) out.numerators.push_back(static_cast<int>(a * (den / b)));
  return out;
}

namespace {

AlphaSet build(const DiagonalVariety& v, std::vector<int> orders, long p) {
  AlphaSet set{v, p, std::move(orders), 1, {}, {}};
  long D = 1;
  for (int o : set.orders) D = std::lcm(D, static_cast<long>(o));
  set.denominator = static_cast<int>(D);
  if (std::any_of(set.orders.begin(), set.orders.end(), [](int o) { return o < 2; })) return set;

  const std::size_t s1 = set.orders.size();
  std::vector<int> k(s1, 1);
  for (;;) {
    AlphaTuple a{set.denominator, std::vector<int>(s1)};
    for (std::size_t i = 0; i < s1; ++i) a.numerators[i] = k[i] * (set.denominator / set.orders[i]);
    if (a.sums_to_integer()) set.tuples.push_back(std::move(a));
    bool done = true;
    for (std::size_t pos = s1; pos-- > 0;) {
      if (++k[pos] < set.orders[pos]) {
        done = false;
        break;
      }
      k[pos] = 1;
    }
    if (done) break;
  }

  if (p > 0 && std::gcd(p, D) == 1) {
    std::vector<bool> seen(set.tuples.size(), false);
    for (std::size_t i = 0; i < set.tuples.size(); ++i) {
      if (seen[i]) continue;
      std::vector<std::size_t> orbit;
      AlphaTuple cur = set.tuples[i];
      for (;;) {
        auto it = std::lower_bound(set.tuples.begin(), set.tuples.end(), cur);
        const auto idx = static_cast<std::size_t>(it - set.tuples.begin());
        if (seen[idx]) break;
        seen[idx] = true;
        orbit.push_back(idx);
        cur = cur.scaled(p);
      }
      std::sort(orbit.begin(), orbit.end());
      set.frobenius_orbits.push_back(std::move(orbit));
    }
  }
  return set;
}

}  // namespace

AlphaSet build_alpha_set(const DiagonalVariety& v, const FieldTable& f) {
  std::vector<int> orders;
  for (int n : v.exponents) orders.push_back(static_cast<int>(std::gcd(static_cast<long>(n), f.order() - 1)));
  return build(v, std::move(orders), f.characteristic());
}

AlphaSet build_full_alpha_set(const DiagonalVariety& v, long p) {
  if (!v.has_good_reduction(p)) {
    throw BadReductionError("build_full_alpha_set: p=" + std::to_string(p) + " divides a defining exponent");
  }
  return build(v, v.exponents, p);
}

AlphaSet build_full_alpha_set(const DiagonalVariety& v) { return build(v, v.exponents, 0); }

long long fermat_alpha_count(int d, int n) {
  long long pw = 1;
  for (int i = 0; i < n + 2; ++i) pw *= (d - 1);
  const long long sign = (n % 2 == 0) ? 1 : -1;
  return (pw + sign * (d - 1)) / d;
}

CycInt jacobi_sum(const FieldTable& f, const AlphaTuple& alpha, const ClassHistogram& h) {
  if (h.field_order != f.order() || h.generator != f.generator()) {
    throw DomainError("jacobi_sum: histogram was built over a different field or generator");
  }
  if (alpha.numerators.size() != h.orders.size()) throw DomainError("jacobi_sum: tuple length does not match");
  const int m = alpha.conductor();
  std::vector<long> step(alpha.numerators.size());
  for (std::size_t i = 0; i < step.size(); ++i) {
    const long a = alpha.numerators[i];
    if (a * h.orders[i] % alpha.denominator != 0) {
      throw DomainError("jacobi_sum: " + alpha.to_string() + " is not compatible with the character orders");
    }
    step[i] = a * m / alpha.denominator;
  }

  std::vector<BigInt> by_exponent(static_cast<std::size_t>(m), BigInt(0));
  for (std::size_t idx = 0; idx < h.counts.size(); ++idx) {
    if (h.counts[idx].is_zero()) continue;
    const auto r = h.residues(idx);
    long e = 0;
    for (std::size_t i = 0; i < r.size(); ++i) e += step[i] * r[i];
    by_exponent[static_cast<std::size_t>(e % m)] += h.counts[idx];
  }
  const long units = f.order() - 1;
  for (auto& c : by_exponent) {
    if (c % units != 0) {
      throw InvariantViolation("jacobi_sum: character sum for " + alpha.to_string() + " is not divisible by q-1");
    }
    c /= units;
  }
  return CycInt::from_exponents(m, std::span<const BigInt>(by_exponent));
}

std::vector<CycInt> jacobi_sums(const FieldTable& f, const AlphaSet& set) {
  std::vector<CycInt> out;
  if (set.tuples.empty()) return out;
  const ClassHistogram h = counting::class_histogram(set.variety, f);
  out.reserve(set.tuples.size());
  for (const auto& a : set.tuples) out.push_back(jacobi_sum(f, a, h));
  return out;
}

}  // namespace cyarith::charsum
