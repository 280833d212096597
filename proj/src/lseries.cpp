#include "cyarith/lseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/special_functions/zeta.hpp>

#include "cyarith/errors.hpp"
#include "cyarith/hecke.hpp"

namespace cyarith::lseries {

using cyclo::CycInt;

namespace {

std::vector<long> primes_up_to(long N) {
  std::vector<bool> composite(static_cast<std::size_t>(std::max(N, 1L)) + 1, false);
  std::vector<long> out;
  for (long i = 2; i <= N; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (long j = i * i; j <= N; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

int max_power(long p, long N) {
  int k = 0;
  for (long q = p; q <= N; q *= p) ++k;
  return k;
}

}  // namespace

LocalFactorCollection collect_local_factors(const counting::DiagonalVariety& v, long N, long field_bound) {
  if (N < 1) throw DomainError("collect_local_factors: cutoff must be positive");
  LocalFactorCollection out;
  for (long p : primes_up_to(N)) {
    if (!v.has_good_reduction(p)) {
      out.bad_primes.push_back(p);
      continue;
    }
    zeta::LocalFactorOptions options;
    options.max_t_degree = max_power(p, N);
    options.field_bound = field_bound;
    try {
      out.factors.emplace(p, zeta::local_factor_middle(v, p, options));
    } catch (const CapacityError&) {
      // Left absent: dirichlet_coefficients reports p as a gap.
    }
  }
  return out;
}

std::vector<BigInt> invert_series(const std::vector<BigInt>& P, int max_k) {
  if (P.empty() || P[0] != 1) throw DomainError("invert_series: constant term must be 1");
  std::vector<BigInt> b(static_cast<std::size_t>(max_k) + 1, BigInt(0));
  b[0] = 1;
  for (int k = 1; k <= max_k; ++k) {
    BigInt acc = 0;
    const int top = std::min<int>(k, static_cast<int>(P.size()) - 1);
    for (int i = 1; i <= top; ++i) acc += P[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(k - i)];
    b[static_cast<std::size_t>(k)] = -acc;
  }
  return b;
}

HasseWeilSeries dirichlet_coefficients(const LocalFactorCollection& source, long N) {
  if (N < 1) throw DomainError("dirichlet_coefficients: cutoff must be positive");
  HasseWeilSeries out;
  out.cutoff = N;
  out.a.assign(static_cast<std::size_t>(N) + 1, BigInt(0));
  out.known.assign(static_cast<std::size_t>(N) + 1, true);
  out.a[1] = 1;

  // prime_powers[p][k] = a_{p^k}; absent for gaps.
  std::map<long, std::vector<BigInt>> prime_powers;
  for (long p : primes_up_to(N)) {
    const int kmax = max_power(p, N);
    if (std::find(source.bad_primes.begin(), source.bad_primes.end(), p) != source.bad_primes.end()) {
      out.bad_primes.push_back(p);
      std::vector<BigInt> vals(static_cast<std::size_t>(kmax) + 1, BigInt(0));
      vals[0] = 1;
      prime_powers.emplace(p, std::move(vals));
      continue;
    }
    const auto it = source.factors.find(p);
    if (it == source.factors.end() || (!it->second.complete() && it->second.max_t_degree < kmax)) {
      out.gaps.push_back(p);
      continue;
    }
    const auto& lf = it->second;
    out.weight = lf.cohomology_degree;
    out.degree = std::max(out.degree, lf.degree() + lf.omitted_degree);
    out.primes.push_back(PrimeEntry{p, lf.degree(), !lf.complete()});
    prime_powers.emplace(p, invert_series(lf.coeffs, kmax));
  }

  for (long n = 2; n <= N; ++n) {
    long p = 2;
    while (n % p != 0) ++p;
    long rest = n;
    int k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    const auto idx = static_cast<std::size_t>(n);
    const auto it = prime_powers.find(p);
    if (it == prime_powers.end() || !out.known[static_cast<std::size_t>(rest)]) {
      out.known[idx] = false;
      continue;
    }
    out.a[idx] = it->second[static_cast<std::size_t>(k)] * out.a[static_cast<std::size_t>(rest)];
  }
  return out;
}

HeckeSeries dirichlet_coefficients(const HeckeCharacterSpec& spec, long N, long field_bound) {
  if (N < 1) throw DomainError("dirichlet_coefficients: cutoff must be positive");
  if (spec.m < 2 || spec.a.empty()) throw DomainError("dirichlet_coefficients: bad Hecke character spec");
  HeckeSeries out;
  out.cutoff = N;
  out.m = spec.m;
  out.a.assign(static_cast<std::size_t>(N) + 1, CycInt(spec.m));
  out.a[1] = CycInt::integer(spec.m, 1);
  const int r = static_cast<int>(spec.a.size());

  for (long p : primes_up_to(N)) {
    if (spec.m % p == 0) {
      out.ramified.push_back(p);
      continue;
    }
    const auto split = hecke::splitting_data(p, spec.m);
    long q = 1;
    for (int i = 0; i < split.f && q <= N; ++i) q *= p;
    if (q > N) continue;
    const auto ideals = hecke::prime_ideals_above(p, spec.m, field_bound);
    const auto hist = hecke::rank_histogram(*ideals.front().field, spec.m, r);
    for (const auto& ideal : ideals) {
      const CycInt J = hecke::ideal_jacobi_sum(ideal, spec.a, hist);
      out.norms.push_back(q);
      // multiply by (1 - J q^{-s})^{-1}: b[n] = a[n] + J b[n/q]
      for (long n = q; n <= N; n += q) {
        out.a[static_cast<std::size_t>(n)] += J * out.a[static_cast<std::size_t>(n / q)];
      }
    }
  }
  std::sort(out.norms.begin(), out.norms.end());
  return out;
}

std::vector<CycInt> dirichlet_product(const std::vector<CycInt>& x, const std::vector<CycInt>& y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("dirichlet_product: length mismatch");
  const int M = static_cast<int>(cyclo::lcm(x[1].conductor(), y[1].conductor()));
  const std::size_t N = x.size() - 1;
  std::vector<CycInt> out(x.size(), CycInt(M));
  for (std::size_t d = 1; d <= N; ++d) {
    if (x[d].is_zero()) continue;
    const CycInt xd = x[d].lift(M);
    for (std::size_t e = 1; d * e <= N; ++e) {
      if (!y[e].is_zero()) out[d * e] += xd * y[e].lift(M);
    }
  }
  return out;
}

PartialSum partial_sum_eval(const HasseWeilSeries& series, double s) {
  if (!series.gaps.empty()) throw DomainError("partial_sum_eval: coefficients have gaps");
  const double sigma = s - series.weight / 2.0;
  if (!(sigma > 1.0)) {
    throw DomainError("partial_sum_eval: need s > " + std::to_string(series.weight / 2.0 + 1.0));
  }
  PartialSum out;
  for (long n = 1; n <= series.cutoff; ++n) {
    const auto& c = series.a[static_cast<std::size_t>(n)];
    if (!c.is_zero()) out.value += static_cast<double>(c) * std::pow(static_cast<double>(n), -s);
  }
  // sum_{n>N} d_D(n) n^{-sigma} <= N^{-delta} zeta(sigma - delta)^D, 0 < delta < sigma - 1
  const int D = std::max(series.degree, 1);
  const double lnN = std::log(static_cast<double>(series.cutoff));
  double best = std::numeric_limits<double>::infinity();
  constexpr int kSteps = 400;
  for (int i = 1; i < kSteps; ++i) {
    const double delta = (sigma - 1.0) * i / kSteps;
    const double ln_bound = -delta * lnN + D * std::log(boost::math::zeta(sigma - delta));
    best = std::min(best, ln_bound);
  }
  out.log10_error_bound = best / std::log(10.0);
  out.error_bound = std::exp(best);
  return out;
}

}  // namespace cyarith::lseries
