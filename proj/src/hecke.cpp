#include "cyarith/hecke.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "cyarith/errors.hpp"

namespace cyarith::hecke {

using charsum::AlphaTuple;
using cyclo::CycInt;
using ffield::FieldTable;

SplittingData splitting_data(long p, int m) {
  if (m < 1) throw DomainError("splitting_data: conductor must be positive");
  if (!ffield::is_prime(p)) throw PrimalityError("splitting_data: " + std::to_string(p) + " is not prime");
  if (std::gcd(p, static_cast<long>(m)) != 1) {
    throw DomainError("splitting_data: p=" + std::to_string(p) + " ramifies in Q(mu_" + std::to_string(m) + ")");
  }
  int f = 1;
  long x = p % m;
  while (m > 1 && x != 1) {
    x = x * p % m;
    ++f;
  }
  return {f, static_cast<int>(cyclo::euler_phi(m) / f)};
}

std::vector<PrimeIdeal> prime_ideals_above(long p, int m, long field_bound) {
  if (m < 2) throw DomainError("prime_ideals_above: conductor must be at least 2");
  const auto split = splitting_data(p, m);
  auto field = std::make_shared<const FieldTable>(ffield::make_extension_field(p, split.f, field_bound));
  const long step = (field->order() - 1) / m;

  std::vector<PrimeIdeal> out;
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (long t = 1; t < m; ++t) {
    if (seen[static_cast<std::size_t>(t)] || std::gcd(t, static_cast<long>(m)) != 1) continue;
    for (long u = t; !seen[static_cast<std::size_t>(u)]; u = u * p % m) seen[static_cast<std::size_t>(u)] = true;
    out.push_back(PrimeIdeal{field, m, field->exp(step * t), t});
  }
  return out;
}

std::vector<PrimeIdeal> split_prime_ideals(long p, int m) {
  const auto split = splitting_data(p, m);
  if (split.f != 1) {
    throw DomainError("split_prime_ideals: p=" + std::to_string(p) + " does not split completely (f=" +
                      std::to_string(split.f) + ")");
  }
  return prime_ideals_above(p, m, ffield::kPrimeFieldBound);
}

long power_residue_exponent(const PrimeIdeal& ideal, int u) {
  if (u <= 0 || u >= ideal.norm()) throw DomainError("power_residue_exponent: argument must be a nonzero element");
  const long s = ideal.field->dlog(u);
  return cyclo::mod(cyclo::inverse_mod(ideal.t, ideal.m) * (s % ideal.m), ideal.m);
}

CycInt power_residue_char(const PrimeIdeal& ideal, int u) {
  return CycInt::root_of_unity(ideal.m, power_residue_exponent(ideal, u));
}

RankHistogram rank_histogram(const FieldTable& f, int m, int r) {
  if (r < 1) throw DomainError("rank_histogram: rank must be positive");
  if (m < 1 || (f.order() - 1) % m != 0) throw DomainError("rank_histogram: m must divide q-1");
  std::size_t bins = 1;
  for (int i = 0; i < r; ++i) bins *= static_cast<std::size_t>(m);

  std::vector<std::uint64_t> counts(bins, 0);
  const auto log = f.log_table();
  const int minus_one = f.neg(1);
  const int q = static_cast<int>(f.order());
  // depth k has fixed u_1..u_k with running sum `sum` and bin prefix `prefix`.
  std::function<void(int, int, std::size_t)> walk = [&](int k, int sum, std::size_t prefix) {
    if (k == r - 1) {
      const int last = f.sub(minus_one, sum);
      if (last != 0) ++counts[prefix * static_cast<std::size_t>(m) + static_cast<std::size_t>(log[last] % m)];
      return;
    }
    for (int u = 1; u < q; ++u) {
      walk(k + 1, f.add(sum, u), prefix * static_cast<std::size_t>(m) + static_cast<std::size_t>(log[u] % m));
    }
  };
  walk(0, 0, 0);

  RankHistogram h{f.order(), f.generator(), m, r, {}};
  h.counts.reserve(bins);
  for (auto c : counts) h.counts.emplace_back(c);
  return h;
}

namespace {

CycInt signed_sum(int m, int r, std::vector<BigInt> by_exponent) {
  if (r % 2 == 0) {
    for (auto& c : by_exponent) c = -c;
  }
  return CycInt::from_exponents(m, std::span<const BigInt>(by_exponent));
}

}  // namespace

CycInt ideal_jacobi_sum(const PrimeIdeal& ideal, std::span<const int> a, const RankHistogram& h) {
  if (h.field_order != ideal.norm() || h.generator != ideal.field->generator() || h.m != ideal.m) {
    throw DomainError("ideal_jacobi_sum: histogram does not belong to this residue field");
  }
  if (static_cast<int>(a.size()) != h.rank) throw DomainError("ideal_jacobi_sum: exponent vector length != rank");
  const long m = ideal.m;
  const long tinv = cyclo::inverse_mod(ideal.t, m);
  std::vector<long> w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) w[i] = cyclo::mod(a[i] * tinv, m);

  std::vector<BigInt> by_exponent(static_cast<std::size_t>(m), BigInt(0));
  for (std::size_t idx = 0; idx < h.counts.size(); ++idx) {
    if (h.counts[idx].is_zero()) continue;
    std::size_t rest = idx;
    long e = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
      e += w[i] * static_cast<long>(rest % static_cast<std::size_t>(m));
      rest /= static_cast<std::size_t>(m);
    }
    by_exponent[static_cast<std::size_t>(e % m)] += h.counts[idx];
  }
  return signed_sum(ideal.m, h.rank, std::move(by_exponent));
}

CycInt ideal_jacobi_sum(const PrimeIdeal& ideal, std::span<const int> a, int r) {
  return ideal_jacobi_sum(ideal, a, rank_histogram(*ideal.field, ideal.m, r));
}

CycInt ideal_jacobi_sum_direct(const PrimeIdeal& ideal, std::span<const int> a, int r) {
  if (r < 1 || static_cast<int>(a.size()) != r) throw DomainError("ideal_jacobi_sum_direct: bad rank");
  const auto& f = *ideal.field;
  const int q = static_cast<int>(f.order());
  const int m = ideal.m;
  std::vector<BigInt> by_exponent(static_cast<std::size_t>(m), BigInt(0));
  std::vector<int> u(static_cast<std::size_t>(r), 1);
  for (;;) {
    int sum = 0;
    for (int i = 0; i + 1 < r; ++i) sum = f.add(sum, u[static_cast<std::size_t>(i)]);
    u.back() = f.sub(f.neg(1), sum);
    if (u.back() != 0) {
      long e = 0;
      for (int i = 0; i < r; ++i) {
        e += static_cast<long>(a[static_cast<std::size_t>(i)]) * power_residue_exponent(ideal, u[static_cast<std::size_t>(i)]);
      }
      by_exponent[static_cast<std::size_t>(cyclo::mod(e, m))] += 1;
    }
    int pos = r - 2;
    while (pos >= 0 && ++u[static_cast<std::size_t>(pos)] == q) u[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
  }
  return signed_sum(m, r, std::move(by_exponent));
}

std::vector<AlphaTuple> galois_orbit_representatives(std::span<const AlphaTuple> tuples) {
  std::set<AlphaTuple> reps;
  for (const auto& a : tuples) {
    AlphaTuple best = a;
    for (long t = 2; t < a.denominator; ++t) {
      if (std::gcd(t, static_cast<long>(a.denominator)) != 1) continue;
      best = std::min(best, a.scaled(t));
    }
    reps.insert(best);
  }
  return {reps.begin(), reps.end()};
}

HeckeMatchReport match_hasse_weil(const counting::DiagonalVariety& v, long p) {
  const auto set = charsum::build_full_alpha_set(v, p);
  const int D = set.denominator;
  if ((p - 1) % D != 0) {
    throw DomainError("match_hasse_weil: p=" + std::to_string(p) + " is not split (need p = 1 mod " +
                      std::to_string(D) + ")");
  }
  HeckeMatchReport report;
  report.p = p;
  report.m = D;
  report.rank = static_cast<int>(v.exponents.size()) - 1;

  const auto ideals = split_prime_ideals(p, D);
  const auto& field = *ideals.front().field;
  const auto reps = galois_orbit_representatives(set.tuples);
  report.ideals = static_cast<int>(ideals.size());
  report.representatives = static_cast<int>(reps.size());

  const auto hist = rank_histogram(field, D, report.rank);
  std::set<AlphaTuple> covered;
  for (const auto& ideal : ideals) {
    const long tinv = cyclo::inverse_mod(ideal.t, D);
    for (const auto& rep : reps) {
      if (!covered.insert(rep.scaled(tinv)).second) continue;
      std::span<const int> a(rep.numerators.data() + 1, rep.numerators.size() - 1);
      report.hecke_values.push_back(ideal_jacobi_sum(ideal, a, hist).lift(D));
    }
  }

  const auto zhist = counting::class_histogram(v, field);
  for (const auto& alpha : set.tuples) report.zeta_values.push_back(charsum::jacobi_sum(field, alpha, zhist).lift(D));

  std::sort(report.hecke_values.begin(), report.hecke_values.end());
  std::sort(report.zeta_values.begin(), report.zeta_values.end());
  std::vector<CycInt> negated;
  for (const auto& j : report.zeta_values) negated.push_back(-j);
  std::sort(negated.begin(), negated.end());

  const bool plus = report.hecke_values == report.zeta_values;
  const bool minus = report.hecke_values == negated;
  report.matched = plus || minus;
  report.sign = plus ? 1 : (minus ? -1 : 0);
  report.sign_ambiguous = plus && minus;
  return report;
}

}  // namespace cyarith::hecke
