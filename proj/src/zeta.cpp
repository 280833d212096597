#include "cyarith/zeta.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "cyarith/charsum.hpp"
#include "cyarith/errors.hpp"

namespace cyarith::zeta {

using counting::DiagonalVariety;
using cyclo::CycInt;

int LocalFactor::degree() const {
  int d = 0;
  for (const auto& r : roots) d += r.multiplicity * r.t_power;
  return d;
}

namespace {

int common_conductor(const std::vector<Root>& roots) {
  long M = 1;
  for (const auto& r : roots) M = std::lcm(M, static_cast<long>(r.beta.conductor()));
  return static_cast<int>(M);
}

}  // namespace

std::vector<BigInt> expand_roots(const std::vector<Root>& roots, int max_degree) {
  const int M = common_conductor(roots);
  int full = 0;
  for (const auto& r : roots) full += r.multiplicity * r.t_power;
  const int top = max_degree >= 0 ? std::min(full, max_degree) : full;

  std::vector<CycInt> poly(static_cast<std::size_t>(top) + 1, CycInt(M));
  poly[0] = CycInt::integer(M, 1);
  int current = 0;
  for (const auto& r : roots) {
    const CycInt beta = r.beta.lift(M);
    for (int rep = 0; rep < r.multiplicity; ++rep) {
      current = std::min(top, current + r.t_power);
      for (int k = current; k >= r.t_power; --k) {
        const auto& lower = poly[static_cast<std::size_t>(k - r.t_power)];
        if (!lower.is_zero()) poly[static_cast<std::size_t>(k)] -= beta * lower;
      }
    }
  }
  std::vector<BigInt> coeffs;
  coeffs.reserve(poly.size());
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (!poly[k].is_rational()) {
      throw InvariantViolation("expand_roots: coefficient of t^" + std::to_string(k) + " is not a rational integer");
    }
    coeffs.push_back(poly[k].rational_value());
  }
  return coeffs;
}

LocalFactor local_factor_middle(const DiagonalVariety& v, long p, const LocalFactorOptions& options) {
  if (!ffield::is_prime(p)) throw PrimalityError("local_factor_middle: " + std::to_string(p) + " is not prime");
  if (!v.has_good_reduction(p)) {
    throw BadReductionError("local_factor_middle: bad reduction at p=" + std::to_string(p) +
                            " (p divides a defining exponent)");
  }
  const int n = v.complex_dim();
  const auto set = charsum::build_full_alpha_set(v, p);

  LocalFactor lf;
  lf.p = p;
  lf.cohomology_degree = n;
  lf.max_t_degree = options.max_t_degree;

  struct Extension {
    ffield::FieldTable field;
    counting::ClassHistogram histogram;
  };
  std::map<int, Extension> fields;
  std::map<std::pair<int, CycInt>, int> grouped;
  for (const auto& orbit : set.frobenius_orbits) {
    const int f = static_cast<int>(orbit.size());
    if (options.max_t_degree >= 0 && f > options.max_t_degree) {
      lf.omitted_degree += f;
      continue;
    }
    auto it = fields.find(f);
    if (it == fields.end()) {
      auto field = ffield::make_extension_field(p, f, options.field_bound);
      auto hist = counting::class_histogram(v, field);
      it = fields.emplace(f, Extension{std::move(field), std::move(hist)}).first;
    }
    CycInt j = charsum::jacobi_sum(it->second.field, set.tuples[orbit.front()], it->second.histogram);
    CycInt beta = (n % 2 == 0) ? j : -j;
    ++grouped[{f, std::move(beta)}];
  }
  for (auto& [key, mult] : grouped) lf.roots.push_back(Root{key.second, mult, key.first});
  lf.coeffs = expand_roots(lf.roots, options.max_t_degree);
  return lf;
}

std::vector<int> expected_degrees(const HodgeNumbers& h, int n) {
  switch (n) {
    case 1:
      return {1, 2 * h.h10, 1};
    case 2:
      return {1, 0, 2 * h.h20 + h.h11, 0, 1};
    case 3:
      return {1, 0, h.h11, 2 + 2 * h.h21, h.h11, 0, 1};
    case 4:
      return {1, 0, h.h11, 2 * h.h21, 2 + 2 * h.h31 + h.h22, 2 * h.h21, h.h11, 0, 1};
    default:
      throw DomainError("expected_degrees: supported dimensions are 1..4, got " + std::to_string(n));
  }
}

HodgeNumbers fermat_hodge_numbers(const DiagonalVariety& v) {
  if (!v.is_fermat()) throw DomainError("fermat_hodge_numbers: variety is not Fermat");
  const int n = v.complex_dim();
  if (n < 1 || n > 4) throw DomainError("fermat_hodge_numbers: supported dimensions are 1..4");
  const auto set = charsum::build_full_alpha_set(v);
  std::vector<int> prim(static_cast<std::size_t>(n) + 1, 0);  // prim[k] = h^{n-k,k}_prim
  for (const auto& a : set.tuples) {
    long total = 0;
    for (int x : a.numerators) total += x;
    ++prim[static_cast<std::size_t>(total / a.denominator - 1)];
  }
  HodgeNumbers h{};
  switch (n) {
    case 1:
      h.h10 = prim[0];
      break;
    case 2:
      h.h20 = prim[0];
      h.h11 = prim[1] + 1;
      break;
    case 3:
      h.h11 = 1;
      h.h21 = prim[1];
      break;
    case 4:
      h.h11 = 1;
      h.h21 = 0;
      h.h31 = prim[1];
      h.h22 = prim[2] + 1;
      break;
  }
  return h;
}

CongruentZeta congruent_zeta(const DiagonalVariety& v, LocalFactor middle) {
  CongruentZeta z{v, middle.p, {}, std::move(middle), std::nullopt};
  for (int j = 0; j <= v.complex_dim(); ++j) z.trivial_powers.push_back(j);
  if (v.is_fermat() && v.complex_dim() >= 1 && v.complex_dim() <= 4) z.hodge = fermat_hodge_numbers(v);
  return z;
}

CongruentZeta congruent_zeta(const DiagonalVariety& v, long p, const LocalFactorOptions& options) {
  return congruent_zeta(v, local_factor_middle(v, p, options));
}

BigInt power_trace(const LocalFactor& lf, int r) {
  if (r < 1) throw DomainError("power_trace: r must be positive");
  if (!lf.complete() && r > lf.max_t_degree) {
    throw DomainError("power_trace: local factor was truncated at t^" + std::to_string(lf.max_t_degree));
  }
  const int M = common_conductor(lf.roots);
  CycInt total(M);
  for (const auto& root : lf.roots) {
    if (r % root.t_power != 0) continue;
    CycInt term = cyclo::pow(root.beta.lift(M), static_cast<unsigned>(r / root.t_power));
    total += term * BigInt(root.multiplicity * root.t_power);
  }
  if (!total.is_rational()) throw InvariantViolation("power_trace: trace is not a rational integer");
  return total.rational_value();
}

BigInt predicted_count(const CongruentZeta& z, int r) {
  BigInt count = 0;
  for (int j : z.trivial_powers) count += ipow(BigInt(z.p), static_cast<unsigned>(j * r));
  const BigInt trace = power_trace(z.middle, r);
  if (z.middle.cohomology_degree % 2 == 0) count += trace;
  else count -= trace;
  return count;
}

RiemannReport check_riemann_hypothesis(const LocalFactor& lf) {
  RiemannReport report;
  for (const auto& root : lf.roots) {
    const BigInt target = ipow(BigInt(lf.p), static_cast<unsigned>(lf.cohomology_degree * root.t_power));
    const CycInt n = root.beta * root.beta.conj();
    const bool ok = n.is_rational() && n.rational_value() == target;
    report.root_pass.push_back(ok);
    report.all_pass = report.all_pass && ok;
  }
  return report;
}

FunctionalEquationReport check_functional_equation(const LocalFactor& lf) {
  if (!lf.complete()) throw DomainError("check_functional_equation: needs a complete local factor");
  FunctionalEquationReport report;

  using Key = std::tuple<int, int, CycInt>;
  std::vector<Key> roots, conjugates;
  for (const auto& r : lf.roots) {
    for (int i = 0; i < r.multiplicity; ++i) {
      roots.emplace_back(r.t_power, r.beta.conductor(), r.beta);
      conjugates.emplace_back(r.t_power, r.beta.conductor(), r.beta.conj());
    }
  }
  std::sort(roots.begin(), roots.end());
  std::sort(conjugates.begin(), conjugates.end());
  report.conjugation_closed = roots == conjugates;

  const auto& c = lf.coeffs;
  const int B = static_cast<int>(c.size()) - 1;
  const int i = lf.cohomology_degree;
  if (B == 0) {
    report.sign = 1;
    return report;
  }
  if ((i * B) % 2 != 0) throw InvariantViolation("check_functional_equation: odd weight times odd degree");
  const BigInt scale = ipow(BigInt(lf.p), static_cast<unsigned>(i * B / 2));
  int sign = 0;
  if (c[static_cast<std::size_t>(B)] == scale) sign = 1;
  else if (c[static_cast<std::size_t>(B)] == -scale) sign = -1;
  if (sign == 0) throw InvariantViolation("check_functional_equation: leading coefficient is not +-p^(iB/2)");
  for (int j = 0; 2 * j <= B; ++j) {
    const BigInt rhs = c[static_cast<std::size_t>(j)] * sign * ipow(BigInt(lf.p), static_cast<unsigned>(i * (B - 2 * j) / 2));
    if (c[static_cast<std::size_t>(B - j)] != rhs) {
      throw InvariantViolation("check_functional_equation: palindrome identity fails at t^" + std::to_string(j));
    }
  }
  report.sign = sign;
  return report;
}

}  // namespace cyarith::zeta
