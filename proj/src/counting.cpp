#include "cyarith/counting.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cyarith/errors.hpp"

namespace cyarith::counting {

using ffield::FieldTable;

DiagonalVariety::DiagonalVariety(std::vector<int> exps) : exponents(std::move(exps)) {
  if (exponents.size() < 3) throw DomainError("DiagonalVariety: need at least 3 coordinates");
  for (int n : exponents) {
    if (n < 2) throw DomainError("DiagonalVariety: exponents must be >= 2");
  }
}

DiagonalVariety DiagonalVariety::fermat(int d, int n) {
  if (n < 1) throw DomainError("DiagonalVariety::fermat: dimension must be >= 1");
  return DiagonalVariety(std::vector<int>(static_cast<std::size_t>(n) + 2, d));
}

bool DiagonalVariety::is_fermat() const {
  return std::all_of(exponents.begin(), exponents.end(), [&](int n) { return n == exponents.front(); });
}

bool DiagonalVariety::is_calabi_yau() const { return is_fermat() && exponents.front() == ambient_dim() + 1; }

int DiagonalVariety::degree() const {
  if (!is_fermat()) throw DomainError("DiagonalVariety: not of Fermat type");
  return exponents.front();
}

bool DiagonalVariety::has_good_reduction(long p) const {
  return std::none_of(exponents.begin(), exponents.end(), [p](int n) { return n % p == 0; });
}

namespace {

std::vector<int> character_orders(const DiagonalVariety& v, long q) {
  std::vector<int> orders;
  orders.reserve(v.exponents.size());
  for (int n : v.exponents) orders.push_back(static_cast<int>(std::gcd(static_cast<long>(n), q - 1)));
  return orders;
}

long lcm_of(std::span<const int> xs) {
  long l = 1;
  for (int x : xs) l = std::lcm(l, static_cast<long>(x));
  return l;
}

void check_budget(long base, int exponent, std::uint64_t budget, const char* what) {
  long double work = 1;
  for (int i = 0; i < exponent; ++i) work *= static_cast<long double>(base);
  if (work > static_cast<long double>(budget)) {
    throw CapacityError(std::string(what) + ": enumeration of " + std::to_string(base) + "^" +
                        std::to_string(exponent) + " tuples exceeds the budget of " + std::to_string(budget));
  }
}

}  // namespace

BigInt nonzero_hyperplane_count(long q, int k) {
  BigInt units = q - 1;
  BigInt value = ipow(units, static_cast<unsigned>(k)) + ((k % 2 == 0) ? units : BigInt(-units));
  return value / q;
}

BigInt count_affine(const DiagonalVariety& v, const FieldTable& f) {
  const long q = f.order();
  const auto ells = character_orders(v, q);
  const long L = lcm_of(ells);
  const std::size_t classes = static_cast<std::size_t>(L) + 1;  // 0 = zero, 1 + c = dlog mod L

  auto class_of = [&](int x) -> std::size_t {
    return x == 0 ? 0 : 1 + static_cast<std::size_t>(f.dlog(x) % L);
  };
  auto rep = [&](std::size_t cls) -> int { return cls == 0 ? 0 : f.exp(static_cast<long>(cls - 1)); };
  // #{x : x^n = value} as a function of value.
  auto weight = [&](int ell, int value) -> long {
    if (value == 0) return 1;
    return f.dlog(value) % ell == 0 ? ell : 0;
  };

  std::vector<BigInt> state(classes);
  for (std::size_t c = 0; c < classes; ++c) state[c] = weight(ells[0], rep(c));

  std::vector<long> tally(classes);
  for (std::size_t i = 1; i < ells.size(); ++i) {
    std::vector<BigInt> next(classes);
    // Only s fits in the last step: the count at zero.
    const std::size_t targets = (i + 1 == ells.size()) ? 1 : classes;
    for (std::size_t y = 0; y < targets; ++y) {
      const int yv = rep(y);
      std::fill(tally.begin(), tally.end(), 0);
      for (long x = 0; x < q; ++x) {
        const long w = weight(ells[i], static_cast<int>(x));
        if (w != 0) tally[class_of(f.sub(yv, static_cast<int>(x)))] += w;
      }
      BigInt acc = 0;
      for (std::size_t c = 0; c < classes; ++c) {
        if (tally[c] != 0) acc += state[c] * tally[c];
      }
      next[y] = std::move(acc);
    }
    state = std::move(next);
  }
  return state[0];
}

BigInt count_projective(const DiagonalVariety& v, const FieldTable& f) {
  const BigInt affine = count_affine(v, f);
  const long q = f.order();
  if ((affine - 1) % (q - 1) != 0) throw InvariantViolation("count_projective: affine count is not 1 mod q-1");
  return (affine - 1) / (q - 1);
}

BigInt count_projective_direct(const DiagonalVariety& v, const FieldTable& f, std::uint64_t budget) {
  const long q = f.order();
  const int s = v.ambient_dim();
  check_budget(q, s, budget, "count_projective_direct");

  std::vector<std::vector<int>> powers(v.exponents.size(), std::vector<int>(static_cast<std::size_t>(q)));
  for (std::size_t i = 0; i < v.exponents.size(); ++i) {
    for (long x = 0; x < q; ++x) powers[i][static_cast<std::size_t>(x)] = f.pow(static_cast<int>(x), v.exponents[i]);
  }
  // roots[y] = #{x : x^{n_s} = y}
  std::vector<std::uint64_t> roots(static_cast<std::size_t>(q), 0);
  for (long x = 0; x < q; ++x) ++roots[static_cast<std::size_t>(powers[static_cast<std::size_t>(s)][static_cast<std::size_t>(x)])];

  std::uint64_t affine = 0;
  std::vector<int> digit(static_cast<std::size_t>(s), 0);
  std::vector<int> partial(static_cast<std::size_t>(s) + 1, 0);  // partial[i] = sum of first i terms
  for (;;) {
    for (int i = 0; i < s; ++i) {
      partial[static_cast<std::size_t>(i) + 1] =
          f.add(partial[static_cast<std::size_t>(i)], powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(digit[static_cast<std::size_t>(i)])]);
    }
    // Inner coordinate runs in a tight loop; outer ones via the odometer.
    const int base = partial[static_cast<std::size_t>(s) - 1];
    const auto& last = powers[static_cast<std::size_t>(s) - 1];
    for (long x = 0; x < q; ++x) {
      affine += roots[static_cast<std::size_t>(f.neg(f.add(base, last[static_cast<std::size_t>(x)])))];
    }
    int pos = s - 2;
    while (pos >= 0 && ++digit[static_cast<std::size_t>(pos)] == q) digit[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
  if ((affine - 1) % static_cast<std::uint64_t>(q - 1) != 0) {
    throw InvariantViolation("count_projective_direct: affine count is not 1 mod q-1");
  }
  return BigInt((affine - 1) / static_cast<std::uint64_t>(q - 1));
}

std::size_t ClassHistogram::bin_index(std::span<const int> residues) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    idx = idx * static_cast<std::size_t>(orders[i]) + static_cast<std::size_t>(((residues[i] % orders[i]) + orders[i]) % orders[i]);
  }
  return idx;
}

std::vector<int> ClassHistogram::residues(std::size_t index) const {
  std::vector<int> r(orders.size());
  for (std::size_t i = orders.size(); i-- > 0;) {
    r[i] = static_cast<int>(index % static_cast<std::size_t>(orders[i]));
    index /= static_cast<std::size_t>(orders[i]);
  }
  return r;
}

BigInt ClassHistogram::total_mass() const {
  BigInt total = 0;
  for (const auto& c : counts) total += c;
  return total;
}

ClassHistogram class_histogram(const DiagonalVariety& v, const FieldTable& f) {
  const long q = f.order();
  ClassHistogram h;
  h.field_order = q;
  h.characteristic = f.characteristic();
  h.generator = f.generator();
  h.orders = character_orders(v, q);
  const long L = lcm_of(h.orders);
  const std::size_t coords = h.orders.size();

  // sums[y][r]: tuples of the first k+1 coordinates, all nonzero, summing to
  // y in {0, 1}, binned by residues. Scaling by a unit lambda sends the bins
  // of 1 to those of lambda shifted by dlog(lambda), so y in {0, 1} suffices.
  std::vector<BigInt> at_zero(static_cast<std::size_t>(h.orders[0]), BigInt(0));
  std::vector<BigInt> at_one(static_cast<std::size_t>(h.orders[0]), BigInt(0));
  at_one[0] = 1;

  std::vector<int> prefix_orders{h.orders[0]};
  for (std::size_t k = 1; k < coords; ++k) {
    const int ell = h.orders[k];
    const std::size_t old_size = at_zero.size();
    const std::size_t new_size = old_size * static_cast<std::size_t>(ell);

    // shifted[c][idx] = index of (residues(idx) - c) in the prefix space.
    std::vector<std::vector<std::size_t>> shifted(static_cast<std::size_t>(L), std::vector<std::size_t>(old_size));
    for (std::size_t idx = 0; idx < old_size; ++idx) {
      std::vector<int> r(prefix_orders.size());
      std::size_t t = idx;
      for (std::size_t i = prefix_orders.size(); i-- > 0;) {
        r[i] = static_cast<int>(t % static_cast<std::size_t>(prefix_orders[i]));
        t /= static_cast<std::size_t>(prefix_orders[i]);
      }
      for (long c = 0; c < L; ++c) {
        std::size_t out = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
          const long oi = prefix_orders[i];
          out = out * static_cast<std::size_t>(oi) + static_cast<std::size_t>(((r[i] - c) % oi + oi) % oi);
        }
        shifted[static_cast<std::size_t>(c)][idx] = out;
      }
    }

    const bool last = (k + 1 == coords);
    std::vector<BigInt> next_zero(new_size, BigInt(0));
    std::vector<BigInt> next_one(last ? 0 : new_size, BigInt(0));
    for (int y = 0; y < (last ? 1 : 2); ++y) {
      // tally[zc][r'] over nonzero u: zc = 0 if y - u = 0, else 1 + dlog(y - u) mod L.
      std::vector<std::vector<long>> tally(static_cast<std::size_t>(L) + 1, std::vector<long>(static_cast<std::size_t>(ell), 0));
      for (long u = 1; u < q; ++u) {
        const int z = f.sub(y, static_cast<int>(u));
        const std::size_t zc = z == 0 ? 0 : 1 + static_cast<std::size_t>(f.dlog(z) % L);
        ++tally[zc][static_cast<std::size_t>(f.dlog(static_cast<int>(u)) % ell)];
      }
      auto& out = (y == 0) ? next_zero : next_one;
      for (std::size_t rp = 0; rp < static_cast<std::size_t>(ell); ++rp) {
        if (const long n = tally[0][rp]; n != 0) {
          for (std::size_t idx = 0; idx < old_size; ++idx) {
            if (!at_zero[idx].is_zero()) out[idx * static_cast<std::size_t>(ell) + rp] += at_zero[idx] * n;
          }
        }
        for (long c = 0; c < L; ++c) {
          const long n = tally[static_cast<std::size_t>(c) + 1][rp];
          if (n == 0) continue;
          const auto& sh = shifted[static_cast<std::size_t>(c)];
          for (std::size_t idx = 0; idx < old_size; ++idx) {
            const BigInt& src = at_one[sh[idx]];
            if (!src.is_zero()) out[idx * static_cast<std::size_t>(ell) + rp] += src * n;
          }
        }
      }
    }
    at_zero = std::move(next_zero);
    at_one = std::move(next_one);
    prefix_orders.push_back(ell);
  }
  h.counts = std::move(at_zero);
  return h;
}

ClassHistogram class_histogram_direct(const DiagonalVariety& v, const FieldTable& f, std::uint64_t budget) {
  const long q = f.order();
  const int s = v.ambient_dim();
  check_budget(q - 1, s, budget, "class_histogram_direct");
  ClassHistogram h;
  h.field_order = q;
  h.characteristic = f.characteristic();
  h.generator = f.generator();
  h.orders = character_orders(v, q);
  std::size_t bins = 1;
  for (int o : h.orders) bins *= static_cast<std::size_t>(o);
  std::vector<std::uint64_t> counts(bins, 0);

  std::vector<int> u(static_cast<std::size_t>(s), 1);
  std::vector<int> res(static_cast<std::size_t>(s) + 1, 0);
  for (;;) {
    int sum = 0;
    for (int i = 0; i < s; ++i) {
      sum = f.add(sum, u[static_cast<std::size_t>(i)]);
      res[static_cast<std::size_t>(i)] = f.dlog(u[static_cast<std::size_t>(i)]) % h.orders[static_cast<std::size_t>(i)];
    }
    const int last = f.neg(sum);
    if (last != 0) {
      res[static_cast<std::size_t>(s)] = f.dlog(last) % h.orders[static_cast<std::size_t>(s)];
      ++counts[h.bin_index(res)];
    }
    int pos = s - 1;
    while (pos >= 0 && ++u[static_cast<std::size_t>(pos)] == q) u[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
  }
  h.counts.assign(counts.begin(), counts.end());
  return h;
}

}  // namespace cyarith::counting
