#include "cyarith/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cli/cache.hpp"
#include "cli/output.hpp"
#include "cyarith/cft.hpp"
#include "cyarith/charsum.hpp"
#include "cyarith/counting.hpp"
#include "cyarith/cyclo.hpp"
#include "cyarith/errors.hpp"
#include "cyarith/ffield.hpp"
#include "cyarith/hecke.hpp"
#include "cyarith/lseries.hpp"
#include "cyarith/zeta.hpp"

namespace cyarith::cli {

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kOutputFormatVersion = 1;

// Raw flag values before validation.
struct Flags {
  int degree = 0;
  int dimension = -1;
  std::string exponents;
  std::vector<long> primes;
  std::string range;
  int extension = 1;
  std::string format;
  bool json = false;
  bool csv = false;
  std::string out;
  bool deterministic = false;
  unsigned jobs = 0;
  std::string cache;
  bool no_cache = false;

  std::string alpha;
  int max_degree = -1;
  int counts = 1;
  bool verify = false;
  long cutoff = 0;
  double s = 0;
  int conductor = 0;
  std::string a;
  int level = 0;
  std::string check;
  bool spectrum = false;
  bool gepner = false;
  std::string target = "9";
  int max_factors = 9;
  bool regulator = false;
  long delta = 0;
  std::string s_element;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError(std::string(what) + ": malformed integer '" + item + "'");
    }
  }
  if (out.empty()) throw DomainError(std::string(what) + ": empty list");
  return out;
}

std::vector<long> parse_range(const std::string& text) {
  const auto sep = text.find_first_of(":-");
  if (sep == std::string::npos) throw DomainError("--range: expected LO:HI");
  long lo = 0, hi = 0;
  try {
    lo = std::stol(text.substr(0, sep));
    hi = std::stol(text.substr(sep + 1));
  } catch (const std::exception&) {
    throw DomainError("--range: malformed bounds '" + text + "'");
  }
  if (lo > hi) throw DomainError("--range: empty range");
  std::vector<long> out;
  for (long p = std::max(lo, 2L); p <= hi; ++p) {
    if (ffield::is_prime(p)) out.push_back(p);
  }
  return out;
}

RunConfig resolve(const std::string& sub, const Flags& f) {
  RunConfig cfg;
  cfg.subcommand = sub;
  if (f.degree != 0) cfg.degree = f.degree;
  if (f.dimension >= 0) cfg.dimension = f.dimension;
  if (!f.exponents.empty()) cfg.exponents = parse_int_list(f.exponents, "--exponents");
  cfg.primes = f.primes;
  if (!f.range.empty()) {
    const auto more = parse_range(f.range);
    cfg.primes.insert(cfg.primes.end(), more.begin(), more.end());
  }
  for (long p : cfg.primes) {
    if (p < 2) throw DomainError("primes must be > 1, got " + std::to_string(p));
  }
  if (f.extension < 1) throw DomainError("--extension must be >= 1");
  cfg.extension_degree = f.extension;
  cfg.conductor = f.conductor;
  cfg.level = f.level;
  cfg.cutoff = f.cutoff;

  if (f.json && f.csv) throw DomainError("--json and --csv are mutually exclusive");
  std::string fmt = f.format;
  if (f.json) fmt = "json";
  if (f.csv) fmt = "csv";
  if (fmt.empty() || fmt == "table") cfg.format = Format::kTable;
  else if (fmt == "json") cfg.format = Format::kJson;
  else if (fmt == "csv") cfg.format = Format::kCsv;
  else throw DomainError("--format must be json, csv or table");
  if (!f.out.empty()) cfg.out_path = f.out;

  if (const char* env = std::getenv("CYARITH_CACHE"); env && *env) cfg.cache_dir = env;
  if (!f.cache.empty()) cfg.cache_dir = f.cache;
  cfg.use_cache = !f.no_cache;

  cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CYARITH_JOBS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) throw DomainError("CYARITH_JOBS must be a positive integer");
    cfg.jobs = static_cast<unsigned>(v);
  }
  if (f.jobs > 0) cfg.jobs = f.jobs;
  cfg.deterministic = f.deterministic;
  return cfg;
}

counting::DiagonalVariety variety(const RunConfig& cfg) {
  if (!cfg.exponents.empty()) {
    if (cfg.dimension && static_cast<int>(cfg.exponents.size()) != *cfg.dimension + 2) {
      throw DomainError("--exponents has " + std::to_string(cfg.exponents.size()) + " entries but -n " +
                        std::to_string(*cfg.dimension) + " needs n+2");
    }
    if (cfg.degree) throw DomainError("give either -d/--degree or --exponents, not both");
    return counting::DiagonalVariety(cfg.exponents);
  }
  if (!cfg.degree || !cfg.dimension) throw DomainError("specify -d/--degree and -n/--dim, or --exponents");
  return counting::DiagonalVariety::fermat(*cfg.degree, *cfg.dimension);
}

std::string describe(const counting::DiagonalVariety& v) {
  std::string out;
  for (std::size_t i = 0; i < v.exponents.size(); ++i) {
    out += (i ? " + x" : "x") + std::to_string(i) + "^" + std::to_string(v.exponents[i]);
  }
  return out;
}

void require_primes(const RunConfig& cfg) {
  if (cfg.primes.empty()) throw DomainError("no primes given (use -p or --range)");
}

void require_good(const counting::DiagonalVariety& v, long p) {
  if (!ffield::is_prime(p)) throw PrimalityError(std::to_string(p) + " is not prime");
  if (!v.has_good_reduction(p)) {
    throw BadReductionError("p=" + std::to_string(p) + " is a bad prime for " + describe(v) +
                            " (it divides a defining exponent)");
  }
}

// fn(i) for i in 0..n-1 on up to `jobs` threads; rethrows the lowest-index failure.
template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  const auto width = std::min<std::size_t>(std::max(1u, jobs), n);
  std::vector<std::exception_ptr> errors(n);
  if (width <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < width; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

class Emitter {
 public:
  Emitter(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  void emit(Json payload, const Table& table) {
    std::ofstream file;
    std::ostream* os = &out_;
    if (cfg_.out_path) {
      file.open(*cfg_.out_path);
      if (!file) throw DomainError("cannot open output file " + cfg_.out_path->string());
      os = &file;
    }
    switch (cfg_.format) {
      case Format::kJson: {
        Json doc{{"command", cfg_.subcommand}, {"format_version", kOutputFormatVersion}, {"version", kVersion}};
        for (auto& [key, value] : payload.items()) doc[key] = std::move(value);
        if (!cfg_.deterministic) doc["generated_at"] = utc_timestamp();
        *os << doc.dump(2) << '\n';
        break;
      }
      case Format::kCsv:
        table.write_csv(*os);
        break;
      case Format::kTable:
        table.write_text(*os);
        break;
    }
  }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
};

std::string bool_string(bool b) { return b ? "true" : "false"; }

std::string double_string(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

Json optional_rational(const cyclo::CycInt& x) {
  return x.is_rational() ? Json(to_decimal(x.rational_value())) : Json(nullptr);
}

// ---- count ----

int run_count(const RunConfig& cfg, const Flags& flags, Emitter& em) {
  const auto v = variety(cfg);
  require_primes(cfg);
  Json results = Json::array();
  Table table{{"p", "q", "projective", "affine"}, {}};
  if (flags.verify) table.header.push_back("direct");
  bool ok = true;
  for (long p : cfg.primes) {
    require_good(v, p);
    const auto f = ffield::make_extension_field(p, cfg.extension_degree);
    const BigInt proj = counting::count_projective(v, f);
    const BigInt aff = counting::count_affine(v, f);
    Json r{{"p", p}, {"q", f.order()}, {"projective", to_decimal(proj)}, {"affine", to_decimal(aff)}};
    std::vector<std::string> row{std::to_string(p), std::to_string(f.order()), to_decimal(proj), to_decimal(aff)};
    if (flags.verify) {
      const BigInt direct = counting::count_projective_direct(v, f);
      r["direct"] = to_decimal(direct);
      r["agrees"] = direct == proj;
      ok = ok && direct == proj;
      row.push_back(to_decimal(direct));
    }
    results.push_back(r);
    table.rows.push_back(row);
  }
  em.emit(Json{{"variety", to_json(v)}, {"extension_degree", cfg.extension_degree}, {"results", results}}, table);
  return ok ? kOk : kCheckFailed;
}

// ---- jacobi ----

int run_jacobi(const RunConfig& cfg, const Flags& flags, Emitter& em) {
  const auto v = variety(cfg);
  require_primes(cfg);
  Json results = Json::array();
  Table table{{"p", "q", "alpha", "value", "abs_squared"}, {}};
  for (long p : cfg.primes) {
    require_good(v, p);
    const auto f = ffield::make_extension_field(p, cfg.extension_degree);
    std::vector<charsum::AlphaTuple> tuples;
    if (!flags.alpha.empty()) {
      auto a = charsum::AlphaTuple::parse(flags.alpha);
      if (a.numerators.size() != v.exponents.size()) {
        throw DomainError("--alpha needs " + std::to_string(v.exponents.size()) + " entries");
      }
      if (!a.sums_to_integer()) throw DomainError("--alpha entries must sum to an integer");
      tuples.push_back(std::move(a));
    } else {
      tuples = charsum::build_alpha_set(v, f).tuples;
    }
    const auto hist = counting::class_histogram(v, f);
    for (const auto& a : tuples) {
      const auto j = charsum::jacobi_sum(f, a, hist);
      const auto abs2 = optional_rational(j * j.conj());
      results.push_back(Json{{"p", p},
                             {"q", f.order()},
                             {"alpha", a.entry_strings()},
                             {"value", to_json(j)},
                             {"text", j.to_string()},
                             {"abs_squared", abs2}});
      table.rows.push_back({std::to_string(p), std::to_string(f.order()), a.to_string(), j.to_string(),
                            abs2.is_null() ? "" : abs2.get<std::string>()});
    }
  }
  em.emit(Json{{"variety", to_json(v)}, {"extension_degree", cfg.extension_degree}, {"results", results}}, table);
  return kOk;
}

// ---- zeta / lseries ----

zeta::LocalFactor fetch_local_factor(LocalFactorCache& cache, const counting::DiagonalVariety& v, long p,
                                     int max_t_degree) {
  if (auto hit = cache.load(v, p, max_t_degree)) return std::move(*hit);
  zeta::LocalFactorOptions options;
  options.max_t_degree = max_t_degree;
  auto lf = zeta::local_factor_middle(v, p, options);
  cache.store(v, lf);
  return lf;
}

int run_zeta(const RunConfig& cfg, const Flags& flags, Emitter& em, std::ostream& err) {
  const auto v = variety(cfg);
  require_primes(cfg);
  for (long p : cfg.primes) require_good(v, p);
  LocalFactorCache cache(cfg.cache_dir, cfg.use_cache, err);
  std::vector<zeta::LocalFactor> lfs(cfg.primes.size());
  parallel_for(cfg.primes.size(), cfg.jobs,
               [&](std::size_t i) { lfs[i] = fetch_local_factor(cache, v, cfg.primes[i], flags.max_degree); });

  bool ok = true;
  Json results = Json::array();
  Table table{{"p", "degree", "rh_pass", "fe_sign", "predicted_N1"}, {}};
  if (flags.verify) table.header.push_back("counted_N1");
  for (auto& lf : lfs) {
    const auto z = zeta::congruent_zeta(v, lf);
    const auto rh = zeta::check_riemann_hypothesis(z.middle);
    ok = ok && rh.all_pass;

    Json roots = Json::array();
    for (const auto& r : z.middle.roots) {
      roots.push_back(Json{{"beta", to_json(r.beta)}, {"multiplicity", r.multiplicity}, {"t_power", r.t_power}});
    }
    Json r{{"p", z.p},
           {"cohomology_degree", z.middle.cohomology_degree},
           {"degree", z.middle.degree()},
           {"complete", z.middle.complete()},
           {"max_t_degree", z.middle.max_t_degree},
           {"coefficients", bigints_to_json(z.middle.coeffs)},
           {"roots", roots},
           {"trivial_powers", z.trivial_powers},
           {"rh_pass", rh.all_pass}};
    std::string sign_text;
    if (z.middle.complete()) {
      const auto fe = zeta::check_functional_equation(z.middle);
      ok = ok && fe.conjugation_closed;
      r["conjugation_closed"] = fe.conjugation_closed;
      r["functional_sign"] = fe.sign;
      sign_text = std::to_string(fe.sign);
    } else {
      r["conjugation_closed"] = nullptr;
      r["functional_sign"] = nullptr;
    }
    if (z.hodge && z.middle.complete()) {
      const int expected = zeta::expected_degrees(*z.hodge, z.middle.cohomology_degree)
          [static_cast<std::size_t>(z.middle.cohomology_degree)];
      r["expected_degree"] = expected;
      ok = ok && expected == z.middle.degree();
    }
    int R = std::max(flags.counts, 1);
    if (!z.middle.complete()) R = std::min(R, z.middle.max_t_degree);
    Json predicted = Json::array();
    std::vector<BigInt> predicted_values;
    for (int k = 1; k <= R; ++k) {
      predicted_values.push_back(zeta::predicted_count(z, k));
      predicted.push_back(to_decimal(predicted_values.back()));
    }
    r["predicted_counts"] = predicted;
    const std::string n1_text = predicted_values.empty() ? "" : to_decimal(predicted_values.front());
    std::vector<std::string> row{std::to_string(z.p), std::to_string(z.middle.degree()), bool_string(rh.all_pass),
                                 sign_text, n1_text};
    if (flags.verify) {
      Json counted = Json::array();
      for (int k = 1; k <= R; ++k) {
        const auto f = ffield::make_extension_field(z.p, k);
        const BigInt c = counting::count_projective(v, f);
        ok = ok && c == predicted_values[static_cast<std::size_t>(k - 1)];
        counted.push_back(to_decimal(c));
      }
      r["counted_counts"] = counted;
      row.push_back(counted.empty() ? "" : counted.front().get<std::string>());
    }
    results.push_back(r);
    table.rows.push_back(row);
  }
  em.emit(Json{{"variety", to_json(v)}, {"results", results}, {"pass", ok}}, table);
  return ok ? kOk : kCheckFailed;
}

int max_power(long p, long N) {
  int k = 0;
  for (long q = p; q <= N; q *= p) ++k;
  return k;
}

int run_lseries(const RunConfig& cfg, const Flags& flags, Emitter& em, std::ostream& err) {
  const auto v = variety(cfg);
  if (cfg.cutoff < 1) throw DomainError("lseries needs -N/--cutoff >= 1");
  std::vector<long> good;
  lseries::LocalFactorCollection collection;
  for (long p = 2; p <= cfg.cutoff; ++p) {
    if (!ffield::is_prime(p)) continue;
    if (v.has_good_reduction(p)) good.push_back(p);
    else collection.bad_primes.push_back(p);
  }
  LocalFactorCache cache(cfg.cache_dir, cfg.use_cache, err);
  std::vector<zeta::LocalFactor> lfs(good.size());
  parallel_for(good.size(), cfg.jobs, [&](std::size_t i) {
    lfs[i] = fetch_local_factor(cache, v, good[i], max_power(good[i], cfg.cutoff));
  });
  for (std::size_t i = 0; i < good.size(); ++i) collection.factors.emplace(good[i], std::move(lfs[i]));
  const auto series = lseries::dirichlet_coefficients(collection, cfg.cutoff);

  Json coeffs = Json::array();
  Table table{{"n", "a_n"}, {}};
  for (long n = 1; n <= cfg.cutoff; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    const bool known = series.known[idx];
    coeffs.push_back(Json{{"n", n}, {"a", known ? Json(to_decimal(series.a[idx])) : Json(nullptr)}});
    table.rows.push_back({std::to_string(n), known ? to_decimal(series.a[idx]) : ""});
  }
  Json primes = Json::array();
  for (const auto& e : series.primes) {
    primes.push_back(Json{{"p", e.p}, {"degree", e.degree}, {"truncated", e.truncated}});
  }
  Json payload{{"variety", to_json(v)},
               {"cutoff", series.cutoff},
               {"weight", series.weight},
               {"degree", series.degree},
               {"coefficients", coeffs},
               {"primes", primes},
               {"bad_primes", series.bad_primes},
               {"gaps", series.gaps}};
  if (flags.s != 0) {
    const auto ps = lseries::partial_sum_eval(series, flags.s);
    payload["partial_sum"] = Json{{"s", flags.s}, {"value", ps.value}, {"log10_error_bound", ps.log10_error_bound}};
  }
  em.emit(payload, table);
  return kOk;
}

// ---- hecke ----

int run_hecke(const RunConfig& cfg, const Flags& flags, Emitter& em) {
  if (cfg.conductor < 2) throw DomainError("hecke needs -m/--conductor >= 2");
  if (flags.a.empty()) throw DomainError("hecke needs -a/--exponents-a, e.g. 1,1,1,1");
  const auto a = parse_int_list(flags.a, "-a");
  const int r = static_cast<int>(a.size());
  Json payload{{"conductor", cfg.conductor}, {"a", a}, {"rank", r}};

  if (cfg.cutoff > 0) {
    const auto series = lseries::dirichlet_coefficients(lseries::HeckeCharacterSpec{cfg.conductor, a}, cfg.cutoff);
    Json coeffs = Json::array();
    Table table{{"n", "a_n"}, {}};
    for (long n = 1; n <= cfg.cutoff; ++n) {
      const auto& c = series.a[static_cast<std::size_t>(n)];
      coeffs.push_back(Json{{"n", n}, {"a", to_json(c)}, {"text", c.to_string()}});
      table.rows.push_back({std::to_string(n), c.to_string()});
    }
    payload["cutoff"] = cfg.cutoff;
    payload["coefficients"] = coeffs;
    payload["ideal_norms"] = series.norms;
    payload["ramified"] = series.ramified;
    em.emit(payload, table);
    return kOk;
  }

  require_primes(cfg);
  Json primes = Json::array();
  Table table{{"p", "f", "g", "t", "norm", "J", "abs_squared"}, {}};
  for (long p : cfg.primes) {
    const auto split = hecke::splitting_data(p, cfg.conductor);
    const auto ideals = hecke::prime_ideals_above(p, cfg.conductor);
    const auto hist = hecke::rank_histogram(*ideals.front().field, cfg.conductor, r);
    Json list = Json::array();
    for (const auto& ideal : ideals) {
      const auto J = hecke::ideal_jacobi_sum(ideal, a, hist);
      const auto abs2 = optional_rational(J * J.conj());
      list.push_back(Json{{"t", ideal.t},
                          {"c", ideal.c},
                          {"norm", ideal.norm()},
                          {"J", to_json(J)},
                          {"text", J.to_string()},
                          {"abs_squared", abs2}});
      table.rows.push_back({std::to_string(p), std::to_string(split.f), std::to_string(split.g),
                            std::to_string(ideal.t), std::to_string(ideal.norm()), J.to_string(),
                            abs2.is_null() ? "" : abs2.get<std::string>()});
    }
    primes.push_back(Json{{"p", p}, {"f", split.f}, {"g", split.g}, {"ideals", list}});
  }
  payload["primes"] = primes;
  em.emit(payload, table);
  return kOk;
}

// ---- cyclo ----

int run_cyclo(const RunConfig& cfg, const Flags& flags, Emitter& em) {
  Json payload = Json::object();
  Table table{{"j", "theta_j", "numeric"}, {}};
  if (flags.delta != 0) {
    const double value = cyclo::delta_determinant(flags.delta);
    payload["delta"] = Json{{"p", flags.delta}, {"value", value}};
    table = Table{{"p", "delta"}, {{std::to_string(flags.delta), double_string(value)}}};
  }
  if (cfg.conductor >= 2) {
    const int m = cfg.conductor;
    payload["conductor"] = m;
    payload["phi"] = cyclo::euler_phi(m);
    Json units = Json::array();
    std::vector<cyclo::CycInt> exact;
    if (flags.delta == 0) table.rows.clear();
    for (int j = 2; 2 * j <= m; ++j) {
      if (std::gcd(j, m) != 1) continue;
      const auto u = cyclo::cyclotomic_unit(m, j);
      exact.push_back(u.exact);
      units.push_back(Json{{"j", j}, {"exact", to_json(u.exact)}, {"text", u.exact.to_string()}, {"numeric", u.numeric}});
      if (flags.delta == 0) table.rows.push_back({std::to_string(j), u.exact.to_string(), double_string(u.numeric)});
    }
    payload["units"] = units;
    if (flags.regulator && !exact.empty()) {
      const auto rows = cyclo::regulator_matrix(exact, m);
      Json sums = Json::array();
      for (const auto& row : rows) {
        double s = 0;
        for (double x : row) s += x;
        sums.push_back(s);
      }
      payload["regulator"] = Json{{"places", cyclo::real_places(m)}, {"rows", rows}, {"row_sums", sums}};
    }
    if (!flags.s_element.empty()) {
      const auto a = parse_int_list(flags.s_element, "--s-element");
      const auto s = cyclo::s_element(a, m);
      Json coeffs = Json::array();
      for (const auto& [l, c] : s.inverse_coefficients) coeffs.push_back(Json{{"l", l}, {"coefficient", c}});
      const auto w = cyclo::hecke_weight(s);
      payload["s_element"] = Json{{"a", a}, {"inverse_coefficients", coeffs}, {"weight", w ? Json(*w) : Json(nullptr)}};
    }
  } else if (flags.delta == 0) {
    throw DomainError("cyclo needs -m/--conductor >= 2 or --delta P");
  }
  em.emit(payload, table);
  return kOk;
}

// ---- cft ----

Json kr_json(int k, bool& ok) {
  const double residual = cft::check_kr_identity(k);
  const bool pass = residual < 1e-9;
  ok = ok && pass;
  return Json{{"residual", residual}, {"pass", pass}};
}

Json kn_json(int k, bool& ok) {
  Json results = Json::array();
  bool pass = true;
  for (int m = 0; m <= k; ++m) {
    const auto r = cft::check_kn_identity(k, m);
    if (r.skipped()) {
      results.push_back(Json{{"m", m}, {"skipped", true}, {"vanishing_l", *r.vanishing_l}});
      continue;
    }
    pass = pass && r.residual < 1e-9;
    results.push_back(Json{{"m", m}, {"skipped", false}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"residual", r.residual}});
  }
  ok = ok && pass;
  return Json{{"results", results}, {"pass", pass}};
}

Json verlinde_json(int k, bool& ok) {
  const auto t = cft::verlinde_fusion(k);
  bool nonnegative = true, symmetric = true;
  for (int l = 0; l <= k; ++l) {
    for (int m = 0; m <= k; ++m) {
      for (int n = 0; n <= k; ++n) {
        nonnegative = nonnegative && t.at(l, m, n) >= 0;
        symmetric = symmetric && t.at(l, m, n) == t.at(m, l, n);
      }
    }
  }
  const bool pass = nonnegative && symmetric && t.max_residual <= 1e-9;
  ok = ok && pass;
  return Json{{"max_residual", t.max_residual}, {"nonnegative", nonnegative}, {"symmetric", symmetric}, {"pass", pass}};
}

Json fusion_field_json(int k, bool& ok) {
  const auto rep = cft::fusion_field_match(k);
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    Json j{{"l", e.l}, {"quantum_dimension", e.quantum_dimension}};
    if (e.unit_index) {
      j["unit_index"] = *e.unit_index;
      j["unit_value"] = e.unit_value;
      j["difference"] = e.difference;
    } else {
      j["unit_index"] = nullptr;
    }
    entries.push_back(j);
  }
  ok = ok && rep.matched;
  return Json{{"conductor", rep.conductor}, {"entries", entries}, {"max_difference", rep.max_difference},
              {"pass", rep.matched}};
}

int run_cft(const RunConfig& cfg, const Flags& flags, Emitter& em) {
  if (flags.gepner) {
    cft::BigRational target;
    try {
      target = cft::BigRational(flags.target);
    } catch (const std::exception&) {
      throw DomainError("--target must be a rational like 9 or 27/4");
    }
    const auto levels = cft::gepner_levels(target, flags.max_factors);
    Table table{{"levels", "central_charge"}, {}};
    Json list = Json::array();
    for (const auto& ks : levels) {
      std::string text;
      for (std::size_t i = 0; i < ks.size(); ++i) text += (i ? " " : "") + std::to_string(ks[i]);
      table.rows.push_back({text, cft::central_charge_sum(ks).str()});
      list.push_back(ks);
    }
    em.emit(Json{{"target", target.str()}, {"max_factors", flags.max_factors}, {"count", levels.size()},
                 {"levels", list}},
            table);
    return kOk;
  }
  const int k = cfg.level;
  if (k < 1) throw DomainError("cft needs --level k >= 1 (or --gepner)");

  if (flags.spectrum) {
    const auto spec = cft::n2_spectrum(k);
    Table table{{"l", "q", "s", "delta_num", "delta_den", "Q_num", "Q_den"}, {}};
    Json states = Json::array();
    for (const auto& st : spec.states) {
      table.rows.push_back({std::to_string(st.l), std::to_string(st.q), std::to_string(st.s),
                            std::to_string(st.delta.numerator()), std::to_string(st.delta.denominator()),
                            std::to_string(st.charge.numerator()), std::to_string(st.charge.denominator())});
      states.push_back(Json{{"l", st.l}, {"q", st.q}, {"s", st.s}, {"delta", rational_string(st.delta)},
                            {"charge", rational_string(st.charge)}});
    }
    em.emit(Json{{"level", k}, {"states", states}}, table);
    return kOk;
  }

  if (!flags.check.empty()) {
    bool ok = true;
    Json checks = Json::object();
    const bool all = flags.check == "all";
    if (all || flags.check == "kr") checks["kr"] = kr_json(k, ok);
    if (all || flags.check == "kn") checks["kn"] = kn_json(k, ok);
    if (all || flags.check == "verlinde") checks["verlinde"] = verlinde_json(k, ok);
    if (all || flags.check == "fusion-field") checks["fusion_field"] = fusion_field_json(k, ok);
    if (checks.empty()) throw DomainError("--check must be kr, kn, verlinde, fusion-field or all");
    Table table{{"check", "pass"}, {}};
    for (auto& [name, val] : checks.items()) table.rows.push_back({name, bool_string(val["pass"].get<bool>())});
    em.emit(Json{{"level", k}, {"checks", checks}, {"pass", ok}}, table);
    return ok ? kOk : kCheckFailed;
  }

  const auto md = cft::modular_data(k);
  Json weights = Json::array();
  Table table{{"l", "conformal_weight", "quantum_dimension"}, {}};
  for (int l = 0; l <= k; ++l) {
    const auto& d = md.delta[static_cast<std::size_t>(l)];
    weights.push_back(rational_string(d));
    table.rows.push_back({std::to_string(l), rational_string(d), double_string(cft::quantum_dimension(k, l))});
  }
  em.emit(Json{{"level", k}, {"central_charge", rational_string(md.c)}, {"conformal_weights", weights}, {"S", md.S}},
          table);
  return kOk;
}

// ---- match ----

int run_match(const RunConfig& cfg, Emitter& em) {
  const auto v = variety(cfg);
  std::vector<long> primes = cfg.primes;
  require_primes(cfg);
  std::vector<hecke::HeckeMatchReport> reports(primes.size());
  parallel_for(primes.size(), cfg.jobs, [&](std::size_t i) { reports[i] = hecke::match_hasse_weil(v, primes[i]); });

  Json results = Json::array();
  Table table{{"p", "ideals", "representatives", "matched", "sign"}, {}};
  bool ok = true;
  int sign = 0;
  bool consistent = true;
  for (const auto& r : reports) {
    ok = ok && r.matched;
    if (r.matched) {
      if (sign == 0) sign = r.sign;
      consistent = consistent && r.sign == sign;
    }
    results.push_back(Json{{"p", r.p},
                           {"conductor", r.m},
                           {"rank", r.rank},
                           {"ideals", r.ideals},
                           {"representatives", r.representatives},
                           {"values", r.hecke_values.size()},
                           {"matched", r.matched},
                           {"sign", r.sign},
                           {"sign_ambiguous", r.sign_ambiguous}});
    table.rows.push_back({std::to_string(r.p), std::to_string(r.ideals), std::to_string(r.representatives),
                          bool_string(r.matched), std::to_string(r.sign)});
  }
  ok = ok && consistent;
  em.emit(Json{{"variety", to_json(v)},
               {"results", results},
               {"consistent_sign", consistent},
               {"global_sign", sign},
               {"pass", ok}},
          table);
  return ok ? kOk : kCheckFailed;
}

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--format", f.format, "Output format: table, json or csv");
  sub->add_flag("--json", f.json, "Same as --format json");
  sub->add_flag("--csv", f.csv, "Same as --format csv");
  sub->add_option("-o,--out", f.out, "Write output to this file instead of stdout");
  sub->add_flag("--deterministic", f.deterministic, "Omit the generated_at timestamp");
  sub->add_option("-j,--jobs", f.jobs, "Worker threads (default: hardware width or CYARITH_JOBS)");
  sub->add_option("--cache", f.cache, "Cache directory (default: CYARITH_CACHE or ./cache)");
  sub->add_flag("--no-cache", f.no_cache, "Neither read nor write the cache");
}

void add_variety(CLI::App* sub, Flags& f) {
  sub->add_option("-d,--degree", f.degree, "Fermat degree d");
  sub->add_option("-n,--dim", f.dimension, "Complex dimension n (n+2 variables)");
  sub->add_option("-e,--exponents", f.exponents, "Diagonal exponents, e.g. 5,5,5,5,5");
}

void add_primes(CLI::App* sub, Flags& f) {
  sub->add_option("-p,--prime", f.primes, "Prime(s); repeat or separate by commas")->delimiter(',');
  sub->add_option("--range", f.range, "All primes in LO:HI");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic of diagonal Calabi-Yau hypersurfaces and SU(2)_k data", "cyarith"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Flags f;

  auto* count = app.add_subcommand("count", "Projective and affine point counts over F_{p^r}");
  add_variety(count, f);
  add_primes(count, f);
  count->add_option("-r,--extension", f.extension, "Extension degree r");
  count->add_flag("--verify", f.verify, "Cross-check against direct enumeration");
  add_common(count, f);

  auto* jacobi = app.add_subcommand("jacobi", "Jacobi sums j(alpha) over F_{p^r}");
  add_variety(jacobi, f);
  add_primes(jacobi, f);
  jacobi->add_option("-r,--extension", f.extension, "Extension degree r");
  jacobi->add_option("--alpha", f.alpha, "One tuple, e.g. 1/5,1/5,1/5,1/5,1/5 (default: all)");
  add_common(jacobi, f);

  auto* zeta = app.add_subcommand("zeta", "Middle local factor of the congruent zeta function");
  add_variety(zeta, f);
  add_primes(zeta, f);
  zeta->add_option("--max-degree", f.max_degree, "Keep only Frobenius orbits with t-power <= this");
  zeta->add_option("--counts", f.counts, "Predict N_r for r = 1..R (default 1)");
  zeta->add_flag("--verify", f.verify, "Compare the predicted counts with point counts");
  add_common(zeta, f);

  auto* ls = app.add_subcommand("lseries", "Hasse-Weil Dirichlet coefficients a_n, n <= N");
  add_variety(ls, f);
  ls->add_option("-N,--cutoff", f.cutoff, "Cutoff N")->required();
  ls->add_option("-s,--at", f.s, "Also evaluate the partial sum at this real s");
  add_common(ls, f);

  auto* hk = app.add_subcommand("hecke", "Rank-r Jacobi sums at prime ideals of Q(mu_m)");
  add_primes(hk, f);
  hk->add_option("-m,--conductor", f.conductor, "Conductor m")->required();
  hk->add_option("-a", f.a, "Exponents a_1..a_r, e.g. 1,1,1,1")->required();
  hk->add_option("-N,--cutoff", f.cutoff, "Emit Hecke L-series coefficients up to N instead");
  add_common(hk, f);

  auto* cy = app.add_subcommand("cyclo", "Cyclotomic units, regulator rows, S(a) and the Delta determinant");
  cy->add_option("-m,--conductor", f.conductor, "Conductor m");
  cy->add_flag("--regulator", f.regulator, "Include the regulator matrix of the units");
  cy->add_option("--delta", f.delta, "Delta determinant at the prime P");
  cy->add_option("--s-element", f.s_element, "Group-ring element S(a) for a = a_1,..,a_r");
  add_common(cy, f);

  auto* cf = app.add_subcommand("cft", "SU(2)_k modular data, spectra, identities and Gepner levels");
  cf->add_option("-k,--level", f.level, "Level k");
  cf->add_option("--check", f.check, "kr, kn, verlinde, fusion-field or all");
  cf->add_flag("--spectrum", f.spectrum, "N=2 minimal-model spectrum");
  cf->add_flag("--gepner", f.gepner, "Enumerate level lists with the target central charge");
  cf->add_option("--target", f.target, "Target central charge for --gepner");
  cf->add_option("--max-factors", f.max_factors, "Maximum number of factors for --gepner");
  add_common(cf, f);

  auto* mt = app.add_subcommand("match", "Compare ideal Jacobi sums with the zeta-side Jacobi sums");
  add_variety(mt, f);
  add_primes(mt, f);
  add_common(mt, f);

  std::vector<const char*> argv{"cyarith"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    const std::string sub = app.get_subcommands().front()->get_name();
    const RunConfig cfg = resolve(sub, f);
    Emitter em(cfg, out);
    if (sub == "count") return run_count(cfg, f, em);
    if (sub == "jacobi") return run_jacobi(cfg, f, em);
    if (sub == "zeta") return run_zeta(cfg, f, em, err);
    if (sub == "lseries") return run_lseries(cfg, f, em, err);
    if (sub == "hecke") return run_hecke(cfg, f, em);
    if (sub == "cyclo") return run_cyclo(cfg, f, em);
    if (sub == "cft") return run_cft(cfg, f, em);
    if (sub == "match") return run_match(cfg, em);
    throw DomainError("unknown subcommand " + sub);
  } catch (const InvariantViolation& e) {
    err << "error: self-check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace cyarith::cli
