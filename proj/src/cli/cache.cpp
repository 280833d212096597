#include "cli/cache.hpp"

#include <fstream>
#include <sstream>

#include "cli/output.hpp"

namespace cyarith::cli {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string hex(std::uint64_t x) {
  std::ostringstream os;
  os << std::hex << x;
  return os.str();
}

}  // namespace

LocalFactorCache::LocalFactorCache(std::filesystem::path dir, bool enabled, std::ostream& warnings)
    : dir_(std::move(dir)), enabled_(enabled), warnings_(warnings) {}

void LocalFactorCache::warn(const std::string& message) {
  std::lock_guard lock(mutex_);
  warnings_ << "warning: " << message << '\n';
}

std::filesystem::path LocalFactorCache::entry_path(const counting::DiagonalVariety& v, long p,
                                                   int max_t_degree) const {
  std::string name = "lf";
  for (std::size_t i = 0; i < v.exponents.size(); ++i) name += (i ? "-" : "_") + std::to_string(v.exponents[i]);
  name += "_p" + std::to_string(p);
  if (max_t_degree >= 0) name += "_t" + std::to_string(max_t_degree);
  return dir_ / (name + ".json");
}

std::optional<zeta::LocalFactor> LocalFactorCache::load(const counting::DiagonalVariety& v, long p,
                                                        int max_t_degree) {
  if (!enabled_) return std::nullopt;
  const auto path = entry_path(v, p, max_t_degree);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;

  std::string reason;
  try {
    std::ifstream in(path);
    const Json doc = Json::parse(in);
    const Json& payload = doc.at("payload");
    if (doc.at("format_version").get<int>() != kCacheFormatVersion) {
      reason = "format version mismatch";
    } else if (doc.at("hash").get<std::string>() != hex(fnv1a(payload.dump()))) {
      reason = "hash mismatch";
    } else if (payload.at("exponents").get<std::vector<int>>() != v.exponents) {
      reason = "variety mismatch";
    } else {
      auto lf = local_factor_from_json(payload.at("local_factor"));
      if (lf.p != p || lf.max_t_degree != max_t_degree) {
        reason = "key mismatch";
      } else if (!zeta::check_riemann_hypothesis(lf).all_pass) {
        reason = "Riemann hypothesis recheck failed";
      } else if (zeta::expand_roots(lf.roots, lf.max_t_degree) != lf.coeffs) {
        reason = "coefficients disagree with the stored roots";
      } else {
        return lf;
      }
    }
  } catch (const std::exception& e) {
    reason = std::string("unreadable entry (") + e.what() + ")";
  }
  warn("discarding cache entry " + path.string() + ": " + reason + "; recomputing");
  std::filesystem::remove(path, ec);
  return std::nullopt;
}

void LocalFactorCache::store(const counting::DiagonalVariety& v, const zeta::LocalFactor& lf) {
  if (!enabled_) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) {
    warn("cannot create cache directory " + dir_.string() + ": " + ec.message());
    return;
  }
  const Json payload{{"exponents", v.exponents}, {"local_factor", to_json(lf)}};
  const Json doc{{"format_version", kCacheFormatVersion}, {"hash", hex(fnv1a(payload.dump()))}, {"payload", payload}};

  const auto path = entry_path(v, lf.p, lf.max_t_degree);
  auto tmp = path;
  tmp += ".tmp" + std::to_string(fnv1a(path.string()) ^ static_cast<std::uint64_t>(lf.p));
  {
    std::ofstream out(tmp);
    out << doc.dump() << '\n';
    if (!out) {
      warn("cannot write cache entry " + path.string());
      return;
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) warn("cannot finalize cache entry " + path.string() + ": " + ec.message());
}

}  // namespace cyarith::cli
