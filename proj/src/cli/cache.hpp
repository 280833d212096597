#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <ostream>
#include <string_view>

#include "cyarith/counting.hpp"
#include "cyarith/zeta.hpp"

namespace cyarith::cli {

inline constexpr int kCacheFormatVersion = 1;

std::uint64_t fnv1a(std::string_view bytes);

// One JSON file per (variety, p, truncation). Entries carry a content hash
// and are re-verified on load (hash, Riemann hypothesis on every root, and
// re-expansion of the roots); a failing entry is deleted with a warning.
class LocalFactorCache {
 public:
  LocalFactorCache(std::filesystem::path dir, bool enabled, std::ostream& warnings);

  bool enabled() const { return enabled_; }
  std::filesystem::path entry_path(const counting::DiagonalVariety& v, long p, int max_t_degree) const;

  std::optional<zeta::LocalFactor> load(const counting::DiagonalVariety& v, long p, int max_t_degree);
  void store(const counting::DiagonalVariety& v, const zeta::LocalFactor& lf);

 private:
  void warn(const std::string& message);

  std::filesystem::path dir_;
  bool enabled_;
  std::ostream& warnings_;
  std::mutex mutex_;
};

}  // namespace cyarith::cli
