#pragma once

#include "qmf/json_io.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace qmf {

inline constexpr const char* cache_version = "qmf-1";

// One canonical-JSON file per task, named by the FNV-1a hash of the task's
// canonical serialization.  File body: {task, elements, aggregate, complete,
// version, count}.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  // FREUDENTHAL_CACHE, else $XDG_DATA_HOME/freudenthal, else ~/.local/share/freudenthal.
  static std::filesystem::path default_dir();
  static std::string key(const json& task);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path file_for(const json& task) const;
  // nullopt on miss, on a version mismatch, or on a hash collision.
  std::optional<json> load(const json& task) const;
  // Written to a temporary file and renamed into place.
  void store(const json& record) const;

 private:
  std::filesystem::path dir_;
};

// Indices of the elements a cache hit re-checks: 1% of n, at least one,
// spread evenly.
std::vector<std::size_t> spot_check_indices(std::size_t n);

struct CachedResult {
  json record;
  bool hit = false;
  bool revalidated = false;  // a hit whose spot check failed and was recomputed
};

// K is "I" or "E".  cache may be null.
CachedResult cached_rank1_psd(const ResultCache* cache, const std::string& K, std::int64_t n,
                              bool keep_elements);
CachedResult cached_omega_fiber(const ResultCache* cache, const std::string& K,
                                const std::array<Rational, 4>& w0, std::int64_t height);

RJordan class_rep(const std::string& K);

}  // namespace qmf
