#include "qmf/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <random>
#include <unistd.h>

namespace qmf {

namespace fs = std::filesystem;

fs::path ResultCache::default_dir() {
  if (const char* p = std::getenv("FREUDENTHAL_CACHE"); p && *p) return p;
  if (const char* p = std::getenv("XDG_DATA_HOME"); p && *p) return fs::path(p) / "freudenthal";
  if (const char* p = std::getenv("HOME"); p && *p) return fs::path(p) / ".local" / "share" / "freudenthal";
  return fs::temp_directory_path() / "freudenthal";
}

std::string ResultCache::key(const json& task) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : task.dump()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

fs::path ResultCache::file_for(const json& task) const { return dir_ / (key(task) + ".json"); }

std::optional<json> ResultCache::load(const json& task) const {
  std::ifstream f(file_for(task));
  if (!f) return std::nullopt;
  json rec;
  try {
    rec = json::parse(std::string(std::istreambuf_iterator<char>(f), {}));
  } catch (const json::parse_error&) {
    return std::nullopt;
  }
  if (!rec.is_object() || rec.value("version", "") != cache_version || rec.value("task", json()) != task)
    return std::nullopt;
  return rec;
}

void ResultCache::store(const json& record) const {
  fs::create_directories(dir_);
  const fs::path target = file_for(record.at("task"));
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(std::random_device{}());
  {
    std::ofstream f(tmp, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write cache file " + tmp.string());
    f << record.dump() << '\n';
  }
  fs::rename(tmp, target);
}

std::vector<std::size_t> spot_check_indices(std::size_t n) {
  if (n == 0) return {};
  const std::size_t m = std::max<std::size_t>(1, (n + 99) / 100);
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < m; ++k) idx.push_back(k * n / m);
  return idx;
}

RJordan class_rep(const std::string& K) {
  if (K == "I") return identity<Rational>(Alg::theta0);
  if (K == "E") return class_E();
  throw std::invalid_argument("class must be I or E");
}

namespace {

template <class Compute, class Check>
CachedResult run_cached(const ResultCache* cache, const json& task, Compute compute, Check check) {
  CachedResult out;
  if (cache) {
    if (auto rec = cache->load(task)) {
      const json& els = rec->at("elements");
      bool ok = true;
      for (std::size_t i : spot_check_indices(els.size())) {
        try {
          ok = ok && check(els[i]);
        } catch (const std::exception&) {
          ok = false;
        }
      }
      if (ok) {
        out.record = std::move(*rec);
        out.hit = true;
        return out;
      }
      out.revalidated = true;
    }
  }
  out.record = compute();
  out.record["task"] = task;
  out.record["version"] = cache_version;
  if (cache) cache->store(out.record);
  return out;
}

}  // namespace

CachedResult cached_rank1_psd(const ResultCache* cache, const std::string& K, std::int64_t n, bool keep_elements) {
  const RJordan Kj = class_rep(K);
  const json task = {{"kind", "rank1-psd"}, {"class", K}, {"value", n}, {"elements", keep_elements}};
  return run_cached(
      cache, task, [&] { return to_json(enum_rank1_psd_pairing(Kj, n, keep_elements)); },
      [&](const json& e) {
        const RJordan T = jordan_from_json(e);
        return in_lattice(T) && rank_jordan(T) == 1 && is_psd(T) && trace_pair(T, Kj) == n;
      });
}

CachedResult cached_omega_fiber(const ResultCache* cache, const std::string& K, const std::array<Rational, 4>& w0,
                                std::int64_t height) {
  const RJordan Kj = class_rep(K);
  json q = json::array();
  for (const auto& r : w0) q.push_back(to_json(r));
  const json task = {{"kind", "omega-fiber"}, {"class", K}, {"omega0", q}, {"height", height}};
  return run_cached(
      cache, task, [&] { return to_json(omega_fiber(Kj, w0, height)); },
      [&](const json& e) {
        const RFreud w = freud_from_json(e);
        return rank_w(w) == 1 && is_integral(w) && contract(w, Kj) == w0 &&
               (height == 0 || height_w(w) <= height);
      });
}

}  // namespace qmf
