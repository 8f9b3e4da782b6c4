#include "qkdv/cache.hpp"

#include "qkdv/format.hpp"

#include <fstream>
#include <sstream>

namespace qkdv {

namespace fs = std::filesystem;

HamiltonianCache::HamiltonianCache(fs::path dir) : file_(std::move(dir) / "hamiltonians.json") {
  if (!fs::exists(file_)) {
    return;
  }
  std::ifstream in(file_);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw CacheError("cache file " + file_.string() + " is not valid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("schema_version")) {
    throw CacheError("cache file " + file_.string() + " has no schema_version");
  }
  const auto version = doc.at("schema_version");
  if (!version.is_number_integer() || version.get<int>() != kCacheSchemaVersion) {
    throw CacheError("cache file " + file_.string() + " has schema_version " + version.dump() + ", expected " +
                     std::to_string(kCacheSchemaVersion));
  }
  try {
    for (const auto& r : doc.at("records")) {
      if (r.at("format_version").get<int>() != kRecordFormatVersion) {
        continue;
      }
      records_.push_back({r.at("n").get<int>(), diffpoly_from_json(r.at("density")),
                          parse_route(r.at("route").get<std::string>())});
    }
  } catch (const std::exception& e) {
    throw CacheError("malformed record in " + file_.string() + ": " + e.what());
  }
}

std::optional<DiffPoly> HamiltonianCache::lookup(int n, Route route) const {
  for (const auto& r : records_) {
    if (r.n == n && r.route == route) {
      return r.density;
    }
  }
  return std::nullopt;
}

void HamiltonianCache::store(const HamiltonianRecord& record) {
  bool replaced = false;
  for (auto& r : records_) {
    if (r.n == record.n && r.route == record.route) {
      r = record;
      replaced = true;
    }
  }
  if (!replaced) {
    records_.push_back(record);
  }
  save();
}

void HamiltonianCache::save() const {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : records_) {
    records.push_back({{"n", r.n},
                       {"route", route_name(r.route)},
                       {"format_version", kRecordFormatVersion},
                       {"density", to_json(r.density)}});
  }
  const nlohmann::json doc = {{"schema_version", kCacheSchemaVersion}, {"records", records}};
  fs::create_directories(file_.parent_path());
  const fs::path tmp = file_.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) {
      throw CacheError("cannot write cache file " + tmp.string());
    }
    out << doc.dump(1) << "\n";
  }
  fs::rename(tmp, file_);
}

HamiltonianRecord cached_hamiltonian(int n, Route route, HamiltonianCache* cache, bool force) {
  if (cache != nullptr) {
    if (auto hit = cache->lookup(n, route)) {
      return {n, *hit, route};
    }
  }
  HamiltonianRecord rec = hamiltonian(n, route, force);
  if (cache != nullptr) {
    cache->store(rec);
  }
  return rec;
}

}  // namespace qkdv
