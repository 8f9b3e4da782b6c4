#pragma once

#include "qkdv/kdv.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qkdv {

inline constexpr int kCacheSchemaVersion = 1;
/// Version of the polynomial encoding inside each record.
inline constexpr int kRecordFormatVersion = 1;

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hamiltonian densities persisted as DIR/hamiltonians.json, keyed by
/// (n, route, format version). A file with another schema version, or one
/// that does not parse, raises CacheError instead of being overwritten.
class HamiltonianCache {
 public:
  explicit HamiltonianCache(std::filesystem::path dir);

  const std::filesystem::path& file() const { return file_; }
  std::optional<DiffPoly> lookup(int n, Route route) const;
  /// Adds or replaces the record and rewrites the file.
  void store(const HamiltonianRecord& record);
  std::size_t size() const { return records_.size(); }

 private:
  void save() const;

  std::filesystem::path file_;
  std::vector<HamiltonianRecord> records_;
};

/// Computes through the cache when one is given.
HamiltonianRecord cached_hamiltonian(int n, Route route, HamiltonianCache* cache, bool force = false);

}  // namespace qkdv
