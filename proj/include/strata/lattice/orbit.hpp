#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "strata/lattice/lattice.hpp"

namespace strata::lattice {

// Orbit cache: one text file per orbit, content-addressed by a stable hash of
// (gram, seed, generators). Layout (version 1):
//
//   strata-orbit v1
//   key <canonical key text>
//   rank <n>
//   count <m>
//   <m lines, each n space-separated rationals, lexicographic order>
//   end
//
// Files are written to a temporary name and renamed into place, so readers
// never observe a partial file.
class OrbitCache {
 public:
  explicit OrbitCache(std::filesystem::path directory);

  const std::filesystem::path& directory() const { return dir_; }

  static std::string key_for(const LatticeVector& seed, const std::vector<IsometryElement>& gens);
  std::filesystem::path path_for(const std::string& key) const;

  std::optional<std::vector<Vector>> load(const std::string& key, std::size_t rank) const;
  void store(const std::string& key, std::size_t rank, const std::vector<Vector>& orbit) const;

  static std::string serialize(const std::string& key, std::size_t rank,
                               const std::vector<Vector>& orbit);
  // nullopt on any format error or key mismatch.
  static std::optional<std::vector<Vector>> parse(const std::string& text, const std::string& key,
                                                  std::size_t rank);

 private:
  std::filesystem::path dir_;
};

// 64-bit FNV-1a, hex encoded.
std::string stable_hash(const std::string& text);

struct OrbitOptions {
  std::size_t cap = 10'000'000;
  const OrbitCache* cache = nullptr;
};

class OrbitCapExceeded : public Error {
 public:
  explicit OrbitCapExceeded(std::size_t cap);
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

// Smallest generator-stable set containing seed, sorted lexicographically.
std::vector<LatticeVector> weyl_orbit(const LatticeVector& seed,
                                      const std::vector<IsometryElement>& generators,
                                      const OrbitOptions& options = {});

}  // namespace strata::lattice
