#include "strata/lattice/orbit.hpp"

#include <atomic>
#include <cstdint>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

#include <unistd.h>

namespace strata::lattice {

namespace {

constexpr const char* kHeader = "strata-orbit v1";

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in)
    return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string stable_hash(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

OrbitCache::OrbitCache(std::filesystem::path directory) : dir_(std::move(directory)) {}

std::string OrbitCache::key_for(const LatticeVector& seed,
                                const std::vector<IsometryElement>& gens) {
  std::string key = seed.ambient()->fingerprint() + "|seed" + to_string(seed.coords()) + "|gens";
  for (const auto& g : gens)
    key += to_string(g.matrix());
  return key;
}

std::filesystem::path OrbitCache::path_for(const std::string& key) const {
  return dir_ / ("orbit-" + stable_hash(key) + ".txt");
}

std::string OrbitCache::serialize(const std::string& key, std::size_t rank,
                                  const std::vector<Vector>& orbit) {
  std::string out = std::string(kHeader) + "\n";
  out += "key " + key + "\n";
  out += "rank " + std::to_string(rank) + "\n";
  out += "count " + std::to_string(orbit.size()) + "\n";
  for (const auto& v : orbit) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i)
        out += ' ';
      out += v[i].str();
    }
    out += '\n';
  }
  out += "end\n";
  return out;
}

std::optional<std::vector<Vector>> OrbitCache::parse(const std::string& text,
                                                     const std::string& key, std::size_t rank) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kHeader)
    return std::nullopt;
  if (!std::getline(in, line) || line != "key " + key)
    return std::nullopt;
  if (!std::getline(in, line) || line != "rank " + std::to_string(rank))
    return std::nullopt;
  if (!std::getline(in, line) || line.rfind("count ", 0) != 0)
    return std::nullopt;
  std::size_t count = 0;
  try {
    count = std::stoul(line.substr(6));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  std::vector<Vector> orbit;
  orbit.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (!std::getline(in, line))
      return std::nullopt;
    std::istringstream row(line);
    Vector v;
    std::string tok;
    try {
      while (row >> tok)
        v.push_back(parse_rational(tok));
    } catch (const Error&) {
      return std::nullopt;
    }
    if (v.size() != rank)
      return std::nullopt;
    orbit.push_back(std::move(v));
  }
  if (!std::getline(in, line) || line != "end")
    return std::nullopt;
  if (std::getline(in, line))
    return std::nullopt;
  return orbit;
}

std::optional<std::vector<Vector>> OrbitCache::load(const std::string& key,
                                                    std::size_t rank) const {
  auto path = path_for(key);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec))
    return std::nullopt;
  return parse(read_file(path), key, rank);
}

void OrbitCache::store(const std::string& key, std::size_t rank,
                       const std::vector<Vector>& orbit) const {
  static std::atomic<unsigned> counter{0};
  std::filesystem::create_directories(dir_);
  auto final_path = path_for(key);
  auto tmp = final_path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      fail("cannot write orbit cache file " + tmp.string());
    out << serialize(key, rank, orbit);
    if (!out)
      fail("failed writing orbit cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, final_path);
}

OrbitCapExceeded::OrbitCapExceeded(std::size_t cap)
    : Error("orbit size cap of " + std::to_string(cap) + " elements exceeded"), cap_(cap) {}

std::vector<LatticeVector> weyl_orbit(const LatticeVector& seed,
                                      const std::vector<IsometryElement>& generators,
                                      const OrbitOptions& options) {
  const auto& lat = seed.ambient();
  for (const auto& g : generators)
    if (!g.preserves_form(*lat))
      fail("weyl_orbit: generator does not preserve the form");

  std::string key;
  if (options.cache) {
    key = OrbitCache::key_for(seed, generators);
    if (auto hit = options.cache->load(key, lat->rank())) {
      if (hit->size() <= options.cap) {
        std::vector<LatticeVector> out;
        out.reserve(hit->size());
        for (auto& v : *hit)
          out.emplace_back(lat, std::move(v));
        return out;
      }
      throw OrbitCapExceeded(options.cap);
    }
  }

  std::set<Vector> seen{seed.coords()};
  std::deque<Vector> queue{seed.coords()};
  while (!queue.empty()) {
    Vector v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Vector w = g.matrix() * v;
      if (seen.insert(w).second) {
        if (seen.size() > options.cap)
          throw OrbitCapExceeded(options.cap);
        queue.push_back(std::move(w));
      }
    }
  }

  std::vector<Vector> sorted(seen.begin(), seen.end());
  if (options.cache)
    options.cache->store(key, lat->rank(), sorted);
  std::vector<LatticeVector> out;
  out.reserve(sorted.size());
  for (auto& v : sorted)
    out.emplace_back(lat, std::move(v));
  return out;
}

}  // namespace strata::lattice
