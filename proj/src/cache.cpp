#include "fgb/cache.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>

namespace fgb {

std::string DiskCache::fingerprint(const std::string& payload) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string DiskCache::path_for(const std::string& key) const {
  std::string safe;
  for (char c : key)
    safe.push_back(std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
                           c == '_' || c == '.'
                       ? c
                       : '_');
  return dir_ + "/" + safe + ".json";
}

std::optional<nlohmann::json> DiskCache::load(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // unreadable entries are treated as misses
  }
  return j;
}

void DiskCache::store(const std::string& key, const nlohmann::json& value) const {
  if (!enabled()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  std::ofstream out(path_for(key));
  out << value.dump();
}

}  // namespace fgb
