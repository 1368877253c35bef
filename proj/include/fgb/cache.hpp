#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace fgb {

// Content-addressed JSON store under a directory; disabled when the
// directory name is empty. Keys embed a fingerprint of the inputs, so a hit
// can be used without re-deriving the payload.
class DiskCache {
 public:
  DiskCache() = default;
  explicit DiskCache(std::string dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }
  std::optional<nlohmann::json> load(const std::string& key) const;
  void store(const std::string& key, const nlohmann::json& value) const;

  // FNV-1a 64-bit hex digest.
  static std::string fingerprint(const std::string& payload);

 private:
  std::string path_for(const std::string& key) const;
  std::string dir_;
};

}  // namespace fgb
