#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace rauzy {

std::string sha256_hex(const std::string& data);

/// Content-addressed result store. Entries live in files named by the hex
/// SHA-256 of (format version, operation, canonical input) and are written
/// through a temporary file and a rename.
class Cache {
 public:
  static constexpr int kVersion = 1;

  explicit Cache(std::filesystem::path dir);
  // $RAUZY_CACHE_DIR, else $XDG_CACHE_HOME/rauzy, else ~/.cache/rauzy, else ./.rauzy-cache.
  static std::filesystem::path default_dir();

  static std::string key(const std::string& operation, const std::string& canonical_input);

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& payload) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path path_for(const std::string& key) const;
  std::filesystem::path dir_;
};

}  // namespace rauzy
