#include "rauzy/cache.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "rauzy/error.hpp"

namespace rauzy {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    fail(Errc::OutOfRange, "sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

Cache::Cache(fs::path dir) : dir_(std::move(dir)) {}

fs::path Cache::default_dir() {
  if (const char* d = std::getenv("RAUZY_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "rauzy";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "rauzy";
  return ".rauzy-cache";
}

std::string Cache::key(const std::string& operation, const std::string& canonical_input) {
  return sha256_hex("v" + std::to_string(kVersion) + "\n" + operation + "\n" + canonical_input);
}

fs::path Cache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<std::string> Cache::get(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header) || header != "rauzy-cache " + std::to_string(kVersion)) return std::nullopt;
  std::ostringstream body;
  body << in.rdbuf();
  return body.str();
}

void Cache::put(const std::string& key, const std::string& payload) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return;  // an unwritable cache only costs recomputation
  std::random_device rd;
  const fs::path tmp = dir_ / (key + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;
    out << "rauzy-cache " << kVersion << '\n' << payload;
    if (!out) {
      out.close();
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, path_for(key), ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace rauzy
