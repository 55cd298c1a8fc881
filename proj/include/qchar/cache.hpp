#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace qchar {

/* Content-addressed on-disk result store.  Entry files carry the full key
 * and a checksum; a corrupted or colliding entry reads as a miss.  Writes
 * take an advisory lock so concurrent invocations do not interleave. */
class ResultCache {
public:
  /* dir empty: $QCHAR_CACHE_DIR, else $HOME/.cache/qchar. */
  explicit ResultCache(std::filesystem::path dir = {});

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& value) const;

  struct Status {
    std::size_t entries = 0;
    std::uintmax_t bytes = 0;
  };
  Status status() const;
  void clear() const;

  static uint64_t fnv1a(const std::string& data);

private:
  std::filesystem::path entry_path(const std::string& key) const;
  std::filesystem::path dir_;
};

}  // namespace qchar
