#include "qchar/cache.hpp"

#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <fcntl.h>
#include <fstream>
#include <sstream>

namespace qchar {

namespace fs = std::filesystem;

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {
  if (dir_.empty()) {
    if (const char* env = std::getenv("QCHAR_CACHE_DIR")) {
      dir_ = env;
    } else if (const char* home = std::getenv("HOME")) {
      dir_ = fs::path(home) / ".cache" / "qchar";
    } else {
      dir_ = fs::temp_directory_path() / "qchar-cache";
    }
  }
}

uint64_t ResultCache::fnv1a(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

fs::path ResultCache::entry_path(const std::string& key) const {
  std::ostringstream os;
  os << std::hex << fnv1a(key) << ".entry";
  return dir_ / os.str();
}

std::optional<std::string> ResultCache::get(const std::string& key) const {
  std::ifstream in(entry_path(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::string stored_key, checksum_line;
  if (!std::getline(in, stored_key) || !std::getline(in, checksum_line))
    return std::nullopt;
  if (stored_key != key) return std::nullopt;  // hash collision
  std::ostringstream payload;
  payload << in.rdbuf();
  std::string value = payload.str();
  std::ostringstream expect;
  expect << std::hex << fnv1a(value);
  if (expect.str() != checksum_line) return std::nullopt;  // corrupted
  return value;
}

void ResultCache::put(const std::string& key, const std::string& value) const {
  fs::create_directories(dir_);
  const fs::path lock = dir_ / "lock";
  int fd = ::open(lock.c_str(), O_CREAT | O_RDWR, 0644);
  if (fd >= 0) ::flock(fd, LOCK_EX);
  {
    const fs::path target = entry_path(key);
    const fs::path tmp = target.string() + ".tmp";
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << key << "\n" << std::hex << fnv1a(value) << "\n" << value;
    out.close();
    fs::rename(tmp, target);
  }
  if (fd >= 0) {
    ::flock(fd, LOCK_UN);
    ::close(fd);
  }
}

ResultCache::Status ResultCache::status() const {
  Status st;
  if (!fs::exists(dir_)) return st;
  for (auto& e : fs::directory_iterator(dir_)) {
    if (e.path().extension() == ".entry") {
      ++st.entries;
      st.bytes += e.file_size();
    }
  }
  return st;
}

void ResultCache::clear() const {
  if (!fs::exists(dir_)) return;
  for (auto& e : fs::directory_iterator(dir_))
    if (e.path().extension() == ".entry") fs::remove(e.path());
}

}  // namespace qchar
