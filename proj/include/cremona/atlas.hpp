#pragma once
// Append-only JSONL atlas of scan records, idempotent per (family, seed,
// prime). A torn final line left by a crash is cut off when the file is
// reopened.

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <mutex>
#include <set>

#include "cremona/report.hpp"

namespace cremona {

struct AtlasError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Atlas {
 public:
  static std::string key(const std::string& family, uint64_t seed, uint32_t prime) {
    return family + "|" + std::to_string(seed) + "|" + std::to_string(prime);
  }

  explicit Atlas(const std::string& path) : path_(path) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
    if (fd_ < 0) throw AtlasError("cannot open atlas " + path + ": " + std::strerror(errno));
    std::string text = read_file(path);
    size_t keep = text.size();
    if (!text.empty() && text.back() != '\n') {
      auto nl = text.rfind('\n');
      keep = nl == std::string::npos ? 0 : nl + 1;
      if (::ftruncate(fd_, static_cast<off_t>(keep)) != 0) throw AtlasError("cannot repair atlas: " + std::string(std::strerror(errno)));
      repaired_ = true;
    }
    size_t pos = 0;
    while (pos < keep) {
      size_t e = text.find('\n', pos);
      std::string line = text.substr(pos, e - pos);
      pos = e + 1;
      if (line.empty()) continue;
      try {
        auto j = Json::parse(line);
        keys_.insert(key(j.at("family").get<std::string>(), j.at("seed").get<uint64_t>(), j.at("prime").get<uint32_t>()));
        ++records_;
      } catch (const std::exception&) {
        throw AtlasError("corrupt atlas line in " + path + ": " + line.substr(0, 80));
      }
    }
  }
  Atlas(const Atlas&) = delete;
  Atlas& operator=(const Atlas&) = delete;
  ~Atlas() {
    if (fd_ >= 0) ::close(fd_);
  }

  bool repaired() const { return repaired_; }
  size_t records() const { return records_; }

  bool contains(const std::string& k) const {
    std::lock_guard<std::mutex> lock(mu_);
    return keys_.count(k) > 0;
  }

  // One write per record; returns false when the key is already present.
  bool append(const Json& rec) {
    std::lock_guard<std::mutex> lock(mu_);
    auto k = key(rec.at("family").get<std::string>(), rec.at("seed").get<uint64_t>(), rec.at("prime").get<uint32_t>());
    if (keys_.count(k)) return false;
    std::string line = rec.dump() + "\n";
    const char* p = line.data();
    size_t left = line.size();
    while (left > 0) {
      ssize_t w = ::write(fd_, p, left);
      if (w < 0) {
        if (errno == EINTR) continue;
        throw AtlasError("atlas write failed: " + std::string(std::strerror(errno)));
      }
      p += w;
      left -= static_cast<size_t>(w);
    }
    ::fsync(fd_);
    keys_.insert(k);
    ++records_;
    return true;
  }

 private:
  std::string path_;
  int fd_ = -1;
  bool repaired_ = false;
  size_t records_ = 0;
  std::set<std::string> keys_;
  mutable std::mutex mu_;
};

}  // namespace cremona
