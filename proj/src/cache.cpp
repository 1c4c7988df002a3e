#include "stacksort/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <fstream>

#include "json.hpp"

#include "stacksort/errors.hpp"
#include "stacksort/permutation.hpp"
#include "stacksort/vhc.hpp"

namespace stacksort {

namespace {

bool is_decimal(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

void validate(const CacheRecord& r, const std::string& line) {
  Permutation p;
  try {
    p = parse_permutation(r.perm);
  } catch (const Error& e) {
    throw Error(ErrorKind::CorruptRecord, "bad permutation in '" + line + "': " + e.what());
  }
  if (!p.is_normalized() || p.spaced() != r.perm) {
    throw Error(ErrorKind::CorruptRecord, "key is not canonical in '" + line + "'");
  }
  if (!is_decimal(r.fertility)) {
    throw Error(ErrorKind::CorruptRecord, "fertility is not a decimal in '" + line + "'");
  }
}

// Holds an flock for the lifetime of the object.
class FileLock {
 public:
  FileLock(const std::filesystem::path& path, int operation) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ < 0 || ::flock(fd_, operation) != 0) {
      if (fd_ >= 0) ::close(fd_);
      throw Error(ErrorKind::IoError, "cannot lock " + path.string());
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

}  // namespace

std::string to_json_line(const CacheRecord& record) {
  nlohmann::ordered_json j;
  j["perm"] = record.perm;
  j["fertility"] = record.fertility;
  return j.dump();
}

CacheRecord parse_json_line(const std::string& line) {
  CacheRecord r;
  try {
    const auto j = nlohmann::json::parse(line);
    r.perm = j.at("perm").get<std::string>();
    r.fertility = j.at("fertility").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::CorruptRecord, "unreadable line '" + line + "': " + e.what());
  }
  validate(r, line);
  return r;
}

std::vector<CacheRecord> cache_read(const std::filesystem::path& path) {
  std::vector<CacheRecord> out;
  if (!std::filesystem::exists(path)) return out;
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path.string());
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(parse_json_line(line));
  }
  return out;
}

void cache_write(const std::filesystem::path& path, std::span<const CacheRecord> records) {
  FileLock lock(path, LOCK_EX);
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error(ErrorKind::IoError, "cannot append to " + path.string());
  for (const auto& r : records) out << to_json_line(r) << '\n';
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "write to " + path.string() + " failed");
}

std::map<std::string, std::string> cache_index(std::span<const CacheRecord> records) {
  std::map<std::string, std::string> index;
  for (const auto& r : records) {
    auto [it, inserted] = index.try_emplace(r.perm, r.fertility);
    if (!inserted && it->second != r.fertility) {
      throw Error(ErrorKind::CorruptRecord,
                  "conflicting values " + it->second + " and " + r.fertility + " for " + r.perm);
    }
    it->second = r.fertility;
  }
  return index;
}

void cache_audit(std::span<const CacheRecord> records) {
  for (const auto& r : records) {
    const BigInt expected = fertility(parse_permutation(r.perm));
    if (to_decimal(expected) != r.fertility) {
      throw Error(ErrorKind::CorruptRecord,
                  "cached fertility " + r.fertility + " for " + r.perm + " but engine gives " + to_decimal(expected));
    }
  }
}

}  // namespace stacksort
