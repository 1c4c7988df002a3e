#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace stacksort {

// One line of the JSON-lines fertility cache.
struct CacheRecord {
  std::string perm;       // normalized, single-space separated
  std::string fertility;  // decimal

  friend bool operator==(const CacheRecord&, const CacheRecord&) = default;
};

std::string to_json_line(const CacheRecord& record);
CacheRecord parse_json_line(const std::string& line);

// Missing file reads as empty. Throws CorruptRecord on a malformed line.
std::vector<CacheRecord> cache_read(const std::filesystem::path& path);

// Appends under an exclusive lock on the file.
void cache_write(const std::filesystem::path& path, std::span<const CacheRecord> records);

// Last writer wins; a repeated key with a different value is CorruptRecord.
std::map<std::string, std::string> cache_index(std::span<const CacheRecord> records);

// Recomputes every record with the engine; throws CorruptRecord on the first
// disagreement.
void cache_audit(std::span<const CacheRecord> records);

}  // namespace stacksort
