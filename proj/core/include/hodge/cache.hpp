#ifndef HODGE_CACHE_HPP
#define HODGE_CACHE_HPP

// Content-addressed disk cache for expensive exact computations.  Payloads
// are canonical-text serializations; a human-readable JSON index records the
// entries.  Writes are atomic (write temp file, then rename), so a crashed
// run never leaves a truncated payload behind, and a cache hit reproduces the
// original bytes exactly.

#include <optional>
#include <string>

namespace hodge {

class DiskCache {
 public:
  DiskCache() = default;                 // disabled cache
  explicit DiskCache(std::string dir);   // creates the directory if needed

  bool enabled() const { return !dir_.empty(); }
  const std::string& dir() const { return dir_; }

  // kind: short slug ("free-energy", "hodge-stage", "gf", "operator", "flow");
  // key: a string covering every input that influences the payload.
  std::optional<std::string> get(const std::string& kind, const std::string& key) const;
  void put(const std::string& kind, const std::string& key, const std::string& payload) const;

  static std::string hash_hex(const std::string& data);  // FNV-1a 64

 private:
  std::string entry_path(const std::string& kind, const std::string& key) const;
  void update_index(const std::string& kind, const std::string& key,
                    const std::string& file) const;
  std::string dir_;
};

}  // namespace hodge

#endif  // HODGE_CACHE_HPP
