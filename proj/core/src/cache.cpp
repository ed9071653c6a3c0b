#include "hodge/cache.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hodge {

DiskCache::DiskCache(std::string dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string DiskCache::hash_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

std::string DiskCache::entry_path(const std::string& kind, const std::string& key) const {
  return dir_ + "/" + kind + "-" + hash_hex(kind + "\x1f" + key) + ".txt";
}

std::optional<std::string> DiskCache::get(const std::string& kind, const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(entry_path(kind, key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void DiskCache::put(const std::string& kind, const std::string& key,
                    const std::string& payload) const {
  if (!enabled()) return;
  const std::string path = entry_path(kind, key);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << payload;
  }
  std::rename(tmp.c_str(), path.c_str());
  update_index(kind, key, path.substr(path.find_last_of('/') + 1));
}

void DiskCache::update_index(const std::string& kind, const std::string& key,
                             const std::string& file) const {
  const std::string index = dir_ + "/index.json";
  nlohmann::json j;
  {
    std::ifstream in(index);
    if (in) {
      try {
        in >> j;
      } catch (...) {
        j = nlohmann::json();
      }
    }
  }
  if (!j.contains("entries") || !j["entries"].is_array()) j["entries"] = nlohmann::json::array();
  // Replace any previous record for the same file.
  auto& entries = j["entries"];
  for (auto it = entries.begin(); it != entries.end();) {
    if (it->value("file", "") == file)
      it = entries.erase(it);
    else
      ++it;
  }
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  nlohmann::json e;
  e["kind"] = kind;
  e["key"] = key;
  e["file"] = file;
  e["created_at"] = std::chrono::duration_cast<std::chrono::seconds>(now).count();
  entries.push_back(std::move(e));
  const std::string tmp = index + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump(1) << "\n";
  }
  std::rename(tmp.c_str(), index.c_str());
}

}  // namespace hodge
