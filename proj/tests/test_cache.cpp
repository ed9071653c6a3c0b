// The content-addressed disk cache: hashing, round trips, the JSON index,
// and byte-identical reuse across engine instances.
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "hodge/cache.hpp"
#include "hodge/hodge_recursion.hpp"
#include "json.hpp"
#include "test_util.hpp"

using namespace hodge;

namespace {

std::string fresh_dir() {
  std::string tmpl = "/tmp/hodge-cache-XXXXXX";
  char* got = mkdtemp(tmpl.data());
  REQUIRE(got != nullptr);
  return tmpl;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("disk cache") {
  TEST_CASE("hash function reference values") {
    CHECK(DiskCache::hash_hex("") == "cbf29ce484222325");
    CHECK(DiskCache::hash_hex("a") == "af63dc4c8601ec8c");
    CHECK(DiskCache::hash_hex("hello") != DiskCache::hash_hex("hellp"));
  }

  TEST_CASE("disabled cache is a no-op") {
    DiskCache cache;
    CHECK(!cache.enabled());
    cache.put("kind", "key", "payload");
    CHECK(!cache.get("kind", "key").has_value());
  }

  TEST_CASE("round trip, miss, overwrite") {
    const std::string dir = fresh_dir();
    DiskCache cache(dir);
    CHECK(cache.enabled());
    CHECK(cache.dir() == dir);
    CHECK(!cache.get("poly", "some-key").has_value());
    const std::string payload = "(1/24)*v1^-2*v2^2\nsecond line\n";
    cache.put("poly", "some-key", payload);
    auto got = cache.get("poly", "some-key");
    REQUIRE(got.has_value());
    CHECK(*got == payload);  // byte identical
    cache.put("poly", "some-key", "replaced");
    CHECK(*cache.get("poly", "some-key") == "replaced");
    // distinct kinds and keys do not collide
    cache.put("poly", "other-key", "other");
    cache.put("series", "some-key", "third");
    CHECK(*cache.get("poly", "some-key") == "replaced");
    CHECK(*cache.get("poly", "other-key") == "other");
    CHECK(*cache.get("series", "some-key") == "third");
  }

  TEST_CASE("index is valid json and lists the entries") {
    const std::string dir = fresh_dir();
    DiskCache cache(dir);
    cache.put("free-energy", "g=2|ring=2", "F2");
    cache.put("flow", "q=1", "flow1");
    const nlohmann::json index = nlohmann::json::parse(slurp(dir + "/index.json"));
    REQUIRE(index.is_object());
    REQUIRE(index.contains("entries"));
    bool saw_free_energy = false;
    for (const auto& e : index["entries"]) {
      CHECK(e.contains("kind"));
      CHECK(e.contains("key"));
      CHECK(e.contains("file"));
      CHECK(e.contains("created_at"));
      if (e["kind"] == "free-energy" && e["key"] == "g=2|ring=2") saw_free_energy = true;
    }
    CHECK(saw_free_energy);
  }

  TEST_CASE("free energies reuse cached fits byte for byte") {
    const std::string dir = fresh_dir();
    DiskCache cache(dir);
    context_ptr ctx = make_context(2);
    std::string first, second;
    {
      HodgeRecursion rec(ctx, &cache);
      first = rec.free_energy(2).to_text();
    }
    {
      HodgeRecursion rec(ctx, &cache);  // fresh instance, same directory
      second = rec.free_energy(2).to_text();
    }
    CHECK(first == second);
    CHECK(first == testfx::rec3().free_energy(2).to_text());
  }
}
