#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "../vendor/doctest.h"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ellconf/cache.hpp"
#include "ellconf/model.hpp"

using namespace ellconf;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("ellconf-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int counter;
};
int TempDir::counter = 0;

}  // namespace

TEST_CASE("roundtrip is bit-identical") {
  TempDir tmp;
  Cache cache(tmp.path.string());
  REQUIRE(cache.enabled());
  std::string payload = "line one\n-17/3 42\n\nend";
  cache.put("some-key", payload);
  auto back = cache.get("some-key");
  REQUIRE(back.has_value());
  CHECK(*back == payload);
  CHECK_FALSE(cache.get("missing-key").has_value());
}

TEST_CASE("foreign versions and corrupted entries are ignored") {
  TempDir tmp;
  Cache cache(tmp.path.string());
  cache.put("key", "payload");
  REQUIRE(cache.get("key").has_value());

  // rewrite the entry under a foreign version header
  fs::path entry;
  for (auto& f : fs::directory_iterator(tmp.path)) entry = f.path();
  REQUIRE(!entry.empty());
  {
    std::ofstream out(entry, std::ios::trunc);
    out << "ellconf-0\nkey\npayload";
  }
  CHECK_FALSE(cache.get("key").has_value());

  {
    std::ofstream out(entry, std::ios::trunc);
    out << "garbage";
  }
  CHECK_FALSE(cache.get("key").has_value());
}

TEST_CASE("unwritable directory disables the cache") {
  Cache cache("/proc/definitely/not/writable");
  CHECK_FALSE(cache.enabled());
  CHECK_FALSE(cache.get("key").has_value());
  cache.put("key", "payload");  // must not throw
}

TEST_CASE("matrix payloads are exact") {
  SparseMatrix m(2, 3);
  m.set(0, 1, rat(-17, 3));
  m.set(1, 2, rat(5));
  auto parsed = parse_matrix(serialize_matrix(m));
  REQUIRE(parsed.has_value());
  CHECK(*parsed == m);
  CHECK_FALSE(parse_matrix("not a matrix").has_value());
}

TEST_CASE("cached model computations agree with cold ones") {
  TempDir tmp;
  Cache cache(tmp.path.string());
  Model cold(3);
  Model warm_write(3, &cache);   // populates the cache
  Model warm_read(3, &cache);    // reads it back
  for (int q = 0; q <= 2; ++q)
    for (int p = 0; p <= 2 * (3 - q); ++p) {
      CHECK(warm_write.dim(ModelId::A, p, q) == cold.dim(ModelId::A, p, q));
      CHECK(warm_read.slice(p, q).elems == cold.slice(p, q).elems);
      CHECK(warm_read.diff(p, q) == cold.diff(p, q));
    }
}
