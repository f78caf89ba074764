#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "heckecat/cache.hpp"
#include "heckecat/oracle.hpp"
#include "test_util.hpp"

using namespace heckecat;
using testutil::fixture;

namespace {

namespace fs = std::filesystem;

// A fresh scratch directory, removed on destruction.
struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("heckecat-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int n = 0;
    return n;
  }
};

}  // namespace

TEST_CASE("cache: directory resolution honors the override and environment") {
  CHECK(cache_directory("/tmp/override") == fs::path("/tmp/override"));

  ::setenv("HECKECAT_CACHE", "/tmp/env-cache", 1);
  CHECK(cache_directory("") == fs::path("/tmp/env-cache"));
  CHECK(cache_directory("/tmp/override") == fs::path("/tmp/override"));
  ::unsetenv("HECKECAT_CACHE");

  CHECK(cache_file(CartanType::parse("A2"), "/tmp/x").filename() ==
        fs::path("kl_A2.json"));
}

TEST_CASE("cache: save and load round trip") {
  const TempDir tmp;
  const CoxeterGroup g(CartanType::parse("A2"));
  KLCache original(g);
  const fs::path written = save_kl_cache(original, tmp.path.string());
  CHECK(fs::exists(written));
  CHECK(written == cache_file(g.type(), tmp.path.string()));

  KLCache loaded(g);
  CHECK(load_kl_cache(loaded, tmp.path.string()));
  for (std::uint32_t a = 0; a < g.size(); ++a) {
    const Element w{a};
    CHECK(loaded.kl_basis(w) == original.kl_basis(w));
    CHECK(loaded.twisted_kl_basis(w) == original.twisted_kl_basis(w));
    for (std::uint32_t b = 0; b < g.size(); ++b) {
      CHECK(loaded.kl_poly(w, Element{b}) == original.kl_poly(w, Element{b}));
      CHECK(loaded.mu(w, Element{b}) == original.mu(w, Element{b}));
    }
  }
}

TEST_CASE("cache: loading from an empty directory reports a miss") {
  const TempDir tmp;
  const CoxeterGroup g(CartanType::parse("A2"));
  KLCache kl(g);
  CHECK(!load_kl_cache(kl, tmp.path.string()));
}

TEST_CASE("cache: malformed payloads are rejected") {
  const TempDir tmp;
  const CoxeterGroup g(CartanType::parse("A2"));

  const fs::path file = cache_file(g.type(), tmp.path.string());

  {
    std::ofstream out(file);
    out << "this is not json";
  }
  KLCache kl1(g);
  CHECK_THROWS_AS((void)load_kl_cache(kl1, tmp.path.string()),
                  CacheValidationError);

  {
    std::ofstream out(file);
    out << R"({"format_version":999,"cartan":"A2","P":[],"mu":[]})";
  }
  KLCache kl2(g);
  CHECK_THROWS_AS((void)load_kl_cache(kl2, tmp.path.string()),
                  CacheValidationError);

  {
    std::ofstream out(file);
    out << R"({"format_version":1,"cartan":"B2","P":[],"mu":[]})";
  }
  KLCache kl3(g);
  CHECK_THROWS_AS((void)load_kl_cache(kl3, tmp.path.string()),
                  CacheValidationError);
}

TEST_CASE("cache: corrupted tables fail the bar-invariance spot checks") {
  const TempDir tmp;
  const CoxeterGroup g(CartanType::parse("A2"));
  KLCache original(g);
  KLCache::Table table = original.export_table();
  // Corrupt every P entry so any sampled instance trips the validation.
  for (auto& [pair, coeffs] : table.p) {
    if (!coeffs.empty()) coeffs[0] += 1;
  }
  KLCache corrupted(g);
  CHECK_THROWS_AS(corrupted.import_table(table, kDefaultSeed),
                  CacheValidationError);
}

TEST_CASE("cache: import validates against the live group") {
  const CoxeterGroup g(CartanType::parse("B2"));
  KLCache original(g);
  const KLCache::Table table = original.export_table();
  CHECK(!table.p.empty());
  KLCache fresh(g);
  fresh.import_table(table, kDefaultSeed);
  CHECK(fresh.kl_poly(g.element(1), g.longest()) ==
        original.kl_poly(g.element(1), g.longest()));
}
