#include "qkdv/format.hpp"

#include "qkdv/cache.hpp"
#include "qkdv/random.hpp"
#include "qkdv/validate.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace qkdv;
namespace fs = std::filesystem;

namespace {

class CacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qkdv_cache_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

}  // namespace

TEST_F(CacheTest, StoresAndReloads) {
  {
    HamiltonianCache cache(dir_);
    EXPECT_EQ(cache.size(), 0u);
    EXPECT_FALSE(cache.lookup(3, Route::Gk));
    const auto rec = cached_hamiltonian(3, Route::Gk, &cache);
    EXPECT_EQ(rec.density, h_weylD(3).density);
    EXPECT_TRUE(fs::exists(cache.file()));
  }
  HamiltonianCache again(dir_);
  EXPECT_EQ(again.size(), 1u);
  ASSERT_TRUE(again.lookup(3, Route::Gk));
  EXPECT_EQ(*again.lookup(3, Route::Gk), h_weylD(3).density);
  // keyed by route too
  EXPECT_FALSE(again.lookup(3, Route::Schur));
}

TEST_F(CacheTest, StoreReplacesSameKey) {
  HamiltonianCache cache(dir_);
  cache.store({2, DiffPoly::v(0), Route::Recursion});
  cache.store({2, h_recursion(2).density, Route::Recursion});
  EXPECT_EQ(cache.size(), 1u);
  EXPECT_EQ(*HamiltonianCache(dir_).lookup(2, Route::Recursion), h_weylD(2).density);
}

TEST_F(CacheTest, CachedValueIsServed) {
  // a planted record is returned without recomputation
  HamiltonianCache cache(dir_);
  cache.store({4, DiffPoly::v(7), Route::Schur});
  EXPECT_EQ(cached_hamiltonian(4, Route::Schur, &cache).density, DiffPoly::v(7));
  EXPECT_EQ(cached_hamiltonian(4, Route::Schur, nullptr).density, h_weylD(4).density);
}

TEST_F(CacheTest, SchemaMismatchIsAnError) {
  fs::create_directories(dir_);
  std::ofstream(dir_ / "hamiltonians.json") << R"({"schema_version": 2, "records": []})";
  EXPECT_THROW(HamiltonianCache{dir_}, CacheError);
}

TEST_F(CacheTest, GarbageIsAnError) {
  fs::create_directories(dir_);
  std::ofstream(dir_ / "hamiltonians.json") << "not json";
  EXPECT_THROW(HamiltonianCache{dir_}, CacheError);
  std::ofstream(dir_ / "hamiltonians.json") << R"({"records": []})";
  EXPECT_THROW(HamiltonianCache{dir_}, CacheError);
}

TEST(Random, GeneratorIsDeterministic) {
  Rng a(99);
  Rng b(99);
  for (int i = 0; i < 20; ++i) {
    EXPECT_EQ(random_diffpoly(a), random_diffpoly(b));
  }
  Rng c(5);
  for (int i = 0; i < 1000; ++i) {
    const int x = c.uniform(-3, 4);
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 4);
  }
  EXPECT_THROW(c.uniform(2, 1), std::invalid_argument);
}

TEST(Random, PartitionsAreValid) {
  Rng rng(6);
  for (int i = 0; i < 200; ++i) {
    const IntVector p = random_partition(rng, 8);
    EXPECT_TRUE(is_partition(p));
  }
}

TEST(Validate, ReportsAreReproducible) {
  const auto first = run_suites("fock", 42, 3);
  const auto second = run_suites("fock", 42, 3);
  ASSERT_EQ(first.size(), 1u);
  EXPECT_EQ(format_report(first[0]), format_report(second[0]));
  EXPECT_NE(format_report(first[0]).find("seed 42"), std::string::npos);
  EXPECT_TRUE(first[0].ok()) << format_report(first[0]);
}

TEST(Validate, UnknownSuiteThrows) { EXPECT_THROW(suite_checks("nope"), std::invalid_argument); }

TEST(Validate, FailingTrialIsReported) {
  const PropertyCheck bad{"always-fails", [](Rng&) -> std::optional<std::string> { return "boom"; }};
  const CheckResult r = run_check(bad, 1, 4);
  EXPECT_EQ(r.cases, 4);
  EXPECT_EQ(r.failures, 4);
  EXPECT_EQ(r.first_failure, "case 0: boom");
  EXPECT_FALSE(r.ok());
  const PropertyCheck throws{"throws", [](Rng&) -> std::optional<std::string> { throw std::runtime_error("x"); }};
  EXPECT_FALSE(run_check(throws, 1, 2).ok());
}
