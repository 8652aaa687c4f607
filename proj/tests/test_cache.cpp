#include "detvar/detvar.hpp"
#include "support/temp_dir.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace detvar;
using testing_support::TempDir;

namespace {

struct RunResult {
  int status;
  std::string out, err;
};

RunResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "detvar");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

void reset_caches() {
  cm_cache_clear();
  lr_cache_clear();
}

class CacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ::unsetenv(cache_env_var);
    reset_caches();
  }
  void TearDown() override {
    ::unsetenv(cache_env_var);
    reset_caches();
  }
};

} // namespace

TEST_F(CacheTest, ResolveDirPrecedence) {
  EXPECT_FALSE(resolve_cache_dir(std::nullopt).has_value());
  ::setenv(cache_env_var, "/tmp/from-env", 1);
  EXPECT_EQ(resolve_cache_dir(std::nullopt)->string(), "/tmp/from-env");
  EXPECT_EQ(resolve_cache_dir(std::string("/tmp/from-flag"))->string(), "/tmp/from-flag");
}

TEST_F(CacheTest, ColdAndWarmOutputIdentical) {
  TempDir dir;
  for (const char* fmt : {"json", "csv", "markdown"}) {
    reset_caches();
    const auto cold = run_cli({"charcycle", "-m", "5", "-n", "4", "-k", "1", "--format", fmt, "--cache-dir", dir.path().string()});
    ASSERT_EQ(cold.status, 0) << cold.err;
    ASSERT_TRUE(std::filesystem::exists(dir.path() / cache_file_name));
    reset_caches();
    const auto warm = run_cli({"charcycle", "-m", "5", "-n", "4", "-k", "1", "--format", fmt, "--cache-dir", dir.path().string()});
    ASSERT_EQ(warm.status, 0) << warm.err;
    EXPECT_EQ(cold.out, warm.out);
    EXPECT_TRUE(warm.err.empty()) << warm.err;
  }
}

TEST_F(CacheTest, WarmLoadSeedsMemory) {
  TempDir dir;
  (void)cm_class(4, 4, 2);
  store_cache(dir.path());
  const auto stored = cm_cache_snapshot();
  reset_caches();
  std::ostringstream warn;
  EXPECT_EQ(load_cache(dir.path(), warn), CacheLoad::loaded);
  EXPECT_EQ(cm_cache_snapshot(), stored);
  EXPECT_TRUE(warn.str().empty());
}

TEST_F(CacheTest, EnvironmentVariableUsed) {
  TempDir dir;
  ::setenv(cache_env_var, dir.path().string().c_str(), 1);
  const auto r = run_cli({"cm", "-m", "3", "-n", "3", "-k", "1"});
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(std::filesystem::exists(dir.path() / cache_file_name));
}

TEST_F(CacheTest, NoDirectoryMeansMemoryOnly) {
  TempDir dir;
  const auto r = run_cli({"cm", "-m", "3", "-n", "3", "-k", "1"});
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(std::filesystem::is_empty(dir.path()));
}

TEST_F(CacheTest, MissingFile) {
  TempDir dir;
  std::ostringstream warn;
  EXPECT_EQ(load_cache(dir.path(), warn), CacheLoad::missing);
  EXPECT_TRUE(warn.str().empty());
}

TEST_F(CacheTest, CorruptFileWarnsAndRecomputes) {
  TempDir dir;
  const auto expected = run_cli({"csm", "-m", "4", "-n", "4", "-k", "1"}).out;
  for (const std::string garbage : {"not json at all", "{\"format\":\"detvar-cache\",\"version\":1}", ""}) {
    {
      std::ofstream f(dir.path() / cache_file_name);
      f << garbage;
    }
    reset_caches();
    const auto r = run_cli({"csm", "-m", "4", "-n", "4", "-k", "1", "--cache-dir", dir.path().string()});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, expected);
    EXPECT_NE(r.err.find("corrupt"), std::string::npos) << r.err;
  }
}

TEST_F(CacheTest, TamperedValueDetectedByChecksum) {
  TempDir dir;
  (void)cm_class(3, 3, 1);
  store_cache(dir.path());
  std::ifstream in(dir.path() / cache_file_name);
  auto j = nlohmann::json::parse(in);
  in.close();
  auto& cm = j["payload"]["cm"];
  ASSERT_FALSE(cm.empty());
  cm[0]["coefficients"][0] = "999999";
  {
    std::ofstream out(dir.path() / cache_file_name);
    out << j.dump();
  }
  reset_caches();
  std::ostringstream warn;
  EXPECT_EQ(load_cache(dir.path(), warn), CacheLoad::corrupt);
  EXPECT_TRUE(cm_cache_snapshot().empty());
  EXPECT_EQ(cm_class(3, 3, 1), cm_class_trace(3, 3, 1));
}

TEST_F(CacheTest, VersionMismatchRebuilds) {
  TempDir dir;
  (void)cm_class(3, 3, 1);
  store_cache(dir.path());
  std::ifstream in(dir.path() / cache_file_name);
  auto j = nlohmann::json::parse(in);
  in.close();
  j["version"] = cache_format_version + 1;
  {
    std::ofstream out(dir.path() / cache_file_name);
    out << j.dump();
  }
  reset_caches();
  const auto r = run_cli({"cm", "-m", "3", "-n", "3", "-k", "1", "--cache-dir", dir.path().string()});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.err.find("rebuilding"), std::string::npos) << r.err;
  std::ifstream again(dir.path() / cache_file_name);
  EXPECT_EQ(nlohmann::json::parse(again)["version"], cache_format_version);
}
