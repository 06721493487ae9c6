#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "asrt/errors.hpp"
#include "asrt/io.hpp"
#include "json.hpp"

namespace asrt {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "asrt_io_test";
  fs::create_directories(dir);
  fs::remove(dir / name);
  return dir / name;
}

TEST(Cache, TextLayout) {
  const DivisorSieve sieve(12);
  std::ostringstream out;
  io::write_cache(build_table(3, sieve), out);
  EXPECT_EQ(out.str(), "ASRT-TABLE v1\n0\t1\n1\t1\n2\t2\n3\t3\n");
}

TEST(Cache, RoundTrip) {
  const DivisorSieve sieve(12);
  const ComplexityTable table = build_table(12, sieve);
  std::stringstream buffer;
  io::write_cache(table, buffer);
  const ComplexityTable back = io::read_cache(buffer);
  ASSERT_EQ(back.limit(), 12u);
  for (std::uint64_t n = 0; n <= 12; ++n) EXPECT_EQ(back[n], table[n]);
}

TEST(Cache, RejectsMalformedInput) {
  const auto read = [](const std::string& text) {
    std::istringstream in(text);
    return io::read_cache(in);
  };
  EXPECT_THROW(read(""), FormatError);
  EXPECT_THROW(read("ASRT-TABLE v2\n0\t1\n"), FormatError);
  EXPECT_THROW(read("ASRT-TABLE v1\n"), FormatError);
  EXPECT_THROW(read("ASRT-TABLE v1\n0\t2\n"), FormatError);
  EXPECT_THROW(read("ASRT-TABLE v1\n0 1\n"), FormatError);
  EXPECT_THROW(read("ASRT-TABLE v1\n0\t1\n2\t2\n"), FormatError);
  EXPECT_THROW(read("ASRT-TABLE v1\n0\t1\n1\t-1\n"), FormatError);
  EXPECT_THROW(read("ASRT-TABLE v1\n0\t1\n1\t1,0\n"), FormatError);
  EXPECT_EQ(read("ASRT-TABLE v1\n0\t1\n1\t1\n").limit(), 1u);
}

TEST(Cache, LoadOrBuildExtendsShortCache) {
  const fs::path path = scratch("extend.tsv");
  const DivisorSieve sieve(20);
  io::write_cache_file(build_table(12, sieve), path);

  const ComplexityTable extended = io::load_or_build(path, 20, sieve);
  EXPECT_EQ(extended.limit(), 20u);
  EXPECT_EQ(extended[20], 134);
  EXPECT_EQ(io::read_cache_file(path).limit(), 20u);

  // A longer cache answers shorter requests without shrinking.
  EXPECT_EQ(io::load_or_build(path, 5, sieve).limit(), 20u);
  EXPECT_EQ(io::read_cache_file(path).limit(), 20u);
  EXPECT_FALSE(fs::exists(path.string() + ".tmp"));
}

TEST(Cache, LoadOrBuildCreatesMissingFile) {
  const fs::path path = scratch("fresh.tsv");
  const DivisorSieve sieve(12);
  EXPECT_EQ(io::load_or_build(path, 12, sieve)[12], 40);
  EXPECT_TRUE(fs::exists(path));
}

TEST(Cache, CorruptFileIsFormatError) {
  const fs::path path = scratch("corrupt.tsv");
  std::ofstream(path) << "NOT-A-TABLE\n0\t1\n";
  const DivisorSieve sieve(12);
  EXPECT_THROW(io::load_or_build(path, 12, sieve), FormatError);
}

TEST(Export, Csv) {
  const DivisorSieve sieve(12);
  std::ostringstream out;
  io::write_csv(build_table(12, sieve), 4, out);
  EXPECT_EQ(out.str(), "n,T,Tstar\n0,1,\n1,1,0\n2,2,1\n3,3,1\n4,5,2\n");
  EXPECT_THROW(io::write_csv(build_table(3, sieve), 4, out), RangeError);
}

TEST(Export, JsonUsesDecimalStrings) {
  const DivisorSieve sieve(12);
  std::ostringstream out;
  io::write_json(build_table(12, sieve), 12, out);
  const auto j = nlohmann::json::parse(out.str());
  ASSERT_EQ(j.size(), 13u);
  EXPECT_EQ(j[0]["n"], 0);
  EXPECT_EQ(j[0]["T"], "1");
  EXPECT_TRUE(j[0]["Tstar"].is_null());
  EXPECT_EQ(j[12]["T"], "40");
  EXPECT_EQ(j[12]["Tstar"], "13");
}

TEST(Export, ReportJson) {
  const DivisorSieve sieve(30);
  const ComplexityTable table = build_table(30, sieve);
  const auto j = nlohmann::json::parse(io::report_to_json(verify_theorem3(30, table, sieve)));
  EXPECT_EQ(j["all_passed"], true);
  EXPECT_EQ(j["claims"][0]["id"], "theorem3.inclusion_exclusion");
  EXPECT_TRUE(j["claims"][0]["first_counterexample"].is_null());
}

}  // namespace
}  // namespace asrt
