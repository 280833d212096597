#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/cache.hpp"
#include "cyarith/cli.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cyarith::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// A fresh directory per test case, removed afterwards.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag)
      : path(fs::temp_directory_path() / ("cyarith_" + tag + "_" + std::to_string(::getpid()))) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string str() const { return path.string(); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string hex(std::uint64_t x) {
  std::ostringstream os;
  os << std::hex << x;
  return os.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("count succeeds and reports exact values") {
    const auto r = invoke({"count", "-d", "5", "-n", "3", "-p", "11", "--json", "--deterministic", "--no-cache"});
    REQUIRE(r.code == 0);
    const auto doc = Json::parse(r.out);
    CHECK(doc["command"] == "count");
    CHECK(doc["results"][0]["projective"] == "1925");
    CHECK_FALSE(doc.contains("generated_at"));
  }

  TEST_CASE("timestamps appear unless deterministic") {
    const auto r = invoke({"cft", "-k", "3", "--json"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out).contains("generated_at"));
  }

  TEST_CASE("invalid input exits with 1") {
    const auto bad = invoke({"count", "-d", "5", "-n", "3", "-p", "5", "--no-cache"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("bad prime") != std::string::npos);
    CHECK(invoke({"count", "-d", "5", "-n", "3", "-p", "12", "--no-cache"}).code == 1);
    CHECK(invoke({"count", "--bogus"}).code == 1);
    CHECK(invoke({"lseries", "-d", "5", "-n", "3"}).code == 1);
    CHECK(invoke({"hecke", "-m", "5", "-a", "1,1,1,1", "-p", "2"}).code == 0);
    CHECK(invoke({"match", "-d", "5", "-n", "3", "-p", "2"}).code == 1);
    CHECK(invoke({}).code == 1);
  }

  TEST_CASE("help exits with 0") { CHECK(invoke({"--help"}).code == 0); }

  TEST_CASE("deterministic output is byte-identical across cache states") {
    TempDir dir("determinism");
    const std::vector<std::string> args{"zeta", "-d", "5", "-n", "3", "-p", "11,2", "--json", "--deterministic",
                                        "--cache", dir.str()};
    const auto cold = invoke(args);
    const auto warm = invoke(args);
    REQUIRE(cold.code == 0);
    REQUIRE(warm.code == 0);
    CHECK(cold.out == warm.out);
    CHECK(warm.err.empty());
    auto nocache = args;
    nocache.push_back("--no-cache");
    CHECK(invoke(nocache).out == cold.out);
    auto threaded = nocache;
    threaded.insert(threaded.end(), {"-j", "3"});
    CHECK(invoke(threaded).out == cold.out);
  }

  TEST_CASE("corrupted cache entries are discarded and recomputed") {
    TempDir dir("corrupt");
    const std::vector<std::string> args{"zeta", "-d", "5", "-n", "3", "-p", "11", "--json", "--deterministic",
                                        "--cache", dir.str()};
    const auto clean = invoke(args);
    REQUIRE(clean.code == 0);
    std::ostringstream sink;
    const cyarith::cli::LocalFactorCache cache(dir.path, true, sink);
    const auto entry = cache.entry_path(cyarith::counting::DiagonalVariety::fermat(5, 3), 11, -1);
    REQUIRE(fs::exists(entry));

    SUBCASE("truncated file") {
      const auto text = slurp(entry);
      std::ofstream(entry) << text.substr(0, text.size() / 2);
    }
    SUBCASE("payload edited without updating the hash") {
      auto doc = Json::parse(slurp(entry));
      doc["payload"]["local_factor"]["coefficients"][1] = "0";
      std::ofstream(entry) << doc.dump();
    }
    SUBCASE("consistent hash over a wrong root") {
      auto doc = Json::parse(slurp(entry));
      auto& beta = doc["payload"]["local_factor"]["roots"][0]["beta"]["coefficients"];
      beta[0] = "7";
      doc["hash"] = hex(cyarith::cli::fnv1a(doc["payload"].dump()));
      std::ofstream(entry) << doc.dump();
    }
    SUBCASE("wrong format version") {
      auto doc = Json::parse(slurp(entry));
      doc["format_version"] = cyarith::cli::kCacheFormatVersion + 1;
      std::ofstream(entry) << doc.dump();
    }

    const auto again = invoke(args);
    CHECK(again.code == 0);
    CHECK(again.err.find("warning: discarding cache entry") != std::string::npos);
    CHECK(again.out == clean.out);
    // The recomputed entry is valid again.
    const auto third = invoke(args);
    CHECK(third.err.empty());
    CHECK(third.out == clean.out);
  }

  TEST_CASE("csv output") {
    const auto sp = invoke({"cft", "-k", "1", "--spectrum", "--csv"});
    REQUIRE(sp.code == 0);
    CHECK(sp.out.rfind("l,q,s,delta_num,delta_den,Q_num,Q_den\n", 0) == 0);
    const auto cnt = invoke({"count", "-d", "3", "-n", "1", "--range", "7:13", "--csv", "--no-cache"});
    REQUIRE(cnt.code == 0);
    std::istringstream lines(cnt.out);
    std::string header, row;
    std::getline(lines, header);
    CHECK(header == "p,q,projective,affine");
    int rows = 0;
    while (std::getline(lines, row)) ++rows;
    CHECK(rows == 3);  // 7, 11, 13
  }

  TEST_CASE("output file") {
    TempDir dir("out");
    const auto target = dir.path / "cyclo.json";
    const auto r = invoke({"cyclo", "-m", "5", "--json", "--deterministic", "-o", target.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    CHECK(Json::parse(slurp(target))["command"] == "cyclo");
  }

  TEST_CASE("checks report success") {
    CHECK(invoke({"cft", "-k", "3", "--check", "all"}).code == 0);
    CHECK(invoke({"match", "-d", "5", "-n", "3", "-p", "11", "--no-cache"}).code == 0);
    CHECK(invoke({"zeta", "-d", "3", "-n", "1", "-p", "7", "--counts", "3", "--verify", "--no-cache"}).code == 0);
  }
}
