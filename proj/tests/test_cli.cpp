#include <doctest.h>

#include <array>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "iso3/cli.hpp"
#include "iso3/error.hpp"
#include "iso3/io.hpp"

using namespace iso3;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "iso3");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() /
                     ("iso3_cli_" + std::to_string(::getpid())) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("catalog listings") {
    const Run table = run({"catalog"});
    CHECK(table.code == 0);
    CHECK(table.out.find("theorem 4.2") != std::string::npos);
    CHECK(table.out.find("scherk-6") != std::string::npos);

    const Run json = run({"--json", "catalog"});
    CHECK(json.code == 0);
    const Json arr = Json::parse(json.out);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 20);
    CHECK(arr[0].contains("anchor"));

    const Run one = run({"catalog", "--family", "4.2"});
    CHECK(one.code == 0);
    CHECK(one.out.find("requires") != std::string::npos);
    CHECK(one.out.find("K = -2.25") != std::string::npos);
  }

  TEST_CASE("eval writes a constant-K CSV for the saddle") {
    const Run r = run({"eval", "--family", "scherk-1", "--c", "1", "--grid", "21x21"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 442);
    CHECK(rows[0] == std::vector<std::string>{"u", "v", "x", "y", "z", "E", "F", "G", "l", "m",
                                              "n", "K", "H"});
    for (std::size_t i = 1; i < rows.size(); ++i) {
      REQUIRE(rows[i].size() == 13);
      CHECK(std::stod(rows[i][11]) == -4.0);
      CHECK(std::stod(rows[i][12]) == 0.0);
    }
  }

  TEST_CASE("CSV carries 17 significant digits") {
    const fs::path dir = scratch("digits");
    const Run r = run({"eval", "--family", "4.2", "--grid", "3x3", "--csv",
                       (dir / "f.csv").string()});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(slurp(dir / "f.csv"));
    REQUIRE(rows.size() == 10);
    // g(v) = v^(2/3) at v = 1.5 is irrational, so all 17 digits are printed.
    const std::string y = rows[4][3];
    std::size_t digits = 0;
    for (char ch : y) digits += std::isdigit(static_cast<unsigned char>(ch)) ? 1 : 0;
    CHECK(digits >= 17);
    CHECK(y.find(',') == std::string::npos);
  }

  TEST_CASE("eval writes a valid OBJ mesh") {
    const fs::path dir = scratch("obj");
    const fs::path obj = dir / "out.obj";
    const Run r = run({"eval", "--family", "4.2", "--c1", "1", "--c2", "1", "--obj",
                       obj.string(), "--csv", (dir / "out.csv").string()});
    REQUIRE(r.code == 0);
    std::ifstream in(obj);
    std::string line;
    std::size_t vertices = 0, faces = 0;
    std::vector<std::array<double, 3>> pts;
    bool indices_ok = true, degenerate = false;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string tag;
      ls >> tag;
      if (tag == "v") {
        std::array<double, 3> p{};
        ls >> p[0] >> p[1] >> p[2];
        pts.push_back(p);
        ++vertices;
      } else if (tag == "f") {
        std::size_t a = 0, b = 0, c = 0;
        ls >> a >> b >> c;
        ++faces;
        indices_ok = indices_ok && a >= 1 && b >= 1 && c >= 1 && a <= pts.size() &&
                     b <= pts.size() && c <= pts.size();
        degenerate = degenerate || a == b || b == c || a == c;
      }
    }
    CHECK(vertices == 441);
    CHECK(faces == 2 * 20 * 20);
    CHECK(indices_ok);
    CHECK(!degenerate);
  }

  TEST_CASE("eval reports violated family conditions") {
    const Run r = run({"eval", "--family", "type-II", "--a", "1", "--g", "y"});
    CHECK(r.code == 2);
    CHECK(r.err.find("g′ − a ≠ 0") != std::string::npos);

    CHECK(run({"eval", "--family", "nope"}).code == 2);
    CHECK(run({"eval", "--family", "4.2", "--grid", "abc"}).code == 2);
    CHECK(run({"eval", "--family", "4.2", "--f", "sin("}).code == 2);
    CHECK(run({"eval"}).code != 0);
    CHECK(run({"frobnicate"}).code != 0);
  }

  TEST_CASE("eval with ad-hoc profiles and a custom range") {
    const Run r = run({"eval", "--family", "type-III", "--a", "0.2", "--f", "0.3*sin(x)", "--g",
                       "exp(y)", "--h", "exp(2*y)", "--range", "-0.5:0.5,0.6:1.2", "--grid",
                       "4x3"});
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() == 13);
    CHECK(std::stod(rows[1][0]) == -0.5);
    CHECK(std::stod(rows[1][1]) == 0.6);
    CHECK(std::stod(rows.back()[1]) == 1.2);
  }

  TEST_CASE("verify writes a report and honours the exit contract") {
    const fs::path dir = scratch("verify");
    const Run ok = run({"--out", dir.string(), "verify", "--suite", "scherk", "--seed", "42"});
    CHECK(ok.code == 0);
    REQUIRE(fs::exists(dir / "verify_scherk.json"));
    const Json doc = Json::parse(slurp(dir / "verify_scherk.json"));
    CHECK(doc["ok"] == true);
    for (const auto& r : doc["reports"]) {
      for (const char* key : {"check", "family", "grid", "seed", "max_dev", "mean_dev",
                              "worst_point", "tol", "pass"}) {
        CHECK(r.contains(key));
      }
      CHECK(r["seed"] == 42);
    }

    const Run floor = run({"--out", dir.string(), "verify", "--suite", "theorems", "--tol",
                           "1e-15"});
    CHECK(floor.code == 1);
    CHECK(floor.out.find("FAILED") != std::string::npos);

    const Run json = run({"--out", dir.string(), "--json", "verify", "--suite", "witnesses"});
    CHECK(json.code == 0);
    CHECK(Json::parse(json.out)["suite"] == "witnesses");

    CHECK(run({"--out", dir.string(), "verify", "--suite", "bogus"}).code != 0);
    CHECK(run({"--out", dir.string(), "verify", "--grid", "10x20"}).code == 2);
  }

  TEST_CASE("verify is deterministic for a fixed seed") {
    const fs::path a = scratch("det_a"), b = scratch("det_b");
    REQUIRE(run({"--out", a.string(), "verify", "--suite", "motions", "--seed", "7"}).code == 0);
    REQUIRE(run({"--out", b.string(), "verify", "--suite", "motions", "--seed", "7"}).code == 0);
    CHECK(slurp(a / "verify_motions.json") == slurp(b / "verify_motions.json"));
  }

  TEST_CASE("configuration precedence: defaults, file, environment, flags") {
    const fs::path dir = scratch("config");
    const fs::path cfg = dir / "iso3.conf";
    {
      std::ofstream os(cfg);
      os << "# harness settings\nseed = 5\ngrid = 12x12\nout = " << dir.string() << "\n";
    }
    auto seed_of = [&](const fs::path& f) {
      return Json::parse(slurp(f))["reports"][0]["seed"].get<std::uint64_t>();
    };

    REQUIRE(run({"--config", cfg.string(), "verify", "--suite", "scherk"}).code == 0);
    CHECK(seed_of(dir / "verify_scherk.json") == 5);
    CHECK(Json::parse(slurp(dir / "verify_scherk.json"))["reports"][0]["grid"] == "12x12");

    REQUIRE(run({"--config", cfg.string(), "--seed", "6", "verify", "--suite", "scherk"}).code ==
            0);
    CHECK(seed_of(dir / "verify_scherk.json") == 6);

    ::setenv("ISO3_CONFIG", cfg.string().c_str(), 1);
    const Run env = run({"verify", "--suite", "scherk"});
    ::unsetenv("ISO3_CONFIG");
    REQUIRE(env.code == 0);
    CHECK(seed_of(dir / "verify_scherk.json") == 5);

    const fs::path bad = dir / "bad.conf";
    {
      std::ofstream os(bad);
      os << "seed = 1\ncolour = blue\n";
    }
    const Run r = run({"--config", bad.string(), "catalog"});
    CHECK(r.code == 2);
    CHECK(r.err.find("bad.conf:2") != std::string::npos);
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(run({"--config", (dir / "missing.conf").string(), "catalog"}).code == 2);
  }

  TEST_CASE("config parser") {
    CliConfig c;
    std::istringstream in(
        "tol = 1e-3\ntol.oracle = 1e-7\nmotions = 3\nworkers = 2\njson = true\neval_grid = 5x7\n");
    apply_config(in, c);
    CHECK(c.harness.tol.closed == 1e-3);
    CHECK(c.harness.tol.oracle == 1e-7);
    CHECK(c.harness.tol.factor_lo == 12.0);
    CHECK(c.harness.motions == 3);
    CHECK(c.harness.workers == 2);
    CHECK(c.json);
    CHECK(c.eval_nu == 5);
    CHECK(c.eval_nv == 7);
    std::istringstream bad("grid = 4x5\n");
    CHECK_THROWS_AS(apply_config(bad, c), ParseError);
    std::istringstream noeq("seed 4\n");
    CHECK_THROWS_AS(apply_config(noeq, c), ParseError);
    CHECK(parse_range("0:1, -2:3").v.lo == -2.0);
    CHECK_THROWS_AS(parse_range("1:0,0:1"), ParseError);
    CHECK_THROWS_AS(parse_grid("1x5"), ParseError);
  }

  TEST_CASE("reconstruct and witness subcommands") {
    const Run r = run({"--json", "reconstruct"});
    CHECK(r.code == 0);
    const Json arr = Json::parse(r.out);
    CHECK(arr.size() == 7);
    for (const auto& j : arr) CHECK(j["pass"] == true);

    const Run one = run({"reconstruct", "--family", "6.3"});
    CHECK(one.code == 0);
    CHECK(one.out.find("PASS") != std::string::npos);

    // A cubic g makes the quadrature superconvergent: the error is tiny but
    // the order leaves the fourth-order window, and the verdict says so.
    const Run cube = run({"--json", "reconstruct", "--family", "6.3", "--g", "y^3"});
    CHECK(cube.code == 1);
    const Json c = Json::parse(cube.out)[0];
    CHECK(c["sup_error"].get<double>() < 1e-8);
    CHECK(c["order_estimate"].get<double>() > 4.5);

    const Run samples = run({"--json", "reconstruct", "--family", "4.2", "--samples"});
    CHECK(Json::parse(samples.out)[0].contains("samples"));

    const Run w = run({"witness"});
    CHECK(w.code == 0);
    CHECK(w.out.find("contradiction confirmed") != std::string::npos);
    const Run wj = run({"--json", "witness", "--case", "thm6.1-poly"});
    CHECK(Json::parse(wj.out)[0]["contradiction"] == true);
    CHECK(run({"witness", "--case", "thm9.9"}).code == 2);
  }
}
