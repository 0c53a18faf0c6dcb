#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "intgeo/cli.hpp"
#include "intgeo/emit.hpp"
#include "intgeo/euclid_so.hpp"
#include "intgeo/hermitian_u.hpp"
#include "test_support.hpp"

#ifndef INTGEO_GOLDEN_DIR
#error "INTGEO_GOLDEN_DIR must point at tests/golden"
#endif

using namespace intgeo;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Run {
  int code;
  std::string out;
  std::string log;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, log;
  int code = run_cli(args, out, log);
  return {code, out.str(), log.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("intgeo_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("scalar serialization schema") {
  nlohmann::json j = scalar_to_json(Scalar::pi_power(-1, Rational(2)));
  CHECK(j.dump() == R"({"terms":[{"den":"1","num":"2","pi_pow":-1}]})");
  CHECK(scalar_to_json(Scalar()).dump() == R"({"terms":[]})");
  testing_support::Gen g(5);
  for (int i = 0; i < 200; ++i) {
    Scalar s = g.scalar(4, 5);
    CHECK(scalar_from_json(scalar_to_json(s)) == s);
  }
  // Large numerators survive as strings.
  Scalar big(Rational(mpz_class("123456789012345678901234567890"), mpz_class(7)));
  CHECK(scalar_from_json(nlohmann::json::parse(scalar_to_json(big).dump())) == big);
}

TEST_CASE("formula tables round trip through json") {
  std::vector<FormulaTable> tabs;
  for (int n = 1; n <= 4; ++n) {
    EuclideanAlgebra a(n);
    for (int k = 0; k <= n; ++k) {
      tabs.push_back(a.table("kinematic", SOBasis::mu, k, Normalization::standard));
      tabs.push_back(a.table("additive", SOBasis::t, k, Normalization::standard));
    }
  }
  for (auto& t : UnitaryAlgebra(2).tables("kinematic", UnBasis::hermitian, 2)) tabs.push_back(t);
  std::string text = emit_tables(tabs, Format::json);
  CHECK(parse_tables_json(text) == tabs);
  CHECK(emit_tables(parse_tables_json(text), Format::json) == text);
  for (const auto& t : tabs) CHECK_FALSE(t.normalization.empty());

  FormulaTable empty;
  empty.group = "SO(1)";
  empty.normalization = "standard";
  std::string e = emit_tables({empty}, Format::json);
  auto back = parse_tables_json(e);
  REQUIRE(back.size() == 1);
  CHECK(back[0].terms.empty());
  CHECK(nlohmann::json::parse(e)["tables"][0]["terms"].is_array());
  CHECK(emit_tables({}, Format::json) == "{\n  \"tables\": []\n}\n");
}

TEST_CASE("emitters are deterministic and tagged") {
  EuclideanAlgebra a(3);
  std::vector<FormulaTable> tabs{a.table("kinematic", SOBasis::mu, 1, Normalization::unit)};
  for (Format f : {Format::json, Format::csv, Format::latex}) {
    std::string x = emit_tables(tabs, f);
    CHECK(x == emit_tables(tabs, f));
    CHECK(x.find("unit") != std::string::npos);
  }
  std::string csv = emit_tables(tabs, Format::csv);
  CHECK(csv.rfind("group,dimension,normalization", 0) == 0);
  std::string tex = emit_tables(tabs, Format::latex);
  CHECK(tex.find("\\begin{tabular}") != std::string::npos);
  // Hermitian labels contain commas and get quoted.
  auto ut = UnitaryAlgebra(2).tables("kinematic", UnBasis::hermitian, 0);
  CHECK(emit_tables(ut, Format::csv).find("\"\\mu_{") != std::string::npos);
  CHECK(parse_format("latex") == Format::latex);
  CHECK_THROWS_AS(parse_format("xml"), DomainError);
}

TEST_CASE("golden k_SO(3)(chi)") {
  // Classical oracle: chi(x)mu3 + mu3(x)chi + (1/2)(mu1(x)mu2 + mu2(x)mu1).
  EuclideanAlgebra a(3);
  FormulaTable t = a.table("kinematic", SOBasis::mu, 0, Normalization::standard);
  std::string got = emit_tables({t}, Format::json);
  CHECK(got == slurp(std::filesystem::path(INTGEO_GOLDEN_DIR) / "k_so3_chi.json"));
  Run r = cli({"so", "kinematic", "--dim", "3", "--degree", "0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == got);
}

TEST_CASE("cli exit codes") {
  CHECK(cli({"so", "kinematic", "--dim", "3", "--bogus"}).code == kExitUsage);
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"so", "kinematic", "--dim", "0"}).code == kExitUsage);
  CHECK(cli({"so", "kinematic", "--dim", "3", "--degree", "7"}).code == kExitUsage);
  CHECK(cli({"mc", "kinematic", "--bodies", "/nonexistent.json"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);

  Run v = cli({"verify", "--suite", "so", "--suite", "un", "--max-dim", "3"});
  CHECK(v.code == kExitOk);
  CHECK(v.log.find("# resolved configuration") != std::string::npos);
  CHECK(v.log.find("FAIL") == std::string::npos);
  CHECK(nlohmann::json::parse(v.out)["status"] == "PASS");

  // Unit normalization in the t basis: every coefficient is 1.
  Run u = cli({"so", "kinematic", "--dim", "3", "--basis", "t", "--normalization", "unit", "--format", "latex"});
  CHECK(u.code == kExitOk);
  std::istringstream lines(u.out);
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("$", 0) != 0) continue;
    ++rows;
    CHECK(line.ends_with("& $1$ \\\\"));
  }
  CHECK(rows == 4 + 3 + 2 + 1);
}

TEST_CASE("cli documents and files") {
  auto dir = scratch("cli");
  {
    std::ofstream f(dir / "bodies.json");
    f << R"({"bodies":[{"kind":"ball","center":[0,0],"radius":1},{"kind":"box","min":[0,0],"max":[1,1]}]})";
  }
  Run m = cli({"mc", "kinematic", "--bodies", (dir / "bodies.json").string(), "--samples", "20000", "--seed", "5",
               "--out", (dir / "results.csv").string()});
  CHECK(m.code == kExitOk);
  std::string csv = slurp(dir / "results.csv");
  CHECK(csv.rfind("test,seed,samples,estimate,stderr,prediction,z\n", 0) == 0);
  Run again = cli({"mc", "kinematic", "--bodies", (dir / "bodies.json").string(), "--samples", "20000", "--seed", "5",
                   "--serial", "--format", "csv"});
  CHECK(again.out == csv);
  CHECK(cli({"mc", "kinematic", "--dim", "3", "--bodies", (dir / "bodies.json").string(), "--samples", "100"}).code ==
        kExitUsage);

  // Relative --out resolves under INTGEO_OUT_DIR.
  setenv("INTGEO_OUT_DIR", dir.c_str(), 1);
  CHECK(cli({"un", "tasaki-matrices", "--dim", "2", "--out", "sub/t.json"}).code == kExitOk);
  unsetenv("INTGEO_OUT_DIR");
  auto doc = nlohmann::json::parse(slurp(dir / "sub" / "t.json"));
  CHECK(doc["normalization"] == "standard");
  CHECK(doc["tasaki_matrices"].size() == 5);

  // Config file mirrors the flags.
  {
    std::ofstream f(dir / "run.toml");
    f << "format=\"csv\"\n[so]\ndim=2\nbasis=\"mu\"\n";
  }
  Run c = cli({"--config", (dir / "run.toml").string(), "so", "kinematic", "--degree", "0"});
  CHECK(c.code == kExitOk);
  CHECK(c.out.find("SO(2),2,standard,mu,kinematic") != std::string::npos);
  CHECK(c.log.find("format=\"csv\"") != std::string::npos);

  Run sf = cli({"spaceform", "real", "--dim", "3", "--lambda-eval", "1"});
  CHECK(sf.code == kExitOk);
  CHECK(sf.out.find("lambda=1") != std::string::npos);
  CHECK(cli({"spaceform", "complex", "--dim", "3", "--check", "bfs"}).code == kExitOk);
  CHECK(cli({"spaceform", "complex", "--check", "chapoton", "--order", "8"}).code == kExitOk);
  Run fo = cli({"un", "firstorder", "--dim", "4", "--deg-a", "4", "--deg-b", "5"});
  CHECK(fo.code == kExitOk);
  CHECK(nlohmann::json::parse(fo.out)["cp_coefficients"][0][0] ==
        nlohmann::json::parse(R"({"terms":[{"den":"1","num":"6","pi_pow":-4}]})"));
  std::filesystem::remove_all(dir);
}
