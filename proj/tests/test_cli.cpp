#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "crossbessel/verify.hpp"
#include "json.hpp"
#include "oracles.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = crossbessel::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string cache_dir() {
  static const fs::path dir =
      fs::temp_directory_path() / ("crossbessel-cli-test-" + std::to_string(::getpid()));
  return dir.string();
}

}  // namespace

TEST_CASE("eval") {
  const Run phi = run({"eval", "--fn", "phi", "--nu", "-0.5", "--x", "1"});
  CHECK(phi.code == 0);
  CHECK(phi.doc().at("value").get<double>() == doctest::Approx(oracle::phi_minus_half(1.0)).epsilon(1e-14));
  CHECK(phi.doc().contains("abs_error_estimate"));
  CHECK(phi.doc().contains("terms_used"));
  const Run j = run({"eval", "--fn", "J", "--nu", "0.5", "--x", "3.14159265358979"});
  CHECK(j.code == 0);
  CHECK(std::fabs(j.doc().at("value").get<double>()) < 1e-12);
  CHECK(run({"eval", "--fn", "J", "--nu", "-1.5", "--x", "1"}).code == 2);
  CHECK(run({"eval", "--fn", "J", "--nu", "0", "--x", "10", "--max-terms", "3"}).code == 3);
  CHECK(run({"eval", "--fn", "I", "--nu", "0.5", "--x", "1"}).doc().at("value").get<double>() ==
        doctest::Approx(oracle::i_half(1.0)).epsilon(1e-14));
  const Run d = run({"eval", "--fn", "phi-prime", "--nu", "-0.5", "--x", "1"});
  const double ref = (2.0 / oracle::pi) * 2.0 * std::cos(1.0) * std::cosh(1.0) - oracle::phi_minus_half(1.0);
  CHECK(d.doc().at("value").get<double>() == doctest::Approx(ref).epsilon(1e-13));
  const Run f2 = run({"eval", "--fn", "f2", "--nu", "-0.5", "--re", "0.5"});
  const double s = std::pow(0.5, 0.25);
  CHECK(f2.doc().at("re").get<double>() == doctest::Approx(0.5 * std::cos(s) * std::cosh(s)).epsilon(1e-13));
  CHECK(run({"eval", "--fn", "f1", "--nu", "0", "--re", "1.0"}).code == 2);
  CHECK(run({"eval", "--fn", "phi", "--nu", "0"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"eval", "--fn", "K", "--nu", "0", "--x", "1"}).code == 1);
  CHECK(run({"eval", "--nu", "0", "--x", "1"}).code == 1);
  CHECK(run({"zeros", "--kind", "j", "--nu", "0", "--format", "xml"}).code == 1);
  CHECK(run({"solve", "--equation", "th1-paper", "--lo", "abc"}).code == 1);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("zeros") != std::string::npos);
}

TEST_CASE("zeros") {
  const Run j = run({"zeros", "--kind", "j", "--nu", "-0.5", "--n", "3", "--cache-dir", cache_dir()});
  CHECK(j.code == 0);
  const json z = j.doc().at("zeros");
  REQUIRE(z.size() == 3);
  for (int n = 0; n < 3; ++n) CHECK(std::fabs(z[n].get<double>() - (n + 0.5) * oracle::pi) < 1e-10);
  CHECK(j.err.find("cache:") != std::string::npos);
  CHECK(fs::exists(fs::path(cache_dir()) / "j_nu-0.500000000000_tol1.000e-12.json"));

  const Run g = run({"zeros", "--kind", "gamma", "--nu", "-0.5", "--n", "2", "--cache-dir", cache_dir()});
  CHECK(std::fabs(g.doc().at("zeros")[0].get<double>() - 2.3650204) < 1e-6);
  CHECK(std::fabs(g.doc().at("zeros")[1].get<double>() - 5.4978039) < 1e-6);

  const Run csv = run({"zeros", "--kind", "gamma", "--nu", "0", "--n", "2", "--format", "csv", "--no-cache"});
  CHECK(csv.code == 0);
  std::istringstream in(csv.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,zero,lo,hi");
  const double j01 = 2.404825557695773;
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    double zero = 0, lo = 0, hi = 0;
    int n = 0;
    REQUIRE(std::sscanf(line.c_str(), "%d,%lf,%lf,%lf", &n, &zero, &lo, &hi) == 4);
    CHECK(lo < zero);
    CHECK(zero < hi);
    // lo is j_{0,n}, hi is min(j_{0,n+1}, j_{1,n})
    CHECK(std::fabs(std::cyl_bessel_j(0.0, lo)) < 1e-11);
    if (n == 1) CHECK(lo == doctest::Approx(j01));
  }
  CHECK(rows == 2);
  // shorter request served from the cached table, identical values
  const Run again = run({"zeros", "--kind", "j", "--nu", "-0.5", "--n", "2", "--cache-dir", cache_dir()});
  CHECK(again.doc().at("zeros")[1] == z[1]);
  CHECK(run({"zeros", "--kind", "j", "--nu", "-0.5", "--n", "0", "--no-cache"}).code == 2);
}

TEST_CASE("criterion and solve") {
  const Run c = run({"criterion", "--which", "product", "--nu", "0.5", "--method", "closed"});
  CHECK(c.code == 0);
  CHECK(std::fabs(c.doc().at("sum").get<double>() - 0.011218) < 1e-5);
  CHECK(c.doc().at("satisfies_bound") == true);
  const Run d = run({"criterion", "--which", "cross", "--nu", "-0.5", "--method", "direct", "--n", "4"});
  CHECK(d.doc().at("zeros_used") == 4);
  CHECK(run({"criterion", "--which", "cross", "--nu", "-0.99", "--method", "direct"}).code == 2);

  const Run s = run({"solve", "--equation", "th1-paper", "--lo", "-0.99", "--hi", "-0.5"});
  CHECK(s.code == 0);
  CHECK(std::fabs(s.doc().at("root").get<double>() + 0.9427) < 5e-3);
  CHECK(run({"solve", "--equation", "th1-paper", "--lo", "0", "--hi", "1"}).code == 2);
  const Run human = run({"solve", "--equation", "th2-paper", "--lo", "-0.9", "--hi", "0.2", "--format", "human"});
  CHECK(human.out.find("root: ") != std::string::npos);
}

TEST_CASE("coeffs and report") {
  const Run c = run({"coeffs", "--kind", "product", "--nu", "-0.5", "--depth", "5", "--format", "csv"});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("k,coefficient\n0,1\n", 0) == 0);
  const Run g = run({"coeffs", "--kind", "general", "--nu", "0", "--mu", "0", "--depth", "3"});
  CHECK(g.doc().at("coeffs").size() == 4);
  CHECK(run({"coeffs", "--kind", "general", "--nu", "0"}).code == 2);

  const Run r = run({"report", "--what", "sums", "--lo", "-0.5", "--hi", "0.5", "--step", "0.25"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "nu,s1_closed,s2_closed,th1_residual,th2_residual");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 5);
  const Run z = run({"report", "--what", "zeros", "--lo", "0", "--hi", "1", "--step", "0.5", "--n", "2"});
  CHECK(z.out.rfind("nu,j_1,gamma_1,j_2,gamma_2\n", 0) == 0);
}

TEST_CASE("byte-stable output with sorted keys") {
  const std::vector<std::string> args{"criterion", "--which", "cross", "--nu", "0.25", "--method", "direct"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.out == b.out);
  const json doc = a.doc();
  std::string prev;
  for (const auto& [k, v] : doc.items()) {
    CHECK(prev < k);
    prev = k;
  }
  CHECK(a.err.empty());
}

TEST_CASE("verify") {
  const Run j = run({"verify", "--suite", "jacobi"});
  CHECK(j.code == 0);
  CHECK(j.doc().at("passed") == true);
  CHECK(j.doc().contains("th2_comparison"));
  const Run all = run({"verify", "--suite", "all"});
  CHECK(all.code == 0);
  CHECK(all.doc().at("failed") == 0);
  CHECK(all.doc().at("total").get<int>() >= 25);
  CHECK(all.err.empty());
  std::vector<crossbessel::Check> checks{{"x", "ok", true, false, {}}, {"x", "info", false, true, {}}};
  CHECK(crossbessel::all_passed(checks));
  checks.push_back({"x", "bad", false, false, {}});
  CHECK_FALSE(crossbessel::all_passed(checks));
  CHECK(crossbessel::to_json(checks).at("failed") == 1);
  fs::remove_all(cache_dir());
}
