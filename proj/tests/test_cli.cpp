#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "magmaforge/analysis.hpp"
#include "magmaforge/io.hpp"

using namespace magmaforge;
using fixtures::data;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("magma_forge_test_" + name)).string();
}

}  // namespace

TEST_CASE("construct reproduces the named magmas") {
  auto r = run({"construct", "--group", "cyclic:3", "-n", "2", "--lambda", "file:" + data("rps.sgn")});
  CHECK(r.code == 0);
  CHECK(r.out == read_file(data("rps.magma")));
  r = run({"construct", "--group", "cyclic:5", "-n", "2", "--lambda", "file:" + data("rpssl.sgn")});
  CHECK(r.out == read_file(data("rpssl.magma")));
  r = run({"construct", "--group", "cyclic:5", "--arity", "3", "--lambda", "file:" + data("rps53.sgn")});
  CHECK(read_magma(r.out) == fixtures::rps53_magma());
  r = run({"construct", "--group", "cyclic:5", "-n", "3", "--lambda", "file:" + data("rps53.sgn"),
           "--emit-pointing"});
  CHECK(r.out == read_file(data("rps53.pointing")));
  r = run({"construct", "--group", "cyclic:5", "-n", "2", "--lambda", "file:" + data("rpssl.sgn"), "--emit-sign"});
  CHECK(r.out == read_file(data("rpssl.sgn")));
}

TEST_CASE("construct lambda sources") {
  auto r = run({"construct", "--group", "cyclic:7", "-n", "2", "--lambda", "primitive-root"});
  CHECK(r.code == 0);
  CHECK(read_magma(r.out).order() == 7);
  r = run({"construct", "--group", "cyclic:9", "-n", "2", "--lambda", "simple:3,2"});
  CHECK(r.code == 0);
  CHECK(is_simple(read_magma(r.out)));
  r = run({"construct", "--group", "semidirect:7,3,2", "-n", "2", "--lambda",
           "correlated:" + data("order21_seed.sgn")});
  CHECK(r.code == 0);
  CHECK(read_magma(r.out).order() == 21);
  r = run({"construct", "--group", "sum:3,3", "-n", "2"});
  CHECK(r.code == 0);
  CHECK(classify(read_magma(r.out)).all());
  r = run({"construct", "--group", "cyclic:5", "-n", "2", "--lambda", "primitive-root"});
  CHECK(r.code == 1);
  CHECK(r.err.find("NoInvariantSignFunction") != std::string::npos);
  r = run({"construct", "--group", "cyclic:9", "-n", "2", "--lambda", "simple:3,3"});
  CHECK(r.code == 1);
}

TEST_CASE("construct errors") {
  auto r = run({"construct", "--group", "cyclic:4", "-n", "2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("NotAdmissible") != std::string::npos);
  CHECK(run({"construct", "--group", "dihedral:4", "-n", "2"}).code == 2);
  CHECK(run({"construct", "--group", "cyclic:x", "-n", "2"}).code == 2);
  CHECK(run({"construct", "-n", "2"}).code == 2);
  CHECK(run({"construct", "--group", "cyclic:5", "-n", "2", "--lambda", "whatever"}).code == 2);
  CHECK(run({"construct", "--group", "cyclic:5", "-n", "0"}).code == 2);
  CHECK(run({"construct", "--group", "cyclic:5", "-n", "2", "--lambda", "file:/nonexistent"}).code == 1);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("counts") {
  CHECK(run({"count", "rps", "--m", "5", "--n", "2"}).out == "24\n");
  CHECK(run({"count", "prps", "--m", "3", "--n", "2", "--oracle"}).out == "36 (oracle: 36, MATCH)\n");
  CHECK(run({"count", "prps", "--m", "5", "--n", "2"}).out == "13608000\n");
  CHECK(run({"count", "regular", "--m", "5", "--n", "3"}).out == "36\n");
  CHECK(run({"count", "regular", "--m", "5", "--n", "3", "--oracle"}).out == "36 (oracle: 36, MATCH)\n");
  CHECK(run({"count", "rps", "--m", "5", "--n", "3", "--oracle"}).out.find("MATCH)") != std::string::npos);
  CHECK(run({"count", "partitions", "--m", "3", "--s", "6", "--oracle"}).out == "15 (oracle: 15, MATCH)\n");
  CHECK(run({"count", "iso-classes", "--p", "3", "--oracle"}).out == "1 (oracle: 1, MATCH)\n");
  const auto iso5 = run({"count", "iso-classes", "--p", "5", "--oracle"});
  CHECK(iso5.out == "6 (oracle: 36, MISMATCH)\n");
  CHECK(iso5.code == 1);
  const auto proof = run({"count", "regular", "--m", "5", "--n", "3", "--proof"});
  CHECK(proof.out == "k=1: 1\nk=2: 4\nk=3: 9\n36\n");
  const auto j = nlohmann::json::parse(run({"--json", "count", "prps", "--m", "5", "--n", "2"}).out);
  CHECK(j["value"] == "13608000");
  CHECK(run({"count", "prps", "--m", "4", "--n", "2"}).code == 1);
  CHECK(run({"count", "prps", "--m", "3"}).code == 2);
  CHECK(run({"count", "bogus", "--m", "3", "--n", "2"}).code == 2);
}

TEST_CASE("analyze") {
  auto r = run({"analyze", "verify", data("rps.magma")});
  CHECK(r.out ==
        "conservative: true\nessentially_polyadic: true\nfair: true\nstrongly_fair: true\nnondegenerate: true\n");
  r = run({"analyze", "verify", data("french.magma")});
  CHECK(r.out.find("strongly_fair: false") != std::string::npos);
  r = run({"analyze", "aut", data("rps72.magma")});
  CHECK(r.out.rfind("order 3\n", 0) == 0);
  r = run({"analyze", "identity", data("bsigma.magma"), "--lhs", "f(f(x1,x2),x3)", "--rhs", "f(x1,f(x2,x3))"});
  CHECK(r.code == 0);
  CHECK(r.out == "FAILS at x1=0,x2=1,x3=2\n");
  r = run({"analyze", "identity", data("rps.magma"), "--lhs", "f(x1,x2)", "--rhs", "f(x2,x1)"});
  CHECK(r.out == "HOLDS\n");
  r = run({"analyze", "simple", data("rps.magma")});
  CHECK(r.out == "simple: true\n");
  r = run({"analyze", "con", data("rps53.pointing")});
  CHECK(r.out.rfind("size 2\n", 0) == 0);
  r = run({"analyze", "embed", data("arrow.htour")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("target order 9\n", 0) == 0);
  CHECK(r.out.find("witness ok") != std::string::npos);
  r = run({"analyze", "embed", data("rps.htour"), "--target", data("rpssl.magma")});
  CHECK(r.code == 0);
  CHECK(r.out.find("witness ok") != std::string::npos);
  r = run({"analyze", "double", data("arrow.htour")});
  CHECK(r.code == 0);
  const auto doubled = read_htour(r.out);
  CHECK(doubled.order() == 5);
  CHECK(is_balanced(doubled));
  CHECK(run({"analyze", "identity", data("rps.magma")}).code == 2);
  CHECK(run({"analyze", "aut", "/nonexistent"}).code == 1);
  CHECK(run({"analyze", "double", data("rps53.magma")}).code == 1);
}

TEST_CASE("json output and files") {
  const auto path = temp_path("rps.magma");
  auto r = run({"construct", "--group", "cyclic:3", "-n", "2", "--lambda", "file:" + data("rps.sgn"), "-o", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(read_file(path) == read_file(data("rps.magma")));
  const auto j = nlohmann::json::parse(run({"--json", "analyze", "aut", path}).out);
  CHECK(j["order"] == "3");
  CHECK(j["automorphisms"].size() == 3);
  std::remove(path.c_str());
}

TEST_CASE("property: output is deterministic") {
  const std::vector<std::vector<std::string>> cmds = {
      {"construct", "--group", "semidirect:7,3,2", "-n", "2", "--lambda", "correlated"},
      {"--rng-seed", "3", "analyze", "embed", data("rps.htour"), "--target", data("rps72.magma")},
      {"count", "rps", "--m", "7", "--n", "3", "--proof"},
      {"--json", "analyze", "con", data("rpssl.magma")},
  };
  for (const auto& c : cmds) {
    const auto a = run(c), b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
