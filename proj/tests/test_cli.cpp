#include <cstdio>
#include <fstream>
#include <string>

#include "cli_runner.hpp"
#include "doctest.h"
#include "table_compare.hpp"

using cli_runner::run;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string(GRAVIBOUNCE_TEST_TMP) + "/" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("each command emits its header and rows") {
  const auto zeros = run("zeros --count 2");
  CHECK(zeros.status == 0);
  CHECK(zeros.out.rfind("n,lambda,lambda_bs,bs_rel_error\n", 0) == 0);
  const auto levels = run("levels --count 3");
  CHECK(levels.status == 0);
  CHECK(table_compare::parse_csv(levels.out).rows.size() == 3);
  const auto q = run("qmatrix --max 3");
  CHECK(q.status == 0);
  CHECK(table_compare::parse_csv(q.out).rows.size() == 6);
  CHECK(run("rates --max 3").status == 0);
  CHECK(run("lifetimes --max 3").out.rfind("n,total_gamma_per_s,dominant_final_state\n1,", 0) == 0);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run("zeros --count 0").status == 2);
  CHECK(run("levels --count 10001").status == 2);
  CHECK(run("qmatrix --max 201").status == 2);
  CHECK(run("zeros --count two").status == 2);
  CHECK(run("zeros --format xml").status == 2);
  CHECK(run("spectrum").status == 2);
  CHECK(run("").status == 2);
  const auto bad = write_temp("bad_constants.txt", "m = -1\n");
  CHECK(run("levels --constants " + bad).status == 2);
  CHECK(run("levels --constants /nonexistent/file").status == 2);
}

TEST_CASE("constants from file and environment") {
  const auto half_g = write_temp("half_g.txt", "# weaker gravity\ng = 4.905\n");
  const auto base = run("levels --count 2");
  const auto from_file = run("levels --count 2 --constants " + half_g);
  const auto from_env = run("levels --count 2", "GRAVIBOUNCE_CONSTANTS=" + half_g);
  CHECK(from_file.status == 0);
  CHECK(from_file.out != base.out);
  CHECK(from_env.out == from_file.out);
  // explicit flag wins over the environment
  const auto empty = write_temp("empty.txt", "");
  CHECK(run("levels --count 2 --constants " + empty, "GRAVIBOUNCE_CONSTANTS=" + half_g).out ==
        base.out);
}

TEST_CASE("threshold and pretty flags") {
  const auto strict = run("rates --max 2 --threshold 0");
  CHECK(strict.out.find(",false\n") != std::string::npos);
  const auto loose = run("rates --max 2");
  CHECK(loose.out.find(",true\n") != std::string::npos);
  const auto pretty = run("levels --count 1 --pretty");
  CHECK(pretty.status == 0);
  CHECK(pretty.out.find(",1.41,") != std::string::npos);
}

TEST_CASE("deterministic output and JSON/CSV equivalence") {
  for (const std::string cmd :
       {"zeros --count 20", "levels --count 20", "qmatrix --max 5", "rates --max 8",
        "lifetimes --max 8"}) {
    CAPTURE(cmd);
    const auto a = run(cmd);
    const auto b = run(cmd);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    const auto json = run(cmd + " --format json");
    CHECK(json.status == 0);
    CHECK(table_compare::equivalent(a.out, json.out));
  }
}
