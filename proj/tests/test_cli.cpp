#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string output;
};

Run run(const std::string& args) {
  const std::string command = std::string(MIXCAT_CLI) + " " + args + " 2>&1";
  Run out;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.output.append(buffer.data(), n);
  const int raw = pclose(pipe);
  out.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

const std::string kData = MIXCAT_DATA_DIR;

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("monad suite from the command line") {
  const auto r = run("laws --suite monads --seed 7 --samples 40");
  CHECK(r.status == 0);
  CHECK(contains(r.output, "all laws hold"));
  CHECK_FALSE(contains(r.output, "FAIL"));
}

TEST_CASE("enrich suite for one model") {
  const auto r = run("laws --suite enrich --model dist --samples 30");
  CHECK(r.status == 0);
  CHECK(contains(r.output, "enrich/rel/dist"));
}

TEST_CASE("usage errors") {
  CHECK(run("laws --suite enrich --model bogus").status == 2);
  CHECK(run("laws --seed 0").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("meaning bank").status == 2);
}

TEST_CASE("bank demo") {
  const auto r = run("meaning --lexicon " + kData + "/bank.json --target n bank");
  CHECK(r.status == 0);
  CHECK(contains(r.output, "dist I -> n : 1/10*I|n|01 + 9/10*I|n|10"));
  CHECK(contains(r.output, "9/10  {finance}"));

  const auto p = run("meaning --lexicon " + kData + "/bank.json --target n --model pomega bank");
  CHECK(p.status == 0);
  CHECK(contains(p.output, "pomega I -> n : 1/1*I|n|01 + 1/1*I|n|10"));
}

TEST_CASE("sentence errors exit with status 1") {
  const auto unknown = run("meaning --lexicon " + kData + "/transitive.json alice zorks bob");
  CHECK(unknown.status == 1);
  CHECK(contains(unknown.output, "zorks"));
  const auto ungrammatical = run("meaning --lexicon " + kData + "/transitive.json alice bob");
  CHECK(ungrammatical.status == 1);
  CHECK(run("meaning --lexicon /nonexistent.json bank").status == 1);
}

TEST_CASE("transitive sentences") {
  const auto r = run("meaning --lexicon " + kData + "/transitive.json bob likes alice");
  CHECK(r.status == 0);
  CHECK(contains(r.output, "dist I -> s : 3/4*I|s|0 + 1/4*I|s|1"));
}

TEST_CASE("counterexample report") {
  const auto r = run("counterexample");
  CHECK(r.status == 0);
  CHECK(contains(r.output, "shape 1/4,3/4"));
  CHECK(contains(r.output, "e.e = "));
}

TEST_CASE("cpm report") {
  const auto two = run("cpm --size 2");
  CHECK(contains(two.output, "pure state as a mixture of two distinct pure states: 5 witnesses"));
  const auto three = run("cpm --size 3");
  CHECK(three.status == 0);
  const auto big = run("cpm --size 9");
  CHECK(big.status == 1);
  CHECK(contains(big.output, "bounded"));
}

TEST_CASE("reports are reproducible and exported as JSON") {
  const std::string path = "mixcat_cli_report.json";
  const auto a = run("laws --suite relate --samples 20 --seed 3 --out " + path);
  const auto b = run("laws --suite relate --samples 20 --seed 3");
  CHECK(a.status == 0);
  CHECK(a.output == b.output);
  std::ifstream in(path);
  REQUIRE(in);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc.contains("laws"));
  std::remove(path.c_str());
}
