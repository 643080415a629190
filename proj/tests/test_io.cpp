#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "csn/io.hpp"

using namespace csn;

TEST_CASE("configuration json round trip is lossless") {
  CsConfiguration c(Role::Primal, 2,
                    {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(22, 7), Rat(-1, 3)}});
  std::string text = configuration_to_json(c);
  std::istringstream in(text);
  CsConfiguration back = read_configuration(in);
  CHECK(back.role() == Role::Primal);
  CHECK(back.dim() == 2);
  REQUIRE(back.count() == 3);
  for (int i = 0; i < 3; ++i) CHECK(back.vector(i) == c.vector(i));
  CHECK(configuration_to_json(back) == text);
}

TEST_CASE("decimal and integer entries are read exactly") {
  std::istringstream in(R"({
    "role": "transform",
    "dim": 2,
    "vectors": [[1, "0.25"], ["-3/2", 2], ["0.5", "-1"]]
  })");
  CsConfiguration c = read_configuration(in);
  CHECK(c.vector(0) == Vec{Rat(1), Rat(1, 4)});
  CHECK(c.vector(1) == Vec{Rat(-3, 2), Rat(2)});
  CHECK(c.vector(2) == Vec{Rat(1, 2), Rat(-1)});
}

TEST_CASE("malformed configurations raise ParseError") {
  auto reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_configuration(in), ParseError);
  };
  reject("not json");
  reject(R"({"role": "primal", "dim": 2})");
  reject(R"({"role": "weird", "dim": 1, "vectors": [["1"]]})");
  reject(R"({"role": "primal", "dim": 1, "vectors": [[true]]})");
  reject(R"({"role": "primal", "dim": 1, "vectors": [["1/0"]]})");
}

TEST_CASE("rank problems are distinct from parse problems") {
  std::istringstream in(R"({"role": "primal", "dim": 2,
                            "vectors": [["1","0"],["2","0"]]})");
  CHECK_THROWS_AS(read_configuration(in), RankDeficientError);
}

TEST_CASE("family files use 1-based indices") {
  SetFamily f;
  f.m = 6;
  f.s = 3;
  f.members = {{0, 1, 2}, {0, 3, 4}};
  std::string text = family_to_json(f);
  CHECK(text == "[[1,2,3],[1,4,5]]\n");
  std::istringstream in(text);
  SetFamily back = read_family(in, 6, 3);
  CHECK(back.members == f.members);

  std::istringstream bad("[[0,1,2]]");
  CHECK_THROWS_AS(read_family(bad, 6, 3), ParseError);
  std::istringstream repeated("[[1,1,2]]");
  CHECK_THROWS_AS(read_family(repeated, 6, 3), ParseError);
}

TEST_CASE("missing files raise ParseError") {
  CHECK_THROWS_AS(read_configuration_file("/nonexistent/path.json"), ParseError);
}
