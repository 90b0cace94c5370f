#include <catch_amalgamated.hpp>

#include <random>

#include "coverlrc/sampling.hpp"
#include "coverlrc/serialize.hpp"
#include "coverlrc/tamo_barg.hpp"

using namespace coverlrc;

TEST_CASE("field descriptors round trip") {
  for (const Field& f : {Field(13, 1), Field(2, 8), Field(3, 2)}) {
    const Field back = field_from_json(field_to_json(f));
    CHECK(back == f);
  }
  SECTION("a missing modulus selects the deterministic default") {
    const Field f = field_from_json(nlohmann::json{{"p", 2}, {"m", 8}});
    CHECK(f == Field(2, 8));
  }
}

TEST_CASE("matrices serialize as integer grids") {
  Field f(13, 1);
  std::mt19937_64 rng(1);
  const Matrix m = random_matrix(rng, f, 4, 9);
  const Matrix back = matrix_from_json(f, matrix_to_json(m));
  CHECK(back == m);

  SECTION("out-of-range entries rejected") {
    CHECK_THROWS_AS(matrix_from_json(f, nlohmann::json::parse("[[13]]")), std::invalid_argument);
  }
  SECTION("ragged grids rejected") {
    CHECK_THROWS_AS(matrix_from_json(f, nlohmann::json::parse("[[1,2],[3]]")), std::invalid_argument);
  }
}

TEST_CASE("generator matrices carry their field descriptor") {
  const TamoBargLrc tb = make_tamo_barg_lrc(Field(13, 1), 9, 4, 2, 2);
  const nlohmann::json j = code_to_json(tb.code);
  CHECK(j["n"] == 9);
  CHECK(j["k"] == 4);
  const LinearCode back = code_from_json(j);
  CHECK(back.generator() == tb.code.generator());

  SECTION("declared shape must match") {
    nlohmann::json bad = j;
    bad["k"] = 5;
    CHECK_THROWS_AS(code_from_json(bad), std::invalid_argument);
  }
}

TEST_CASE("line sets serialize as sorted arrays") {
  const LineSet x({7, 2, 12});
  CHECK(lineset_to_json(x).dump() == "[2,7,12]");
  CHECK(lineset_from_json(lineset_to_json(x)) == x);
}
