#include <catch_amalgamated.hpp>

#include <random>

#include "coverlrc/cover_metric.hpp"
#include "coverlrc/sampling.hpp"

using namespace coverlrc;

namespace {

Matrix from_bits(const Field& f, size_t rows, size_t cols, uint32_t bits) {
  Matrix out(f, rows, cols);
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c)
      if (bits & (1u << (r * cols + c))) out(r, c) = 1;
  return out;
}

}  // namespace

TEST_CASE("line sets") {
  SECTION("indices are sorted and deduplicated") {
    LineSet x({5, 2, 2, 7});
    CHECK(x.lines() == std::vector<unsigned>{2, 5, 7});
    CHECK(x.size() == 3);
    CHECK(x.contains(5));
    CHECK(!x.contains(3));
  }
  SECTION("zero index rejected (lines are 1-based)") {
    CHECK_THROWS_AS(LineSet({0, 1}), std::invalid_argument);
  }
  SECTION("split into rows and columns") {
    const LineSet x = LineSet::rows_and_cols(4, {2}, {3});
    CHECK(x.lines() == std::vector<unsigned>{2, 7});
    const auto [rows, cols] = x.split(4);
    CHECK(rows == std::vector<size_t>{1});
    CHECK(cols == std::vector<size_t>{2});
  }
}

TEST_CASE("is_cover") {
  Field f(2, 1);
  SECTION("empty set covers the zero matrix") {
    CHECK(is_cover(Matrix(f, 4, 4), LineSet()));
  }
  SECTION("single entry at row 2, column 3 of a 4x4") {
    Matrix e(f, 4, 4);
    e(1, 2) = 1;
    CHECK(is_cover(e, LineSet({2})));      // its row
    CHECK(!is_cover(e, LineSet({3})));     // a different row
    CHECK(is_cover(e, LineSet({4 + 3})));  // its column
  }
  SECTION("all rows cover the identity") {
    CHECK(is_cover(Matrix::identity(f, 3), LineSet({1, 2, 3})));
    CHECK(!is_cover(Matrix::identity(f, 3), LineSet({1, 2})));
  }
  SECTION("out-of-range line rejected") {
    CHECK_THROWS_AS(is_cover(Matrix(f, 3, 3), LineSet({7})), std::invalid_argument);
  }
}

TEST_CASE("cover weight basics") {
  Field f(2, 1);
  CHECK(cover_weight(Matrix(f, 4, 4)) == 0);
  for (size_t n : {2, 3, 5}) CHECK(cover_weight(Matrix::identity(f, n)) == n);

  SECTION("all-ones 3x3 needs 3 lines") {
    Matrix e(f, 3, 3);
    for (size_t r = 0; r < 3; ++r)
      for (size_t c = 0; c < 3; ++c) e(r, c) = 1;
    CHECK(cover_weight(e) == 3);
    CHECK(cover_weight_exhaustive(e) == 3);
  }
  SECTION("a single full row has weight 1 but column weight n") {
    Matrix e(f, 4, 4);
    for (size_t c = 0; c < 4; ++c) e(1, c) = 1;
    CHECK(cover_weight(e) == 1);
    CHECK(column_weight(e) == 4);
    CHECK(row_weight(e) == 1);
  }
}

TEST_CASE("minimum cover witness") {
  Field f(2, 1);
  SECTION("zero matrix has the empty witness") {
    CHECK(min_cover(Matrix(f, 3, 3)) == LineSet());
  }
  SECTION("single nonzero row yields that row") {
    Matrix e(f, 4, 4);
    for (size_t c = 0; c < 4; ++c) e(2, c) = 1;
    const LineSet w = min_cover(e);
    CHECK(w.size() == 1);
    CHECK(is_cover(e, w));
  }
  SECTION("a full 2x2 block inside a 4x4 is covered by 2 lines") {
    Matrix e(f, 4, 4);
    e(1, 1) = e(1, 2) = e(2, 1) = e(2, 2) = 1;
    CHECK(cover_weight(e) == 2);
    CHECK(cover_weight_exhaustive(e) == 2);
    const LineSet w = min_cover(e);
    CHECK(w.size() == 2);
    CHECK(is_cover(e, w));
  }
  SECTION("witness is valid and minimal on random matrices") {
    std::mt19937_64 rng(7);
    Field f4(2, 2);
    for (int iter = 0; iter < 500; ++iter) {
      const Matrix e = random_matrix(rng, f4, 4, 5);
      const LineSet w = min_cover(e);
      CHECK(is_cover(e, w));
      CHECK(w.size() == cover_weight(e));
    }
  }
  SECTION("witness is deterministic") {
    std::mt19937_64 rng(8);
    Field f2(2, 1);
    const Matrix e = random_matrix(rng, f2, 5, 5);
    CHECK(min_cover(e) == min_cover(e));
  }
}

TEST_CASE("matching-based weight equals the exhaustive oracle") {
  Field f(2, 1);
  SECTION("all 512 binary 3x3 matrices") {
    for (uint32_t bits = 0; bits < 512; ++bits) {
      const Matrix e = from_bits(f, 3, 3, bits);
      CHECK(cover_weight(e) == cover_weight_exhaustive(e));
    }
  }
  SECTION("random 4x4 binary matrices") {
    std::mt19937_64 rng(9);
    for (int iter = 0; iter < 2000; ++iter) {
      const Matrix e = from_bits(f, 4, 4, static_cast<uint32_t>(rng() & 0xffff));
      CHECK(cover_weight(e) == cover_weight_exhaustive(e));
    }
  }
  SECTION("random rectangular GF(4) matrices") {
    std::mt19937_64 rng(10);
    Field f4(2, 2);
    for (int iter = 0; iter < 500; ++iter) {
      const Matrix e = random_matrix(rng, f4, 3, 6);
      CHECK(cover_weight(e) == cover_weight_exhaustive(e));
    }
  }
}

TEST_CASE("cover distance") {
  Field f(2, 1);
  std::mt19937_64 rng(11);
  SECTION("equal matrices are at distance zero") {
    const Matrix a = random_matrix(rng, f, 3, 3);
    CHECK(cover_distance(a, a) == 0);
  }
  SECTION("distance to zero is the weight") {
    const Matrix a = random_matrix(rng, f, 3, 3);
    CHECK(cover_distance(a, Matrix(f, 3, 3)) == cover_weight(a));
  }
  SECTION("matches the exhaustive oracle on random pairs") {
    for (int iter = 0; iter < 500; ++iter) {
      const Matrix a = random_matrix(rng, f, 3, 3);
      const Matrix b = random_matrix(rng, f, 3, 3);
      CHECK(cover_distance(a, b) == cover_weight_exhaustive(a - b));
    }
  }
  SECTION("metric axioms on random triples") {
    Field f3(3, 1);
    for (int iter = 0; iter < 300; ++iter) {
      const Matrix a = random_matrix(rng, f3, 4, 4);
      const Matrix b = random_matrix(rng, f3, 4, 4);
      const Matrix c = random_matrix(rng, f3, 4, 4);
      CHECK((cover_distance(a, b) == 0) == (a == b));
      CHECK(cover_distance(a, b) == cover_distance(b, a));
      CHECK(cover_distance(a, c) <= cover_distance(a, b) + cover_distance(b, c));
    }
  }
  SECTION("dimension mismatch rejected") {
    CHECK_THROWS_AS(cover_distance(Matrix(f, 3, 3), Matrix(f, 3, 4)), std::invalid_argument);
  }
}

TEST_CASE("cover weight is bounded by line weights and permutation invariant") {
  std::mt19937_64 rng(12);
  Field f(5, 1);
  for (int iter = 0; iter < 300; ++iter) {
    const Matrix e = random_matrix(rng, f, 4, 4);
    const size_t w = cover_weight(e);
    CHECK(w <= column_weight(e));
    CHECK(w <= row_weight(e));
    CHECK(cover_weight(e.transpose()) == w);

    Matrix perm(f, 4, 4);
    std::vector<size_t> rp{2, 0, 3, 1}, cp{1, 3, 0, 2};
    for (size_t r = 0; r < 4; ++r)
      for (size_t c = 0; c < 4; ++c) perm(r, c) = e(rp[r], cp[c]);
    CHECK(cover_weight(perm) == w);
  }
}

TEST_CASE("exhaustive search size cap") {
  Field f(2, 1);
  CHECK_THROWS_AS(cover_weight_exhaustive(Matrix(f, 13, 13)), std::invalid_argument);
}
