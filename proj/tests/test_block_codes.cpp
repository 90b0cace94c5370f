#include <catch_amalgamated.hpp>

#include <array>
#include <numeric>
#include <random>

#include "coverlrc/linear_code.hpp"
#include "coverlrc/reed_solomon.hpp"
#include "coverlrc/sampling.hpp"
#include "coverlrc/tamo_barg.hpp"

using namespace coverlrc;

namespace {

size_t hamming_weight(const std::vector<uint32_t>& v) {
  size_t w = 0;
  for (uint32_t x : v) w += (x != 0);
  return w;
}

size_t hamming_distance(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  size_t d = 0;
  for (size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

// Visit every t-subset of {0, .., n-1}.
template <typename Fn>
void for_each_support(size_t n, size_t t, Fn&& fn) {
  if (t > n) return;
  std::vector<size_t> idx(t);
  for (size_t i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    size_t i = t;
    while (i > 0 && idx[i - 1] == n - t + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

TEST_CASE("encode basics") {
  Field f(13, 1);
  const TamoBargLrc tb = make_tamo_barg_lrc(f, 9, 4, 2, 2);
  const LinearCode& code = tb.code;

  SECTION("zero message encodes to zero") {
    const auto cw = code.encode(std::vector<uint32_t>(4, 0));
    CHECK(hamming_weight(cw) == 0);
  }
  SECTION("unit message picks out a generator row") {
    for (size_t i = 0; i < 4; ++i) {
      std::vector<uint32_t> msg(4, 0);
      msg[i] = 1;
      const auto cw = code.encode(msg);
      for (size_t c = 0; c < 9; ++c) CHECK(cw[c] == code.generator()(i, c));
    }
  }
  SECTION("length mismatch rejected") {
    CHECK_THROWS_AS(code.encode(std::vector<uint32_t>(3, 0)), std::invalid_argument);
  }
}

TEST_CASE("erasure decoding of the [9,4,5] constituent") {
  Field f(13, 1);
  const TamoBargLrc tb = make_tamo_barg_lrc(f, 9, 4, 2, 2);
  const LinearCode& code = tb.code;
  std::mt19937_64 rng(1);

  SECTION("no erasures returns the original message") {
    for (int iter = 0; iter < 20; ++iter) {
      std::vector<uint32_t> msg(4);
      for (auto& m : msg) m = random_element(rng, f);
      const auto dec = code.erasure_decode(ReceivedWord::from_codeword(code.encode(msg)));
      REQUIRE(dec.ok());
      CHECK(dec.message == msg);
    }
  }

  SECTION("every erasure support of size <= d-1 = 4 is recovered") {
    std::vector<uint32_t> msg(4);
    for (auto& m : msg) m = random_element(rng, f);
    const auto cw = code.encode(msg);
    for (size_t t = 1; t <= 4; ++t) {
      for_each_support(9, t, [&](const std::vector<size_t>& support) {
        ReceivedWord rw = ReceivedWord::from_codeword(cw);
        for (size_t pos : support) rw.erase_at(pos);
        const auto dec = code.erasure_decode(rw);
        REQUIRE(dec.ok());
        CHECK(dec.message == msg);
        CHECK(dec.codeword == cw);
      });
    }
  }

  SECTION("some 5-erasure support is rank deficient") {
    const auto cw = code.encode({1, 2, 3, 4});
    bool found = false;
    for_each_support(9, 5, [&](const std::vector<size_t>& support) {
      if (found) return;
      ReceivedWord rw = ReceivedWord::from_codeword(cw);
      for (size_t pos : support) rw.erase_at(pos);
      if (code.erasure_decode(rw).status == DecodeStatus::unrecoverable) found = true;
    });
    CHECK(found);  // d = 5 < n - k + 1, so a dependent 4-column set exists
  }

  SECTION("words outside the code are flagged") {
    auto cw = code.encode({5, 6, 7, 8});
    cw[0] = f.add(cw[0], 1);
    CHECK(code.erasure_decode(ReceivedWord::from_codeword(cw)).status == DecodeStatus::not_a_codeword);
  }
}

TEST_CASE("Reed-Solomon codes") {
  Field f(13, 1);

  SECTION("n = k is the full space with d = 1") {
    const RsCode rs = make_rs_code(f, 3, 3, {1, 2, 3});
    CHECK(rs.min_distance() == 1);
    CHECK(min_hamming_distance(rs.code) == 1);
  }
  SECTION("[9,5] over GF(13) has exhaustively verified distance 5") {
    const RsCode rs = make_rs_code(f, 9, 5, default_eval_points(f, 9));
    CHECK(rs.min_distance() == 5);
    CHECK(min_hamming_distance(rs.code) == 5);
  }
  SECTION("[255,117] distance asserted structurally") {
    Field f256(2, 8);
    const RsCode rs = make_rs_code(f256, 255, 117, default_eval_points(f256, 255));
    CHECK(rs.min_distance() == 139);
  }
  SECTION("repeated points rejected") {
    CHECK_THROWS_AS(make_rs_code(f, 3, 2, {1, 1, 2}), std::invalid_argument);
  }
  SECTION("k > n rejected") {
    CHECK_THROWS_AS(make_rs_code(f, 3, 4, {1, 2, 3}), std::invalid_argument);
  }
}

TEST_CASE("Reed-Solomon BMD decoding") {
  Field f(13, 1);
  const RsCode rs = make_rs_code(f, 9, 5, default_eval_points(f, 9));
  std::mt19937_64 rng(2);

  SECTION("error-free codeword decodes to itself") {
    std::vector<uint32_t> msg(5);
    for (auto& m : msg) m = random_element(rng, f);
    const auto cw = rs.code.encode(msg);
    const auto dec = rs_bmd_decode(rs, cw);
    REQUIRE(dec.ok);
    CHECK(dec.codeword == cw);
    CHECK(dec.message == msg);
  }

  SECTION("corrects every weight <= 2 pattern over 10^4 random trials") {
    size_t failures = 0;
    for (int iter = 0; iter < 10'000; ++iter) {
      std::vector<uint32_t> msg(5);
      for (auto& m : msg) m = random_element(rng, f);
      const auto cw = rs.code.encode(msg);
      auto word = cw;
      const size_t nerr = 1 + iter % 2;
      std::vector<size_t> pos(9);
      std::iota(pos.begin(), pos.end(), 0);
      for (size_t e = 0; e < nerr; ++e) {
        const size_t j = e + bounded_u64(rng, 9 - e);
        std::swap(pos[e], pos[j]);
        word[pos[e]] = f.add(word[pos[e]], random_nonzero(rng, f));
      }
      const auto dec = rs_bmd_decode(rs, word);
      if (!dec.ok || dec.codeword != cw) ++failures;
    }
    CHECK(failures == 0);
  }

  SECTION("3 errors either fail or land on a codeword within the radius") {
    for (int iter = 0; iter < 500; ++iter) {
      std::vector<uint32_t> msg(5);
      for (auto& m : msg) m = random_element(rng, f);
      const auto cw = rs.code.encode(msg);
      auto word = cw;
      std::vector<size_t> pos(9);
      std::iota(pos.begin(), pos.end(), 0);
      for (size_t e = 0; e < 3; ++e) {
        const size_t j = e + bounded_u64(rng, 9 - e);
        std::swap(pos[e], pos[j]);
        word[pos[e]] = f.add(word[pos[e]], random_nonzero(rng, f));
      }
      const auto dec = rs_bmd_decode(rs, word);
      if (dec.ok) {
        // any accepted output is a codeword within the BMD radius of the input
        CHECK(dec.codeword == rs.code.encode(dec.message));
        CHECK(hamming_distance(dec.codeword, word) <= 2);
      }
    }
  }
}

TEST_CASE("locality Singleton bound") {
  CHECK(lrc_singleton_bound(9, 4, 2, 2) == 5);
  CHECK(lrc_singleton_bound(255, 112, 8, 8) == 53);
  SECTION("r = k recovers the classical bound") {
    CHECK(lrc_singleton_bound(9, 4, 4, 2) == 6);
    CHECK(lrc_singleton_bound(255, 112, 112, 9) == 144);
  }
  SECTION("parameter ranges enforced") {
    CHECK_THROWS_AS(lrc_singleton_bound(9, 10, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(lrc_singleton_bound(9, 4, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(lrc_singleton_bound(9, 4, 5, 2), std::invalid_argument);
  }
}

TEST_CASE("Tamo-Barg construction") {
  SECTION("the [9,4,5,2,2] code over GF(13)") {
    Field f(13, 1);
    const TamoBargLrc tb = make_tamo_barg_lrc(f, 9, 4, 2, 2);
    CHECK(tb.code.length() == 9);
    CHECK(tb.code.dimension() == 4);
    CHECK(tb.design_distance == 5);
    CHECK(min_hamming_distance(tb.code) == 5);  // meets the bound with equality
    CHECK(tb.profile.group_count() == 3);
    // evaluation points are cosets of H = {1, 3, 9}
    CHECK(tb.points == std::vector<uint32_t>{1, 3, 9, 2, 5, 6, 4, 10, 12});

    SECTION("each local restriction is [3,2,2] MDS") {
      for (size_t j = 0; j < 3; ++j) {
        const Matrix basis = restriction_basis(tb.code, tb.profile.group(j));
        REQUIRE(basis.rows() == 2);
        CHECK(min_hamming_distance(LinearCode(f, basis)) == 2);
      }
    }
    SECTION("local restrictions recover any rho - 1 erasures") {
      std::mt19937_64 rng(3);
      for (size_t j = 0; j < 3; ++j) {
        const Matrix basis = restriction_basis(tb.code, tb.profile.group(j));
        const LinearCode local(f, basis);
        std::vector<uint32_t> msg(2);
        for (auto& m : msg) m = random_element(rng, f);
        const auto cw = local.encode(msg);
        for (size_t pos = 0; pos < 3; ++pos) {
          ReceivedWord rw = ReceivedWord::from_codeword(cw);
          rw.erase_at(pos);
          const auto dec = local.erasure_decode(rw);
          REQUIRE(dec.ok());
          CHECK(dec.codeword == cw);
        }
      }
    }
    SECTION("the RS supercode contains the LRC and shares its distance") {
      CHECK(tb.supercode.dimension() == 4 + 2 - 1);
      CHECK(tb.supercode.min_distance() == 5);
      std::mt19937_64 rng(4);
      for (int iter = 0; iter < 50; ++iter) {
        std::vector<uint32_t> msg(4);
        for (auto& m : msg) m = random_element(rng, f);
        const auto cw = tb.code.encode(msg);
        CHECK(tb.supercode.code.erasure_decode(ReceivedWord::from_codeword(cw)).ok());
      }
    }
  }

  SECTION("the n = 255 instance is constructible with distance 53") {
    Field f(2, 8);
    const TamoBargLrc tb = make_tamo_barg_lrc(f, 255, 112, 8, 8);
    CHECK(tb.design_distance == 53);
    CHECK(tb.profile.group_count() == 17);
    CHECK(tb.profile.group_size() == 15);
    // supercode dimension k + (k/r - 1)(rho - 1) keeps d_RS equal to the LRC distance
    CHECK(tb.supercode.dimension() == 112 + 13 * 7);
    CHECK(tb.supercode.min_distance() == 53);
  }

  SECTION("rho = 1 degenerates to a plain RS code") {
    Field f(13, 1);
    const TamoBargLrc tb = make_tamo_barg_lrc(f, 12, 4, 2, 1);
    CHECK(tb.design_distance == 9);  // n - k + 1, no locality penalty
    CHECK(min_hamming_distance(tb.code) == 9);
  }

  SECTION("bound equality holds across desk-scale parameter sets") {
    Field f(13, 1);
    for (const auto& [n, k, r, rho] : std::vector<std::array<size_t, 4>>{
             {9, 4, 2, 2}, {12, 4, 2, 1}, {8, 4, 2, 3}, {12, 2, 1, 2}, {9, 6, 2, 2}}) {
      const TamoBargLrc tb = make_tamo_barg_lrc(f, n, k, r, rho);
      CHECK(min_hamming_distance(tb.code) ==
            static_cast<size_t>(lrc_singleton_bound(static_cast<long>(n), static_cast<long>(k),
                                                    static_cast<long>(r), static_cast<long>(rho))));
    }
  }

  SECTION("inadmissible structures are rejected") {
    CHECK_THROWS_AS(make_tamo_barg_lrc(Field(13, 1), 9, 4, 2, 4), std::invalid_argument);   // 5 ∤ 12
    CHECK_THROWS_AS(make_tamo_barg_lrc(Field(7, 1), 9, 4, 2, 2), std::invalid_argument);    // q too small
    CHECK_THROWS_AS(make_tamo_barg_lrc(Field(13, 1), 9, 5, 2, 2), std::invalid_argument);   // r ∤ k
    CHECK_THROWS_AS(make_tamo_barg_lrc(Field(13, 1), 10, 4, 2, 2), std::invalid_argument);  // nl ∤ n
  }
}

TEST_CASE("repetition code distance") {
  Field f(2, 1);
  Matrix gen(f, 1, 3);
  gen(0, 0) = gen(0, 1) = gen(0, 2) = 1;
  CHECK(min_hamming_distance(LinearCode(f, gen)) == 3);
}

TEST_CASE("default field selection") {
  CHECK(default_field_for(9, 3) == Field(13, 1));
  CHECK(default_field_for(255, 15) == Field(2, 8));
}
