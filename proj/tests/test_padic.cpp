#include <array>
#include <random>

#include "doctest.h"
#include "hermitian/error.hpp"
#include "hermitian/padic.hpp"
#include "oracles.hpp"

using namespace hermitian;

TEST_CASE("primality and checked powers") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(65521));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(561));
  CHECK(checked_pow(3, 4) == 81);
  CHECK(checked_pow(7, 0) == 1);
  CHECK_THROWS_AS(checked_pow(2, 64), Error);
}

TEST_CASE("binomials mod p agree with Pascal's triangle") {
  for (u64 p : {2, 3, 5, 7}) {
    for (u64 a = 0; a <= 40; ++a) {
      for (u64 b = 0; b <= a + 1; ++b) {
        CHECK_MESSAGE(binomial_mod_p(a, b, p) == oracle::pascal_mod(a, b, p),
                      "binom(" << a << "," << b << ") mod " << p);
      }
    }
  }
}

TEST_CASE("digit expansion") {
  const PAdicDigits zero = expand(0, 5, 3);
  CHECK(zero.digits() == std::vector<u64>{0, 0, 0});

  const PAdicDigits five = expand(5, 2, 3);
  CHECK(five.digits() == std::vector<u64>{1, 0, 1});

  const PAdicDigits m = expand(17, 3, 3);
  CHECK(m.digits() == std::vector<u64>{2, 2, 1});
  CHECK(m.truncation(2) == 8);
  CHECK(m.tail(2) == 2);
  CHECK(m.truncation(2) == m.digit(0) + 3 * m.tail(2));

  CHECK_THROWS_AS(expand(8, 2, 3), Error);
  CHECK_THROWS_AS(expand(1, 4, 3), Error);
  CHECK_THROWS_AS(m.tail(0), Error);
  CHECK_THROWS_AS(m.truncation(4), Error);
}

TEST_CASE("round trip and truncation identity for every value") {
  for (u64 p : {2, 3, 5}) {
    for (unsigned n = 1; n <= 4; ++n) {
      const u64 q = oracle::power(p, n);
      for (u64 v = 0; v < q; ++v) {
        const PAdicDigits d = expand(v, p, n);
        REQUIRE(d.reassemble() == v);
        u64 weight = 1;
        u64 partial = 0;
        for (unsigned h = 0; h < n; ++h) {
          REQUIRE(d.digit(h) < p);
          REQUIRE(d.truncation(h) == partial);
          partial += d.digit(h) * weight;
          weight *= p;
        }
        for (unsigned h = 1; h <= n; ++h) REQUIRE(d.truncation(h) == d.digit(0) + p * d.tail(h));
      }
    }
  }
}

TEST_CASE("carry bits") {
  CHECK(carry_bit(0, 0, 3, 3, 0) == 0);
  CHECK(carry_bit(0, 0, 3, 3, 1) == 0);
  CHECK(carry_bit(1, 1, 2, 3, 0) == 1);
  CHECK(carry_bit(1, 1, 2, 3, 1) == 0);
  CHECK_THROWS_AS(carry_bit(0, 0, 2, 3, 2), Error);
  CHECK_THROWS_AS(carry_bit(4, 3, 2, 3, 0), Error);

  SUBCASE("schoolbook addition, random pairs") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 1000; ++trial) {
      const u64 p = std::array<u64, 3>{2, 3, 5}[rng() % 3];
      const unsigned n = 2 + static_cast<unsigned>(rng() % 4);
      const u64 q = oracle::power(p, n);
      const u64 i = rng() % (q - 1);
      const u64 j = rng() % (q - 1 - i);
      const unsigned h = static_cast<unsigned>(rng() % (n - 1));
      REQUIRE(carry_bit(i, j, p, n, h) == oracle::schoolbook_carry(i, j, p, h));
    }
  }

  SUBCASE("monotone in the low digits") {
    for (u64 p : {2, 3}) {
      for (unsigned n = 2; n <= 4; ++n) {
        const u64 q = oracle::power(p, n);
        for (unsigned h = 0; h + 2 <= n; ++h) {
          const u64 ph1 = oracle::power(p, h + 1);
          for (u64 i = 0; i + 2 <= q; ++i) {
            for (u64 j = 0; i + j + 2 <= q; ++j) {
              const u64 low = i % ph1 + j % ph1;
              REQUIRE(carry_bit(i, j, p, n, h) == (low + 1 >= ph1 ? 1u : 0u));
              if (j + 1 + i + 2 <= q && (j + 1) % ph1 != 0 && carry_bit(i, j, p, n, h)) {
                REQUIRE(carry_bit(i, j + 1, p, n, h) == 1);
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("digit carry statements hold exhaustively") {
  for (u64 p : {2, 3, 5}) {
    for (unsigned n = 2; n <= 3; ++n) {
      const u64 q = oracle::power(p, n);
      for (unsigned h = 1; h < n; ++h) {
        for (u64 i = 1; i <= q; ++i) {
          for (u64 j = 1; j <= q; ++j) {
            const DigitCarryPredicates s = digit_carry_predicates(i, j, p, n, h);
            INFO("p=" << p << " n=" << n << " h=" << h << " i=" << i << " j=" << j);
            REQUIRE(s.tail_vs_truncation.forward_holds());
            REQUIRE(s.tail_vs_truncation.converse_holds());
            REQUIRE(s.truncation_vs_complement.forward_holds());
            REQUIRE(s.truncation_vs_complement.converse_holds());
            REQUIRE(s.frobenius_case_a.forward_holds());
            REQUIRE(s.frobenius_case_a.converse_holds());
            REQUIRE(s.frobenius_case_b.forward_holds());
            REQUIRE(s.frobenius_case_b.converse_holds());
          }
        }
      }
    }
  }
  SUBCASE("p = 2, n = 4 equivalences") {
    for (unsigned h = 1; h < 4; ++h) {
      for (u64 i = 1; i <= 16; ++i) {
        for (u64 j = 1; j <= 16; ++j) {
          const DigitCarryPredicates s = digit_carry_predicates(i, j, 2, 4, h);
          REQUIRE(s.frobenius_case_a.lhs == s.frobenius_case_a.rhs);
          REQUIRE(s.frobenius_case_b.lhs == s.frobenius_case_b.rhs);
        }
      }
    }
  }
}

TEST_CASE("literal tail reading of the first digit statement fails") {
  // With the tail taken as digits 1..h-1 the implication is false; the
  // library reads it as digits 1..h.
  bool counterexample = false;
  const u64 p = 3, n = 3;
  for (unsigned h = 1; h < n && !counterexample; ++h) {
    const u64 ph = oracle::power(p, h);
    const u64 ph1 = ph * p;
    for (u64 i = 1; i <= 27 && !counterexample; ++i) {
      for (u64 j = 1; j <= 27 && !counterexample; ++j) {
        const u64 ti = expand(i % 27, p, n).tail(h);
        const u64 tj = expand(j % 27, p, n).tail(h);
        const bool lhs = ti + tj < ph - 1;
        const bool rhs = i % ph1 + j % ph1 < ph1 - 1;
        counterexample = lhs && !rhs;
      }
    }
  }
  CHECK(counterexample);
}

TEST_CASE("digit carry statement range checks") {
  CHECK_THROWS_AS(digit_carry_predicates(1, 1, 2, 3, 0), Error);
  CHECK_THROWS_AS(digit_carry_predicates(1, 1, 2, 3, 3), Error);
  CHECK_THROWS_AS(digit_carry_predicates(0, 1, 2, 3, 1), Error);
  CHECK_THROWS_AS(digit_carry_predicates(1, 9, 2, 3, 1), Error);
}
