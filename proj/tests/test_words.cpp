#include "gehman/words.hpp"

#include "doctest.h"

using gehman::BinaryWord;

TEST_CASE("oplus matches the displayed examples") {
  CHECK(BinaryWord::parse("000").oplus().str() == "100");
  CHECK(BinaryWord::parse("100").oplus().str() == "010");
  CHECK(BinaryWord::parse("111").oplus().str() == "000");
  CHECK(BinaryWord::parse("").oplus().str() == "");
  CHECK(BinaryWord::parse("0").oplus().str() == "1");
  CHECK(BinaryWord::parse("1").oplus().str() == "0");
}

TEST_CASE("oplus is increment mod 2^n") {
  for (std::size_t n = 0; n <= 10; ++n) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      auto w = BinaryWord::from_integer(v, n);
      CHECK(w.to_integer() == v);
      CHECK(w.oplus().to_integer() == ((v + 1) & ((std::uint64_t{1} << n) - 1)));
    }
  }
}

TEST_CASE("oplus acts as a single cyclic permutation of order 2^n") {
  for (std::size_t n = 1; n <= 16; ++n) {
    BinaryWord w = BinaryWord::zeros(n);
    const std::uint64_t period = std::uint64_t{1} << n;
    BinaryWord cur = w;
    for (std::uint64_t i = 0; i < period; ++i) {
      cur = cur.oplus();
      if (i + 1 < period) {
        REQUIRE(!(cur == w));
      }
    }
    CHECK(cur == w);
  }
}

TEST_CASE("prefix odometer formula") {
  CHECK(BinaryWord::parse("1111").prefix_odometer().str() == "0000");
  CHECK(BinaryWord::parse("1101").prefix_odometer().str() == "0011");
  // j = 1 case: leading zero flips, tail kept.
  CHECK(BinaryWord::parse("010").prefix_odometer().str() == "110");
  CHECK(BinaryWord::parse("011").prefix_odometer().str() == "111");
}

TEST_CASE("prefix odometer agrees with oplus on finite words") {
  for (std::size_t n = 0; n <= 12; ++n)
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      auto w = BinaryWord::from_integer(v, n);
      CHECK(w.prefix_odometer() == w.oplus());
    }
}

TEST_CASE("prefix coherence when the carry resolves early") {
  for (std::size_t n = 2; n <= 12; ++n)
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      auto w = BinaryWord::from_integer(v, n);
      for (std::size_t m = 1; m < n; ++m) {
        if (w.prefix(m).all_ones()) continue;  // carry crosses the cut
        CHECK(w.prefix_odometer().prefix(m) == w.prefix(m).prefix_odometer());
      }
    }
}

TEST_CASE("serialization round trip and lexicographic order") {
  CHECK(BinaryWord::parse("").str() == "");
  CHECK(BinaryWord::parse("0110").str() == "0110");
  CHECK_THROWS(BinaryWord::parse("01x"));
  CHECK(BinaryWord::parse("0") < BinaryWord::parse("1"));
  CHECK(BinaryWord::parse("01") < BinaryWord::parse("10"));
  CHECK(BinaryWord::parse("0") < BinaryWord::parse("00"));
  auto words = gehman::all_words(3);
  REQUIRE(words.size() == 8);
  CHECK(words.front().str() == "000");
  CHECK(words[1].str() == "001");
  CHECK(words.back().str() == "111");
}
