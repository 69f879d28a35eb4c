#include "arbacus/numerals.hpp"

#include <doctest.h>

#include <random>

using namespace arbacus;

TEST_SUITE_BEGIN("numerals");

TEST_CASE("brace and comma synonyms parse to canonical digits") {
  CHECK(parse_numeral("1}41").digits == "1941");
  CHECK(parse_numeral("0").digits == "0");
  CHECK(parse_numeral("{2,02}{0}{3{1,0,01}2}").digits ==
        "828902980983818908901929");
  CHECK(parse_numeral(" 1 9 ").digits == "19");
  CHECK(parse_numeral(",").digits == "89");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_numeral(""), ParseError);
  CHECK_THROWS_AS(parse_numeral("   "), ParseError);
  CHECK_THROWS_AS(parse_numeral("12a"), ParseError);
  CHECK_THROWS_AS(parse_numeral("012"), ParseError);
  CHECK_THROWS_AS(parse_numeral("0,"), ParseError);
  try {
    parse_numeral("07");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::leading_zero);
  }
}

TEST_CASE("rendering modes") {
  Numeral n = parse_numeral("1941");
  CHECK(render_numeral(n, RenderMode::plain) == "1941");
  CHECK(render_numeral(n, RenderMode::braces) == "1}41");
  CHECK(render_numeral(parse_numeral("7"), RenderMode::plain) == "7");
  Numeral big{"828902980983818908901929"};
  CHECK(render_numeral(big, RenderMode::braces_comma) ==
        "{2,02}{0}{3{1,0,01}2}");
  CHECK(render_numeral(big, RenderMode::braces) ==
        "{2{}02}{0}{3{1{}0{}01}2}");
}

TEST_CASE("synonym spellings of one number parse identically") {
  std::mt19937 rng(7001);
  std::uniform_int_distribution<int> digit(0, 9);
  std::uniform_int_distribution<int> len(1, 30);
  for (int iter = 0; iter < 2000; ++iter) {
    std::string digits;
    int n = len(rng);
    for (int i = 0; i < n; ++i)
      digits.push_back(static_cast<char>('0' + digit(rng)));
    if (digits.size() > 1 && digits[0] == '0') digits[0] = '1';
    Numeral a = parse_numeral(digits);
    for (RenderMode mode : {RenderMode::plain, RenderMode::braces,
                            RenderMode::braces_comma}) {
      CHECK(parse_numeral(render_numeral(a, mode)) == a);
    }
  }
}

TEST_CASE("alphabet has 35 distinct characters, 15 reduced") {
  int reduced = 0;
  for (int i = 0; i < 35; ++i) {
    for (int j = i + 1; j < 35; ++j)
      CHECK(Alphabet35::chars[i] != Alphabet35::chars[j]);
    CHECK(Alphabet35::value_of(Alphabet35::chars[i]) == i);
    if (Alphabet35::reduced(i)) ++reduced;
  }
  CHECK(reduced == 15);
}

TEST_CASE("base conversion fixtures") {
  CHECK(convert_dec_trig(parse_numeral("0")).chars == "0");
  // 711 = 20*35 + 11: character N then index digit b
  CHECK(convert_dec_trig(parse_numeral("711")).chars == "Nb");
  CHECK(convert_trig_dec(parse_trig("Nc")).digits == "712");
}

TEST_CASE("conversion agrees with an independent base-35 evaluation") {
  // production builds the string by repeated division; check it back by
  // direct positional evaluation
  std::mt19937 rng(7002);
  std::uniform_int_distribution<std::uint64_t> val(0, 50'000'000);
  for (int iter = 0; iter < 3000; ++iter) {
    Nat v(val(rng));
    TrigNumeral t = trig_of(v);
    Nat back = 0;
    for (char c : t.chars) {
      int d = Alphabet35::value_of(c);
      REQUIRE(d >= 0);
      back = back * 35 + d;
    }
    CHECK(back == v);
    if (v > 0) CHECK(t.chars[0] != '0');
  }
}

TEST_CASE("round trip below one million") {
  for (std::uint64_t v = 0; v <= 1'000'000; ++v) {
    Numeral n = numeral_of(v);
    if (convert_trig_dec(convert_dec_trig(n)) != n) {
      REQUIRE(convert_trig_dec(convert_dec_trig(n)) == n);
    }
  }
}

TEST_CASE("trig successor fixtures and carry") {
  CHECK(trig_successor(parse_trig("0")).chars == "1");
  CHECK(trig_successor(parse_trig("Nb")).chars == "Nc");
  CHECK(trig_successor(parse_trig("]")).chars == "10");  // 34 + 1 = base carry
  CHECK(trig_successor(parse_trig("]]")).chars == "100");
}

TEST_CASE("successor advances exactly one position in value order") {
  TrigNumeral t{"0"};
  for (Nat v = 0; v <= 3000; ++v) {
    CHECK(trig_value(t) == v);
    TrigNumeral next = trig_successor(t);
    // shortlex: longer strings come later, same-length compares positionally
    bool later = next.chars.size() > t.chars.size() ||
                 (next.chars.size() == t.chars.size() && [&] {
                   for (std::size_t i = 0; i < t.chars.size(); ++i) {
                     int a = Alphabet35::value_of(t.chars[i]);
                     int b = Alphabet35::value_of(next.chars[i]);
                     if (a != b) return b > a;
                   }
                   return false;
                 }());
    CHECK(later);
    t = next;
  }
}

TEST_SUITE_END();
