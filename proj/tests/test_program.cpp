#include "arbacus/program.hpp"

#include <doctest.h>

#include <random>

using namespace arbacus;

namespace {

Classification classify(const char* text) {
  return classify_number(parse_numeral(text));
}

bool is_herbum(const char* text) {
  return classify(text).kind == Classification::Kind::herbum;
}

bool is_primitive(const char* text) {
  return classify(text).kind == Classification::Kind::primitive_arbor;
}

bool is_complex(const char* text) {
  return classify(text).kind == Classification::Kind::complex_arbor;
}

// random digit strings for fuzzing; leading zeros are fixed up since those
// are not number strings at all
std::string random_number_string(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> digit(0, 9);
  std::uniform_int_distribution<int> len(1, max_len);
  int n = len(rng);
  std::string s;
  for (int i = 0; i < n; ++i) s.push_back(static_cast<char>('0' + digit(rng)));
  if (s.size() > 1 && s[0] == '0') s[0] = static_cast<char>('1' + digit(rng) % 9);
  return s;
}

}  // namespace

TEST_SUITE_BEGIN("program");

TEST_CASE("arbor and herbum fixtures") {
  CHECK_FALSE(is_herbum("{1 {0} 0,01}"));
  CHECK(is_herbum("10{{"));
  CHECK(is_herbum("{001}"));
  CHECK(is_herbum("}1"));
  CHECK(is_herbum("{1"));
  CHECK(is_herbum("1{{0}1}"));   // 88 inside
  CHECK(is_herbum("{1{0}}"));    // 99 inside
  CHECK(is_herbum("{00}"));      // the program register is not addressable
  CHECK_FALSE(is_herbum("{1}01{2}"));  // input field mid-sequence is fine
}

TEST_CASE("primitive rule fixtures") {
  CHECK(is_complex("{1{1}2}"));
  CHECK(is_primitive("{0{0,01}01}"));
  CHECK(is_complex("1{0{0}1}"));
  CHECK(is_primitive("0"));
  CHECK(is_primitive("{13}"));
  CHECK(is_primitive("{4,03}"));
  // counter read as an inner limit is admissible (the factorial idiom)
  CHECK(is_primitive("{0} 0 {4 {1,0} {0} {2 {3,0,1} 4} 01}"));
  // succeeding the limit inside would let the bound run away
  CHECK(is_complex("{1,2,2}"));
  // deleting the limit inside is just as bad
  CHECK(is_complex("{1{2}3,2}"));
  // fast-finish with the wrong limit is a plain counter write
  CHECK(is_complex("{1{1,3}2}"));
  // fast-finish body must be exactly the empty command
  CHECK(is_complex("{1{1,0,2}2}"));
}

TEST_CASE("classification trichotomy under fuzz") {
  std::mt19937 rng(7101);
  int herbum = 0, primitive = 0, complex_ = 0;
  for (int iter = 0; iter < 20000; ++iter) {
    Numeral n = parse_numeral(random_number_string(rng, 40));
    Classification c = classify_number(n);
    switch (c.kind) {
      case Classification::Kind::herbum: ++herbum; break;
      case Classification::Kind::primitive_arbor: ++primitive; break;
      case Classification::Kind::complex_arbor: ++complex_; break;
    }
    // classify agrees with parse: primitive and complex both parse
    bool parses = !std::holds_alternative<Herbum>(parse_program(n));
    CHECK(parses == (c.kind != Classification::Kind::herbum));
  }
  CHECK(herbum + primitive + complex_ == 20000);
  CHECK(herbum > 0);
  CHECK(primitive > 0);
}

TEST_CASE("metrics fixtures") {
  auto metrics = [](const char* text) {
    return program_metrics(std::get<ProgramTree>(parse_program(parse_numeral(text))));
  };
  CHECK(metrics("{0,01}{1,0,01}").size == 5);
  CHECK(metrics("{0,01}{1,0,01}").depth == 1);
  CHECK(metrics("{0,01}{1{2,0}{3,0,2}01}").size == 9);
  CHECK(metrics("{0,01}{1{2,0}{3,0,2}01}").depth == 2);
  CHECK(metrics("{0,01} {1 {2,0} {3 {4,0} {5,0,4}2} 01}").size == 13);
  CHECK(metrics("{0,01} {1 {2,0} {3 {4,0} {5,0,4}2} 01}").depth == 3);
  CHECK(metrics("0").size == 1);
  CHECK(metrics("0").depth == 0);
  CHECK(metrics("{13}").size == 1);
  CHECK(metrics("{13}").depth == 1);
}

TEST_CASE("rendering inverts parsing") {
  for (const char* text :
       {"0", "{13}", "{4,03}", "{0,01}{1,0,02}", "{2{1,0,01}02}",
        "{0}0{7{4,0}{0}0{5{2,0}{0}{3{1,0,01}2}4}02}", "1}41",
        "{1}01{2}33{,}7"}) {
    Numeral n = parse_numeral(text);
    ProgramParse p = parse_program(n);
    if (std::holds_alternative<Herbum>(p)) continue;
    const ProgramTree& tree = std::get<ProgramTree>(p);
    CHECK(program_numeral(tree) == n);
    CHECK(render_numeral(n, RenderMode::braces_comma) ==
          render_program(tree, RenderMode::braces_comma));
  }
}

TEST_CASE("rendering inverts parsing on fuzzed arbor numbers") {
  std::mt19937 rng(7102);
  int arbors = 0;
  for (int iter = 0; iter < 20000 && arbors < 500; ++iter) {
    Numeral n = parse_numeral(random_number_string(rng, 24));
    ProgramParse p = parse_program(n);
    if (std::holds_alternative<Herbum>(p)) continue;
    ++arbors;
    CHECK(program_numeral(std::get<ProgramTree>(p)) == n);
  }
  CHECK(arbors > 100);
}

TEST_CASE("empty command renders as comma") {
  Numeral n = parse_numeral("{}");
  const ProgramTree& tree = std::get<ProgramTree>(parse_program(n));
  CHECK(render_program(tree, RenderMode::braces_comma) == ",");
  CHECK(render_program(tree, RenderMode::braces) == "{}");
  CHECK(render_program(tree, RenderMode::plain) == "89");
}

TEST_SUITE_END();
