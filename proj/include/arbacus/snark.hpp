#ifndef ARBACUS_SNARK_HPP
#define ARBACUS_SNARK_HPP

// The three-tier construction: unary-scheme strings over the 15-character
// reduced alphabet are enumerated as trigintiquintal numbers in ascending
// order; insertion substitutes a number for every occurrence of the variable
// Nb; evaluation runs term strings on the calculator. Boojum diagonalizes the
// series (insert the string's own value, evaluate, take the successor) and
// the Snark function packages it decimal-to-decimal. Metafunction fallbacks
// are pinned to the one-character string "0"; budget failures are reported,
// never converted to zero.

#include "arbacus/arbator.hpp"
#include "arbacus/numerals.hpp"
#include "arbacus/pattern.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arbacus {

// Character sequence over the reduced alphabet (0-7 { } b N ( ; )).
using ReducedString = std::string;

namespace detail {

inline std::optional<Pattern> parse_reduced(const ReducedString& s) {
  for (char c : s) {
    int v = Alphabet35::value_of(c);
    if (v < 0 || !Alphabet35::reduced(v)) return std::nullopt;
  }
  try {
    return parse_pattern(s, {}, PatternSurface::reduced);
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

}  // namespace detail

// True iff the string parses under the reduced pattern grammar, contains at
// least one variable, and its highest variable index is exactly 1.
inline bool is_unary_scheme(const TrigNumeral& t) {
  std::optional<Pattern> p = detail::parse_reduced(t.chars);
  if (!p) return false;
  return classify_pattern(*p).free_arity == 1;
}

struct EnumRecord {
  Nat index;
  TrigNumeral trig;
  bool unary_scheme = false;
};

// Records for indices 0..limit-1. Non-schemes stay in the series; they stand
// for nullification.
inline std::vector<EnumRecord> enumerate_unary_schemes(const Nat& limit) {
  std::vector<EnumRecord> records;
  TrigNumeral t{"0"};
  for (Nat i = 0; i < limit; ++i) {
    records.push_back(EnumRecord{i, t, is_unary_scheme(t)});
    t = trig_successor(t);
  }
  return records;
}

// Puts the number into the scheme at every occurrence of the variable;
// otherwise the result is put to zero.
inline ReducedString insert_unary_scheme(const ReducedString& s, const Numeral& n) {
  std::optional<Pattern> p = detail::parse_reduced(s);
  if (!p || classify_pattern(*p).free_arity != 1) return "0";
  Binding b;
  b[1] = nat_value(n);
  return render_pattern(substitute(*p, b), PatternSurface::reduced);
}

// Calculates the value of a term string; non-terms are put to zero. The
// result is always a number (or a reported budget failure).
inline CalcResult evaluate_reduced_term(const ReducedString& t, Budget budget = {}) {
  std::optional<Pattern> p = detail::parse_reduced(t);
  if (!p || classify_pattern(*p).free_arity != 0)
    return CalcResult{CalcResult::Kind::value, 0};
  return evaluate(*p, Binding{}, budget);
}

struct BoojumResult {
  CalcResult::Kind kind = CalcResult::Kind::value;
  TrigNumeral value;

  bool ok() const { return kind == CalcResult::Kind::value; }
};

// Classical diagonalisation: insert the string's own decimal value, evaluate,
// convert the result to trigintiquintal and take the successor.
inline BoojumResult boojum(const TrigNumeral& t, Budget budget = {}) {
  ReducedString term = insert_unary_scheme(t.chars, convert_trig_dec(t));
  CalcResult v = evaluate_reduced_term(term, budget);
  if (!v.ok()) return BoojumResult{v.kind, TrigNumeral{}};
  return BoojumResult{CalcResult::Kind::value, trig_successor(trig_of(v.value))};
}

// Decimal-to-decimal packaging of Boojum.
inline CalcResult snark(const Nat& n, Budget budget = {}) {
  BoojumResult b = boojum(convert_dec_trig(numeral_of(n)), budget);
  if (!b.ok()) return CalcResult{b.kind, 0};
  return CalcResult{CalcResult::Kind::value, trig_value(b.value)};
}

}  // namespace arbacus

#endif  // ARBACUS_SNARK_HPP
