#ifndef ARBACUS_NUMERALS_HPP
#define ARBACUS_NUMERALS_HPP

// Number strings of the codex: decimal numerals whose digits 8 and 9 carry
// the brace reading ({ = acco = 8, } = lade = 9, comma = the digit pair 89),
// plus base-35 (trigintiquintal) numerals over the metalanguage alphabet.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arbacus {

// Unbounded natural number. Hyperoperation outputs overflow any fixed width.
using Nat = boost::multiprecision::cpp_int;

inline std::uint64_t bit_length(const Nat& v) {
  if (v == 0) return 0;
  return static_cast<std::uint64_t>(boost::multiprecision::msb(v)) + 1;
}

class ParseError : public std::runtime_error {
public:
  enum class Kind {
    empty_input,
    invalid_character,
    leading_zero,
    syntax,
    unknown_constant,
    format,
  };

  ParseError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

// Canonical decimal number string: "0" or a digit string not starting with 0.
struct Numeral {
  std::string digits = "0";

  bool operator==(const Numeral&) const = default;
};

enum class RenderMode { plain, braces, braces_comma };

inline bool is_canonical_digits(std::string_view digits) {
  if (digits.empty()) return false;
  if (digits.size() > 1 && digits.front() == '0') return false;
  for (char c : digits)
    if (c < '0' || c > '9') return false;
  return true;
}

// Accepts digits 0-9 with the synonyms { } and , (comma = 89). Spaces are
// ignored; the tables typeset programs with spaces.
inline Numeral parse_numeral(std::string_view text) {
  std::string digits;
  digits.reserve(text.size());
  for (char c : text) {
    if (c == ' ' || c == '\t') continue;
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
    } else if (c == '{') {
      digits.push_back('8');
    } else if (c == '}') {
      digits.push_back('9');
    } else if (c == ',') {
      digits.push_back('8');
      digits.push_back('9');
    } else {
      throw ParseError(ParseError::Kind::invalid_character,
                       std::string("invalid character '") + c + "' in numeral");
    }
  }
  if (digits.empty())
    throw ParseError(ParseError::Kind::empty_input, "empty numeral");
  if (digits.size() > 1 && digits.front() == '0')
    throw ParseError(ParseError::Kind::leading_zero,
                     "numeral has a leading zero: " + digits);
  return Numeral{std::move(digits)};
}

inline std::string render_numeral(const Numeral& n, RenderMode mode) {
  if (mode == RenderMode::plain) return n.digits;
  std::string out;
  out.reserve(n.digits.size());
  const std::string& d = n.digits;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (mode == RenderMode::braces_comma && d[i] == '8' && i + 1 < d.size() &&
        d[i + 1] == '9') {
      out.push_back(',');
      ++i;
    } else if (d[i] == '8') {
      out.push_back('{');
    } else if (d[i] == '9') {
      out.push_back('}');
    } else {
      out.push_back(d[i]);
    }
  }
  return out;
}

inline Nat nat_value(const Numeral& n) {
  Nat v = 0;
  for (char c : n.digits) v = v * 10 + (c - '0');
  return v;
}

inline Numeral numeral_of(const Nat& v) {
  if (v == 0) return Numeral{"0"};
  return Numeral{v.str()};
}

inline Numeral numeral_of(std::uint64_t v) { return numeral_of(Nat(v)); }

// The 35-character metalanguage alphabet, ASCII-transliterated. Positions are
// the digit values 0..34; the bold index digits 0..9 map to a..j.
struct Alphabet35 {
  static constexpr std::array<char, 35> chars = {
      '0', '1', '2', '3', '4', '5', '6', '7', '{', '}',  // decimal digits
      'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'i', 'j',  // index digits 0..9
      'N', '=', '#', '!', '|', '&', '>', '~',
      '(', ';', ')', 'E', 'A', '[', ']'};

  // The 15-character reduced alphabet: 0-7 { } b N ( ; )
  static constexpr bool reduced(int value) {
    return (value >= 0 && value <= 9) || value == 11 || value == 20 ||
           value == 28 || value == 29 || value == 30;
  }

  static constexpr int value_of(char c) {
    for (int i = 0; i < 35; ++i)
      if (chars[static_cast<std::size_t>(i)] == c) return i;
    return -1;
  }
};

// Canonical base-35 numeral: "0" or a string not starting with the zero char.
struct TrigNumeral {
  std::string chars = "0";

  bool operator==(const TrigNumeral&) const = default;
};

inline TrigNumeral parse_trig(std::string_view text) {
  if (text.empty())
    throw ParseError(ParseError::Kind::empty_input, "empty trigintiquintal numeral");
  for (char c : text)
    if (Alphabet35::value_of(c) < 0)
      throw ParseError(ParseError::Kind::invalid_character,
                       std::string("character '") + c +
                           "' is not in the 35-character alphabet");
  if (text.size() > 1 && text.front() == Alphabet35::chars[0])
    throw ParseError(ParseError::Kind::leading_zero,
                     "trigintiquintal numeral has a leading zero character");
  return TrigNumeral{std::string(text)};
}

inline Nat trig_value(const TrigNumeral& t) {
  Nat v = 0;
  for (char c : t.chars) v = v * 35 + Alphabet35::value_of(c);
  return v;
}

inline TrigNumeral trig_of(const Nat& value) {
  if (value == 0) return TrigNumeral{"0"};
  std::string out;
  Nat v = value;
  while (v > 0) {
    out.push_back(Alphabet35::chars[static_cast<std::size_t>(v % 35)]);
    v /= 35;
  }
  std::reverse(out.begin(), out.end());
  return TrigNumeral{std::move(out)};
}

inline TrigNumeral convert_dec_trig(const Numeral& n) { return trig_of(nat_value(n)); }

inline Numeral convert_trig_dec(const TrigNumeral& t) { return numeral_of(trig_value(t)); }

// Successor on base-35 numerals, by direct carry propagation.
inline TrigNumeral trig_successor(const TrigNumeral& t) {
  std::string out = t.chars;
  int i = static_cast<int>(out.size()) - 1;
  for (; i >= 0; --i) {
    int v = Alphabet35::value_of(out[static_cast<std::size_t>(i)]);
    if (v < 34) {
      out[static_cast<std::size_t>(i)] = Alphabet35::chars[static_cast<std::size_t>(v + 1)];
      return TrigNumeral{std::move(out)};
    }
    out[static_cast<std::size_t>(i)] = Alphabet35::chars[0];
  }
  out.insert(out.begin(), Alphabet35::chars[1]);
  return TrigNumeral{std::move(out)};
}

}  // namespace arbacus

#endif  // ARBACUS_NUMERALS_HPP
