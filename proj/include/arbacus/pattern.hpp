#ifndef ARBACUS_PATTERN_HPP
#define ARBACUS_PATTERN_HPP

// Pattern, term and scheme strings: numbers, named constants, variables and
// argument-applied program positions. "(A)(B)C" reads right-nested as
// Apply([A], Apply([B], C)). A pattern without variables is a term; with at
// least one variable it is a scheme. Evaluation is multi-level: the program
// position is evaluated first and the resulting number is run as a program.

#include "arbacus/arbator.hpp"
#include "arbacus/numerals.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arbacus {

struct Pattern {
  enum class Kind { number, constant, variable, apply };

  Kind kind = Kind::number;
  Numeral number;              // number leaf, or a constant's resolved numeral
  std::string constant_name;   // constant leaf
  int var_index = 0;           // variable leaf, 1-based
  std::vector<Pattern> args;   // apply
  std::vector<Pattern> prog;   // apply; exactly one element

  static Pattern num(Numeral n) {
    Pattern p;
    p.kind = Kind::number;
    p.number = std::move(n);
    return p;
  }
  static Pattern constant(std::string name, Numeral resolved) {
    Pattern p;
    p.kind = Kind::constant;
    p.constant_name = std::move(name);
    p.number = std::move(resolved);
    return p;
  }
  static Pattern var(int index) {
    Pattern p;
    p.kind = Kind::variable;
    p.var_index = index;
    return p;
  }
  static Pattern apply(std::vector<Pattern> args, Pattern program) {
    Pattern p;
    p.kind = Kind::apply;
    p.args = std::move(args);
    p.prog.push_back(std::move(program));
    return p;
  }

  bool is_leaf() const { return kind != Kind::apply; }
  const Pattern& program() const { return prog.front(); }

  bool operator==(const Pattern&) const = default;
};

using ConstantLookup =
    std::function<std::optional<Numeral>(std::string_view)>;

// Two text surfaces share the grammar: the decimal surface (spaces ignored,
// comma sugar, $name constants, variables N1..N99) and the reduced surface
// of 15 characters (no spaces, no commas, no constants, variables written
// with the index digit b).
enum class PatternSurface { decimal, reduced };

namespace detail {

class PatternParser {
public:
  PatternParser(std::string_view text, PatternSurface surface,
                const ConstantLookup& constants)
      : text_(text), surface_(surface), constants_(constants) {}

  Pattern parse() {
    Pattern p = parse_pattern();
    skip_spaces();
    if (pos_ != text_.size())
      throw ParseError(ParseError::Kind::syntax,
                       "trailing characters after pattern");
    return p;
  }

private:
  void skip_spaces() {
    if (surface_ != PatternSurface::decimal) return;
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }

  char peek() {
    skip_spaces();
    if (pos_ >= text_.size())
      throw ParseError(ParseError::Kind::syntax, "unexpected end of pattern");
    return text_[pos_];
  }

  bool at_end() {
    skip_spaces();
    return pos_ >= text_.size();
  }

  void expect(char c) {
    if (peek() != c)
      throw ParseError(ParseError::Kind::syntax,
                       std::string("expected '") + c + "'");
    ++pos_;
  }

  Pattern parse_pattern() {
    if (!at_end() && peek() == '(') {
      ++pos_;
      std::vector<Pattern> args;
      if (peek() != ')') {
        args.push_back(parse_pattern());
        while (peek() == ';') {
          ++pos_;
          args.push_back(parse_pattern());
        }
      }
      expect(')');
      return Pattern::apply(std::move(args), parse_pattern());
    }
    return parse_dingus();
  }

  bool numeral_char(char c) const {
    if (c == '{' || c == '}') return true;
    if (surface_ == PatternSurface::decimal)
      return (c >= '0' && c <= '9') || c == ',';
    return c >= '0' && c <= '7';
  }

  Pattern parse_dingus() {
    char c = peek();
    if (c == 'N') {
      ++pos_;
      return parse_variable();
    }
    if (c == '$' && surface_ == PatternSurface::decimal) {
      ++pos_;
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_' || text_[pos_] == '-'))
        name.push_back(text_[pos_++]);
      if (name.empty())
        throw ParseError(ParseError::Kind::syntax, "empty constant name");
      if (!constants_)
        throw ParseError(ParseError::Kind::unknown_constant,
                         "no constants available: $" + name);
      std::optional<Numeral> resolved = constants_(name);
      if (!resolved)
        throw ParseError(ParseError::Kind::unknown_constant,
                         "unknown constant $" + name);
      return Pattern::constant(name, *resolved);
    }
    if (numeral_char(c)) {
      std::string run;
      while (pos_ < text_.size() && numeral_char(text_[pos_]))
        run.push_back(text_[pos_++]);
      return Pattern::num(parse_numeral(run));
    }
    throw ParseError(ParseError::Kind::syntax,
                     std::string("unexpected character '") + c + "'");
  }

  Pattern parse_variable() {
    if (surface_ == PatternSurface::reduced) {
      // index digits are b's: Nb is variable 1, Nbb is variable 11
      std::size_t count = 0;
      while (pos_ < text_.size() && text_[pos_] == 'b') {
        ++count;
        ++pos_;
      }
      if (count == 0 || count > 2)
        throw ParseError(ParseError::Kind::syntax, "bad variable index");
      return Pattern::var(count == 1 ? 1 : 11);
    }
    std::string digits;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
      digits.push_back(text_[pos_++]);
    if (digits.empty() || digits.size() > 2 || digits[0] == '0')
      throw ParseError(ParseError::Kind::syntax,
                       "variable index must be 1..99");
    return Pattern::var(std::stoi(digits));
  }

  std::string_view text_;
  PatternSurface surface_;
  const ConstantLookup& constants_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Pattern parse_pattern(std::string_view text,
                             const ConstantLookup& constants = {},
                             PatternSurface surface = PatternSurface::decimal) {
  detail::PatternParser parser(text, surface, constants);
  return parser.parse();
}

inline std::string render_pattern(const Pattern& p,
                                  PatternSurface surface = PatternSurface::decimal) {
  switch (p.kind) {
    case Pattern::Kind::number:
      return render_numeral(p.number, surface == PatternSurface::reduced
                                          ? RenderMode::braces
                                          : RenderMode::braces_comma);
    case Pattern::Kind::constant:
      return "$" + p.constant_name;
    case Pattern::Kind::variable: {
      if (surface == PatternSurface::reduced)
        return p.var_index == 11 ? "Nbb" : "Nb";
      return "N" + std::to_string(p.var_index);
    }
    case Pattern::Kind::apply: {
      std::string out = "(";
      for (std::size_t i = 0; i < p.args.size(); ++i) {
        if (i > 0) out.push_back(';');
        out += render_pattern(p.args[i], surface);
      }
      out.push_back(')');
      out += render_pattern(p.program(), surface);
      return out;
    }
  }
  return "";
}

struct PatternClass {
  bool is_term = false;
  int free_arity = 0;
  int parametric_arity = 0;
  bool primitive = false;   // one application, leaf args, number/constant program
  bool processive = false;  // an application occurs in a program position
  bool paradox = false;     // a variable occurs in a program position
  bool orthodox = true;
  bool conventional = false;
  bool exotic = false;
  bool ex_nihilo = false;  // no number and no constant leaves
};

namespace detail {

struct ClassWalk {
  int max_var = 0;
  bool paradox = false;
  bool processive = false;
  int leaves = 0;
  std::vector<std::string> distinct;

  void visit(const Pattern& p, bool in_program_position) {
    switch (p.kind) {
      case Pattern::Kind::variable:
        if (p.var_index > max_var) max_var = p.var_index;
        if (in_program_position) paradox = true;
        break;
      case Pattern::Kind::number:
        add("N:" + p.number.digits);
        ++leaves;
        break;
      case Pattern::Kind::constant:
        add("C:" + p.constant_name);
        ++leaves;
        break;
      case Pattern::Kind::apply:
        if (in_program_position) processive = true;
        for (const Pattern& a : p.args) visit(a, false);
        visit(p.program(), true);
        break;
    }
  }

  void add(const std::string& key) {
    for (const std::string& s : distinct)
      if (s == key) return;
    distinct.push_back(key);
  }
};

}  // namespace detail

inline PatternClass classify_pattern(const Pattern& p) {
  detail::ClassWalk walk;
  walk.visit(p, false);

  PatternClass c;
  c.free_arity = walk.max_var;
  c.is_term = walk.max_var == 0;
  c.parametric_arity = static_cast<int>(walk.distinct.size());
  c.paradox = walk.paradox;
  c.processive = walk.processive;
  c.orthodox = !walk.paradox;
  if (p.kind == Pattern::Kind::apply) {
    bool leaf_args = true;
    for (const Pattern& a : p.args)
      if (!a.is_leaf()) leaf_args = false;
    const Pattern& prog = p.program();
    c.primitive = leaf_args && (prog.kind == Pattern::Kind::number ||
                                prog.kind == Pattern::Kind::constant);
  }
  c.conventional = c.primitive && c.orthodox;
  c.exotic = !c.conventional;
  c.ex_nihilo = walk.leaves == 0;
  return c;
}

inline std::pair<int, int> arity_of(const Pattern& p) {
  PatternClass c = classify_pattern(p);
  return {c.free_arity, c.parametric_arity};
}

// variable index -> value; must cover every free variable when evaluating
using Binding = std::map<int, Nat>;

inline Pattern substitute(const Pattern& p, const Binding& b) {
  switch (p.kind) {
    case Pattern::Kind::variable: {
      auto it = b.find(p.var_index);
      if (it == b.end())
        throw std::invalid_argument("unbound variable N" +
                                    std::to_string(p.var_index));
      return Pattern::num(numeral_of(it->second));
    }
    case Pattern::Kind::number:
    case Pattern::Kind::constant:
      return p;
    case Pattern::Kind::apply: {
      std::vector<Pattern> args;
      args.reserve(p.args.size());
      for (const Pattern& a : p.args) args.push_back(substitute(a, b));
      return Pattern::apply(std::move(args), substitute(p.program(), b));
    }
  }
  return p;
}

struct EvalMeter {
  std::uint64_t steps_left;
  std::uint64_t max_value_bits;

  explicit EvalMeter(Budget b)
      : steps_left(b.max_steps), max_value_bits(b.max_value_bits) {}
};

// Program position first, then arguments left to right; the budget is shared
// across the whole multi-level evaluation.
inline CalcResult evaluate(const Pattern& p, const Binding& b, EvalMeter& meter) {
  switch (p.kind) {
    case Pattern::Kind::number:
    case Pattern::Kind::constant:
      return CalcResult{CalcResult::Kind::value, nat_value(p.number)};
    case Pattern::Kind::variable: {
      auto it = b.find(p.var_index);
      if (it == b.end())
        throw std::invalid_argument("unbound variable N" +
                                    std::to_string(p.var_index));
      return CalcResult{CalcResult::Kind::value, it->second};
    }
    case Pattern::Kind::apply: {
      CalcResult prog = evaluate(p.program(), b, meter);
      if (!prog.ok()) return prog;
      std::vector<Nat> inputs;
      inputs.reserve(p.args.size());
      for (const Pattern& a : p.args) {
        CalcResult v = evaluate(a, b, meter);
        if (!v.ok()) return v;
        inputs.push_back(v.value);
      }
      return arbate_metered(numeral_of(prog.value), inputs, meter.steps_left,
                            meter.max_value_bits);
    }
  }
  return CalcResult{};
}

inline CalcResult evaluate(const Pattern& p, const Binding& b, Budget budget = {}) {
  EvalMeter meter(budget);
  return evaluate(p, b, meter);
}

}  // namespace arbacus

#endif  // ARBACUS_PATTERN_HPP
