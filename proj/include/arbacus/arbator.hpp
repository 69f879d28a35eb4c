#ifndef ARBACUS_ARBATOR_HPP
#define ARBACUS_ARBATOR_HPP

// The total two-layer calculator: layer 1 classifies the program number,
// layer 2 runs the machine. Numbers that are not primitive-arbor-numbers
// calculate to zero (Nully). Budgets are an honesty valve, reported
// distinctly; for primitive programs they signal an undersized budget,
// never true divergence.

#include "arbacus/machine.hpp"
#include "arbacus/program.hpp"

#include <set>
#include <string>
#include <vector>

namespace arbacus {

struct CalcResult {
  enum class Kind { value, steps_exceeded, value_size_exceeded };

  Kind kind = Kind::value;
  Nat value = 0;

  bool ok() const { return kind == Kind::value; }

  static CalcResult of(const RunOutcome& out) {
    CalcResult r;
    switch (out.kind) {
      case RunOutcome::Kind::value:
        r.kind = Kind::value;
        r.value = out.value;
        break;
      case RunOutcome::Kind::steps_exceeded:
        r.kind = Kind::steps_exceeded;
        break;
      case RunOutcome::Kind::value_size_exceeded:
        r.kind = Kind::value_size_exceeded;
        break;
    }
    return r;
  }
};

inline CalcResult arbate(const Numeral& program, const std::vector<Nat>& inputs,
                         Budget budget = {}) {
  ProgramParse parsed = parse_program(program);
  ProgramTree* tree = std::get_if<ProgramTree>(&parsed);
  if (tree == nullptr) return CalcResult{};  // herbum: Nully
  if (!classify_tree(*tree).is_primitive()) return CalcResult{};  // Nully
  return CalcResult::of(run(*tree, inputs, budget));
}

// Shared-budget variant for multi-level evaluation: consumed steps are
// drawn down from steps_left across calls.
inline CalcResult arbate_metered(const Numeral& program,
                                 const std::vector<Nat>& inputs,
                                 std::uint64_t& steps_left,
                                 std::uint64_t max_value_bits) {
  ProgramParse parsed = parse_program(program);
  ProgramTree* tree = std::get_if<ProgramTree>(&parsed);
  if (tree == nullptr) return CalcResult{};
  if (!classify_tree(*tree).is_primitive()) return CalcResult{};
  RunOutcome out = run(*tree, inputs, Budget{steps_left, max_value_bits});
  steps_left -= out.steps;
  return CalcResult::of(out);
}

struct RawOutcome {
  enum class Kind {
    value,
    steps_exceeded,
    value_size_exceeded,
    diverges_by_definition,  // herbum: assigned non-halting by fiat
  };

  Kind kind = Kind::value;
  Nat value = 0;
  std::uint64_t steps = 0;

  bool ok() const { return kind == Kind::value; }
};

// The bare ARBACUS computer, without the primitivity gate.
inline RawOutcome compute_raw(const Numeral& program,
                              const std::vector<Nat>& inputs,
                              Budget budget = {}) {
  ProgramParse parsed = parse_program(program);
  ProgramTree* tree = std::get_if<ProgramTree>(&parsed);
  if (tree == nullptr)
    return RawOutcome{RawOutcome::Kind::diverges_by_definition, 0, 0};
  RunOutcome out = run(*tree, inputs, budget);
  RawOutcome r;
  r.value = out.value;
  r.steps = out.steps;
  switch (out.kind) {
    case RunOutcome::Kind::value: r.kind = RawOutcome::Kind::value; break;
    case RunOutcome::Kind::steps_exceeded:
      r.kind = RawOutcome::Kind::steps_exceeded;
      break;
    case RunOutcome::Kind::value_size_exceeded:
      r.kind = RawOutcome::Kind::value_size_exceeded;
      break;
  }
  return r;
}

class NotPrimitive : public std::runtime_error {
public:
  explicit NotPrimitive(const std::string& what) : std::runtime_error(what) {}
};

class ScratchCollision : public std::runtime_error {
public:
  explicit ScratchCollision(const std::string& what)
      : std::runtime_error(what) {}
};

namespace detail {

// Scratch fields the program writes: succeed targets plus accolade counters,
// in first-occurrence order.
inline void written_scratch_fields(const ProgramTree& tree,
                                   const std::vector<ProgramItem>& items,
                                   std::vector<std::string>& out) {
  auto add = [&](FieldRef f) {
    const std::string& name = tree.field_name(f);
    if (name[0] == '0') return;  // output or input field
    for (const std::string& s : out)
      if (s == name) return;
    out.push_back(name);
  };
  for (const ProgramItem& item : items) {
    if (item.kind == ProgramItem::Kind::field) {
      add(item.field);
    } else if (item.kind == ProgramItem::Kind::accolade) {
      add(item.counter);
      written_scratch_fields(tree, item.body, out);
    }
  }
}

inline bool references_field(const ProgramTree& tree,
                             const std::string& name) {
  return tree.find_field(name).has_value();
}

}  // namespace detail

// Unary composition: a primitive-arbor-number t with
// arbate(t,[x]) = arbate(outer,[arbate(inner,[x])]). Inner runs first; its
// scratch fields are deleted, the intermediate output is copied into the
// input field, the output field is cleared, then outer runs.
inline Numeral compose_unary(const Numeral& outer, const Numeral& inner) {
  ProgramParse po = parse_program(outer);
  ProgramParse pi = parse_program(inner);
  ProgramTree* to = std::get_if<ProgramTree>(&po);
  ProgramTree* ti = std::get_if<ProgramTree>(&pi);
  if (to == nullptr || !classify_tree(*to).is_primitive())
    throw NotPrimitive("outer program is not a primitive-arbor-number");
  if (ti == nullptr || !classify_tree(*ti).is_primitive())
    throw NotPrimitive("inner program is not a primitive-arbor-number");

  std::vector<std::string> scratch;
  detail::written_scratch_fields(*ti, ti->items, scratch);

  std::string digits = inner.digits;
  for (const std::string& f : scratch) digits += "8" + f + "9";
  digits += "8018909";  // {01,0}
  digits += "809";      // {0}
  digits += outer.digits;
  return Numeral{std::move(digits)};
}

// The paper's branch macro {3}3 {2 nb {3} {2,1} 1} {2 na 3}: field 1 carries
// the condition; value 0 runs na, value 1 runs nb. Neither branch may touch
// the scratch fields 2 and 3. Joints where two octal digits would merge into
// one field token get an empty command, which is what the displayed spaces
// in the template stand for.
inline Numeral build_if_then_else(const Numeral& na, const Numeral& nb) {
  for (const Numeral* n : {&na, &nb}) {
    ProgramParse p = parse_program(*n);
    ProgramTree* t = std::get_if<ProgramTree>(&p);
    if (t == nullptr)
      throw NotPrimitive("branch program is not an arbor-number");
    if (detail::references_field(*t, "2") ||
        detail::references_field(*t, "3"))
      throw ScratchCollision("branch program references scratch field 2 or 3");
  }
  auto is_octal = [](char c) { return c >= '0' && c <= '7'; };
  auto splice = [&](std::string& out, const std::string& piece) {
    if (!out.empty() && is_octal(out.back()) && is_octal(piece.front()))
      out += "89";
    out += piece;
  };
  std::string d;
  d += "8393";  // {3}3
  d += "82";    // {2
  splice(d, nb.digits);
  splice(d, "839");     // {3}
  splice(d, "828919");  // {2,1}
  splice(d, "19");      // 1}
  d += "82";            // {2
  splice(d, na.digits);
  splice(d, "39");  // 3}
  return Numeral{d};
}

}  // namespace arbacus

#endif  // ARBACUS_ARBATOR_HPP
