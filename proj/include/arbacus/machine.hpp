#ifndef ARBACUS_MACHINE_HPP
#define ARBACUS_MACHINE_HPP

// Small-step interpreter for program trees over an unbounded field memory.
// One observable action per step() call. Only SUCCEED, RESET and INCREMENT
// mutate memory and advance the step counter; loop exits and empty commands
// are free. Entering an accolade resets its counter; at the lade the limit is
// re-read and the counter either increments (body runs again) or the loop
// exits. Backward movement occurs only at a lade.

#include "arbacus/program.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace arbacus {

struct Budget {
  std::uint64_t max_steps = 10'000'000;
  std::uint64_t max_value_bits = 1u << 20;
};

struct Action {
  enum class Kind { init, succeed, reset, increment, exit_acc, nop };

  Kind kind = Kind::nop;
  FieldRef field = 0;  // acted-on field (counter for exit_acc)
  FieldRef limit = 0;  // meaningful for exit_acc only

  bool counted() const {
    return kind == Kind::succeed || kind == Kind::reset ||
           kind == Kind::increment;
  }

  static const char* label(Kind k) {
    switch (k) {
      case Kind::init: return "INIT";
      case Kind::succeed: return "SUC";
      case Kind::reset: return "RST";
      case Kind::increment: return "INC";
      case Kind::exit_acc: return "EXIT";
      case Kind::nop: return "NOP";
    }
    return "?";
  }
};

struct RunOutcome {
  enum class Kind { value, steps_exceeded, value_size_exceeded };

  Kind kind = Kind::value;
  Nat value = 0;             // memory[0] on halt
  std::uint64_t steps = 0;   // counted steps executed
  std::vector<Nat> snapshot;           // memory at budget exhaustion
  std::vector<std::string> snapshot_fields;  // names parallel to snapshot

  bool ok() const { return kind == Kind::value; }
};

class Machine {
public:
  // All fields are initialised to zero, then the i-th input (1-based) is
  // loaded into input field "0"+octal(i). Surplus inputs are loaded unused;
  // missing inputs read as zero.
  Machine(const ProgramTree& tree, const std::vector<Nat>& inputs, Budget budget)
      : tree_(&tree), budget_(budget) {
    memory_.assign(tree.fields.size(), Nat(0));
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      std::string name = "0" + octal(i + 1);
      if (auto f = tree.find_field(name)) memory_[*f] = inputs[i];
    }
    output_ = tree.find_field("0");
    frames_.push_back(Frame{&tree.items, 0, 0, 0, Phase::run, false});
  }

  static std::string octal(std::size_t v) {
    std::string s;
    do {
      s.push_back(static_cast<char>('0' + v % 8));
      v /= 8;
    } while (v > 0);
    std::reverse(s.begin(), s.end());
    return s;
  }

  bool halted() const { return frames_.empty(); }
  std::uint64_t steps() const { return steps_; }
  const std::vector<Nat>& memory() const { return memory_; }
  const ProgramTree& tree() const { return *tree_; }

  Nat field_value(std::string_view name) const {
    if (auto f = tree_->find_field(name)) return memory_[*f];
    return 0;
  }

  Nat output() const { return output_ ? memory_[*output_] : Nat(0); }

  enum class StepStatus { acted, halted, steps_exceeded, value_size_exceeded };

  // Performs exactly one action. The acted field and action kind land in
  // last_action(); budget violations leave the state untouched.
  StepStatus step() {
    while (!frames_.empty()) {
      Frame& fr = frames_.back();
      if (fr.phase == Phase::check) {
        // at the lade: re-read the limit
        if (memory_[fr.counter] < memory_[fr.limit]) {
          StepStatus st = bump(fr.counter, Action::Kind::increment);
          if (st != StepStatus::acted) return st;
          fr.phase = Phase::run;
          fr.pos = 0;
          return StepStatus::acted;
        }
        last_ = Action{Action::Kind::exit_acc, fr.counter, fr.limit};
        frames_.pop_back();
        return StepStatus::acted;
      }
      if (fr.pos >= fr.items->size()) {
        if (fr.is_accolade) {
          fr.phase = Phase::check;
          continue;  // the check produces the next observable action
        }
        frames_.pop_back();  // top-level sequence exhausted
        continue;
      }
      const ProgramItem& item = (*fr.items)[fr.pos];
      switch (item.kind) {
        case ProgramItem::Kind::field: {
          StepStatus st = bump(item.field, Action::Kind::succeed);
          if (st == StepStatus::acted) ++fr.pos;
          return st;
        }
        case ProgramItem::Kind::empty:
          ++fr.pos;
          last_ = Action{Action::Kind::nop, 0};
          return StepStatus::acted;
        case ProgramItem::Kind::accolade: {
          StepStatus st = pre_step();
          if (st != StepStatus::acted) return st;
          ++steps_;
          memory_[item.counter] = 0;
          last_ = Action{Action::Kind::reset, item.counter};
          ++fr.pos;
          frames_.push_back(Frame{&item.body, 0, item.counter, item.limit,
                                  Phase::check, true});
          return StepStatus::acted;
        }
      }
    }
    return StepStatus::halted;
  }

  const Action& last_action() const { return last_; }

  RunOutcome finish(StepStatus st) const {
    RunOutcome out;
    out.steps = steps_;
    if (st == StepStatus::halted) {
      out.kind = RunOutcome::Kind::value;
      out.value = output();
      return out;
    }
    out.kind = st == StepStatus::steps_exceeded
                   ? RunOutcome::Kind::steps_exceeded
                   : RunOutcome::Kind::value_size_exceeded;
    out.snapshot = memory_;
    out.snapshot_fields = tree_->fields;
    out.value = output();  // partial output at exhaustion
    return out;
  }

private:
  enum class Phase { run, check };

  struct Frame {
    const std::vector<ProgramItem>* items;
    std::size_t pos;
    FieldRef counter;
    FieldRef limit;
    Phase phase;
    bool is_accolade;
  };

  StepStatus pre_step() {
    if (steps_ + 1 > budget_.max_steps) return StepStatus::steps_exceeded;
    return StepStatus::acted;
  }

  StepStatus bump(FieldRef f, Action::Kind kind) {
    StepStatus st = pre_step();
    if (st != StepStatus::acted) return st;
    ++memory_[f];
    if (bit_length(memory_[f]) > budget_.max_value_bits) {
      --memory_[f];
      return StepStatus::value_size_exceeded;
    }
    ++steps_;
    last_ = Action{kind, f};
    return StepStatus::acted;
  }

  const ProgramTree* tree_;
  Budget budget_;
  std::vector<Nat> memory_;
  std::vector<Frame> frames_;
  std::optional<FieldRef> output_;
  std::uint64_t steps_ = 0;
  Action last_;
};

inline RunOutcome run(const ProgramTree& tree, const std::vector<Nat>& inputs,
                      Budget budget = {}) {
  Machine m(tree, inputs, budget);
  for (;;) {
    Machine::StepStatus st = m.step();
    if (st != Machine::StepStatus::acted) return m.finish(st);
  }
}

struct TraceRow {
  std::uint64_t step = 0;
  Action::Kind action = Action::Kind::init;
  std::string field;          // "-" for INIT
  std::string value_after;    // "-" for INIT
  std::vector<Nat> watched;   // values of the watched fields, in order
};

struct TraceResult {
  std::vector<TraceRow> rows;
  RunOutcome outcome;
};

// One row per counted step plus the step-0 INIT row.
inline TraceResult run_traced(const ProgramTree& tree,
                              const std::vector<Nat>& inputs, Budget budget,
                              const std::vector<std::string>& watched) {
  Machine m(tree, inputs, budget);
  TraceResult result;

  auto watch_values = [&] {
    std::vector<Nat> vs;
    vs.reserve(watched.size());
    for (const std::string& name : watched) vs.push_back(m.field_value(name));
    return vs;
  };

  TraceRow init;
  init.step = 0;
  init.action = Action::Kind::init;
  init.field = "-";
  init.value_after = "-";
  init.watched = watch_values();
  result.rows.push_back(std::move(init));

  for (;;) {
    Machine::StepStatus st = m.step();
    if (st != Machine::StepStatus::acted) {
      result.outcome = m.finish(st);
      return result;
    }
    const Action& a = m.last_action();
    if (!a.counted()) continue;
    TraceRow row;
    row.step = m.steps();
    row.action = a.kind;
    row.field = tree.field_name(a.field);
    row.value_after = m.memory()[a.field].str();
    row.watched = watch_values();
    result.rows.push_back(std::move(row));
  }
}

inline void write_trace(std::ostream& os, const TraceResult& trace,
                        const std::vector<std::string>& watched) {
  os << "step\taction\tfield\tvalue";
  for (const std::string& w : watched) os << '\t' << w;
  os << '\n';
  for (const TraceRow& row : trace.rows) {
    os << row.step << '\t' << Action::label(row.action) << '\t' << row.field
       << '\t' << row.value_after;
    for (const Nat& v : row.watched) os << '\t' << v;
    os << '\n';
  }
}

}  // namespace arbacus

#endif  // ARBACUS_MACHINE_HPP
