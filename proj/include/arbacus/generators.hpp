#ifndef ARBACUS_GENERATORS_HPP
#define ARBACUS_GENERATORS_HPP

// Generator families: hyperexponentiation (binary: base and power) and
// hyperincrementation (unary, the fastest growth for a given size). Both are
// built by the concatenation rule that wraps the previous degree, with field
// numbers rendered in octal. The majorant check realizes the eventual
// dominance of hyperincrementation over unary primitive programs, with
// per-point budget honesty.

#include "arbacus/arbator.hpp"
#include "arbacus/machine.hpp"
#include "arbacus/program.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace arbacus {

namespace detail {

inline std::string octal(std::uint64_t v) { return Machine::octal(v); }

// Degree-d hyperexponentiation body with the given copy limit ("02" at the
// top, "0" when nested one level deeper: the "leave away 2" rule).
inline std::string hxpg_string(std::uint64_t degree, const std::string& limit) {
  if (degree == 0) {
    // degree 0 is the multiplication variant {2,02}{0}{3{1,0,01}2}
    return "82" + std::string("89") + limit + "9" + "809" + "83818908901929";
  }
  std::string counter = octal(2 * degree + 2);
  std::string loop = octal(2 * degree + 3);
  return "8" + counter + "89" + limit + "9" + "809" + "0" + "8" + loop +
         hxpg_string(degree - 1, "0") + counter + "9";
}

}  // namespace detail

inline Numeral gen_hxpg(std::uint64_t degree) {
  return parse_numeral(detail::hxpg_string(degree, "02"));
}

namespace detail {

// Nested doubling block of the hyperincrementation body, levels j..d.
inline std::string hicg_block(std::uint64_t j, std::uint64_t d) {
  std::string a = octal(2 * j);
  std::string b = octal(2 * j + 1);
  if (j == d) return "8" + a + "8909" + "8" + b + "89089" + a + "9";
  return "8" + a + "8909" + "8" + b + hicg_block(j + 1, d) + a + "9";
}

}  // namespace detail

inline Numeral gen_hicg(std::uint64_t degree) {
  if (degree == 0) return parse_numeral("80890198189089019");  // {0,01}{1,0,01}
  return parse_numeral("8089019" + std::string("81") +
                       detail::hicg_block(1, degree) + "019");
}

// ----- Theorem C: majorant check -----

struct MajorantPoint {
  enum class Status {
    compared,          // both sides completed
    compared_partial,  // majorant hit the budget; its partial output decides
    unscanned,         // no sound comparison available at this budget
  };

  Nat x;
  Status status = Status::unscanned;
  std::optional<Nat> program_value;
  std::optional<Nat> majorant_value;  // complete, or partial output at death
  bool dominated = false;             // majorant >= program value
};

struct MajorantReport {
  Numeral program;
  Numeral majorant;
  std::uint64_t degree = 0;
  std::vector<MajorantPoint> points;
  // least x0 such that every scanned x >= x0 is dominated
  std::optional<Nat> dominance_threshold;
  bool dominated_on_scanned = false;
};

namespace detail {

// Partial outputs decide dominance only if the majorant's output field can
// never shrink once its leading copy is done: field 0 must not be the
// counter of any accolade except the first top-level item.
inline bool output_monotone_after_copy(const ProgramTree& tree) {
  auto f0 = tree.find_field("0");
  if (!f0) return true;
  std::function<bool(const std::vector<ProgramItem>&, bool)> walk =
      [&](const std::vector<ProgramItem>& items, bool top) -> bool {
    for (std::size_t i = 0; i < items.size(); ++i) {
      const ProgramItem& it = items[i];
      if (it.kind != ProgramItem::Kind::accolade) continue;
      if (it.counter == *f0 && !(top && i == 0)) return false;
      if (!walk(it.body, false)) return false;
    }
    return true;
  };
  return walk(tree.items, true);
}

}  // namespace detail

inline MajorantReport majorant_check(const Numeral& program, const Nat& x_lo,
                                     const Nat& x_hi, Budget budget) {
  ProgramParse parsed = parse_program(program);
  ProgramTree* tree = std::get_if<ProgramTree>(&parsed);
  if (tree == nullptr || !classify_tree(*tree).is_primitive())
    throw NotPrimitive("majorant check needs a primitive-arbor-number");

  MajorantReport report;
  report.program = program;
  report.degree = program_metrics(*tree).depth + 1;
  report.majorant = gen_hicg(report.degree);

  ProgramParse mp = parse_program(report.majorant);
  ProgramTree& mtree = std::get<ProgramTree>(mp);
  bool monotone = detail::output_monotone_after_copy(mtree);

  for (Nat x = x_lo; x <= x_hi; ++x) {
    MajorantPoint pt;
    pt.x = x;
    RunOutcome pr = run(*tree, {x}, budget);
    if (pr.ok()) {
      pt.program_value = pr.value;
      RunOutcome mr = run(mtree, {x}, budget);
      if (mr.ok()) {
        pt.majorant_value = mr.value;
        pt.status = MajorantPoint::Status::compared;
        pt.dominated = *pt.majorant_value >= *pt.program_value;
      } else if (monotone && Nat(mr.steps) > x + 1) {
        // the leading copy needs x+1 steps; past that the output only grows
        pt.majorant_value = mr.value;  // partial output at exhaustion
        pt.status = MajorantPoint::Status::compared_partial;
        pt.dominated = *pt.majorant_value >= *pt.program_value;
      }
    }
    report.points.push_back(std::move(pt));
  }

  bool any = false;
  bool all = true;
  std::optional<Nat> threshold;
  for (const MajorantPoint& pt : report.points) {
    if (pt.status == MajorantPoint::Status::unscanned) continue;
    any = true;
    if (pt.dominated) {
      if (!threshold) threshold = pt.x;
    } else {
      threshold = std::nullopt;
      all = false;
    }
  }
  report.dominance_threshold = threshold;
  report.dominated_on_scanned = any && all;
  return report;
}

}  // namespace arbacus

#endif  // ARBACUS_GENERATORS_HPP
