#ifndef ARBACUS_CORPUS_HPP
#define ARBACUS_CORPUS_HPP

// The program corpus and its verification harness. Every entry names a host
// oracle; verification classifies the program and compares calculator output
// against the oracle on an exhaustive grid. Characteristic oracles use truth
// value 0 and falsity value 1. Oracles refuse to produce values beyond a bit
// cap, and grid points whose expected value outruns the step budget are
// skipped rather than run (a value v needs at least v counted steps).

#include "arbacus/arbator.hpp"
#include "arbacus/numerals.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace arbacus {

// ----- pairing (antidiagonal method) -----

inline Nat pair_encode(const Nat& j, const Nat& k) {
  Nat s = j + k;
  return (s * s + 3 * j + k) / 2;
}

inline Nat isqrt(const Nat& v) { return boost::multiprecision::sqrt(v); }

inline std::pair<Nat, Nat> pair_decode(const Nat& n) {
  Nat d = (1 + isqrt(1 + 8 * n)) / 2;
  Nat row = n - d * (d - 1) / 2;
  Nat col = d * (d + 1) / 2 - 1 - n;
  return {row, col};
}

// ----- host oracles -----

// nullopt: the value would exceed the bit cap.
using OracleFn =
    std::function<std::optional<Nat>(const std::vector<Nat>&, std::uint64_t)>;

namespace detail {

inline Nat arg(const std::vector<Nat>& xs, std::size_t i) {
  return i < xs.size() ? xs[i] : Nat(0);
}

inline std::optional<Nat> guarded_pow(const Nat& base, const Nat& exp,
                                      std::uint64_t cap_bits) {
  // 0^0 = 1 by the corpus exponentiation program
  if (exp == 0) return Nat(1);
  if (base == 0) return Nat(0);
  if (base == 1) return Nat(1);
  Nat estimate = exp * static_cast<long>(bit_length(base));
  if (estimate > cap_bits) return std::nullopt;
  Nat r = 1;
  Nat b = base;
  Nat e = exp;
  while (e > 0) {
    if ((e & 1) != 0) r *= b;
    e >>= 1;
    if (e > 0) b *= b;
    if (bit_length(r) > cap_bits) return std::nullopt;
  }
  if (bit_length(r) > cap_bits) return std::nullopt;
  return r;
}

inline bool is_prime(const Nat& v) {
  if (v < 2) return false;
  for (Nat d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

}  // namespace detail

inline const std::map<std::string, OracleFn>& oracle_table() {
  using detail::arg;
  static const std::map<std::string, OracleFn> table = [] {
    std::map<std::string, OracleFn> t;
    auto truth = [](bool b) { return Nat(b ? 0 : 1); };  // truth value 0

    t["const0"] = [](const std::vector<Nat>&, std::uint64_t) { return Nat(0); };
    t["const1"] = [](const std::vector<Nat>&, std::uint64_t) { return Nat(1); };
    t["const2"] = [](const std::vector<Nat>&, std::uint64_t) { return Nat(2); };
    t["const10"] = [](const std::vector<Nat>&, std::uint64_t) { return Nat(10); };
    t["id"] = [](const std::vector<Nat>& xs, std::uint64_t) { return arg(xs, 0); };
    t["dpj"] = [](const std::vector<Nat>& xs, std::uint64_t) { return arg(xs, 1); };
    t["tpj"] = [](const std::vector<Nat>& xs, std::uint64_t) { return arg(xs, 2); };
    t["succ"] = [](const std::vector<Nat>& xs, std::uint64_t) {
      return arg(xs, 0) + 1;
    };
    t["sig"] = [](const std::vector<Nat>& xs, std::uint64_t) {
      return Nat(arg(xs, 0) == 0 ? 0 : 1);
    };
    t["neg"] = [truth](const std::vector<Nat>& xs, std::uint64_t) {
      return truth(arg(xs, 0) != 0);  // negation of truth 0 is falsity 1
    };
    t["and"] = [truth](const std::vector<Nat>& xs, std::uint64_t) {
      return truth(arg(xs, 0) == 0 && arg(xs, 1) == 0);
    };
    t["lor"] = [truth](const std::vector<Nat>& xs, std::uint64_t) {
      return truth(arg(xs, 0) == 0 || arg(xs, 1) == 0);
    };
    t["add"] = [](const std::vector<Nat>& xs, std::uint64_t) {
      return arg(xs, 0) + arg(xs, 1);
    };
    t["mul"] = [](const std::vector<Nat>& xs, std::uint64_t) {
      return arg(xs, 0) * arg(xs, 1);
    };
    t["xp"] = [](const std::vector<Nat>& xs, std::uint64_t cap) {
      return detail::guarded_pow(arg(xs, 0), arg(xs, 1), cap);
    };
    t["suxp"] = [](const std::vector<Nat>& xs, std::uint64_t cap)
        -> std::optional<Nat> {
      Nat x = arg(xs, 0);
      Nat y = arg(xs, 1);
      Nat r = 1;  // tower of height 0
      for (Nat i = 0; i < y; ++i) {
        auto next = detail::guarded_pow(x, r, cap);
        if (!next) return std::nullopt;
        r = *next;
      }
      return r;
    };
    t["fac"] = [](const std::vector<Nat>& xs, std::uint64_t cap)
        -> std::optional<Nat> {
      Nat r = 1;
      for (Nat i = 1; i <= arg(xs, 0); ++i) {
        r *= i;
        if (bit_length(r) > cap) return std::nullopt;
      }
      return r;
    };
    t["prd"] = [](const std::vector<Nat>& xs, std::uint64_t) {
      Nat x = arg(xs, 0);
      return x == 0 ? Nat(0) : Nat(x - 1);
    };
    t["tst"] = [](const std::vector<Nat>& xs, std::uint64_t) {
      Nat x = arg(xs, 0), y = arg(xs, 1);
      return x > y ? Nat(x - y) : Nat(0);
    };
    t["adi"] = [](const std::vector<Nat>& xs, std::uint64_t) {
      Nat x = arg(xs, 0), y = arg(xs, 1);
      return x > y ? Nat(x - y) : Nat(y - x);
    };
    t["evy"] = [truth](const std::vector<Nat>& xs, std::uint64_t) {
      return truth(arg(xs, 0) % 2 == 0);
    };
    t["ody"] = [truth](const std::vector<Nat>& xs, std::uint64_t) {
      return truth(arg(xs, 0) % 2 == 1);
    };
    t["div"] = [](const std::vector<Nat>& xs, std::uint64_t) {
      Nat x = arg(xs, 0), y = arg(xs, 1);
      return y == 0 ? Nat(x + 1) : Nat(x / y);
    };
    t["dir"] = [](const std::vector<Nat>& xs, std::uint64_t) {
      Nat x = arg(xs, 0), y = arg(xs, 1);
      return y == 0 ? x : Nat(x % y);
    };
    t["rt"] = [](const std::vector<Nat>& xs, std::uint64_t cap)
        -> std::optional<Nat> {
      Nat x = arg(xs, 0), y = arg(xs, 1);
      if (y == 0) return Nat(0);
      if (x == 0) return y;
      Nat k = 0;
      while (true) {
        auto p = detail::guarded_pow(k + 1, x, cap);
        if (!p) return k;  // (k+1)^x certainly exceeds y once capped
        if (*p > y) return k;
        ++k;
      }
    };
    t["lg"] = [](const std::vector<Nat>& xs, std::uint64_t)
        -> std::optional<Nat> {
      Nat x = arg(xs, 0), y = arg(xs, 1);
      if (y == 0) return Nat(0);
      if (x == 0 || x == 1) return y;  // counting rule pins log base 0/1 to y
      Nat k = 0;
      Nat p = 1;
      while (true) {
        p *= x;
        if (p > y) return k;
        ++k;
      }
    };
    t["eqy"] = [truth](const std::vector<Nat>& xs, std::uint64_t) {
      return truth(arg(xs, 0) == arg(xs, 1));
    };
    t["iey"] = [truth](const std::vector<Nat>& xs, std::uint64_t) {
      return truth(arg(xs, 0) != arg(xs, 1));
    };
    t["miny"] = [truth](const std::vector<Nat>& xs, std::uint64_t) {
      return truth(arg(xs, 0) < arg(xs, 1));
    };
    t["emiy"] = [truth](const std::vector<Nat>& xs, std::uint64_t) {
      return truth(arg(xs, 0) <= arg(xs, 1));
    };
    t["pry"] = [truth](const std::vector<Nat>& xs, std::uint64_t) {
      return truth(detail::is_prime(arg(xs, 0)));
    };
    t["npr"] = [truth](const std::vector<Nat>& xs, std::uint64_t) {
      return truth(!detail::is_prime(arg(xs, 0)));
    };
    t["decc"] = [](const std::vector<Nat>& xs, std::uint64_t cap)
        -> std::optional<Nat> {
      Numeral a = numeral_of(arg(xs, 0));
      Numeral b = numeral_of(arg(xs, 1));
      Numeral joined{a.digits + b.digits};
      Nat v = nat_value(joined);
      if (bit_length(v) > cap) return std::nullopt;
      return v;
    };
    t["pair"] = [](const std::vector<Nat>& xs, std::uint64_t) {
      return pair_encode(arg(xs, 0), arg(xs, 1));
    };
    t["row"] = [](const std::vector<Nat>& xs, std::uint64_t) {
      return pair_decode(arg(xs, 0)).first;
    };
    t["col"] = [](const std::vector<Nat>& xs, std::uint64_t) {
      return pair_decode(arg(xs, 0)).second;
    };
    t["dup"] = [](const std::vector<Nat>& xs, std::uint64_t) {
      return 2 * arg(xs, 0);
    };
    t["ic"] = [](const std::vector<Nat>& xs, std::uint64_t cap)
        -> std::optional<Nat> {
      Nat x = arg(xs, 0);
      if (x + bit_length(x) > cap) return std::nullopt;
      return x << static_cast<std::uint64_t>(x);
    };
    t["sic"] = [](const std::vector<Nat>& xs, std::uint64_t cap)
        -> std::optional<Nat> {
      Nat x = arg(xs, 0);
      Nat v = x;
      for (Nat i = 0; i < x; ++i) {
        if (v + bit_length(v) > cap) return std::nullopt;
        v = v << static_cast<std::uint64_t>(v);
      }
      return v;
    };
    return t;
  }();
  return table;
}

inline std::optional<Nat> oracle_eval(const std::string& id,
                                      const std::vector<Nat>& xs,
                                      std::uint64_t cap_bits) {
  return oracle_table().at(id)(xs, cap_bits);
}

// ----- corpus file -----

enum class EntryStatus { paper_verified, paper_corrected, paper_rejected, derived };

inline const char* status_name(EntryStatus s) {
  switch (s) {
    case EntryStatus::paper_verified: return "paper-verified";
    case EntryStatus::paper_corrected: return "paper-corrected";
    case EntryStatus::paper_rejected: return "paper-rejected";
    case EntryStatus::derived: return "derived";
  }
  return "?";
}

struct CorpusEntry {
  std::string name;
  int arity = 0;
  EntryStatus status = EntryStatus::derived;
  std::string oracle;  // "-" for raw rejected material
  std::string program_text;
  std::optional<Numeral> program;  // absent only for unparseable rejected rows
  std::string description;

  bool rejected() const { return status == EntryStatus::paper_rejected; }
};

struct Corpus {
  std::vector<CorpusEntry> entries;

  const CorpusEntry* find(std::string_view name) const {
    for (const CorpusEntry& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }

  // $name resolution for the pattern parser
  std::optional<Numeral> constant(std::string_view name) const {
    const CorpusEntry* e = find(name);
    if (e == nullptr || !e->program) return std::nullopt;
    return e->program;
  }
};

inline Corpus load_corpus(std::istream& in) {
  Corpus corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == '\t') {
        cols.push_back(line.substr(start, i - start));
        start = i + 1;
      }
    }
    auto fail = [&](const std::string& why) -> ParseError {
      return ParseError(ParseError::Kind::format,
                        "corpus line " + std::to_string(line_no) + ": " + why);
    };
    if (cols.size() != 6)
      throw fail("expected 6 tab-separated fields, got " +
                 std::to_string(cols.size()));
    CorpusEntry e;
    e.name = cols[0];
    if (e.name.empty()) throw fail("empty name");
    if (corpus.find(e.name) != nullptr) throw fail("duplicate name " + e.name);
    try {
      e.arity = std::stoi(cols[1]);
    } catch (const std::exception&) {
      throw fail("bad arity " + cols[1]);
    }
    if (e.arity < 0 || e.arity > 9) throw fail("arity out of range");
    if (cols[2] == "paper-verified") e.status = EntryStatus::paper_verified;
    else if (cols[2] == "paper-corrected") e.status = EntryStatus::paper_corrected;
    else if (cols[2] == "paper-rejected") e.status = EntryStatus::paper_rejected;
    else if (cols[2] == "derived") e.status = EntryStatus::derived;
    else throw fail("unknown status " + cols[2]);
    e.oracle = cols[3];
    if (e.oracle != "-" && oracle_table().find(e.oracle) == oracle_table().end())
      throw fail("unknown oracle " + e.oracle);
    if (!e.rejected() && e.oracle == "-")
      throw fail("non-rejected entry needs an oracle");
    e.program_text = cols[4];
    try {
      e.program = parse_numeral(e.program_text);
    } catch (const ParseError&) {
      if (!e.rejected()) throw fail("program is not a number string");
      e.program = std::nullopt;
    }
    e.description = cols[5];
    corpus.entries.push_back(std::move(e));
  }
  return corpus;
}

inline Corpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError(ParseError::Kind::format,
                     "cannot open corpus file " + path);
  return load_corpus(in);
}

// ----- verification harness -----

struct EntryReport {
  std::string name;
  EntryStatus status = EntryStatus::derived;
  bool rejected = false;
  bool classified_primitive = false;
  std::uint64_t checked = 0;
  std::uint64_t skipped_steps = 0;  // expected value outruns the step budget
  std::uint64_t skipped_bits = 0;   // oracle refused: beyond the bit cap
  std::uint64_t failures = 0;
  std::string first_failure;
  bool passed = false;
};

struct VerifyReport {
  std::vector<EntryReport> entries;
  bool all_passed = true;
};

namespace detail {

inline void for_each_grid_point(int arity, std::uint64_t unary_max,
                                std::uint64_t binary_max,
                                const std::function<void(const std::vector<Nat>&)>& fn) {
  if (arity == 0) {
    fn({});
    return;
  }
  if (arity == 1) {
    for (std::uint64_t x = 0; x <= unary_max; ++x) fn({Nat(x)});
    return;
  }
  std::vector<std::uint64_t> point(static_cast<std::size_t>(arity), 0);
  for (;;) {
    std::vector<Nat> xs(point.begin(), point.end());
    fn(xs);
    int i = arity - 1;
    while (i >= 0 && point[static_cast<std::size_t>(i)] == binary_max) {
      point[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++point[static_cast<std::size_t>(i)];
  }
}

}  // namespace detail

inline VerifyReport verify_corpus(const Corpus& corpus, std::uint64_t unary_max,
                                  std::uint64_t binary_max, Budget budget) {
  VerifyReport report;
  const Nat attempt_cap = Nat(budget.max_steps) / 6;
  for (const CorpusEntry& e : corpus.entries) {
    EntryReport er;
    er.name = e.name;
    er.status = e.status;
    if (e.rejected()) {
      er.rejected = true;
      er.passed = true;  // listed, not checked; never counts against the corpus
      report.entries.push_back(std::move(er));
      continue;
    }
    Classification cls = classify_number(*e.program);
    er.classified_primitive = cls.is_primitive();
    if (!er.classified_primitive) {
      er.failures = 1;
      er.first_failure = "not a primitive-arbor-number: " + cls.detail;
    } else {
      detail::for_each_grid_point(
          e.arity, unary_max, binary_max, [&](const std::vector<Nat>& xs) {
            std::optional<Nat> want =
                oracle_eval(e.oracle, xs, budget.max_value_bits);
            if (!want) {
              ++er.skipped_bits;
              return;
            }
            if (*want > attempt_cap) {
              ++er.skipped_steps;
              return;
            }
            CalcResult got = arbate(*e.program, xs, budget);
            bool ok = got.ok() && got.value == *want;
            if (ok) {
              ++er.checked;
              return;
            }
            ++er.failures;
            if (er.first_failure.empty()) {
              std::ostringstream os;
              os << "(";
              for (std::size_t i = 0; i < xs.size(); ++i)
                os << (i ? ";" : "") << xs[i];
              os << "): ";
              if (got.ok())
                os << "got " << got.value;
              else
                os << "budget exceeded";
              os << ", want " << *want;
              er.first_failure = os.str();
            }
          });
    }
    er.passed = er.classified_primitive && er.failures == 0 && er.checked > 0;
    if (!er.passed) report.all_passed = false;
    report.entries.push_back(std::move(er));
  }
  return report;
}

inline void write_verify_report(std::ostream& os, const VerifyReport& report) {
  for (const EntryReport& er : report.entries) {
    os << er.name << '\t' << status_name(er.status) << '\t';
    if (er.rejected) {
      os << "REJECTED\tkept verbatim, not checked\n";
      continue;
    }
    os << (er.passed ? "PASS" : "FAIL") << '\t' << "checked=" << er.checked
       << " skipped-steps=" << er.skipped_steps
       << " skipped-bits=" << er.skipped_bits;
    if (!er.first_failure.empty()) os << '\t' << er.first_failure;
    os << '\n';
  }
  os << (report.all_passed ? "ALL PASS" : "FAILURES PRESENT") << '\n';
}

}  // namespace arbacus

#endif  // ARBACUS_CORPUS_HPP
