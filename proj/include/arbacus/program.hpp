#ifndef ARBACUS_PROGRAM_HPP
#define ARBACUS_PROGRAM_HPP

// Number strings as program trees. Maximal runs of octal digits are field
// tokens, digits 8/9 open and close accolades. An arbor-number has balanced
// braces with no 88/99 digit pairs and no multiply pre-nulled fields; every
// other number is herbum. A primitive-arbor-number additionally protects the
// counter and limit of every accolade: inside it they may occur only as limit
// operands or as the counter of the fast-finish form {counter,limit}.

#include "arbacus/numerals.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace arbacus {

// Dense per-tree index into ProgramTree::fields.
using FieldRef = std::uint32_t;

struct ProgramItem {
  enum class Kind { field, empty, accolade };

  Kind kind = Kind::empty;
  FieldRef field = 0;    // succeed target, for Kind::field
  FieldRef counter = 0;  // first interior field, for Kind::accolade
  FieldRef limit = 0;    // last interior field, for Kind::accolade
  std::vector<ProgramItem> body;  // interior items between counter and limit

  bool is_fast_finish() const {
    return kind == Kind::accolade && body.size() == 1 &&
           body.front().kind == Kind::empty;
  }
  bool is_delete() const { return kind == Kind::accolade && body.empty(); }
};

struct ProgramTree {
  std::vector<std::string> fields;  // interned field names; FieldRef indexes
  std::vector<ProgramItem> items;   // top-level sequence
  Numeral source;                   // canonical digit form

  const std::string& field_name(FieldRef f) const { return fields[f]; }

  std::optional<FieldRef> find_field(std::string_view name) const {
    for (FieldRef i = 0; i < fields.size(); ++i)
      if (fields[i] == name) return i;
    return std::nullopt;
  }
};

struct Herbum {
  std::string reason;
};

using ProgramParse = std::variant<ProgramTree, Herbum>;

namespace detail {

inline FieldRef intern_field(ProgramTree& tree, const std::string& name) {
  for (FieldRef i = 0; i < tree.fields.size(); ++i)
    if (tree.fields[i] == name) return i;
  tree.fields.push_back(name);
  return static_cast<FieldRef>(tree.fields.size() - 1);
}

}  // namespace detail

inline ProgramParse parse_program(const Numeral& n) {
  const std::string& d = n.digits;
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] == '8' && d[i + 1] == '8')
      return Herbum{"digit pair 88 ({{)"};
    if (d[i] == '9' && d[i + 1] == '9')
      return Herbum{"digit pair 99 (}})"};
  }

  ProgramTree tree;
  tree.source = n;
  // stack of open accolades; level 0 is the top-level item sequence
  std::vector<std::vector<ProgramItem>> stack;
  stack.emplace_back();
  bool first_token = true;

  std::size_t i = 0;
  while (i < d.size()) {
    char c = d[i];
    if (c >= '0' && c <= '7') {
      std::size_t j = i;
      while (j < d.size() && d[j] >= '0' && d[j] <= '7') ++j;
      std::string name = d.substr(i, j - i);
      if (name.size() >= 2 && name[0] == '0' && name[1] == '0')
        return Herbum{"multiply pre-nulled field " + name};
      if (first_token && stack.size() == 1 && name.size() >= 2 && name[0] == '0')
        return Herbum{"top level begins with 0-led field " + name};
      ProgramItem item;
      item.kind = ProgramItem::Kind::field;
      item.field = detail::intern_field(tree, name);
      stack.back().push_back(std::move(item));
      i = j;
    } else if (c == '8') {
      stack.emplace_back();
      ++i;
    } else {  // '9'
      if (stack.size() == 1) return Herbum{"unbalanced lade (})"};
      std::vector<ProgramItem> interior = std::move(stack.back());
      stack.pop_back();
      ProgramItem acc;
      if (interior.empty()) {
        acc.kind = ProgramItem::Kind::empty;
      } else {
        // no 88/99 guarantees the first and last interior items are fields
        acc.kind = ProgramItem::Kind::accolade;
        acc.counter = interior.front().field;
        acc.limit = interior.back().field;
        if (interior.size() == 1) {
          // delete form {f}: counter = limit = f, empty body
        } else {
          acc.body.assign(interior.begin() + 1, interior.end() - 1);
        }
      }
      stack.back().push_back(std::move(acc));
      ++i;
    }
    first_token = false;
  }
  if (stack.size() > 1) return Herbum{"unbalanced acco ({)"};
  tree.items = std::move(stack.back());
  return tree;
}

struct Classification {
  enum class Kind { herbum, primitive_arbor, complex_arbor };

  Kind kind = Kind::herbum;
  std::string detail;  // herbum reason or first primitive-rule violation

  bool is_primitive() const { return kind == Kind::primitive_arbor; }
};

namespace detail {

struct Guard {
  FieldRef counter;
  FieldRef limit;
};

// Checks occurrences of every enclosing counter/limit inside `items`.
// Returns the first violation, or nullopt.
inline std::optional<std::string> primitive_violation(
    const ProgramTree& tree, const std::vector<ProgramItem>& items,
    std::vector<Guard>& guards) {
  for (const ProgramItem& item : items) {
    switch (item.kind) {
      case ProgramItem::Kind::empty:
        break;
      case ProgramItem::Kind::field:
        for (const Guard& g : guards) {
          if (item.field == g.counter)
            return "counter " + tree.field_name(g.counter) +
                   " succeeded inside its accolade";
          if (item.field == g.limit)
            return "limit " + tree.field_name(g.limit) +
                   " succeeded inside its accolade";
        }
        break;
      case ProgramItem::Kind::accolade: {
        // The counter operand is a write; an enclosing counter or limit may
        // stand there only in the fast-finish form {counter,limit} of the
        // enclosing accolade itself.
        for (const Guard& g : guards) {
          if (item.counter == g.counter || item.counter == g.limit) {
            bool fast_finish = item.is_fast_finish() &&
                               item.counter == g.counter &&
                               item.limit == g.limit;
            if (!fast_finish)
              return "field " + tree.field_name(item.counter) +
                     " written by an accolade inside accolade {" +
                     tree.field_name(g.counter) + "..." +
                     tree.field_name(g.limit) + "}";
          }
          // The limit operand is a read; always admissible.
        }
        guards.push_back(Guard{item.counter, item.limit});
        if (auto v = primitive_violation(tree, item.body, guards)) return v;
        guards.pop_back();
        break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline Classification classify_tree(const ProgramTree& tree) {
  std::vector<detail::Guard> guards;
  if (auto violation = detail::primitive_violation(tree, tree.items, guards))
    return Classification{Classification::Kind::complex_arbor, *violation};
  return Classification{Classification::Kind::primitive_arbor, ""};
}

inline Classification classify_number(const Numeral& n) {
  ProgramParse parsed = parse_program(n);
  if (const Herbum* h = std::get_if<Herbum>(&parsed))
    return Classification{Classification::Kind::herbum, h->reason};
  return classify_tree(std::get<ProgramTree>(parsed));
}

struct Metrics {
  std::uint64_t size = 0;   // count of field tokens, operands included
  std::uint64_t depth = 0;  // maximum accolade nesting; bare field is 0
};

namespace detail {

inline void measure(const std::vector<ProgramItem>& items, std::uint64_t level,
                    Metrics& m) {
  for (const ProgramItem& item : items) {
    switch (item.kind) {
      case ProgramItem::Kind::empty:
        // commas are depth-transparent: {0,01}{1,0,01} has depth 1
        break;
      case ProgramItem::Kind::field:
        ++m.size;
        break;
      case ProgramItem::Kind::accolade:
        m.size += item.is_delete() ? 1 : 2;  // counter and limit operands
        if (level + 1 > m.depth) m.depth = level + 1;
        measure(item.body, level + 1, m);
        break;
    }
  }
}

}  // namespace detail

inline Metrics program_metrics(const ProgramTree& tree) {
  Metrics m;
  detail::measure(tree.items, 0, m);
  return m;
}

namespace detail {

inline void render_items(const ProgramTree& tree,
                         const std::vector<ProgramItem>& items,
                         std::string& out) {
  for (const ProgramItem& item : items) {
    switch (item.kind) {
      case ProgramItem::Kind::empty:
        out += "89";
        break;
      case ProgramItem::Kind::field:
        out += tree.field_name(item.field);
        break;
      case ProgramItem::Kind::accolade:
        out.push_back('8');
        out += tree.field_name(item.counter);
        if (!item.is_delete()) {
          render_items(tree, item.body, out);
          out += tree.field_name(item.limit);
        }
        out.push_back('9');
        break;
    }
  }
}

}  // namespace detail

// Canonical digit rendering; parse_program inverts it.
inline Numeral program_numeral(const ProgramTree& tree) {
  std::string digits;
  detail::render_items(tree, tree.items, digits);
  if (digits.empty()) digits = "0";  // unreachable for parsed trees
  return Numeral{std::move(digits)};
}

inline std::string render_program(const ProgramTree& tree, RenderMode mode) {
  return render_numeral(program_numeral(tree), mode);
}

}  // namespace arbacus

#endif  // ARBACUS_PROGRAM_HPP
