#pragma once

#include <sstream>
#include <string>
#include <string_view>

#include "rosetree/tree.hpp"

namespace rosetree {

// Compact text form for generic trees, e.g. `a(b(d,e),c)`.
//
//   node  := datum | datum "(" node {"," node} ")"
//   datum := [A-Za-z0-9_]+
//
// Whitespace between tokens is ignored. Throws ParseError.
Tree<std::string> parse_notation(std::string_view text);

template <class D>
void write_notation(std::ostream& os, const Tree<D>& t) {
  os << t.datum();
  if (t.is_leaf()) return;
  os << '(';
  bool first = true;
  for (const auto& child : t.children()) {
    if (!first) os << ',';
    first = false;
    write_notation(os, child);
  }
  os << ')';
}

template <class D>
std::string to_notation(const Tree<D>& t) {
  std::ostringstream os;
  write_notation(os, t);
  return os.str();
}

}  // namespace rosetree
