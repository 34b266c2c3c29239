#include "rosetree/notation.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "rosetree/errors.hpp"

namespace rosetree {

namespace {

bool is_datum_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

}  // namespace

Tree<std::string> parse_notation(std::string_view text) {
  struct Open {
    std::string datum;
    std::vector<Tree<std::string>> children;
  };

  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& message) -> void {
    throw ParseError(pos, message);
  };
  auto datum = [&] {
    skip();
    const std::size_t begin = pos;
    while (pos < text.size() && is_datum_char(text[pos])) ++pos;
    if (pos == begin) fail("expected a datum");
    return std::string(text.substr(begin, pos - begin));
  };

  std::vector<Open> open;
  std::optional<Tree<std::string>> done;
  for (;;) {
    std::string d = datum();
    skip();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      open.push_back({std::move(d), {}});
      continue;
    }
    done = Tree<std::string>(std::move(d));
    // Close as many nodes as the input closes.
    for (;;) {
      skip();
      if (open.empty()) break;
      if (pos >= text.size()) fail("unclosed '('");
      if (text[pos] == ',') {
        ++pos;
        open.back().children.push_back(std::move(*done));
        done.reset();
        break;
      }
      if (text[pos] != ')') fail("expected ',' or ')'");
      ++pos;
      open.back().children.push_back(std::move(*done));
      Open top = std::move(open.back());
      open.pop_back();
      done = Tree<std::string>(std::move(top.datum),
                               List<Tree<std::string>>::from(top.children));
    }
    if (open.empty()) break;
  }
  skip();
  if (pos != text.size()) fail("trailing input after tree");
  return *std::move(done);
}

}  // namespace rosetree
