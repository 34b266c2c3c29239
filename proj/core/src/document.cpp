#include "rosetree/document.hpp"

#include <cctype>
#include <cstddef>
#include <optional>

#include "rosetree/edit_cursor.hpp"
#include "rosetree/errors.hpp"

namespace rosetree::doc {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '-';
}

class Parser {
 public:
  explicit Parser(std::string_view in) : in_(in) {}

  DocTree run() {
    skip_space();
    if (eof()) fail("empty document");
    if (peek() != '<') fail("text outside the root element");

    std::optional<DocTree> root;
    while (!root) {
      if (eof()) fail("unclosed element <" + open_.back().element.name + ">");
      if (peek() != '<') {
        add_child(DocTree(PCData{read_text()}));
        continue;
      }
      if (at("</")) {
        DocTree done = close_element();
        if (open_.empty()) {
          root = std::move(done);
        } else {
          add_child(std::move(done));
        }
        continue;
      }
      auto [element, self_closed] = open_tag();
      if (self_closed) {
        DocTree leaf(std::move(element));
        if (open_.empty()) {
          root = std::move(leaf);
        } else {
          add_child(std::move(leaf));
        }
      } else {
        open_.push_back({std::move(element), {}});
      }
    }

    skip_space();
    if (!eof()) {
      fail(peek() == '<' ? "more than one root element"
                         : "text outside the root element");
    }
    return *std::move(root);
  }

 private:
  struct Open {
    Element element;
    std::vector<DocTree> children;
  };

  bool eof() const { return pos_ >= in_.size(); }
  char peek() const { return in_[pos_]; }
  bool at(std::string_view s) const { return in_.substr(pos_, s.size()) == s; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(pos_, message);
  }

  bool skip_space() {
    const std::size_t before = pos_;
    while (!eof() && is_space(peek())) ++pos_;
    return pos_ != before;
  }

  void expect(char c) {
    if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string name() {
    if (eof() || !is_alpha(peek())) fail("expected a name");
    std::string out;
    while (!eof() && is_name_char(peek())) {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(peek()))));
      ++pos_;
    }
    return out;
  }

  void add_child(DocTree t) { open_.back().children.push_back(std::move(t)); }

  // Reads up to the next '<' (or `stop`), decoding entities.
  std::string decoded_until(char stop) {
    std::string out;
    while (!eof() && peek() != '<' && peek() != stop) {
      if (peek() != '&') {
        out.push_back(peek());
        ++pos_;
        continue;
      }
      static constexpr std::pair<std::string_view, char> entities[] = {
          {"&amp;", '&'}, {"&lt;", '<'}, {"&gt;", '>'}, {"&quot;", '"'}, {"&apos;", '\''}};
      bool matched = false;
      for (auto [entity, ch] : entities) {
        if (at(entity)) {
          out.push_back(ch);
          pos_ += entity.size();
          matched = true;
          break;
        }
      }
      if (!matched) fail("unknown or malformed entity");
    }
    return out;
  }

  std::string read_text() { return decoded_until('<'); }

  std::pair<Element, bool> open_tag() {
    expect('<');
    Element element{name(), {}};
    for (;;) {
      const bool spaced = skip_space();
      if (at("/>")) {
        pos_ += 2;
        return {std::move(element), true};
      }
      if (at(">")) {
        ++pos_;
        return {std::move(element), false};
      }
      if (eof()) fail("unterminated start tag <" + element.name);
      if (!spaced) fail("expected whitespace before attribute");
      Attribute attr;
      attr.name = name();
      skip_space();
      expect('=');
      skip_space();
      expect('"');
      attr.value = decoded_until('"');
      if (eof() || peek() != '"') fail("unterminated attribute value");
      ++pos_;
      element.attributes.push_back(std::move(attr));
    }
  }

  DocTree close_element() {
    const std::size_t tag_start = pos_;
    pos_ += 2;
    std::string closing = name();
    skip_space();
    expect('>');
    if (open_.empty()) {
      pos_ = tag_start;
      fail("end tag </" + closing + "> without a start tag");
    }
    if (closing != open_.back().element.name) {
      pos_ = tag_start;
      fail("mismatched end tag </" + closing + ">, expected </" +
           open_.back().element.name + ">");
    }
    Open done = std::move(open_.back());
    open_.pop_back();
    return DocTree(std::move(done.element), List<DocTree>::from(done.children));
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  std::vector<Open> open_;
};

void escape_into(std::string& out, std::string_view s) {
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
}

void serialize_into(std::string& out, const DocTree& t) {
  if (const auto* pc = std::get_if<PCData>(&t.datum())) {
    if (!t.is_leaf()) throw InvalidDocument("text node has children");
    escape_into(out, pc->text);
    return;
  }
  const auto& e = std::get<Element>(t.datum());
  out.push_back('<');
  out += e.name;
  for (const auto& a : e.attributes) {
    out.push_back(' ');
    out += a.name;
    out += "=\"";
    escape_into(out, a.value);
    out.push_back('"');
  }
  if (t.is_leaf()) {
    out += "/>";
    return;
  }
  out.push_back('>');
  for (const auto& child : t.children()) serialize_into(out, child);
  out += "</";
  out += e.name;
  out.push_back('>');
}

}  // namespace

DocTree parse(std::string_view input) { return Parser(input).run(); }

std::string serialize(const DocTree& t) {
  std::string out;
  serialize_into(out, t);
  return out;
}

DocTree unfont(const DocTree& t) {
  auto cur = start(t);
  std::size_t depth = 0;
  for (;;) {
    if (cur.at_right()) {
      if (depth == 0) break;
      cur = cur.up().move(Side::right);
      --depth;
    } else if (is_element(cur.peek_datum(Side::right), "font")) {
      // Stay put: the first promoted child may itself be a font.
      cur = cur.promote_children(Side::right);
    } else {
      cur = cur.down(Side::right);
      ++depth;
    }
  }
  return cur.extract();
}

}  // namespace rosetree::doc
