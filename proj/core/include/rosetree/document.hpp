#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rosetree/tree.hpp"

namespace rosetree::doc {

struct Attribute {
  std::string name;
  std::string value;

  friend bool operator==(const Attribute&, const Attribute&) = default;
};

struct Element {
  std::string name;
  std::vector<Attribute> attributes;

  friend bool operator==(const Element&, const Element&) = default;
};

struct PCData {
  std::string text;

  friend bool operator==(const PCData&, const PCData&) = default;
};

using Datum = std::variant<Element, PCData>;
using DocTree = Tree<Datum>;

inline bool is_element(const Datum& d, std::string_view name) {
  const auto* e = std::get_if<Element>(&d);
  return e != nullptr && e->name == name;
}

inline DocTree element(std::string name, std::vector<DocTree> children = {},
                       std::vector<Attribute> attributes = {}) {
  return DocTree(Element{std::move(name), std::move(attributes)},
                 List<DocTree>::from(children));
}

inline DocTree text(std::string content) { return DocTree(PCData{std::move(content)}); }

// Parses the supported XML subset:
//
//   document := element
//   element  := "<" name attr* ">" content* "</" name ">" | "<" name attr* "/>"
//   attr     := name "=" '"' value '"'
//   content  := element | text
//   name     := [A-Za-z][A-Za-z0-9-]*        (folded to lowercase)
//
// Whitespace may separate attributes and may surround the root element. Text
// is kept verbatim apart from the five predefined entities. No comments,
// processing instructions, DOCTYPE or CDATA. Throws ParseError.
DocTree parse(std::string_view input);

// Canonical text: attribute order preserved, empty elements self-closed,
// `& < > "` escaped, no added whitespace. Throws InvalidDocument when a text
// node has children.
std::string serialize(const DocTree& t);

// Replaces every <font> element, at any depth, by its children. Runs on an
// edit cursor; untouched subtrees are shared with the input. A font element at
// the root can leave zero or several top-level trees, which surfaces as
// EmptyDocument or MultipleRoots.
DocTree unfont(const DocTree& t);

}  // namespace rosetree::doc
