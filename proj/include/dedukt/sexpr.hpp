#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dedukt::sexpr {

// Thrown with 1-based source coordinates and a short description of what the
// parser was looking for.
struct ParseError : std::runtime_error {
  std::size_t line;
  std::size_t column;
  std::string expected;

  ParseError(std::size_t line, std::size_t column, std::string expected_what);
};

// A symbolic expression: an atom (bare symbol) or a parenthesized list.
// Parsed nodes remember where they came from; positions do not participate
// in equality.
class Node {
 public:
  Node() : repr_(std::string()) {}

  static Node symbol(std::string name) { return Node(std::move(name)); }
  static Node list(std::vector<Node> items) { return Node(std::move(items)); }

  bool is_symbol() const { return std::holds_alternative<std::string>(repr_); }
  bool is_list() const { return !is_symbol(); }

  const std::string& sym() const { return std::get<std::string>(repr_); }
  const std::vector<Node>& items() const { return std::get<std::vector<Node>>(repr_); }

  std::size_t size() const { return items().size(); }
  const Node& at(std::size_t i) const { return items().at(i); }

  bool operator==(const Node& other) const { return repr_ == other.repr_; }

  std::size_t line = 0;
  std::size_t column = 0;

 private:
  explicit Node(std::string s) : repr_(std::move(s)) {}
  explicit Node(std::vector<Node> xs) : repr_(std::move(xs)) {}

  std::variant<std::string, std::vector<Node>> repr_;
};

// Parses exactly one expression; trailing non-whitespace is an error.
Node parse(std::string_view text);

// Parses a whole file worth of expressions.
std::vector<Node> parse_all(std::string_view text);

// Canonical single-line form: one space between items, no gratuitous blanks.
std::string print(const Node& node);

bool valid_symbol(std::string_view s);

}  // namespace dedukt::sexpr
