#include "dedukt/sexpr.hpp"

#include <cctype>

namespace dedukt::sexpr {

namespace {

std::string position_message(std::size_t line, std::size_t column, const std::string& expected) {
  return "parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": expected " +
         expected;
}

bool symbol_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '\'' ||
         c == '.' || c == '+' || c == '*' || c == '/' || c == '<' || c == '>' || c == '=' ||
         c == '?' || c == '!' || c == ':';
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Node read_node() {
    skip_space();
    if (eof()) fail("an expression");
    char c = peek();
    if (c == ')') fail("an expression, not ')'");
    std::size_t at_line = line_, at_column = column_;
    Node node = (c == '(') ? read_list() : read_symbol();
    node.line = at_line;
    node.column = at_column;
    return node;
  }

  void expect_end() {
    skip_space();
    if (!eof()) fail("end of input");
  }

  bool at_end() {
    skip_space();
    return eof();
  }

 private:
  Node read_list() {
    get();  // '('
    std::vector<Node> items;
    while (true) {
      skip_space();
      if (eof()) fail("')'");
      if (peek() == ')') {
        get();
        return Node::list(std::move(items));
      }
      items.push_back(read_node());
    }
  }

  Node read_symbol() {
    std::string name;
    while (!eof() && symbol_char(peek())) name.push_back(get());
    if (name.empty()) fail("a symbol");
    return Node::symbol(std::move(name));
  }

  void skip_space() {
    while (!eof()) {
      char c = peek();
      if (c == ';') {  // comment to end of line
        while (!eof() && peek() != '\n') get();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else {
        break;
      }
    }
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  char get() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(line_, column_, expected);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

void print_into(const Node& node, std::string& out) {
  if (node.is_symbol()) {
    out += node.sym();
    return;
  }
  out += '(';
  bool first = true;
  for (const Node& item : node.items()) {
    if (!first) out += ' ';
    first = false;
    print_into(item, out);
  }
  out += ')';
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string expected_what)
    : std::runtime_error(position_message(line, column, expected_what)),
      line(line),
      column(column),
      expected(std::move(expected_what)) {}

Node parse(std::string_view text) {
  Reader reader(text);
  Node node = reader.read_node();
  reader.expect_end();
  return node;
}

std::vector<Node> parse_all(std::string_view text) {
  Reader reader(text);
  std::vector<Node> nodes;
  while (!reader.at_end()) nodes.push_back(reader.read_node());
  return nodes;
}

std::string print(const Node& node) {
  std::string out;
  print_into(node, out);
  return out;
}

bool valid_symbol(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!symbol_char(c)) return false;
  return true;
}

}  // namespace dedukt::sexpr
