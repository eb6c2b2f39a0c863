#include "greensched/dot.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_map>

namespace greensched {
namespace {

struct Token {
  enum Kind { Ident, Number, Symbol, End } kind = End;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_ws_and_comments();
    Token tok;
    tok.line = line_;
    tok.col = col_;
    if (pos_ >= text_.size()) return tok;  // End
    const char c = text_[pos_];
    if (c == '"') {
      advance();
      std::string value;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) advance();
        value.push_back(text_[pos_]);
        advance();
      }
      if (pos_ >= text_.size()) fail(tok, "unterminated string");
      advance();  // closing quote
      tok.kind = Token::Ident;
      tok.text = std::move(value);
      return tok;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string value;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        value.push_back(text_[pos_]);
        advance();
      }
      tok.kind = Token::Ident;
      tok.text = std::move(value);
      return tok;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] != '>' &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      std::string value;
      value.push_back(c);
      advance();
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value.push_back(text_[pos_]);
        advance();
      }
      tok.kind = Token::Number;
      tok.text = std::move(value);
      return tok;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      advance();
      advance();
      tok.kind = Token::Symbol;
      tok.text = "->";
      return tok;
    }
    if (std::string_view("{}[];,=").find(c) != std::string_view::npos) {
      advance();
      tok.kind = Token::Symbol;
      tok.text = std::string(1, c);
      return tok;
    }
    fail(tok, std::string("unexpected character '") + c + "'");
  }

  [[noreturn]] static void fail(const Token& at, const std::string& what) {
    std::ostringstream os;
    os << "dot syntax error at " << at.line << ":" << at.col << ": " << what;
    throw DotParseError(os.str());
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
        advance();
        advance();
        while (pos_ + 1 < text_.size() && !(text_[pos_] == '*' && text_[pos_ + 1] == '/')) advance();
        if (pos_ + 1 >= text_.size()) {
          Token tok{Token::End, "", line_, col_};
          fail(tok, "unterminated comment");
        }
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  Workflow run() {
    expect_keyword("digraph");
    if (cur_.kind == Token::Ident) {
      wf_.name = cur_.text;
      shift();
    }
    expect_symbol("{");
    while (!at_symbol("}")) {
      if (cur_.kind == Token::End) Lexer::fail(cur_, "expected '}'");
      statement();
    }
    shift();  // '}'
    auto violations = validate_workflow(wf_);
    if (!violations.empty()) {
      std::string msg = "invalid workflow:";
      for (const auto& v : violations) msg += " " + v + ";";
      throw DotParseError(msg);
    }
    return std::move(wf_);
  }

 private:
  void statement() {
    if (cur_.kind != Token::Ident && cur_.kind != Token::Number) {
      Lexer::fail(cur_, "expected node or edge statement");
    }
    const Token head = cur_;
    shift();
    if (at_symbol("->")) {
      // Edge chain: a -> b -> c [attrs]
      std::vector<std::string> chain{head.text};
      while (at_symbol("->")) {
        shift();
        if (cur_.kind != Token::Ident && cur_.kind != Token::Number) {
          Lexer::fail(cur_, "expected node id after '->'");
        }
        chain.push_back(cur_.text);
        shift();
      }
      const Work weight = parse_attrs(/*node_default=*/0);
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        wf_.edges.push_back({touch_node(chain[i]), touch_node(chain[i + 1]), weight});
      }
    } else {
      // Node statement; a second explicit statement for the same id is an error.
      const bool existed = node_index_.count(head.text) > 0;
      const int idx = touch_node(head.text);
      if (existed && declared_[idx]) {
        Lexer::fail(head, "duplicate node id '" + head.text + "'");
      }
      declared_[idx] = true;
      if (at_symbol("[")) {
        wf_.tasks[idx].weight = parse_attrs(/*node_default=*/1);
      }
    }
    if (at_symbol(";")) shift();
  }

  // Parses an optional [k=v, ...] list and returns the value of `weight`,
  // or the given default when absent. Unknown attributes are skipped.
  Work parse_attrs(Work fallback) {
    if (!at_symbol("[")) return fallback;
    shift();
    Work weight = fallback;
    while (!at_symbol("]")) {
      if (cur_.kind != Token::Ident) Lexer::fail(cur_, "expected attribute name");
      const std::string key = cur_.text;
      shift();
      expect_symbol("=");
      if (cur_.kind != Token::Ident && cur_.kind != Token::Number) {
        Lexer::fail(cur_, "expected attribute value");
      }
      if (key == "weight") {
        const Token val = cur_;
        Work parsed = 0;
        auto [p, ec] = std::from_chars(val.text.data(), val.text.data() + val.text.size(), parsed);
        if (ec != std::errc() || p != val.text.data() + val.text.size()) {
          Lexer::fail(val, "weight must be an integer");
        }
        weight = parsed;
      }
      shift();
      if (at_symbol(",") || at_symbol(";")) shift();
    }
    shift();  // ']'
    return weight;
  }

  int touch_node(const std::string& id) {
    auto it = node_index_.find(id);
    if (it != node_index_.end()) return it->second;
    const int idx = wf_.task_count();
    node_index_.emplace(id, idx);
    wf_.tasks.push_back({id, 1});
    declared_.push_back(false);
    return idx;
  }

  bool at_symbol(std::string_view s) const { return cur_.kind == Token::Symbol && cur_.text == s; }

  void expect_symbol(std::string_view s) {
    if (!at_symbol(s)) Lexer::fail(cur_, "expected '" + std::string(s) + "'");
    shift();
  }

  void expect_keyword(std::string_view kw) {
    if (cur_.kind != Token::Ident || cur_.text != kw) {
      Lexer::fail(cur_, "expected '" + std::string(kw) + "'");
    }
    shift();
  }

  void shift() { cur_ = lexer_.next(); }

  Lexer lexer_;
  Token cur_;
  Workflow wf_;
  std::unordered_map<std::string, int> node_index_;
  std::vector<char> declared_;
};

bool plain_ident(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::string quoted(std::string_view s) {
  if (plain_ident(s)) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

Workflow parse_dot(std::string_view text) { return Parser(text).run(); }

std::string emit_dot(const Workflow& w) {
  std::ostringstream os;
  os << "digraph ";
  if (!w.name.empty()) os << quoted(w.name) << " ";
  os << "{\n";
  for (const auto& t : w.tasks) {
    os << "  " << quoted(t.id) << " [weight=" << t.weight << "];\n";
  }
  for (const auto& e : w.edges) {
    os << "  " << quoted(w.tasks[e.src].id) << " -> " << quoted(w.tasks[e.dst].id)
       << " [weight=" << e.weight << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace greensched
