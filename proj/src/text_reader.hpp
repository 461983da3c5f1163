#pragma once

// Line tokenizer shared by the text parsers.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "geohit/errors.hpp"
#include "geohit/types.hpp"

namespace geohit::detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next line that is neither blank nor a comment; false at end of input.
  bool next(std::vector<Token>& tokens) {
    while (pos_ <= text_.size()) {
      if (pos_ == text_.size()) {
        pos_ = text_.size() + 1;
        return false;
      }
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_no_;
      tokens = tokenize(line);
      if (tokens.empty() || tokens[0].text == "c") continue;
      return true;
    }
    return false;
  }

  std::size_t line() const { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

[[noreturn]] inline void syntax(std::size_t line, std::size_t col, const std::string& what) {
  throw ParseError(ParseError::Kind::Syntax, line, col, what);
}

[[noreturn]] inline void semantic(std::size_t line, std::size_t col, const std::string& what) {
  throw ParseError(ParseError::Kind::Semantic, line, col, what);
}

inline long long to_int(const Token& tok, std::size_t line) {
  long long value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    syntax(line, tok.column, "expected an integer, found '" + std::string(tok.text) + "'");
  }
  return value;
}

inline Vertex to_vertex(const Token& tok, std::size_t line, int n) {
  long long v = to_int(tok, line);
  if (v < 0 || v >= n) {
    semantic(line, tok.column, "vertex " + std::string(tok.text) + " is outside [0," +
                                   std::to_string(n) + ")");
  }
  return static_cast<Vertex>(v);
}

}  // namespace geohit::detail
