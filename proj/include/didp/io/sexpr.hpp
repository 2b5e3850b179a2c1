#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "didp/errors.hpp"

namespace didp::io {

// Untyped s-expression: an atom or a parenthesized list.
struct SExpr {
  bool atom = true;
  std::string text;  // atom text
  std::vector<SExpr> items;

  bool is_list() const { return !atom; }
  const std::string& head() const {
    static const std::string none;
    return !atom && !items.empty() && items[0].atom ? items[0].text : none;
  }
  std::string to_string() const {
    if (atom) return text;
    std::string s = "(";
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (k) s += ' ';
      s += items[k].to_string();
    }
    return s + ")";
  }
};

namespace detail {

class SExprReader {
 public:
  explicit SExprReader(std::string_view text) : s_(text) {}

  SExpr read_one() {
    skip_space();
    if (pos_ >= s_.size()) throw ParseError("empty expression");
    SExpr e = read();
    skip_space();
    if (pos_ != s_.size())
      throw ParseError("unexpected text after expression at offset " + std::to_string(pos_) + ": '" +
                       std::string(s_.substr(pos_)) + "'");
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  SExpr read() {
    skip_space();
    if (pos_ >= s_.size()) throw ParseError("unbalanced parentheses: missing ')'");
    char c = s_[pos_];
    if (c == ')') throw ParseError("unexpected ')' at offset " + std::to_string(pos_));
    SExpr e;
    if (c == '(') {
      ++pos_;
      e.atom = false;
      while (true) {
        skip_space();
        if (pos_ >= s_.size()) throw ParseError("unbalanced parentheses: missing ')'");
        if (s_[pos_] == ')') {
          ++pos_;
          break;
        }
        e.items.push_back(read());
      }
      if (e.items.empty()) throw ParseError("empty list '()'");
      return e;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
           s_[pos_] != ')')
      ++pos_;
    e.text = std::string(s_.substr(start, pos_ - start));
    return e;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline SExpr parse_sexpr(std::string_view text) { return detail::SExprReader(text).read_one(); }

}  // namespace didp::io
