#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "ncp/parse.hpp"

namespace ncp::detail {

// Character cursor with line/column tracking. "//" starts a comment.
class Cursor {
 public:
  Cursor(std::string_view text, int line = 1, int col = 1) : s_(text), line0_(line), col0_(col) {}

  size_t pos() const { return p_; }
  void seek(size_t p) { p_ = p; }
  bool done() {
    skip_ws();
    return p_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return p_ < s_.size() ? s_[p_] : '\0';
  }
  char peek_raw() const { return p_ < s_.size() ? s_[p_] : '\0'; }
  char peek_at(size_t off) const { return p_ + off < s_.size() ? s_[p_ + off] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++p_;
    return true;
  }
  bool accept(std::string_view w) {
    skip_ws();
    if (s_.substr(p_, w.size()) != w) return false;
    p_ += w.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void skip_ws() {
    while (p_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[p_]))) {
        ++p_;
      } else if (s_.compare(p_, 2, "//") == 0) {
        while (p_ < s_.size() && s_[p_] != '\n') ++p_;
      } else {
        break;
      }
    }
  }
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

  std::string ident() {
    skip_ws();
    if (!ident_start(peek_raw())) fail("expected a name");
    size_t b = p_;
    while (p_ < s_.size() && ident_char(s_[p_])) ++p_;
    return std::string(s_.substr(b, p_ - b));
  }
  std::string digits() {
    skip_ws();
    size_t b = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (b == p_) fail("expected a number");
    return std::string(s_.substr(b, p_ - b));
  }
  long integer() {
    bool neg = accept('-');
    auto d = digits();
    if (d.size() > 15) fail("integer too large");
    long v = std::stol(d);
    return neg ? -v : v;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    int line = line0_, col = col0_;
    for (size_t i = 0; i < p_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, msg);
  }

  std::string_view rest() const { return s_.substr(p_); }
  std::string_view text() const { return s_; }

 private:
  std::string_view s_;
  size_t p_ = 0;
  int line0_, col0_;
};

Scalar parse_scalar_sum(Cursor& c, const ParamNames* params);
Scalar parse_scalar_atom(Cursor& c, const ParamNames* params);
Word parse_word_token(Cursor& c, const Alphabet& al);
SymMonomial parse_necklaces(Cursor& c, const Alphabet& al);

// Parses "[sign] term (sign term)*" where body(c) parses the non-scalar part
// of one term. Stops at the first character that cannot continue the sum.
template <class Key, class Body>
Linear<Key> parse_expr(Cursor& c, const ParamNames* params, Body body, bool allow_scalar_only, const Key& unit_key);

}  // namespace ncp::detail

#include "cursor_impl.hpp"
