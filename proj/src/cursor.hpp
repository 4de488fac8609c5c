#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "scat/error.hpp"
#include "scat/ordinal.hpp"

namespace scat::detail {

// Whitespace-insensitive scanner shared by the ordinal and term parsers.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  // Accepts a keyword only when it is not the prefix of a longer identifier.
  bool accept_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    std::size_t end = pos_ + word.size();
    if (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::uint64_t integer() {
    skip_space();
    if (!at_digit()) fail("expected integer");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("integer overflow");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  std::size_t position() {
    skip_space();
    return pos_;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, position()); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) { throw ParseError(msg, at); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Ordinal parse_ordinal_at(Cursor& cur);

}  // namespace scat::detail
