#include "orbitgcd/polyparse.hpp"

#include <cctype>

#include "orbitgcd/errors.hpp"

namespace orbitgcd {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t arity) : text_(text), arity_(arity) {}

  BigPoly run() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    BigPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail_unexpected();
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  [[noreturn]] void fail_unexpected() {
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == '(') {
      throw ParseError("implicit multiplication is not allowed (missing '*')", pos_);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  BigPoly expr() {
    BigPoly acc = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  BigPoly term() {
    BigPoly acc = unary();
    while (peek('*')) {
      ++pos_;
      acc = acc * unary();
    }
    return acc;
  }

  BigPoly unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    return power();
  }

  BigPoly power() {
    BigPoly base = atom();
    if (!peek('^')) return base;
    ++pos_;
    skip_ws();
    const std::size_t at = pos_;
    const std::string digits = read_digits();
    if (digits.empty()) throw ParseError("expected a non-negative integer exponent", at);
    BigInt e(digits);
    if (e > kMaxExponent) throw ParseError("exponent " + digits + " exceeds 2^16", at);
    if (peek('^')) throw ParseError("chained exponent; use parentheses", pos_);
    return pow(base, static_cast<std::uint32_t>(e.get_ui()));
  }

  BigPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      BigPoly inner = expr();
      if (!peek(')')) {
        if (pos_ >= text_.size()) throw ParseError("missing ')'", pos_);
        fail_unexpected();
      }
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return BigPoly::constant(arity_, BigInt(read_digits()));
    }
    if (c == 'x') {
      const std::size_t at = pos_;
      ++pos_;
      const std::string digits = read_digits();
      if (digits.empty()) throw ParseError("variable 'x' needs an index", at);
      const BigInt idx(digits);
      if (idx >= arity_) {
        throw ParseError("unknown variable x" + digits + " (arity " + std::to_string(arity_) + ")", at);
      }
      return BigPoly::variable(arity_, idx.get_ui());
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t arity_;
  std::size_t pos_ = 0;
};

}  // namespace

BigPoly parse_poly(const PolySource& src) {
  if (src.arity == 0 || src.arity > kMaxArity) {
    throw ParseError("arity " + std::to_string(src.arity) + " out of range [1, " + std::to_string(kMaxArity) + "]", 0);
  }
  return Parser(src.text, src.arity).run();
}

std::vector<BigPoly> parse_poly_list(std::string_view text, std::size_t arity, char separator) {
  std::vector<BigPoly> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(separator, start);
    const auto piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    try {
      out.push_back(parse_poly({std::string(piece), arity}));
    } catch (const ParseError& e) {
      throw ParseError("polynomial " + std::to_string(out.size()) + ": " + e.detail(), start + e.position());
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace orbitgcd
