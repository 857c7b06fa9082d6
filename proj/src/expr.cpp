#include "iso3/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <utility>

#include "iso3/error.hpp"

namespace iso3 {

namespace {

using Node = ProfileFn::Fn;

std::string normalise(std::string_view in) {
  // Accept the typographic minus sign.
  std::string out;
  out.reserve(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (i + 2 < in.size() && static_cast<unsigned char>(in[i]) == 0xE2 &&
        static_cast<unsigned char>(in[i + 1]) == 0x88 &&
        static_cast<unsigned char>(in[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
    } else {
      out.push_back(in[i]);
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string text) : text_(std::move(text)) {}

  Node parse() {
    Node n = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " in '" + text_ + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Node expr() {
    Node lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = [a = lhs, b = term()](const Taylor3& t) { return a(t) + b(t); };
      } else if (accept('-')) {
        lhs = [a = lhs, b = term()](const Taylor3& t) { return a(t) - b(t); };
      } else {
        return lhs;
      }
    }
  }

  Node term() {
    Node lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = [a = lhs, b = unary()](const Taylor3& t) { return a(t) * b(t); };
      } else if (accept('/')) {
        lhs = [a = lhs, b = unary()](const Taylor3& t) { return a(t) / b(t); };
      } else {
        return lhs;
      }
    }
  }

  Node unary() {
    if (accept('-')) return [a = unary()](const Taylor3& t) { return -a(t); };
    if (accept('+')) return unary();
    return power();
  }

  Node power() {
    Node base = atom();
    if (accept('^')) {
      return [a = base, b = unary()](const Taylor3& t) { return pow(a(t), b(t)); };
    }
    return base;
  }

  Node atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (accept('(')) {
      Node inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail("unexpected character");
  }

  Node number() {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc()) fail("malformed number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return [v](const Taylor3&) { return Taylor3(v); };
  }

  Node identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name = text_.substr(start, pos_ - start);
    if (name == "pi") return [](const Taylor3&) { return Taylor3(std::numbers::pi); };
    if (name == "e") return [](const Taylor3&) { return Taylor3(std::numbers::e); };

    if (auto fn = function(name)) {
      if (!accept('(')) fail("expected '(' after " + name);
      Node arg = expr();
      if (!accept(')')) fail("expected ')'");
      return [f = *fn, a = std::move(arg)](const Taylor3& t) { return f(a(t)); };
    }

    if (variable_ && *variable_ != name) {
      pos_ = start;
      fail("second variable '" + name + "' (already using '" + *variable_ + "')");
    }
    variable_ = name;
    return [](const Taylor3& t) { return t; };
  }

  static std::optional<Taylor3 (*)(const Taylor3&)> function(const std::string& name) {
    using F = Taylor3 (*)(const Taylor3&);
    if (name == "sin") return static_cast<F>(&iso3::sin);
    if (name == "cos") return static_cast<F>(&iso3::cos);
    if (name == "tan") return static_cast<F>(&iso3::tan);
    if (name == "exp") return static_cast<F>(&iso3::exp);
    if (name == "log") return static_cast<F>(&iso3::log);
    if (name == "abs") return static_cast<F>(&iso3::abs);
    if (name == "sqrt") return static_cast<F>(&iso3::sqrt);
    if (name == "atan") return static_cast<F>(&iso3::atan);
    return std::nullopt;
  }

  std::string text_;
  std::size_t pos_ = 0;
  std::optional<std::string> variable_;
};

}  // namespace

ProfileFn parse_profile(std::string_view text, Interval domain) {
  std::string norm = normalise(text);
  Parser parser(norm);
  Node node = parser.parse();
  return {std::move(norm), std::move(node), domain};
}

}  // namespace iso3
