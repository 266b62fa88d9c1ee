#include "logvf/parse.hpp"

#include <cctype>
#include <set>

#include "logvf/error.hpp"

namespace logvf {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> names) : text_(text), names_(names) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::SyntaxError, msg + " at offset " + std::to_string(pos_) + " in '" +
                                     std::string(text_) + "'");
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

  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        // Only division by a nonzero constant keeps the result polynomial.
        std::size_t at = pos_;
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero())
          fail(ErrorKind::SyntaxError, "division by a non-constant at offset " + std::to_string(at));
        acc *= Rational(1) / d.constant_term();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = atom();
    while (accept('^')) base = base.pow(natural());
    return base;
  }

  unsigned natural() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected a natural exponent");
    auto digits = text_.substr(start, pos_ - start);
    if (digits.size() > 4) error("exponent too large");
    return static_cast<unsigned>(std::stoul(std::string(digits)));
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      return Polynomial::constant(names_.size(), parse_rational(text_.substr(start, pos_ - start)));
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return Polynomial::variable(names_.size(), i);
      fail(ErrorKind::UnknownVariable, "identifier '" + name + "' is not declared");
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial poly_parse(std::string_view text, std::span<const std::string> varnames) {
  return Parser(text, varnames).parse();
}

std::vector<std::string> parse_varlist(std::string_view text) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                    : comma - start);
    std::string name;
    for (char c : piece)
      if (!std::isspace(static_cast<unsigned char>(c))) name += c;
    if (name.empty() || !ident_start(name[0]))
      fail(ErrorKind::SyntaxError, "invalid variable name '" + name + "'");
    for (char c : name)
      if (!ident_char(c)) fail(ErrorKind::SyntaxError, "invalid variable name '" + name + "'");
    if (!seen.insert(name).second)
      fail(ErrorKind::SyntaxError, "duplicate variable '" + name + "'");
    names.push_back(name);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (names.size() > Exponent::kMaxVars)
    fail(ErrorKind::InvalidArgument, "at most 16 variables are supported");
  return names;
}

}  // namespace logvf
