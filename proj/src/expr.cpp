#include "dqv/expr.hpp"

#include <cctype>

namespace dqv {

namespace {

class Parser {
 public:
  Parser(std::string_view s, const TowerPtr& t, const NameResolver& r) : s_(s), t_(t), resolve_(r) {}

  Alg run() {
    Alg v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v.embed(common_tower(v.tower(), t_));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Alg expr() {
    Alg v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  Alg term() {
    Alg v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        Alg d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }
  Alg unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Alg power() {
    Alg b = primary();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("integer exponent expected");
      long e = std::stol(std::string(s_.substr(start, pos_ - start)));
      if (neg && b.is_zero()) fail("division by zero");
      return b.pow(neg ? -e : e);
    }
    return b;
  }
  Alg primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Alg v = expr();
      if (!eat(')')) fail("')' expected");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Alg(t_, Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (resolve_) {
        if (auto v = resolve_(name)) return *v;
        fail("unknown name '" + name + "'");
      }
      if (t_->find(name) < 0) fail("unknown name '" + name + "'");
      return Alg::gen(t_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const TowerPtr& t_;
  const NameResolver& resolve_;
};

}  // namespace

Alg parse_alg(std::string_view text, const TowerPtr& tower) {
  NameResolver none;
  return Parser(text, tower, none).run();
}

Alg parse_alg(std::string_view text, const TowerPtr& tower, const NameResolver& resolve) {
  return Parser(text, tower, resolve).run();
}

}  // namespace dqv
