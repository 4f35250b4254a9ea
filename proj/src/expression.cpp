#include "meridian/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

namespace meridian {

ParseError::ParseError(const std::string& message, std::size_t position)
    : UsageError(message + " at position " + std::to_string(position)), reason_(message), position_(position) {}

struct Expression::Node {
  enum class Kind { Number, VarU, VarV, Neg, Add, Sub, Mul, Div, Pow, Call };
  Kind kind = Kind::Number;
  double number = 0.0;
  ElementaryFn fn = ElementaryFn::Sin;
  std::shared_ptr<const Node> lhs, rhs;

  bool uses(Kind var) const {
    if (kind == var) return true;
    return (lhs && lhs->uses(var)) || (rhs && rhs->uses(var));
  }
  bool is_constant() const { return !uses(Kind::VarU) && !uses(Kind::VarV); }

  Jet2 eval(const Jet2& u, const Jet2& v) const {
    switch (kind) {
      case Kind::Number:
        return Jet2::constant(number);
      case Kind::VarU:
        return u;
      case Kind::VarV:
        return v;
      case Kind::Neg:
        return -lhs->eval(u, v);
      case Kind::Add:
        return lhs->eval(u, v) + rhs->eval(u, v);
      case Kind::Sub:
        return lhs->eval(u, v) - rhs->eval(u, v);
      case Kind::Mul:
        return lhs->eval(u, v) * rhs->eval(u, v);
      case Kind::Div:
        return lhs->eval(u, v) / rhs->eval(u, v);
      case Kind::Pow: {
        const Jet2 base = lhs->eval(u, v);
        if (rhs->is_constant()) return pow(base, rhs->eval(u, v).val);
        return exp(rhs->eval(u, v) * log(base));
      }
      case Kind::Call:
        return jet_apply(fn, lhs->eval(u, v));
    }
    return {};
  }
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

// expr    := term (('+' | '-') term)*
// term    := unary (('*' | '/') unary)*
// unary   := ('+' | '-') unary | power
// power   := primary ('^' unary)?
// primary := number | 'u' | 'v' | fn '(' expr ')' | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = make(Node::Kind::Add, lhs, term());
      else if (accept('-'))
        lhs = make(Node::Kind::Sub, lhs, term());
      else
        return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*'))
        lhs = make(Node::Kind::Mul, lhs, unary());
      else if (accept('/'))
        lhs = make(Node::Kind::Div, lhs, unary());
      else
        return lhs;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Node::Kind::Neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(Node::Kind::Pow, base, unary());
    return base;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (accept('(')) {
      NodePtr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < s_.size() && (s_[p] == '+' || s_[p] == '-')) ++p;
      if (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
        pos_ = p;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
    }
    double x = 0.0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, x);
    if (ec != std::errc{} || ptr != s_.data() + pos_) {
      pos_ = start;
      fail("malformed number");
    }
    auto n = std::make_shared<Node>();
    n->number = x;
    return n;
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string_view name = s_.substr(start, pos_ - start);
    if (name == "u") return make(Node::Kind::VarU);
    if (name == "v") return make(Node::Kind::VarV);
    ElementaryFn fn;
    if (name == "sin")
      fn = ElementaryFn::Sin;
    else if (name == "cos")
      fn = ElementaryFn::Cos;
    else if (name == "sqrt")
      fn = ElementaryFn::Sqrt;
    else if (name == "ln")
      fn = ElementaryFn::Ln;
    else if (name == "exp")
      fn = ElementaryFn::Exp;
    else {
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'");
    }
    if (!accept('(')) fail("expected '(' after " + std::string(name));
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Call;
    n->fn = fn;
    n->lhs = expr();
    if (!accept(')')) fail("expected ')'");
    return n;
  }
};

}  // namespace

Expression Expression::parse(std::string_view text) {
  Expression e;
  e.root_ = Parser(text).parse();
  e.text_ = std::string(text);
  return e;
}

Jet2 Expression::eval(const Jet2& u, const Jet2& v) const { return root_->eval(u, v); }
bool Expression::uses_u() const { return root_->uses(Node::Kind::VarU); }
bool Expression::uses_v() const { return root_->uses(Node::Kind::VarV); }

Profile1D Expression::as_profile(char var) const {
  if (var == 'u' && uses_v()) throw UsageError("expression '" + text_ + "' must depend on u only");
  if (var == 'v' && uses_u()) throw UsageError("expression '" + text_ + "' must depend on v only");
  auto root = root_;
  if (var == 'u') return {[root](const Jet2& t) { return root->eval(t, Jet2::constant(0.0)); }, text_};
  return {[root](const Jet2& t) { return root->eval(Jet2::constant(0.0), t); }, text_};
}

}  // namespace meridian
