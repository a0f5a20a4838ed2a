#include "homnorden/exactnum.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace homnorden {

namespace mp = boost::multiprecision;

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
      offset_(offset) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  // Division canonicalizes: gcd reduced, denominator positive.
  v_ = mp::cpp_rational(numerator) / mp::cpp_rational(denominator);
}

BigInt Rational::num() const { return mp::numerator(v_); }
BigInt Rational::den() const { return mp::denominator(v_); }

bool Rational::is_integer() const { return mp::denominator(v_) == 1; }

int Rational::sign() const {
  if (v_ == 0) return 0;
  return v_ < 0 ? -1 : 1;
}

std::string Rational::to_string() const {
  std::string out = num().str();
  if (!is_integer()) {
    out += "/";
    out += den().str();
  }
  return out;
}

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  auto digits = [&](std::size_t start) {
    std::size_t p = start;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (p == start) throw ParseError("expected digits", start);
    return p;
  };
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  std::size_t num_end = digits(pos);
  BigInt n(std::string(text.substr(pos, num_end - pos)));
  BigInt d = 1;
  pos = num_end;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t den_end = digits(pos);
    d = BigInt(std::string(text.substr(pos, den_end - pos)));
    pos = den_end;
  }
  if (pos != text.size()) throw ParseError("unexpected trailing input", pos);
  if (d == 0) throw ParseError("zero denominator", 0);
  if (negative) n = -n;
  return Rational(n, d);
}

Rational Rational::operator-() const {
  Rational out;
  out.v_ = -v_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  v_ += rhs.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  v_ -= rhs.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  v_ *= rhs.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.v_ == 0) throw EvalError("division by zero");
  v_ /= rhs.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

// ---------------------------------------------------------------------------
// Expressions

struct ParamExpr::Node {
  Kind kind;
  Rational value;                    // Constant
  std::string name;                  // Parameter
  std::shared_ptr<const Node> a, b;  // operands
};

ParamExpr ParamExpr::constant(Rational value) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Constant;
  node->value = std::move(value);
  return ParamExpr(std::move(node));
}

ParamExpr ParamExpr::parameter(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty parameter name");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Parameter;
  node->name = std::move(name);
  return ParamExpr(std::move(node));
}

ParamExpr ParamExpr::add(ParamExpr lhs, ParamExpr rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Add;
  node->a = std::move(lhs.root_);
  node->b = std::move(rhs.root_);
  return ParamExpr(std::move(node));
}

ParamExpr ParamExpr::sub(ParamExpr lhs, ParamExpr rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Sub;
  node->a = std::move(lhs.root_);
  node->b = std::move(rhs.root_);
  return ParamExpr(std::move(node));
}

ParamExpr ParamExpr::mul(ParamExpr lhs, ParamExpr rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Mul;
  node->a = std::move(lhs.root_);
  node->b = std::move(rhs.root_);
  return ParamExpr(std::move(node));
}

ParamExpr ParamExpr::div(ParamExpr lhs, ParamExpr rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Div;
  node->a = std::move(lhs.root_);
  node->b = std::move(rhs.root_);
  return ParamExpr(std::move(node));
}

ParamExpr ParamExpr::neg(ParamExpr operand) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Neg;
  node->a = std::move(operand.root_);
  return ParamExpr(std::move(node));
}

ParamExpr::Kind ParamExpr::kind() const { return root_->kind; }

const Rational& ParamExpr::constant_value() const {
  if (root_->kind != Kind::Constant) throw std::logic_error("not a constant node");
  return root_->value;
}

const std::string& ParamExpr::parameter_name() const {
  if (root_->kind != Kind::Parameter) throw std::logic_error("not a parameter node");
  return root_->name;
}

ParamExpr ParamExpr::lhs() const {
  if (!root_->a || !root_->b) throw std::logic_error("not a binary node");
  return ParamExpr(root_->a);
}

ParamExpr ParamExpr::rhs() const {
  if (!root_->a || !root_->b) throw std::logic_error("not a binary node");
  return ParamExpr(root_->b);
}

ParamExpr ParamExpr::operand() const {
  if (root_->kind != Kind::Neg) throw std::logic_error("not a negation node");
  return ParamExpr(root_->a);
}

namespace {

void collect_parameters(const ParamExpr::Node* node, std::set<std::string>& out);

}  // namespace

std::set<std::string> ParamExpr::parameters() const {
  std::set<std::string> out;
  collect_parameters(root_.get(), out);
  return out;
}

namespace {

using Kind = ParamExpr::Kind;

void collect_parameters(const ParamExpr::Node* node, std::set<std::string>& out) {
  if (node == nullptr) return;
  if (node->kind == Kind::Parameter) out.insert(node->name);
  collect_parameters(node->a.get(), out);
  collect_parameters(node->b.get(), out);
}

// Operator precedence used by the printer; atoms bind tightest.
int precedence(Kind kind) {
  switch (kind) {
    case Kind::Add:
    case Kind::Sub:
      return 1;
    case Kind::Mul:
    case Kind::Div:
      return 2;
    case Kind::Neg:
      return 3;
    case Kind::Constant:
    case Kind::Parameter:
      return 4;
  }
  return 4;
}

void print_node(const ParamExpr::Node* node, int min_prec, std::string& out) {
  const int prec = precedence(node->kind);
  const bool paren = prec < min_prec;
  if (paren) out += "(";
  switch (node->kind) {
    case Kind::Constant:
      out += node->value.to_string();
      break;
    case Kind::Parameter:
      out += node->name;
      break;
    case Kind::Neg:
      out += "-";
      print_node(node->a.get(), 4, out);  // operand of '-' is a bare factor
      break;
    case Kind::Add:
      print_node(node->a.get(), 1, out);
      out += " + ";
      print_node(node->b.get(), 2, out);
      break;
    case Kind::Sub:
      print_node(node->a.get(), 1, out);
      out += " - ";
      print_node(node->b.get(), 2, out);
      break;
    case Kind::Mul:
      print_node(node->a.get(), 2, out);
      out += "*";
      print_node(node->b.get(), 3, out);
      break;
    case Kind::Div:
      print_node(node->a.get(), 2, out);
      out += "/";
      print_node(node->b.get(), 3, out);
      break;
  }
  if (paren) out += ")";
}

Rational eval_node(const ParamExpr::Node* node, const Binding& binding) {
  switch (node->kind) {
    case Kind::Constant:
      return node->value;
    case Kind::Parameter: {
      auto it = binding.find(node->name);
      if (it == binding.end()) {
        throw EvalError("unbound parameter '" + node->name + "'");
      }
      return it->second;
    }
    case Kind::Neg:
      return -eval_node(node->a.get(), binding);
    case Kind::Add:
      return eval_node(node->a.get(), binding) + eval_node(node->b.get(), binding);
    case Kind::Sub:
      return eval_node(node->a.get(), binding) - eval_node(node->b.get(), binding);
    case Kind::Mul:
      return eval_node(node->a.get(), binding) * eval_node(node->b.get(), binding);
    case Kind::Div: {
      Rational lhs = eval_node(node->a.get(), binding);
      Rational rhs = eval_node(node->b.get(), binding);
      if (rhs.is_zero()) {
        std::string text;
        print_node(node, 0, text);
        throw EvalError("division by zero in '" + text + "'");
      }
      return lhs / rhs;
    }
  }
  throw std::logic_error("unreachable expression kind");
}

class Parser {
public:
  explicit Parser(std::string_view text) : s_(text) {}

  ParamExpr parse() {
    skip_ws();
    if (eof()) fail("empty expression");
    ParamExpr e = parse_sum();
    skip_ws();
    if (!eof()) fail("unexpected trailing input");
    return e;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  void skip_ws() {
    while (!eof()) {
      const unsigned char c = static_cast<unsigned char>(peek());
      if (c >= 0x80) fail("non-ASCII byte in expression");
      if (c != ' ' && c != '\t') break;
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, pos_);
  }

  bool consume(char c) {
    skip_ws();
    if (!eof() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ParamExpr parse_sum() {
    ParamExpr lhs = parse_term();
    for (;;) {
      if (consume('+')) {
        lhs = ParamExpr::add(std::move(lhs), parse_term());
      } else if (consume('-')) {
        lhs = ParamExpr::sub(std::move(lhs), parse_term());
      } else {
        return lhs;
      }
    }
  }

  ParamExpr parse_term() {
    ParamExpr lhs = parse_factor();
    for (;;) {
      if (consume('*')) {
        lhs = ParamExpr::mul(std::move(lhs), parse_factor());
      } else if (consume('/')) {
        lhs = ParamExpr::div(std::move(lhs), parse_factor());
      } else {
        return lhs;
      }
    }
  }

  ParamExpr parse_factor() {
    if (consume('-')) {
      return ParamExpr::neg(parse_primary());
    }
    return parse_primary();
  }

  ParamExpr parse_primary() {
    skip_ws();
    if (eof()) fail("expected number, parameter, or '('");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      ParamExpr inner = parse_sum();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      BigInt value{std::string(s_.substr(start, pos_ - start))};
      return ParamExpr::constant(Rational(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!eof()) {
        const unsigned char u = static_cast<unsigned char>(peek());
        if (!std::isalnum(u) && u != '_') break;
        ++pos_;
      }
      return ParamExpr::parameter(std::string(s_.substr(start, pos_ - start)));
    }
    fail("unexpected character");
  }
};

}  // namespace

std::string ParamExpr::to_string() const {
  std::string out;
  print_node(root_.get(), 0, out);
  return out;
}

ParamExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

Rational eval_expr(const ParamExpr& expr, const Binding& binding) {
  return eval_node(expr.root_.get(), binding);
}

std::string binding_to_string(const Binding& binding) {
  std::string out;
  for (const auto& [name, value] : binding) {
    if (!out.empty()) out += ", ";
    out += name + "=" + value.to_string();
  }
  return out;
}

}  // namespace homnorden
