#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace homnorden {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when expression text cannot be tokenized or parsed.
/// `offset()` is the byte offset into the input at which the error was detected.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// Raised when an expression cannot be evaluated: an unbound parameter or a
/// division whose divisor evaluates to zero.
class EvalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Arbitrary-precision rational number.
///
/// Invariants: the stored value is always canonical (denominator > 0,
/// numerator and denominator coprime, zero is 0/1).  Every operation is
/// exact; nothing in this library ever rounds.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long long value) : v_(value) {}  // NOLINT: implicit by design
  Rational(const BigInt& value) : v_(value) {}
  Rational(const BigInt& numerator, const BigInt& denominator);

  BigInt num() const;
  BigInt den() const;
  bool is_zero() const { return v_ == 0; }
  bool is_integer() const;
  int sign() const;  // -1, 0, or +1

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;

  /// Strict inverse of to_string: optional '-', digits, optional "/digits".
  /// Throws ParseError on anything else (including whitespace).
  static Rational parse(std::string_view text);

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws EvalError on zero divisor

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  boost::multiprecision::cpp_rational v_;
};

/// Parameter values for evaluating expressions, keyed by parameter name.
using Binding = std::map<std::string, Rational>;

/// Immutable symbolic expression over named parameters and rational
/// constants, closed under +, -, *, / and unary negation.  Values are
/// shared; copies are cheap.
class ParamExpr {
public:
  enum class Kind { Constant, Parameter, Add, Sub, Mul, Div, Neg };

  static ParamExpr constant(Rational value);
  static ParamExpr parameter(std::string name);
  static ParamExpr add(ParamExpr lhs, ParamExpr rhs);
  static ParamExpr sub(ParamExpr lhs, ParamExpr rhs);
  static ParamExpr mul(ParamExpr lhs, ParamExpr rhs);
  static ParamExpr div(ParamExpr lhs, ParamExpr rhs);
  static ParamExpr neg(ParamExpr operand);

  Kind kind() const;
  const Rational& constant_value() const;    // Constant only
  const std::string& parameter_name() const; // Parameter only
  ParamExpr lhs() const;                     // binary nodes
  ParamExpr rhs() const;                     // binary nodes
  ParamExpr operand() const;                 // Neg only

  /// Names of every parameter occurring in the expression.
  std::set<std::string> parameters() const;
  bool is_constant() const { return parameters().empty(); }

  /// Renders text that parse_expr() accepts and that evaluates to the same
  /// value under every binding.
  std::string to_string() const;

  struct Node;  // defined in the implementation file

private:
  explicit ParamExpr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;

  friend Rational eval_expr(const ParamExpr& expr, const Binding& binding);
};

/// Parses ASCII expression text.
///
/// Grammar (whitespace permitted between tokens):
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := ['-'] (number | identifier | '(' expr ')')
///   number := digits   identifier := [A-Za-z_][A-Za-z0-9_]*
///
/// Throws ParseError with a byte offset on any malformed input, including
/// empty input, trailing garbage, and non-ASCII bytes.
ParamExpr parse_expr(std::string_view text);

/// Evaluates `expr` under `binding`.  Throws EvalError naming the parameter
/// if one is unbound, or quoting the offending subexpression on division by
/// zero.
Rational eval_expr(const ParamExpr& expr, const Binding& binding);

/// "A=1, B=3/2" rendering, keys in map (i.e. lexicographic) order.
std::string binding_to_string(const Binding& binding);

}  // namespace homnorden
