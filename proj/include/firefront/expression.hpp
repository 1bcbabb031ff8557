#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace firefront {

/// Arithmetic over the variables t, x, y and the constant pi.
///
/// Grammar (whitespace-insensitive):
///
///     sum     := product (('+' | '-') product)*
///     product := unary (('*' | '/') unary)*
///     unary   := '-' unary | power
///     power   := primary ('^' unary)?          right-associative
///     primary := number | 't' | 'x' | 'y' | 'pi'
///              | func '(' sum ')' | '(' sum ')'
///     func    := sin | cos | tan | exp | sqrt | abs
///
/// Evaluation raises EvalError on division by zero, sqrt of a negative
/// number, or any non-finite intermediate result.
class Expression {
 public:
  struct Node;

  /// Throws ParseError carrying the byte offset of the problem.
  static Expression parse(std::string_view source);

  double eval(double t, double x, double y) const;

  /// Fully parenthesised rendering; reparses to a structurally equal tree.
  std::string to_string() const;
  const std::string& source() const { return source_; }
  bool uses_variable(char name) const;

  /// Structural equality of the syntax trees.
  friend bool operator==(const Expression& a, const Expression& b);

 private:
  Expression(std::shared_ptr<const Node> root, std::string source)
      : root_(std::move(root)), source_(std::move(source)) {}

  std::shared_ptr<const Node> root_;
  std::string source_;
};

}  // namespace firefront
