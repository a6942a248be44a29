#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace pga {

class ExprError : public std::runtime_error {
public:
  ExprError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t pos() const { return pos_; }

private:
  std::size_t pos_;
};

/// A parsed arithmetic expression over +, -, *, /, ^, the functions
/// sin cos tan exp log sqrt pow, numeric literals, and named variables.
/// Evaluation runs over plain doubles or over dual numbers, which is how the
/// `diff` command gets values and exact derivatives from one tree.
class Expression {
public:
  static Expression parse(const std::string& source);

  /// Variable names in order of first appearance.
  const std::vector<std::string>& variables() const { return vars_; }

  double eval(const std::map<std::string, double>& point) const;

  struct DiffResult {
    double value = 0.0;
    std::vector<std::pair<std::string, double>> partials;  // one per variable
  };
  /// Value and all partial derivatives at the point (multi-dual single pass).
  DiffResult differentiate(const std::map<std::string, double>& point) const;

  ~Expression();
  Expression(Expression&&) noexcept;
  Expression& operator=(Expression&&) noexcept;
  Expression(const Expression&) = delete;
  Expression& operator=(const Expression&) = delete;

  struct Node;  // AST node, defined in the implementation

private:
  Expression();
  std::unique_ptr<Node> root_;
  std::vector<std::string> vars_;
};

}  // namespace pga
