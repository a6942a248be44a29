#include "pgakit/expr.hpp"

#include <cctype>
#include <cmath>

#include "pgakit/dual.hpp"

namespace pga {

namespace {

enum class Op { Add, Sub, Mul, Div, Pow, Neg, Num, Var, Call1, Call2 };

enum class Fn { Sin, Cos, Tan, Exp, Log, Sqrt, Pow };

}  // namespace

struct Expression::Node {
  Op op;
  double number = 0.0;
  std::size_t var = 0;
  Fn fn = Fn::Sin;
  std::unique_ptr<Node> lhs, rhs;
};

namespace {

using Node = Expression::Node;

class Parser {
public:
  Parser(const std::string& src, std::vector<std::string>& vars)
      : src_(src), vars_(vars) {}

  std::unique_ptr<Node> run() {
    auto node = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) throw ExprError("unexpected trailing input", pos_);
    return node;
  }

private:
  std::unique_ptr<Node> parse_expr() {
    auto lhs = parse_term();
    while (true) {
      skip_ws();
      if (match('+')) {
        lhs = binary(Op::Add, std::move(lhs), parse_term());
      } else if (match('-')) {
        lhs = binary(Op::Sub, std::move(lhs), parse_term());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Node> parse_term() {
    auto lhs = parse_unary();
    while (true) {
      skip_ws();
      if (match('*')) {
        lhs = binary(Op::Mul, std::move(lhs), parse_unary());
      } else if (match('/')) {
        lhs = binary(Op::Div, std::move(lhs), parse_unary());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Node> parse_unary() {
    skip_ws();
    if (match('-')) {
      auto node = std::make_unique<Node>();
      node->op = Op::Neg;
      node->lhs = parse_unary();
      return node;
    }
    return parse_power();
  }

  std::unique_ptr<Node> parse_power() {
    auto base = parse_primary();
    skip_ws();
    if (match('^')) {
      // Right-associative; -x^2 parses as -(x^2).
      return binary(Op::Pow, std::move(base), parse_unary());
    }
    return base;
  }

  std::unique_ptr<Node> parse_primary() {
    skip_ws();
    if (pos_ >= src_.size()) throw ExprError("unexpected end of expression", pos_);
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = parse_expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
    throw ExprError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::unique_ptr<Node> parse_number() {
    std::size_t end = pos_;
    while (end < src_.size() &&
           (std::isdigit(static_cast<unsigned char>(src_[end])) || src_[end] == '.' ||
            src_[end] == 'e' || src_[end] == 'E' ||
            ((src_[end] == '+' || src_[end] == '-') && end > pos_ &&
             (src_[end - 1] == 'e' || src_[end - 1] == 'E')))) {
      ++end;
    }
    auto node = std::make_unique<Node>();
    node->op = Op::Num;
    try {
      std::size_t used = 0;
      node->number = std::stod(src_.substr(pos_, end - pos_), &used);
      if (used != end - pos_) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ExprError("bad numeric literal", pos_);
    }
    pos_ = end;
    return node;
  }

  std::unique_ptr<Node> parse_ident() {
    std::size_t end = pos_;
    while (end < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[end])) ||
                                 src_[end] == '_')) {
      ++end;
    }
    const std::string name = src_.substr(pos_, end - pos_);
    const std::size_t start = pos_;
    pos_ = end;
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '(') {
      ++pos_;
      auto node = std::make_unique<Node>();
      if (name == "pow") {
        node->op = Op::Call2;
        node->fn = Fn::Pow;
        node->lhs = parse_expr();
        expect(',');
        node->rhs = parse_expr();
      } else {
        node->op = Op::Call1;
        if (name == "sin") node->fn = Fn::Sin;
        else if (name == "cos") node->fn = Fn::Cos;
        else if (name == "tan") node->fn = Fn::Tan;
        else if (name == "exp") node->fn = Fn::Exp;
        else if (name == "log") node->fn = Fn::Log;
        else if (name == "sqrt") node->fn = Fn::Sqrt;
        else throw ExprError("unknown function '" + name + "'", start);
        node->lhs = parse_expr();
      }
      expect(')');
      return node;
    }
    auto node = std::make_unique<Node>();
    node->op = Op::Var;
    node->var = var_index(name);
    return node;
  }

  std::size_t var_index(const std::string& name) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) return i;
    }
    vars_.push_back(name);
    return vars_.size() - 1;
  }

  std::unique_ptr<Node> binary(Op op, std::unique_ptr<Node> lhs,
                               std::unique_ptr<Node> rhs) {
    auto node = std::make_unique<Node>();
    node->op = op;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool match(char c) {
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (!match(c)) throw ExprError(std::string("expected '") + c + "'", pos_);
  }

  const std::string& src_;
  std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

// Plain-double versions, found by ordinary lookup; the dual-number overloads
// arrive through argument-dependent lookup instead. Domain checks mirror the
// lifted versions so both evaluation modes fail identically.
double sin(double x) { return std::sin(x); }
double cos(double x) { return std::cos(x); }
double tan(double x) { return std::tan(x); }
double exp(double x) { return std::exp(x); }
double log(double x) {
  if (x <= 0.0) throw DomainError("log of a non-positive value", x);
  return std::log(x);
}
double sqrt(double x) {
  if (x < 0.0) throw DomainError("sqrt of a negative value", x);
  return std::sqrt(x);
}
double pow(double a, double b) {
  if (b == static_cast<long long>(b) && std::abs(b) <= 64) {
    double out = 1.0;
    const int k = static_cast<int>(std::abs(b));
    for (int i = 0; i < k; ++i) out *= a;
    return b < 0 ? 1.0 / out : out;
  }
  if (a <= 0.0) throw DomainError("pow of a non-positive base", a);
  return std::pow(a, b);
}

template <typename T, typename MakeConst>
T eval_node(const Node& n, const std::vector<T>& env, const MakeConst& constant) {
  switch (n.op) {
    case Op::Num: return constant(n.number);
    case Op::Var: return env[n.var];
    case Op::Neg: return -eval_node(*n.lhs, env, constant);
    case Op::Add:
      return eval_node(*n.lhs, env, constant) + eval_node(*n.rhs, env, constant);
    case Op::Sub:
      return eval_node(*n.lhs, env, constant) - eval_node(*n.rhs, env, constant);
    case Op::Mul:
      return eval_node(*n.lhs, env, constant) * eval_node(*n.rhs, env, constant);
    case Op::Div:
      return eval_node(*n.lhs, env, constant) / eval_node(*n.rhs, env, constant);
    case Op::Pow:
      // Literal exponents go through the exact integer path inside pow().
      if (n.rhs->op == Op::Num) {
        return pow(eval_node(*n.lhs, env, constant), n.rhs->number);
      }
      return pow(eval_node(*n.lhs, env, constant), eval_node(*n.rhs, env, constant));
    case Op::Call2:
      if (n.rhs->op == Op::Num) {
        return pow(eval_node(*n.lhs, env, constant), n.rhs->number);
      }
      return pow(eval_node(*n.lhs, env, constant), eval_node(*n.rhs, env, constant));
    case Op::Call1: {
      const T arg = eval_node(*n.lhs, env, constant);
      switch (n.fn) {
        case Fn::Sin: return sin(arg);
        case Fn::Cos: return cos(arg);
        case Fn::Tan: return tan(arg);
        case Fn::Exp: return exp(arg);
        case Fn::Log: return log(arg);
        case Fn::Sqrt: return sqrt(arg);
        case Fn::Pow: break;
      }
      break;
    }
  }
  throw std::logic_error("expr: malformed node");
}

}  // namespace

Expression::Expression() = default;
Expression::~Expression() = default;
Expression::Expression(Expression&&) noexcept = default;
Expression& Expression::operator=(Expression&&) noexcept = default;

Expression Expression::parse(const std::string& source) {
  Expression e;
  Parser p(source, e.vars_);
  e.root_ = p.run();
  return e;
}

double Expression::eval(const std::map<std::string, double>& point) const {
  std::vector<double> env;
  env.reserve(vars_.size());
  for (const auto& v : vars_) {
    const auto it = point.find(v);
    if (it == point.end()) {
      throw std::invalid_argument("eval: missing value for variable '" + v + "'");
    }
    env.push_back(it->second);
  }
  struct {
    double operator()(double v) const { return v; }
  } constant;
  return eval_node<double>(*root_, env, constant);
}

Expression::DiffResult Expression::differentiate(
    const std::map<std::string, double>& point) const {
  std::vector<MultiDual> env;
  env.reserve(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto it = point.find(vars_[i]);
    if (it == point.end()) {
      throw std::invalid_argument("differentiate: missing value for variable '" +
                                  vars_[i] + "'");
    }
    env.push_back(MultiDual::seeded(it->second, vars_.size(), i));
  }
  const std::size_t n = vars_.size();
  const auto constant = [n](double v) { return MultiDual::constant(v, n); };
  const MultiDual out = eval_node<MultiDual>(*root_, env, constant);

  DiffResult res;
  res.value = out.re();
  for (std::size_t i = 0; i < n; ++i) {
    res.partials.emplace_back(vars_[i], out.du()[i]);
  }
  return res;
}

}  // namespace pga
