#include "firefront/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "firefront/error.hpp"

namespace firefront {

enum class NodeKind { Number, Variable, Negate, Add, Sub, Mul, Div, Pow, Call };
enum class Func { Sin, Cos, Tan, Exp, Sqrt, Abs };

struct Expression::Node {
  NodeKind kind;
  double value = 0.0;
  char variable = 0;
  Func func = Func::Sin;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

struct FuncName {
  std::string_view name;
  Func func;
};
constexpr FuncName kFunctions[] = {{"sin", Func::Sin},   {"cos", Func::Cos},
                                   {"tan", Func::Tan},   {"exp", Func::Exp},
                                   {"sqrt", Func::Sqrt}, {"abs", Func::Abs}};

std::string_view func_name(Func f) {
  for (const auto& entry : kFunctions) {
    if (entry.func == f) return entry.name;
  }
  return "?";
}

NodePtr make(NodeKind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Expression::Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse() {
    NodePtr root = sum();
    skip_space();
    if (pos_ != src_.size()) throw ParseError(pos_, "unexpected trailing input");
    return root;
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr sum() {
    NodePtr lhs = product();
    for (;;) {
      if (accept('+')) {
        lhs = make(NodeKind::Add, lhs, product());
      } else if (accept('-')) {
        lhs = make(NodeKind::Sub, lhs, product());
      } else {
        return lhs;
      }
    }
  }

  NodePtr product() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = make(NodeKind::Mul, lhs, unary());
      } else if (accept('/')) {
        lhs = make(NodeKind::Div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(NodeKind::Negate, unary());
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(NodeKind::Pow, base, unary());
    return base;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= src_.size()) throw ParseError(pos_, "unexpected end of expression");
    const char c = src_[pos_];
    if (c == '(') {
      const std::size_t open = pos_++;
      NodePtr inner = sum();
      if (!accept(')')) throw ParseError(open, "unbalanced parenthesis");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
      if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look]))) {
        pos_ = look;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      }
    }
    double value = 0.0;
    const auto [end, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (ec != std::errc() || end != src_.data() + pos_) {
      throw ParseError(start, "malformed number");
    }
    auto n = std::make_shared<Expression::Node>();
    n->kind = NodeKind::Number;
    n->value = value;
    return n;
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::string_view word = src_.substr(start, pos_ - start);
    if (word == "t" || word == "x" || word == "y") {
      auto n = std::make_shared<Expression::Node>();
      n->kind = NodeKind::Variable;
      n->variable = word[0];
      return n;
    }
    if (word == "pi") {
      auto n = std::make_shared<Expression::Node>();
      n->kind = NodeKind::Number;
      n->value = std::numbers::pi;
      n->variable = 'p';  // remembered so that printing gives back "pi"
      return n;
    }
    for (const auto& entry : kFunctions) {
      if (entry.name == word) {
        if (!accept('(')) throw ParseError(pos_, "expected '(' after " + std::string(word));
        const std::size_t open = pos_ - 1;
        NodePtr arg = sum();
        if (!accept(')')) throw ParseError(open, "unbalanced parenthesis");
        auto n = std::make_shared<Expression::Node>();
        n->kind = NodeKind::Call;
        n->func = entry.func;
        n->lhs = std::move(arg);
        return n;
      }
    }
    throw ParseError(start, "unknown identifier '" + std::string(word) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

[[noreturn]] void eval_error(const std::string& what) {
  throw Error(ErrorKind::Eval, "expression evaluation failed: " + what);
}

double checked(double v) {
  if (!std::isfinite(v)) eval_error("non-finite result");
  return v;
}

double evaluate(const Expression::Node& n, double t, double x, double y) {
  switch (n.kind) {
    case NodeKind::Number:
      return n.value;
    case NodeKind::Variable:
      return n.variable == 't' ? t : (n.variable == 'x' ? x : y);
    case NodeKind::Negate:
      return -evaluate(*n.lhs, t, x, y);
    case NodeKind::Add:
      return checked(evaluate(*n.lhs, t, x, y) + evaluate(*n.rhs, t, x, y));
    case NodeKind::Sub:
      return checked(evaluate(*n.lhs, t, x, y) - evaluate(*n.rhs, t, x, y));
    case NodeKind::Mul:
      return checked(evaluate(*n.lhs, t, x, y) * evaluate(*n.rhs, t, x, y));
    case NodeKind::Div: {
      const double num = evaluate(*n.lhs, t, x, y);
      const double den = evaluate(*n.rhs, t, x, y);
      if (den == 0.0) eval_error("division by zero");
      return checked(num / den);
    }
    case NodeKind::Pow:
      return checked(std::pow(evaluate(*n.lhs, t, x, y), evaluate(*n.rhs, t, x, y)));
    case NodeKind::Call: {
      const double a = evaluate(*n.lhs, t, x, y);
      switch (n.func) {
        case Func::Sin: return std::sin(a);
        case Func::Cos: return std::cos(a);
        case Func::Tan: return checked(std::tan(a));
        case Func::Exp: return checked(std::exp(a));
        case Func::Sqrt:
          if (a < 0.0) eval_error("sqrt of a negative number");
          return std::sqrt(a);
        case Func::Abs: return std::fabs(a);
      }
    }
  }
  eval_error("corrupt expression tree");
}

void print(const Expression::Node& n, std::ostream& out) {
  switch (n.kind) {
    case NodeKind::Number:
      if (n.variable == 'p') {
        out << "pi";
      } else {
        char buf[32];
        const auto res = std::to_chars(buf, buf + sizeof buf, n.value);
        out.write(buf, res.ptr - buf);
      }
      return;
    case NodeKind::Variable:
      out << n.variable;
      return;
    case NodeKind::Negate:
      out << "(-";
      print(*n.lhs, out);
      out << ')';
      return;
    case NodeKind::Call:
      out << func_name(n.func) << '(';
      print(*n.lhs, out);
      out << ')';
      return;
    default:
      break;
  }
  const char op = n.kind == NodeKind::Add   ? '+'
                  : n.kind == NodeKind::Sub ? '-'
                  : n.kind == NodeKind::Mul ? '*'
                  : n.kind == NodeKind::Div ? '/'
                                            : '^';
  out << '(';
  print(*n.lhs, out);
  out << ' ' << op << ' ';
  print(*n.rhs, out);
  out << ')';
}

bool uses(const Expression::Node& n, char name) {
  if (n.kind == NodeKind::Variable && n.variable == name) return true;
  return (n.lhs && uses(*n.lhs, name)) || (n.rhs && uses(*n.rhs, name));
}

bool same(const Expression::Node* a, const Expression::Node* b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case NodeKind::Number:
      if (a->value != b->value) return false;
      break;
    case NodeKind::Variable:
      if (a->variable != b->variable) return false;
      break;
    case NodeKind::Call:
      if (a->func != b->func) return false;
      break;
    default:
      break;
  }
  return same(a->lhs.get(), b->lhs.get()) && same(a->rhs.get(), b->rhs.get());
}

}  // namespace

Expression Expression::parse(std::string_view source) {
  Parser parser(source);
  return Expression(parser.parse(), std::string(source));
}

double Expression::eval(double t, double x, double y) const {
  return checked(evaluate(*root_, t, x, y));
}

std::string Expression::to_string() const {
  std::ostringstream out;
  print(*root_, out);
  return out.str();
}

bool Expression::uses_variable(char name) const { return uses(*root_, name); }

bool operator==(const Expression& a, const Expression& b) {
  return same(a.root_.get(), b.root_.get());
}

}  // namespace firefront
