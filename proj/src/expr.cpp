#include "ifc/expr.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "ifc/errors.hpp"

namespace ifc {
namespace {

using Ptr = std::shared_ptr<const ParsedExpr>;

template <typename Node>
Ptr make(Node n) {
  return std::make_shared<const ParsedExpr>(ParsedExpr{std::move(n)});
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ParsedExpr run() {
    skip_ws();
    if (at_end()) fail("empty expression");
    Ptr e = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + src_[pos_] + "'");
    return *e;
  }

 private:
  Ptr expr() {
    Ptr left = term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        left = make(BinaryOp{BinaryOperator::Add, left, term()});
      } else if (accept('-')) {
        left = make(BinaryOp{BinaryOperator::Sub, left, term()});
      } else {
        return left;
      }
    }
  }

  Ptr term() {
    Ptr left = factor();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        left = make(BinaryOp{BinaryOperator::Mul, left, factor()});
      } else if (accept('/')) {
        left = make(BinaryOp{BinaryOperator::Div, left, factor()});
      } else {
        return left;
      }
    }
  }

  Ptr factor() {
    skip_ws();
    if (starts_number()) {
      const std::size_t at = pos_;
      const double lambda = number();
      skip_ws();
      if (!accept('*')) fail("expected '*' after scalar " + format_number(lambda));
      if (!(lambda > 0.0)) fail_at(at, "scalar must be positive");
      return make(ScalarApply{lambda, factor()});
    }
    return power();
  }

  Ptr power() {
    Ptr base = primary();
    for (;;) {
      skip_ws();
      if (!accept('^')) return base;
      skip_ws();
      const std::size_t at = pos_;
      if (!starts_number()) fail("expected exponent after '^'");
      const double exponent = number();
      if (!(exponent > 0.0)) fail_at(at, "exponent must be positive");
      base = make(PowerApply{base, exponent});
    }
  }

  Ptr primary() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    if (accept('X')) return make(IffVariable{});
    if (src_[pos_] != '(') fail(std::string("unexpected '") + src_[pos_] + "'");

    const std::size_t open = pos_;
    if (auto lit = try_ifn_literal()) return *lit;
    pos_ = open + 1;
    Ptr inner = expr();
    skip_ws();
    if (!accept(')')) fail("expected ')'");
    return inner;
  }

  // "(" number "," number ")"; leaves pos_ untouched when the input is not
  // a literal so that the caller can parse a parenthesised group instead.
  std::optional<Ptr> try_ifn_literal() {
    const std::size_t open = pos_;
    ++pos_;
    skip_ws();
    if (!starts_signed_number()) {
      pos_ = open;
      return std::nullopt;
    }
    const std::size_t save = pos_;
    signed_number();
    skip_ws();
    if (!accept(',')) {
      pos_ = open;
      return std::nullopt;
    }
    pos_ = save;
    const double u = signed_number();
    skip_ws();
    accept(',');
    skip_ws();
    if (!starts_signed_number()) fail("expected number in IFN literal");
    const double v = signed_number();
    skip_ws();
    if (!accept(')')) fail("expected ')' closing IFN literal");
    try {
      return make(IfnLiteral{IFN(u, v)});
    } catch (const DomainError&) {
      fail_at(open, "invalid IFN literal " + std::string(src_.substr(open, pos_ - open)) +
                        ": need 0 <= u, v <= 1 and u + v <= 1");
    }
  }

  bool starts_number() const {
    if (at_end()) return false;
    const char c = src_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) ||
           (c == '.' && pos_ + 1 < src_.size() &&
            std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])));
  }

  bool starts_signed_number() {
    if (at_end()) return false;
    if (src_[pos_] == '-' || src_[pos_] == '+') {
      ++pos_;
      const bool ok = starts_number();
      --pos_;
      return ok;
    }
    return starts_number();
  }

  double signed_number() {
    double sign = 1.0;
    if (accept('-')) {
      sign = -1.0;
    } else {
      accept('+');
    }
    return sign * number();
  }

  // decimal ["/" decimal]
  double number() {
    const double p = decimal();
    if (pos_ + 1 < src_.size() && src_[pos_] == '/') {
      ++pos_;
      if (starts_number()) {
        const std::size_t at = pos_;
        const double q = decimal();
        if (q == 0.0) fail_at(at, "zero denominator in fraction");
        return p / q;
      }
      --pos_;
    }
    return p;
  }

  double decimal() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (!at_end() && src_[pos_] == '.') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    if (!at_end() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t k = pos_ + 1;
      if (k < src_.size() && (src_[k] == '+' || src_[k] == '-')) ++k;
      if (k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]))) {
        pos_ = k;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      }
    }
    double value = 0.0;
    const auto res = std::from_chars(src_.data() + start, src_.data() + pos_, value);
    if (res.ec != std::errc() || res.ptr != src_.data() + pos_) fail_at(start, "malformed number");
    return value;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (!at_end() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_end() const { return pos_ >= src_.size(); }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < at && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, msg);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

int precedence(const ParsedExpr& e) {
  if (const auto* b = std::get_if<BinaryOp>(&e.node)) {
    return (b->op == BinaryOperator::Add || b->op == BinaryOperator::Sub) ? 1 : 2;
  }
  if (std::holds_alternative<ScalarApply>(e.node)) return 2;
  return 3;
}

char symbol(BinaryOperator op) {
  switch (op) {
    case BinaryOperator::Add:
      return '+';
    case BinaryOperator::Sub:
      return '-';
    case BinaryOperator::Mul:
      return '*';
    case BinaryOperator::Div:
      return '/';
  }
  return '?';
}

std::string wrap_if(bool cond, std::string s) { return cond ? "(" + s + ")" : s; }

const IFN* as_ifn(const Value& v) { return std::get_if<IFN>(&v); }
const IFF* as_iff(const Value& v) { return std::get_if<IFF>(&v); }

Value fold(const ParsedExpr& e, std::vector<std::string>& fallbacks) {
  return std::visit(
      [&](const auto& n) -> Value {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IfnLiteral>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, IffVariable>) {
          return IFF::identity();
        } else if constexpr (std::is_same_v<T, ScalarApply>) {
          Value inner = fold(*n.inner, fallbacks);
          if (const IFN* a = as_ifn(inner)) return scalar_mul(n.lambda, *a);
          return scalar_mul_iff(n.lambda, *as_iff(inner));
        } else if constexpr (std::is_same_v<T, PowerApply>) {
          Value base = fold(*n.base, fallbacks);
          if (const IFN* a = as_ifn(base)) return power(*a, n.exponent);
          return power_iff(*as_iff(base), n.exponent);
        } else {
          Value lhs = fold(*n.left, fallbacks);
          Value rhs = fold(*n.right, fallbacks);
          const IFN* a = as_ifn(lhs);
          const IFN* b = as_ifn(rhs);
          if (a && b) {
            switch (n.op) {
              case BinaryOperator::Add:
                return add(*a, *b);
              case BinaryOperator::Mul:
                return mul(*a, *b);
              case BinaryOperator::Sub: {
                const OpOutcome r = sub(*a, *b);
                if (r.fallback_used) {
                  fallbacks.push_back(to_string(*a) + " - " + to_string(*b) +
                                      " failed its condition; result is (0,1)");
                }
                return r.value;
              }
              case BinaryOperator::Div: {
                const OpOutcome r = div(*a, *b);
                if (r.fallback_used) {
                  fallbacks.push_back(to_string(*a) + " / " + to_string(*b) +
                                      " failed its condition; result is (1,0)");
                }
                return r.value;
              }
            }
          }
          if (n.op == BinaryOperator::Add && a && !b) return shift_iff(*a, *as_iff(rhs));
          throw TypeMismatchError(std::string("operator '") + symbol(n.op) +
                                  "' is not defined between " + (a ? "an IFN" : "a function") +
                                  " and " + (b ? "an IFN" : "a function") +
                                  " (only IFN op IFN and IFN + function are allowed)");
        }
      },
      e.node);
}

}  // namespace

bool operator==(const ParsedExpr& a, const ParsedExpr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, IfnLiteral>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, IffVariable>) {
          return true;
        } else if constexpr (std::is_same_v<T, BinaryOp>) {
          return x.op == y.op && *x.left == *y.left && *x.right == *y.right;
        } else if constexpr (std::is_same_v<T, ScalarApply>) {
          return x.lambda == y.lambda && *x.inner == *y.inner;
        } else {
          return x.exponent == y.exponent && *x.base == *y.base;
        }
      },
      a.node);
}

ParsedExpr parse(std::string_view input) { return Parser(input).run(); }

std::string print(const ParsedExpr& e) {
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IfnLiteral>) {
          return to_string(n.value);
        } else if constexpr (std::is_same_v<T, IffVariable>) {
          return "X";
        } else if constexpr (std::is_same_v<T, ScalarApply>) {
          return format_number(n.lambda) + "*" +
                 wrap_if(std::holds_alternative<BinaryOp>(n.inner->node), print(*n.inner));
        } else if constexpr (std::is_same_v<T, PowerApply>) {
          return wrap_if(precedence(*n.base) < 3, print(*n.base)) + "^" +
                 format_number(n.exponent);
        } else {
          const int p = precedence(e);
          return wrap_if(precedence(*n.left) < p, print(*n.left)) + symbol(n.op) +
                 wrap_if(precedence(*n.right) <= p, print(*n.right));
        }
      },
      e.node);
}

Evaluation evaluate(const ParsedExpr& e) {
  Evaluation out{IFN::O(), {}};
  out.value = fold(e, out.fallbacks);
  return out;
}

IFN parse_ifn(std::string_view input) {
  const Evaluation ev = evaluate(parse(input));
  if (const IFN* a = std::get_if<IFN>(&ev.value)) return *a;
  throw TypeMismatchError("expected an IFN, got a function: " + std::string(input));
}

IFF parse_iff(std::string_view input) {
  const Evaluation ev = evaluate(parse(input));
  if (const IFF* f = std::get_if<IFF>(&ev.value)) return *f;
  throw TypeMismatchError("expected a function of X, got an IFN: " + std::string(input));
}

}  // namespace ifc
