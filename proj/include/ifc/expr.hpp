#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ifc/iff.hpp"
#include "ifc/ifn.hpp"

namespace ifc {

// Textual language for IFN literals and IFF expressions.
//
//   ifn    := "(" number "," number ")"
//   iff    := "X" | iff "^" number | number "*" iff | ifn "+" iff
//   expr   := ifn (("+"|"-"|"*"|"/") ifn)* | iff
//   number := decimal ["/" decimal]       e.g. 0.25, 1e-3, 5/9
//
// ASCII operators stand for ⊕ (+), ⊖ (-), ⊗ (*), ⊘ (/). Binary operators are
// left-associative with ^ binding tighter than * and /, which bind tighter
// than + and -. Parentheses group subexpressions. Whitespace is ignored.

struct ParsedExpr;

enum class BinaryOperator { Add, Sub, Mul, Div };

struct IfnLiteral {
  IFN value;
};

/// The IFF variable X (identity function).
struct IffVariable {};

struct BinaryOp {
  BinaryOperator op;
  std::shared_ptr<const ParsedExpr> left;
  std::shared_ptr<const ParsedExpr> right;
};

/// λ * inner.
struct ScalarApply {
  double lambda;
  std::shared_ptr<const ParsedExpr> inner;
};

/// base ^ exponent.
struct PowerApply {
  std::shared_ptr<const ParsedExpr> base;
  double exponent;
};

struct ParsedExpr {
  std::variant<IfnLiteral, IffVariable, BinaryOp, ScalarApply, PowerApply> node;
};

/// Structural equality (numbers compared exactly).
bool operator==(const ParsedExpr& a, const ParsedExpr& b);

/// Throws ParseError ("line:col: message") on syntax errors and on literals
/// that are not IFNs.
ParsedExpr parse(std::string_view input);

/// Canonical text that parses back to the same tree.
std::string print(const ParsedExpr& e);

using Value = std::variant<IFN, IFF>;

struct Evaluation {
  Value value;
  /// One entry per partial operation (⊖, ⊘) that returned its fallback.
  std::vector<std::string> fallbacks;
};

/// Folds IFN subtrees through the IFN operations and builds IFFs from IFF
/// subtrees. Mixing the two is a TypeMismatchError except `ifn + iff`,
/// which shifts the function by the constant.
Evaluation evaluate(const ParsedExpr& e);

/// parse + evaluate, requiring an IFN result.
IFN parse_ifn(std::string_view input);
/// parse + evaluate, requiring an IFF result.
IFF parse_iff(std::string_view input);

}  // namespace ifc
