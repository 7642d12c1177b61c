#ifndef FINRING_EXPR_HPP
#define FINRING_EXPR_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

struct SourcePos {
  int line = 1;
  int col = 1;
};

/// Lexical or syntax error with the offending position and, for syntax
/// errors, the expected-token set.
class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& message,
             std::string expected = "");
  SourcePos pos;
  std::string expected;
};

/// Evaluation failure carrying the source span of the offending
/// subexpression.
class EvalError : public std::runtime_error {
 public:
  EvalError(SourcePos pos, const std::string& message);
  SourcePos pos;
};

/// Ring-expression AST. Grammar (constructor names case-insensitive):
///   expr  := ctor "(" args ")"
///   ctor  := Zmod | GF | product | polyquot | fnring
///          | sdprod_alg | sdprod_file | table_file
///   args  := integers, "[c0,...,cn]" coefficient lists (ascending degree,
///            last = leading), nested exprs, or quoted paths
struct Expr {
  enum class Kind {
    Zmod,
    GF,
    Product,
    PolyQuot,
    FnRing,
    SdProdAlg,
    SdProdFile,
    TableFile,
  };
  Kind kind{};
  long long n = 0;  // Zmod modulus, GF prime, FnRing x_size
  long long k = 1;  // GF extension degree
  std::vector<long long> coeffs;
  std::string path;
  std::shared_ptr<const Expr> lhs, rhs;
  SourcePos pos;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse(const std::string& input);

/// Canonical pretty-printer; parse(render(e)) reproduces e.
std::string render(const Expr& e);

bool ast_equal(const Expr& a, const Expr& b);

/// Evaluates by delegating to the constructors; element labels are a
/// deterministic function of the expression.
FiniteRing eval(const Expr& e);

}  // namespace finring

#endif
