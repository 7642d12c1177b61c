#include "finring/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "finring/construct.hpp"
#include "finring/io.hpp"
#include "finring/semidirect.hpp"

namespace finring {

namespace {
std::string at(SourcePos p) {
  return " at line " + std::to_string(p.line) + ", column " +
         std::to_string(p.col);
}
}  // namespace

ParseError::ParseError(SourcePos pos_, const std::string& message,
                       std::string expected_)
    : std::runtime_error(message + at(pos_) +
                         (expected_.empty() ? "" : " (expected " + expected_ +
                                                       ")")),
      pos(pos_),
      expected(std::move(expected_)) {}

EvalError::EvalError(SourcePos pos_, const std::string& message)
    : std::runtime_error(message + at(pos_)), pos(pos_) {}

namespace {

enum class Tok { Ident, Int, LParen, RParen, LBracket, RBracket, Comma,
                 String, End };

struct Token {
  Tok kind;
  std::string text;
  long long value = 0;
  SourcePos pos;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "constructor name";
    case Tok::Int: return "integer";
    case Tok::LParen: return "\"(\"";
    case Tok::RParen: return "\")\"";
    case Tok::LBracket: return "\"[\"";
    case Tok::RBracket: return "\"]\"";
    case Tok::Comma: return "\",\"";
    case Tok::String: return "quoted path";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[i_])))
      bump();
    current_.pos = pos_;
    if (i_ >= src_.size()) {
      current_.kind = Tok::End;
      current_.text.clear();
      return;
    }
    char c = src_[i_];
    if (c == '(') return single(Tok::LParen);
    if (c == ')') return single(Tok::RParen);
    if (c == '[') return single(Tok::LBracket);
    if (c == ']') return single(Tok::RBracket);
    if (c == ',') return single(Tok::Comma);
    if (c == '"') return string_token();
    if (std::isdigit(static_cast<unsigned char>(c))) return int_token();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return ident_token();
    throw ParseError(pos_, std::string("lexical error: unexpected '") + c +
                               "'");
  }

  void single(Tok kind) {
    current_.kind = kind;
    current_.text = src_[i_];
    bump();
  }

  void string_token() {
    SourcePos start = pos_;
    bump();  // opening quote
    std::string text;
    while (i_ < src_.size() && src_[i_] != '"') {
      if (src_[i_] == '\n')
        throw ParseError(start, "lexical error: unterminated path");
      text += src_[i_];
      bump();
    }
    if (i_ >= src_.size())
      throw ParseError(start, "lexical error: unterminated path");
    bump();  // closing quote
    current_.kind = Tok::String;
    current_.text = std::move(text);
    current_.pos = start;
  }

  void int_token() {
    SourcePos start = pos_;
    long long v = 0;
    std::string text;
    while (i_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[i_]))) {
      v = v * 10 + (src_[i_] - '0');
      if (v > 1'000'000'000'000LL)
        throw ParseError(start, "lexical error: numeric literal overflows");
      text += src_[i_];
      bump();
    }
    current_.kind = Tok::Int;
    current_.text = std::move(text);
    current_.value = v;
    current_.pos = start;
  }

  void ident_token() {
    SourcePos start = pos_;
    std::string text;
    while (i_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[i_])) ||
            src_[i_] == '_')) {
      text += src_[i_];
      bump();
    }
    current_.kind = Tok::Ident;
    current_.text = std::move(text);
    current_.pos = start;
  }

  void bump() {
    if (src_[i_] == '\n') {
      ++pos_.line;
      pos_.col = 1;
    } else {
      ++pos_.col;
    }
    ++i_;
  }

  const std::string& src_;
  size_t i_ = 0;
  SourcePos pos_{};
  Token current_{};
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) {}

  ExprPtr parse_toplevel() {
    ExprPtr e = parse_expr();
    expect(Tok::End);
    return e;
  }

 private:
  Token expect(Tok kind) {
    if (lex_.peek().kind != kind)
      throw ParseError(lex_.peek().pos,
                       "syntax error: unexpected " +
                           std::string(tok_name(lex_.peek().kind)),
                       tok_name(kind));
    return lex_.take();
  }

  long long expect_int() { return expect(Tok::Int).value; }

  ExprPtr parse_expr() {
    Token name = expect(Tok::Ident);
    std::string lower = name.text;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    static const std::map<std::string, Expr::Kind> ctors = {
        {"zmod", Expr::Kind::Zmod},
        {"gf", Expr::Kind::GF},
        {"product", Expr::Kind::Product},
        {"polyquot", Expr::Kind::PolyQuot},
        {"fnring", Expr::Kind::FnRing},
        {"sdprod_alg", Expr::Kind::SdProdAlg},
        {"sdprod_file", Expr::Kind::SdProdFile},
        {"table_file", Expr::Kind::TableFile},
    };
    auto it = ctors.find(lower);
    if (it == ctors.end())
      throw ParseError(name.pos,
                       "syntax error: unknown constructor \"" + name.text +
                           "\"",
                       "one of Zmod, GF, product, polyquot, fnring, "
                       "sdprod_alg, sdprod_file, table_file");
    auto node = std::make_shared<Expr>();
    node->kind = it->second;
    node->pos = name.pos;
    expect(Tok::LParen);
    switch (node->kind) {
      case Expr::Kind::Zmod:
        node->n = expect_int();
        break;
      case Expr::Kind::GF:
        node->n = expect_int();
        if (lex_.peek().kind == Tok::Comma) {
          lex_.take();
          node->k = expect_int();
        }
        break;
      case Expr::Kind::Product:
      case Expr::Kind::SdProdAlg:
        node->lhs = parse_expr();
        expect(Tok::Comma);
        node->rhs = parse_expr();
        break;
      case Expr::Kind::PolyQuot:
        node->lhs = parse_expr();
        expect(Tok::Comma);
        node->coeffs = parse_coeff_list();
        break;
      case Expr::Kind::FnRing:
        node->n = expect_int();
        expect(Tok::Comma);
        node->rhs = parse_expr();
        break;
      case Expr::Kind::SdProdFile:
      case Expr::Kind::TableFile:
        node->path = expect(Tok::String).text;
        break;
    }
    expect(Tok::RParen);
    return node;
  }

  std::vector<long long> parse_coeff_list() {
    expect(Tok::LBracket);
    std::vector<long long> out;
    out.push_back(expect_int());
    while (lex_.peek().kind == Tok::Comma) {
      lex_.take();
      out.push_back(expect_int());
    }
    expect(Tok::RBracket);
    return out;
  }

  Lexer lex_;
};

}  // namespace

ExprPtr parse(const std::string& input) {
  return Parser(input).parse_toplevel();
}

std::string render(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Zmod:
      return "Zmod(" + std::to_string(e.n) + ")";
    case Expr::Kind::GF:
      return e.k == 1 ? "GF(" + std::to_string(e.n) + ")"
                      : "GF(" + std::to_string(e.n) + "," +
                            std::to_string(e.k) + ")";
    case Expr::Kind::Product:
      return "product(" + render(*e.lhs) + ", " + render(*e.rhs) + ")";
    case Expr::Kind::PolyQuot: {
      std::string cs = "[";
      for (size_t i = 0; i < e.coeffs.size(); ++i) {
        if (i) cs += ",";
        cs += std::to_string(e.coeffs[i]);
      }
      return "polyquot(" + render(*e.lhs) + ", " + cs + "])";
    }
    case Expr::Kind::FnRing:
      return "fnring(" + std::to_string(e.n) + ", " + render(*e.rhs) + ")";
    case Expr::Kind::SdProdAlg:
      return "sdprod_alg(" + render(*e.lhs) + ", " + render(*e.rhs) + ")";
    case Expr::Kind::SdProdFile:
      return "sdprod_file(\"" + e.path + "\")";
    case Expr::Kind::TableFile:
      return "table_file(\"" + e.path + "\")";
  }
  return "";
}

bool ast_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.n != b.n || a.k != b.k || a.coeffs != b.coeffs ||
      a.path != b.path)
    return false;
  if (bool(a.lhs) != bool(b.lhs) || bool(a.rhs) != bool(b.rhs)) return false;
  if (a.lhs && !ast_equal(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !ast_equal(*a.rhs, *b.rhs)) return false;
  return true;
}

namespace {

int narrow(long long v, SourcePos pos, const char* what) {
  if (v < 0 || v > order_cap())
    throw EvalError(pos, std::string(what) + " out of range");
  return int(v);
}

FiniteRing eval_field(const Expr& e, const char* role) {
  FiniteRing r = eval(e);
  if (!r.is_field())
    throw EvalError(e.pos, std::string(role) + " must evaluate to a field");
  return r;
}

}  // namespace

FiniteRing eval(const Expr& e) {
  try {
    switch (e.kind) {
      case Expr::Kind::Zmod:
        return make_zmod(narrow(e.n, e.pos, "modulus"));
      case Expr::Kind::GF:
        return make_gf(narrow(e.n, e.pos, "prime"),
                       narrow(e.k, e.pos, "degree"));
      case Expr::Kind::Product:
        return make_product(eval(*e.lhs), eval(*e.rhs));
      case Expr::Kind::PolyQuot: {
        FiniteRing kappa = eval_field(*e.lhs, "polyquot coefficient ring");
        std::vector<int> coeffs;
        for (long long c : e.coeffs)
          coeffs.push_back(narrow(c, e.pos, "coefficient"));
        return make_poly_quotient(kappa, coeffs);
      }
      case Expr::Kind::FnRing:
        return make_function_ring(narrow(e.n, e.pos, "x_size"),
                                  eval_field(*e.rhs, "fnring target"));
      case Expr::Kind::SdProdAlg: {
        FiniteRing a = eval(*e.lhs);
        FiniteRing kappa = eval_field(*e.rhs, "sdprod_alg field");
        if (a.order == kappa.order && a.add_table == kappa.add_table &&
            a.mul_table == kappa.mul_table && a.one == kappa.one)
          return algebra_sdprod(a, kappa, identity_hom(kappa));
        if (is_prime(kappa.order) && a.unital() &&
            a.characteristic() == kappa.order)
          return algebra_sdprod(a, kappa,
                                prime_subfield_embedding(a, kappa));
        throw EvalError(e.pos,
                        "sdprod_alg: no canonical embedding of the field "
                        "into the algebra; provide explicit actions via "
                        "sdprod_file");
      }
      case Expr::Kind::SdProdFile:
        return build_sdprod(load_sdspec_file(e.path));
      case Expr::Kind::TableFile:
        return load_ring_file(e.path);
    }
  } catch (const EvalError&) {
    throw;
  } catch (const std::exception& ex) {
    throw EvalError(e.pos, ex.what());
  }
  throw EvalError(e.pos, "unreachable expression kind");
}

}  // namespace finring
