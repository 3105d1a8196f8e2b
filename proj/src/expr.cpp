#include "polyforge/expr.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

#include "polyforge/families.hpp"
#include "polyforge/formulas.hpp"

namespace polyforge {

namespace {

struct Token {
  enum Kind { Ident, Int, Punct, End } kind = End;
  std::string text;
  std::int64_t value = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  const Token& peek(std::size_t ahead = 0) {
    while (buffer_.size() <= ahead) buffer_.push_back(lex());
    return buffer_[ahead];
  }

  Token take() {
    peek();
    Token t = buffer_.front();
    buffer_.erase(buffer_.begin());
    return t;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::UsageError,
                what + " at position " + std::to_string(pos_) + " in '" +
                    text_ + "'");
  }

 private:
  Token lex() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ >= text_.size()) return Token{Token::End, "", 0};
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      std::string digits = text_.substr(start, pos_ - start);
      return Token{Token::Int, digits, std::stoll(digits)};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_' || text_[pos_] == '-'))
        ++pos_;
      return Token{Token::Ident, text_.substr(start, pos_ - start), 0};
    }
    if (std::string("(),[]:=").find(c) != std::string::npos) {
      ++pos_;
      return Token{Token::Punct, std::string(1, c), 0};
    }
    throw Error(ErrorCode::UsageError, std::string("unexpected character '") +
                                           c + "' in '" + text_ + "'");
  }

  std::string text_;
  std::size_t pos_ = 0;
  std::vector<Token> buffer_;
};

bool is_punct(const Token& t, const char* p) {
  return t.kind == Token::Punct && t.text == p;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  ConstructedPolytope parse() {
    ConstructedPolytope out = parse_expr();
    if (lex_.peek().kind != Token::End) lex_.fail("trailing input");
    return out;
  }

 private:
  std::int64_t expect_int() {
    if (lex_.peek().kind != Token::Int) lex_.fail("expected an integer");
    return lex_.take().value;
  }

  void expect_punct(const char* p) {
    if (!is_punct(lex_.peek(), p))
      lex_.fail(std::string("expected '") + p + "'");
    lex_.take();
  }

  ConstructedPolytope parse_expr() {
    if (lex_.peek().kind != Token::Ident) lex_.fail("expected a name");
    std::string name = lex_.take().text;
    if (is_punct(lex_.peek(), "(")) return parse_call(name);
    return parse_family(name);
  }

  ConstructedPolytope parse_call(const std::string& fn) {
    expect_punct("(");
    ConstructedPolytope out = [&] {
      if (fn == "simplex") return simplex(static_cast<int>(expect_int()));
      if (fn == "pyr") {
        ConstructedPolytope base = parse_expr();
        int t = 1;
        if (is_punct(lex_.peek(), ",")) {
          lex_.take();
          t = static_cast<int>(expect_int());
        }
        return kfold_pyramid(base, t);
      }
      if (fn == "prism") return prism(parse_expr());
      if (fn == "product" || fn == "dsum") {
        ConstructedPolytope a = parse_expr();
        expect_punct(",");
        ConstructedPolytope b = parse_expr();
        return fn == "product" ? product(a, b) : direct_sum(a, b);
      }
      if (fn == "wed") {
        ConstructedPolytope base = parse_expr();
        expect_punct(",");
        return parse_wedge_face(base);
      }
      if (fn == "trunc") {
        ConstructedPolytope base = parse_expr();
        expect_punct(",");
        return truncate_vertex(base, static_cast<int>(expect_int()));
      }
      lex_.fail("unknown construction '" + fn + "'");
    }();
    expect_punct(")");
    return out;
  }

  ConstructedPolytope parse_wedge_face(const ConstructedPolytope& base) {
    const Token& t = lex_.peek();
    if (t.kind == Token::Ident && (t.text == "handle" || t.text == "vertex")) {
      std::string kind = lex_.take().text;
      expect_punct(":");
      if (kind == "handle") {
        if (lex_.peek().kind != Token::Ident) lex_.fail("expected handle name");
        return wedge(base, lex_.take().text);
      }
      return wedge(base, vset::single(static_cast<int>(expect_int())));
    }
    if (is_punct(t, "[")) {
      lex_.take();
      VertexSet face = 0;
      face |= vset::single(static_cast<int>(expect_int()));
      while (is_punct(lex_.peek(), ",")) {
        lex_.take();
        face |= vset::single(static_cast<int>(expect_int()));
      }
      expect_punct("]");
      return wedge(base, face);
    }
    lex_.fail("expected handle:NAME, vertex:V or [v,...]");
  }

  std::size_t family_max_params(const std::string& name) {
    if (name == "sq" || name == "sigma3" || name == "wp") return 0;
    if (name == "simplex") return 1;
    if (name == "pm" || name == "ta" || name == "z") return 2;
    if (name == "triplex") return 2;
    if (name == "gT" || name == "gt") return 3;
    lex_.fail("unknown family '" + name + "'");
  }

  ConstructedPolytope parse_family(const std::string& name) {
    const std::size_t max_params = family_max_params(name);
    std::vector<int> params;
    std::optional<int> pyr_fold;
    while (is_punct(lex_.peek(), ":")) {
      lex_.take();
      if (lex_.peek().kind == Token::Ident && lex_.peek().text == "pyr") {
        lex_.take();
        expect_punct("=");
        pyr_fold = static_cast<int>(expect_int());
        break;
      }
      params.push_back(static_cast<int>(expect_int()));
      // Family parameters bind greedily up to the family's arity, so the
      // comma after 'triplex:2,2' inside a call still separates arguments.
      while (params.size() < max_params && is_punct(lex_.peek(), ",") &&
             lex_.peek(1).kind == Token::Int) {
        lex_.take();
        params.push_back(static_cast<int>(expect_int()));
      }
    }
    ConstructedPolytope out = dispatch_family(name, params);
    if (pyr_fold) out = kfold_pyramid(out, *pyr_fold);
    return out;
  }

  ConstructedPolytope dispatch_family(const std::string& name,
                                      const std::vector<int>& params) {
    auto arity = [&](std::size_t lo, std::size_t hi) {
      if (params.size() < lo || params.size() > hi)
        lex_.fail("wrong number of parameters for '" + name + "'");
    };
    if (name == "sq") {
      arity(0, 0);
      return families::square();
    }
    if (name == "simplex") {
      arity(1, 1);
      return simplex(params[0]);
    }
    if (name == "triplex") {
      arity(2, 2);
      return families::triplex(params[0], params[1]);
    }
    if (name == "gT" || name == "gt") {
      arity(3, 3);
      return families::grunbaum_t(params[0], params[1], params[2]);
    }
    if (name == "pm") {
      arity(1, 2);
      return params.size() == 1 ? families::pentasm(params[0])
                                : families::pentasm_pyr(params[0], params[1]);
    }
    if (name == "ta") {
      arity(1, 2);
      return params.size() == 1 ? families::ta(params[0])
                                : families::ta_pyr(params[0], params[1]);
    }
    if (name == "z") {
      arity(1, 2);
      return params.size() == 1 ? families::z(params[0])
                                : families::z_pyr(params[0], params[1]);
    }
    if (name == "sigma3") {
      arity(0, 0);
      return families::sigma3();
    }
    if (name == "wp") {
      arity(0, 0);
      return families::wp();
    }
    lex_.fail("unknown family '" + name + "'");
  }

  Lexer lex_;
};

}  // namespace

ConstructedPolytope build_from_spec(const std::string& spec) {
  return Parser(spec).parse();
}

std::int64_t eval_formula_spec(const std::string& spec) {
  std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorCode::UsageError, "formula spec needs 'name:args'");
  std::string name = spec.substr(0, colon);
  std::vector<int> args;
  std::stringstream rest(spec.substr(colon + 1));
  std::string piece;
  while (std::getline(rest, piece, ',')) {
    try {
      args.push_back(std::stoi(piece));
    } catch (const std::exception&) {
      throw Error(ErrorCode::UsageError, "bad integer '" + piece + "'");
    }
  }
  auto arity = [&](std::size_t want) {
    if (args.size() != want)
      throw Error(ErrorCode::UsageError,
                  "'" + name + "' takes " + std::to_string(want) + " arguments");
  };
  using namespace formulas;
  if (name == "binom") {
    arity(2);
    return binomial(args[0], args[1]);
  }
  if (name == "phi") {
    arity(3);
    return phi(args[0], args[1], args[2]);
  }
  if (name == "zeta") {
    arity(3);
    return zeta(args[0], args[1], args[2]);
  }
  if (name == "dplus2facets") {
    arity(4);
    return fk_dplus2_facets(args[0], args[1], args[2], args[3]);
  }
  if (name == "dplus2vertices") {
    arity(4);
    return fk_dplus2_vertices(args[0], args[1], args[2], args[3]);
  }
  if (name == "pentasm") {
    arity(2);
    return fk_pentasm(args[0], args[1]);
  }
  if (name == "pentasm-pyr") {
    arity(3);
    return fk_pentasm_pyr(args[0], args[1], args[2]);
  }
  if (name == "zfam") {
    arity(2);
    return fk_z(args[0], args[1]);
  }
  if (name == "refined-s2") {
    arity(3);
    return refined_s2_bound(args[0], args[1], args[2]);
  }
  throw Error(ErrorCode::UsageError, "unknown formula '" + name + "'");
}

}  // namespace polyforge
