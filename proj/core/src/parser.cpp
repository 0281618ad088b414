#include "noether/parser.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

namespace noether {

namespace {

struct Token {
  enum class Kind { lparen, rparen, atom, end };
  Kind kind;
  std::string_view text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token peek() {
    if (!lookahead_) lookahead_ = lex();
    return *lookahead_;
  }

  Token next() {
    Token t = peek();
    lookahead_.reset();
    return t;
  }

 private:
  Token lex() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ >= text_.size()) return {Token::Kind::end, {}, pos_};
    std::size_t start = pos_;
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      return {Token::Kind::lparen, text_.substr(start, 1), start};
    }
    if (ch == ')') {
      ++pos_;
      return {Token::Kind::rparen, text_.substr(start, 1), start};
    }
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return {Token::Kind::atom, text_.substr(start, pos_ - start), start};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<Token> lookahead_;
};

std::optional<long long> parse_integer(std::string_view s) {
  if (s.empty()) return std::nullopt;
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::optional<Rational> parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_integer(s);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto num = parse_integer(s.substr(0, slash));
  auto den = parse_integer(s.substr(slash + 1));
  if (!num || !den || *den <= 0) return std::nullopt;
  return Rational(*num, *den);
}

// x<digits> or A<digits>; returns the index.
std::optional<int> indexed_name(std::string_view s, char prefix) {
  if (s.size() < 2 || s[0] != prefix) return std::nullopt;
  auto idx = parse_integer(s.substr(1));
  if (!idx || *idx < 0) return std::nullopt;
  return static_cast<int>(*idx);
}

class Parser {
 public:
  Parser(std::string_view text, const FieldSystem& sys) : lexer_(text), sys_(sys) {}

  Expr parse_toplevel() {
    Expr e = parse();
    Token t = lexer_.peek();
    if (t.kind != Token::Kind::end)
      throw ParseError(t.offset, "trailing input after expression");
    return e;
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw ParseError(t.offset, msg);
  }

  int check_coordinate_index(const Token& t, int mu) {
    if (mu < 0 || mu >= sys_.dim())
      fail(t, "jet index out of range (base dimension is " +
                  std::to_string(sys_.dim()) + ")");
    return mu;
  }

  Expr parse() {
    Token t = lexer_.next();
    switch (t.kind) {
      case Token::Kind::end:
        fail(t, "unexpected end of input");
      case Token::Kind::rparen:
        fail(t, "unexpected ')'");
      case Token::Kind::atom:
        return parse_atom(t);
      case Token::Kind::lparen:
        return parse_list(t);
    }
    fail(t, "unreachable");
  }

  Expr parse_atom(const Token& t) {
    if (auto r = parse_rational(t.text)) return Expr::constant(*r);
    if (auto mu = indexed_name(t.text, 'x'))
      return Expr::coordinate(check_coordinate_index(t, *mu));
    if (auto mu = indexed_name(t.text, 'A'))
      return Expr::gauge(check_coordinate_index(t, *mu));
    if (t.text == "lambda") return Expr::lambda();
    if (t.text == "eps") return Expr::eps();
    if (auto alpha = sys_.field_index(t.text)) return Expr::field(*alpha);
    if (sys_.extern_index(t.text))
      fail(t, "extern '" + std::string(t.text) +
                  "' must be applied to its coordinate, e.g. (" +
                  std::string(t.text) + " x0)");
    fail(t, "unknown symbol '" + std::string(t.text) + "'");
  }

  Expr parse_list(const Token& open) {
    Token head = lexer_.next();
    if (head.kind != Token::Kind::atom) fail(head, "expected operator or name after '('");
    if (head.text == "+") return parse_nary(open, /*is_sum=*/true);
    if (head.text == "*") return parse_nary(open, /*is_sum=*/false);
    if (head.text == "pow") return parse_pow();
    if (head.text == "d") return parse_jet(head);
    return parse_extern_app(head);
  }

  Expr parse_nary(const Token& open, bool is_sum) {
    std::vector<Expr> items;
    while (lexer_.peek().kind != Token::Kind::rparen) {
      if (lexer_.peek().kind == Token::Kind::end)
        fail(lexer_.peek(), "missing ')'");
      items.push_back(parse());
    }
    lexer_.next();  // ')'
    if (items.empty())
      fail(open, is_sum ? "empty sum" : "empty product");
    return is_sum ? Expr::sum(std::move(items)) : Expr::product(std::move(items));
  }

  Expr parse_pow() {
    Expr base = parse();
    Token t = lexer_.next();
    if (t.kind != Token::Kind::atom)
      fail(t, "pow needs an integer exponent");
    auto exp = parse_integer(t.text);
    if (!exp || *exp < 0)
      fail(t, "pow exponent must be a non-negative integer");
    expect_rparen();
    return Expr::pow(std::move(base), static_cast<int>(*exp));
  }

  Expr parse_jet(const Token& head) {
    Token name = lexer_.next();
    if (name.kind != Token::Kind::atom) fail(name, "expected a name after 'd'");
    std::vector<int> derivs;
    while (lexer_.peek().kind == Token::Kind::atom) {
      Token t = lexer_.next();
      auto idx = parse_integer(t.text);
      if (!idx) fail(t, "expected a derivative index");
      derivs.push_back(check_coordinate_index(t, static_cast<int>(*idx)));
    }
    expect_rparen();
    if (derivs.empty()) fail(head, "'d' needs at least one index");
    if (auto alpha = sys_.field_index(name.text)) {
      if (derivs.size() > 2)
        fail(name, "jet variables above second order are outside the expression class");
      return Expr::field_jet(*alpha, std::move(derivs));
    }
    if (auto mu = indexed_name(name.text, 'A')) {
      check_coordinate_index(name, *mu);
      if (derivs.size() > 1)
        fail(name, "gauge potential jets are first order only");
      return Expr::gauge_jet(*mu, std::move(derivs));
    }
    if (name.text == "eps") {
      if (derivs.size() > 2) fail(name, "eps jets are at most second order");
      return Expr::eps(std::move(derivs));
    }
    fail(name, "'d' applies to a field, A<mu>, or eps; got '" +
                   std::string(name.text) + "'");
  }

  Expr parse_extern_app(const Token& head) {
    auto id = sys_.extern_index(head.text);
    if (!id) fail(head, "undeclared extern '" + std::string(head.text) + "'");
    Token arg = lexer_.next();
    if (arg.kind != Token::Kind::atom) fail(arg, "extern application needs a coordinate");
    auto mu = indexed_name(arg.text, 'x');
    if (!mu) fail(arg, "extern argument must be a coordinate like x0");
    check_coordinate_index(arg, *mu);
    if (*mu != sys_.extern_info(*id).arg)
      fail(arg, "extern '" + std::string(head.text) + "' is declared on x" +
                    std::to_string(sys_.extern_info(*id).arg));
    expect_rparen();
    return Expr::extern_fn(*id, *mu);
  }

  void expect_rparen() {
    Token t = lexer_.next();
    if (t.kind != Token::Kind::rparen) fail(t, "expected ')'");
  }

  Lexer lexer_;
  const FieldSystem& sys_;
};

std::string symbol_dsl(Symbol s, const FieldSystem& sys) {
  auto with_derivs = [&](std::string base, const std::vector<int>& derivs) {
    if (derivs.empty()) return base;
    std::string out = "(d " + base;
    for (int mu : derivs) out += " " + std::to_string(mu);
    return out + ")";
  };
  switch (s.kind()) {
    case Symbol::Kind::coordinate:
      return "x" + std::to_string(s.arg());
    case Symbol::Kind::field_jet:
      return with_derivs(sys.field_name(s.id()), s.derivs());
    case Symbol::Kind::gauge_jet:
      return with_derivs("A" + std::to_string(s.id()), s.derivs());
    case Symbol::Kind::eps_jet:
      return with_derivs("eps", s.derivs());
    case Symbol::Kind::extern_fn:
      return "(" + sys.extern_info(s.id()).name + " x" + std::to_string(s.arg()) + ")";
    case Symbol::Kind::lambda_param:
      return "lambda";
  }
  throw Error(Error::Code::internal, "unknown symbol kind");
}

}  // namespace

Expr parse_expr(std::string_view text, const FieldSystem& sys) {
  return Parser(text, sys).parse_toplevel();
}

std::string to_dsl(const Expr& e, const FieldSystem& sys) {
  const Expr::Node& n = e.node();
  if (const auto* c = std::get_if<Rational>(&n)) return c->str();
  if (const auto* s = std::get_if<Symbol>(&n)) return symbol_dsl(*s, sys);
  if (const auto* sum = std::get_if<Expr::Sum>(&n)) {
    std::string out = "(+";
    for (const Expr& t : sum->terms) out += " " + to_dsl(t, sys);
    return out + ")";
  }
  if (const auto* prod = std::get_if<Expr::Product>(&n)) {
    std::string out = "(*";
    for (const Expr& f : prod->factors) out += " " + to_dsl(f, sys);
    return out + ")";
  }
  const auto& power = std::get<Expr::Power>(n);
  return "(pow " + to_dsl(power.base, sys) + " " + std::to_string(power.exponent) + ")";
}

std::string to_dsl_canonical(const Expr& e, const FieldSystem& sys) {
  return to_dsl(canonicalize(e), sys);
}

}  // namespace noether
