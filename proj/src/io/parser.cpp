#include "hirschlab/io/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

#include "hirschlab/errors.hpp"

namespace hirschlab::io {

namespace {

enum class Tok { ident, number, plus, minus, star, caret, slash, lparen, rparen, lbracket, rbracket, semicolon, comma, colon, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

constexpr std::array<std::string_view, 7> kKeywords{"ring", "order", "gens", "primes", "weights", "reg", "hvec"};

bool is_keyword(std::string_view s) {
  return std::find(kKeywords.begin(), kKeywords.end(), s) != kKeywords.end();
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
      continue;
    }
    if (std::isspace(c)) {
      advance();
      continue;
    }
    const auto l0 = line;
    const auto c0 = col;
    if (std::isalpha(c) || c == '_') {
      std::string id;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        id += text[i];
        advance();
      }
      out.push_back({Tok::ident, std::move(id), l0, c0});
      continue;
    }
    if (std::isdigit(c)) {
      std::string num;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        num += text[i];
        advance();
      }
      out.push_back({Tok::number, std::move(num), l0, c0});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '^': kind = Tok::caret; break;
      case '/': kind = Tok::slash; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case '[': kind = Tok::lbracket; break;
      case ']': kind = Tok::rbracket; break;
      case ';': kind = Tok::semicolon; break;
      case ',': kind = Tok::comma; break;
      case ':': kind = Tok::colon; break;
      default:
        throw ParseError(l0, c0, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
    out.push_back({kind, std::string(1, static_cast<char>(c)), l0, c0});
    advance();
  }
  out.push_back({Tok::end, "end of input", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  InputDocument document() {
    InputDocument doc;
    while (!at(Tok::end)) {
      const Token& t = peek();
      if (t.kind != Tok::ident || !is_keyword(t.text)) {
        fail(t, "expected a statement", {"ring", "order", "gens:", "primes:", "weights:", "reg:", "hvec:"});
      }
      if (t.text == "ring") {
        if (doc.ring) fail(t, "duplicate ring declaration");
        next();
        doc.ring = ring_decl();
        ring_ = doc.ring;
      } else if (t.text == "order") {
        if (doc.order) fail(t, "duplicate order declaration");
        next();
        doc.order = order_decl();
      } else if (t.text == "gens") {
        require_ring(t);
        next();
        expect(Tok::colon, "':'");
        auto polys = poly_list();
        doc.blocks.emplace_back(GensBlock{IdealPresentation(ring_, std::move(polys))});
      } else if (t.text == "primes") {
        require_ring(t);
        next();
        expect(Tok::colon, "':'");
        PrimesBlock block;
        do {
          expect(Tok::lbracket, "'['");
          block.primes.emplace_back(ring_, poly_list());
          expect(Tok::rbracket, "']'");
        } while (at(Tok::lbracket));
        doc.blocks.emplace_back(std::move(block));
      } else if (t.text == "weights" || t.text == "hvec") {
        const bool weights = t.text == "weights";
        if (weights ? doc.weights.has_value() : doc.hvec.has_value()) fail(t, "duplicate " + t.text + " annotation");
        next();
        expect(Tok::colon, "':'");
        std::vector<std::int64_t> values{integer()};
        while (at(Tok::comma)) {
          next();
          values.push_back(integer());
        }
        (weights ? doc.weights : doc.hvec) = std::move(values);
      } else {  // reg
        if (doc.reg) fail(t, "duplicate reg annotation");
        next();
        expect(Tok::colon, "':'");
        doc.reg = integer();
      }
    }
    if (!doc.ring) fail(peek(), "missing ring declaration", {"ring"});
    if (doc.blocks.empty()) fail(peek(), "no gens: or primes: block", {"gens:", "primes:"});
    return doc;
  }

  Polynomial single(const RingPtr& ring) {
    ring_ = ring;
    auto p = expr();
    if (!at(Tok::end)) fail(peek(), "unexpected token '" + peek().text + "'", {"+", "-", "*", "end of input"});
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] static void fail(const Token& t, const std::string& msg, std::vector<std::string> expected = {}) {
    throw ParseError(t.line, t.column, msg, std::move(expected));
  }

  const Token& expect(Tok k, const std::string& what) {
    if (!at(k)) fail(peek(), "unexpected '" + peek().text + "'", {what});
    return next();
  }

  void require_ring(const Token& t) const {
    if (!ring_) fail(t, "polynomials before the ring declaration", {"ring"});
  }

  std::int64_t integer() {
    bool negative = false;
    if (at(Tok::minus)) {
      next();
      negative = true;
    }
    const Token& t = expect(Tok::number, "integer");
    try {
      auto v = std::stoll(t.text);
      return negative ? -v : v;
    } catch (const std::out_of_range&) {
      fail(t, "integer out of range");
    }
  }

  RingPtr ring_decl() {
    const Token& f = expect(Tok::ident, "QQ or GF");
    CoefficientField field = CoefficientField::rationals();
    if (f.text == "GF") {
      expect(Tok::lparen, "'('");
      const Token& p = expect(Tok::number, "prime");
      try {
        field = CoefficientField::prime_field(std::stoul(p.text));
      } catch (const std::exception&) {
        fail(p, "characteristic " + p.text + " is not a prime");
      }
      expect(Tok::rparen, "')'");
    } else if (f.text != "QQ") {
      fail(f, "unknown coefficient field '" + f.text + "'", {"QQ", "GF"});
    }
    expect(Tok::lbracket, "'['");
    std::vector<std::string> names;
    do {
      if (!names.empty()) next();
      const Token& v = expect(Tok::ident, "variable name");
      if (is_keyword(v.text) || v.text == "QQ" || v.text == "GF") fail(v, "reserved word '" + v.text + "' used as a variable");
      if (std::find(names.begin(), names.end(), v.text) != names.end()) fail(v, "duplicate variable '" + v.text + "'");
      names.push_back(v.text);
    } while (at(Tok::comma));
    expect(Tok::rbracket, "']'");
    return make_ring(std::move(names), field);
  }

  TermOrder order_decl() {
    const Token& t = expect(Tok::ident, "term order");
    if (t.text == "lex") return TermOrder::lex();
    if (t.text == "deglex") return TermOrder::deglex();
    if (t.text == "degrevlex") return TermOrder::degrevlex();
    fail(t, "unknown term order '" + t.text + "'", {"lex", "deglex", "degrevlex"});
  }

  bool starts_poly() const {
    const Token& t = peek();
    return t.kind == Tok::number || t.kind == Tok::lparen || t.kind == Tok::minus ||
           (t.kind == Tok::ident && !is_keyword(t.text));
  }

  std::vector<Polynomial> poly_list() {
    std::vector<Polynomial> polys;
    do {
      if (!polys.empty()) {
        next();  // ';'
        if (!starts_poly()) break;  // trailing separator
      }
      const Token& start = peek();
      auto p = expr();
      if (p.is_zero()) fail(start, "generator is the zero polynomial");
      polys.push_back(std::move(p));
    } while (at(Tok::semicolon));
    return polys;
  }

  // expr := term (('+'|'-') term)*
  Polynomial expr() {
    Polynomial acc = term();
    while (at(Tok::plus) || at(Tok::minus)) {
      bool minus = next().kind == Tok::minus;
      Polynomial rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  // term := unary ('*' unary)*
  Polynomial term() {
    Polynomial acc = unary();
    while (true) {
      if (at(Tok::star)) {
        next();
        acc = acc * unary();
      } else if (at(Tok::ident) || at(Tok::number) || at(Tok::lparen)) {
        fail(peek(), "implicit multiplication is not allowed", {"*", "+", "-", "^", ";"});
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (at(Tok::minus)) {
      next();
      return -unary();
    }
    return power();
  }

  // power := primary ('^' number)?
  Polynomial power() {
    Polynomial base = primary();
    if (!at(Tok::caret)) return base;
    next();
    const Token& e = expect(Tok::number, "exponent");
    unsigned long n = 0;
    try {
      n = std::stoul(e.text);
    } catch (const std::exception&) {
      fail(e, "exponent out of range");
    }
    if (n > 10000) fail(e, "exponent out of range");
    Polynomial out = Polynomial::constant(ring_, 1);
    for (unsigned long k = 0; k < n; ++k) out = out * base;
    return out;
  }

  Polynomial primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        next();
        Rational value(mpz_class(t.text));
        if (at(Tok::slash)) {
          next();
          const Token& d = expect(Tok::number, "denominator");
          if (!ring_->field().is_rationals()) fail(t, "rational literal is not in " + ring_->field().to_string());
          mpz_class den(d.text);
          if (den == 0) fail(d, "zero denominator");
          value = Rational(value.get_num(), den);
          value.canonicalize();
        }
        return Polynomial::constant(ring_, value);
      }
      case Tok::ident: {
        next();
        if (is_keyword(t.text)) fail(t, "unexpected keyword '" + t.text + "'", {"polynomial"});
        auto idx = ring_->index_of(t.text);
        if (!idx) fail(t, "unknown variable '" + t.text + "'");
        return Polynomial::variable(ring_, *idx);
      }
      case Tok::lparen: {
        next();
        auto inner = expr();
        expect(Tok::rparen, "')'");
        return inner;
      }
      default:
        fail(t, "unexpected '" + t.text + "'", {"number", "variable", "(", "-"});
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  RingPtr ring_;
};

}  // namespace

InputDocument parse_document(std::string_view text) { return Parser(text).document(); }

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return Parser(text).single(ring); }

}  // namespace hirschlab::io
