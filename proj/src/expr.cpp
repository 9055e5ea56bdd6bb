#include "colombeau/expr.hpp"

#include <cctype>

#include "colombeau/error.hpp"

namespace colombeau {

namespace {

const std::vector<std::string> kOperand{"number", "'('",   "'-'",  "eps", "alpha", "chi",  "O",    "quat",  "piece",
                                        "i",      "j",     "k",    "I",   "abs",   "sqrt", "conj", "normsq"};

constexpr long kMaxPower = 256;

bool is_function(std::string_view w) { return w == "abs" || w == "sqrt" || w == "conj" || w == "normsq"; }

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Node parse_all() {
    Node n = expr();
    if (peek().kind != Token::End) fail({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
    return n;
  }

 private:
  struct Token {
    enum Kind { Number, Word, Punct, End } kind;
    std::string_view text;
    std::size_t offset;
  };

  Token peek() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == s_.size()) return {Token::End, {}, pos_};
    const auto is = [&](std::size_t i, auto pred) { return i < s_.size() && pred(static_cast<unsigned char>(s_[i])); };
    std::size_t end = pos_;
    if (is(end, ::isdigit)) {
      while (is(end, ::isdigit)) ++end;
      return {Token::Number, s_.substr(pos_, end - pos_), pos_};
    }
    if (is(end, ::isalpha)) {
      while (is(end, ::isalnum) || is(end, [](int c) { return c == '_'; })) ++end;
      return {Token::Word, s_.substr(pos_, end - pos_), pos_};
    }
    return {Token::Punct, s_.substr(pos_, 1), pos_};
  }

  Token next() {
    Token t = peek();
    pos_ = t.offset + t.text.size();
    return t;
  }

  bool at(char c) {
    const Token t = peek();
    return t.kind == Token::Punct && t.text[0] == c;
  }

  bool accept(char c) {
    if (!at(c)) return false;
    next();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string("'") + c + "'"});
  }

  void expect_word(std::string_view w) {
    const Token t = peek();
    if (t.kind != Token::Word || t.text != w) fail({std::string(w)});
    next();
  }

  [[noreturn]] void fail(std::vector<std::string> expected) { throw ParseError(peek().offset, std::move(expected)); }

  Integer natural() {
    const Token t = peek();
    if (t.kind != Token::Number) fail({"number"});
    next();
    return Integer(std::string(t.text));
  }

  Rational signed_rational() {
    const bool negative = accept('-');
    Integer num = natural();
    Integer den = 1;
    if (accept('/')) {
      const std::size_t at_den = peek().offset;
      den = natural();
      if (den == 0) throw ParseError(at_den, {"nonzero denominator"});
    }
    Rational q(negative ? Integer(-num) : num, den);
    q.canonicalize();
    return q;
  }

  // After '^': "(q)" or a bare natural.
  Rational exponent() {
    if (accept('(')) {
      Rational q = signed_rational();
      expect(')');
      return q;
    }
    if (peek().kind != Token::Number) fail({"'('", "number"});
    return Rational(natural());
  }

  Node make(Node::Kind kind, std::size_t offset, std::vector<Node> children = {}) {
    Node n{kind, offset, Rational(0), {}, {}, std::move(children)};
    return n;
  }

  Node expr() {
    Node left = term();
    for (;;) {
      const std::size_t off = peek().offset;
      if (accept('+')) {
        left = make(Node::Kind::Add, off, {std::move(left), term()});
      } else if (accept('-')) {
        left = make(Node::Kind::Sub, off, {std::move(left), term()});
      } else {
        return left;
      }
    }
  }

  Node term() {
    Node left = unary();
    for (;;) {
      const std::size_t off = peek().offset;
      if (accept('*')) {
        left = make(Node::Kind::Mul, off, {std::move(left), unary()});
      } else if (accept('/')) {
        left = make(Node::Kind::Div, off, {std::move(left), unary()});
      } else {
        return left;
      }
    }
  }

  Node unary() {
    const std::size_t off = peek().offset;
    if (accept('-')) return make(Node::Kind::Neg, off, {unary()});
    if (accept('+')) return unary();
    return power();
  }

  Node power() {
    Node base = primary();
    while (at('^')) {
      const std::size_t off = next().offset;
      const std::size_t at_exp = peek().offset;
      const Rational e = exponent();
      if (e.get_den() != 1 || sgn(e) < 0 || e > kMaxPower) throw ParseError(at_exp, {"natural exponent up to 256"});
      Node p = make(Node::Kind::Pow, off, {std::move(base)});
      p.number = e;
      base = std::move(p);
    }
    return base;
  }

  IndexSet index_set(const Token& chi_word) {
    if (!at('{')) fail({"'{'"});
    const std::size_t close = s_.find('}', pos_);
    if (close == std::string_view::npos) throw ParseError(s_.size(), {"'}'"});
    const std::string_view text = s_.substr(chi_word.offset, close + 1 - chi_word.offset);
    pos_ = close + 1;
    try {
      return IndexSet::parse(text);
    } catch (const ParseError& e) {
      throw e.shifted(chi_word.offset);
    }
  }

  Node primary() {
    const Token t = peek();
    if (t.kind == Token::Number) {
      Node n = make(Node::Kind::Number, t.offset);
      n.number = Rational(natural());
      return n;
    }
    if (accept('(')) {
      Node inner = expr();
      expect(')');
      return inner;
    }
    if (t.kind != Token::Word) fail(kOperand);
    next();
    const std::string_view w = t.text;
    if (w == "eps") {
      Node n = make(Node::Kind::Alpha, t.offset);
      n.number = accept('^') ? exponent() : Rational(1);
      return n;
    }
    if (w == "alpha") {
      Node n = make(Node::Kind::Alpha, t.offset);
      expect('(');
      n.number = signed_rational();
      expect(')');
      return n;
    }
    if (w == "O") {
      Node n = make(Node::Kind::BigO, t.offset);
      expect('(');
      expect_word("eps");
      n.number = accept('^') ? exponent() : Rational(1);
      expect(')');
      return n;
    }
    if (w == "I") return make(Node::Kind::Imaginary, t.offset);
    if (w == "i" || w == "j" || w == "k") {
      Node n = make(Node::Kind::Unit, t.offset);
      n.name = std::string(w);
      return n;
    }
    if (w == "chi") {
      Node n = make(Node::Kind::Chi, t.offset);
      n.regions.push_back(index_set(t));
      return n;
    }
    if (w == "quat") {
      Node n = make(Node::Kind::Quat, t.offset);
      expect('(');
      for (int c = 0; c < 4; ++c) {
        if (c > 0) expect(';');
        n.children.push_back(expr());
      }
      expect(')');
      return n;
    }
    if (w == "piece") {
      Node n = make(Node::Kind::Piece, t.offset);
      expect('[');
      do {
        const Token c = peek();
        if (c.kind != Token::Word || c.text != "chi") fail({"chi"});
        next();
        n.regions.push_back(index_set(c));
        expect(':');
        n.children.push_back(expr());
      } while (accept(';'));
      expect(']');
      return n;
    }
    if (is_function(w)) {
      Node n = make(Node::Kind::Call, t.offset);
      n.name = std::string(w);
      expect('(');
      n.children.push_back(expr());
      expect(')');
      return n;
    }
    throw ParseError(t.offset, kOperand);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::pair<GenNumber, GenNumber> same_field(GenNumber a, GenNumber b) {
  if (a.field() != b.field()) {
    a = a.to_field(Field::Complex);
    b = b.to_field(Field::Complex);
  }
  return {std::move(a), std::move(b)};
}

template <class ScalarOp, class QuatOp>
Value combine(const Value& a, const Value& b, ScalarOp sop, QuatOp qop) {
  if (std::holds_alternative<GenNumber>(a) && std::holds_alternative<GenNumber>(b)) {
    auto [x, y] = same_field(std::get<GenNumber>(a), std::get<GenNumber>(b));
    return sop(x, y);
  }
  return qop(as_quaternion(a), as_quaternion(b));
}

class Evaluator {
 public:
  explicit Evaluator(const Rational& window) : window_(window) {}

  Value eval(const Node& n) const {
    using K = Node::Kind;
    switch (n.kind) {
      case K::Number: return GenNumber::constant(n.number);
      case K::Alpha: return alpha(n.number);
      case K::BigO: return GenNumber::big_o(n.number);
      case K::Imaginary: return GenNumber::constant(Coefficient(0, 1));
      case K::Unit:
        return n.name == "i" ? GenQuaternion::i() : n.name == "j" ? GenQuaternion::j() : GenQuaternion::k();
      case K::Chi: return chi(n.regions.front());
      case K::Quat:
        return GenQuaternion(scalar(n.children[0]), scalar(n.children[1]), scalar(n.children[2]),
                             scalar(n.children[3]));
      case K::Piece: return piecewise(n);
      case K::Call: return call(n.name, eval(n.children[0]));
      case K::Neg: return std::visit([](const auto& x) -> Value { return -x; }, eval(n.children[0]));
      case K::Add: return add(eval(n.children[0]), eval(n.children[1]));
      case K::Sub:
        return combine(
            eval(n.children[0]), eval(n.children[1]), [](auto& x, auto& y) { return x - y; },
            [](const GenQuaternion& x, const GenQuaternion& y) { return x - y; });
      case K::Mul: return mul(eval(n.children[0]), eval(n.children[1]));
      case K::Div: return div(eval(n.children[0]), eval(n.children[1]));
      case K::Pow: {
        const Value base = eval(n.children[0]);
        Value out = GenNumber(1);
        for (Integer e = n.number.get_num(); e > 0; --e) out = mul(out, base);
        return out;
      }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown expression node");
  }

 private:
  GenNumber scalar(const Node& n) const { return as_scalar(eval(n)); }

  static Value add(const Value& a, const Value& b) {
    return combine(
        a, b, [](auto& x, auto& y) { return x + y; },
        [](const GenQuaternion& x, const GenQuaternion& y) { return x + y; });
  }

  static Value mul(const Value& a, const Value& b) {
    return combine(
        a, b, [](auto& x, auto& y) { return x * y; },
        [](const GenQuaternion& x, const GenQuaternion& y) { return x * y; });
  }

  Value div(const Value& a, const Value& b) const {
    if (const auto* s = std::get_if<GenNumber>(&b)) return mul(a, invert(*s, window_));
    return mul(a, qinvert(std::get<GenQuaternion>(b), window_));
  }

  Value call(const std::string& f, const Value& v) const {
    if (const auto* x = std::get_if<GenNumber>(&v)) {
      if (f == "abs") return abs(*x);
      if (f == "sqrt") return sqrt(*x, window_);
      if (f == "conj") return x->conj();
      return abs_sq(*x);
    }
    const auto& q = std::get<GenQuaternion>(v);
    if (f == "abs") return norm(q, window_);
    if (f == "conj") return q.conj();
    if (f == "normsq") return norm_sq(q);
    throw Error(ErrorKind::InvalidArgument, f + " is not defined for quaternions");
  }

  Value piecewise(const Node& n) const {
    IndexSet seen = IndexSet::none();
    for (const auto& r : n.regions) {
      if (!seen.intersect(r).eventual().is_empty())
        throw Error(ErrorKind::InvalidArgument, "piece regions overlap at " + r.to_string());
      seen = seen.unite(r);
    }
    if (!seen.eventual().is_all()) throw Error(ErrorKind::InvalidArgument, "piece regions do not cover the naturals");
    Value out = GenNumber(0);
    for (std::size_t k = 0; k < n.regions.size(); ++k) out = add(out, mul(chi(n.regions[k]), eval(n.children[k])));
    return out;
  }

  Rational window_;
};

}  // namespace

Node parse(std::string_view text) { return Parser(text).parse_all(); }

Value evaluate(const Node& node, const Rational& window) { return Evaluator(window).eval(node); }

GenNumber as_scalar(const Value& v) {
  if (const auto* x = std::get_if<GenNumber>(&v)) return *x;
  throw Error(ErrorKind::InvalidArgument, "expected a scalar, got " + to_string(std::get<GenQuaternion>(v)));
}

GenQuaternion as_quaternion(const Value& v) {
  if (const auto* q = std::get_if<GenQuaternion>(&v)) return *q;
  return GenQuaternion(std::get<GenNumber>(v));
}

std::string to_string(const Value& v) {
  return std::visit([](const auto& x) { return to_string(x); }, v);
}

}  // namespace colombeau
