#include "sympent/statexpr.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace sympent {

namespace {

struct Token {
  enum class Kind { Number, Ident, Ket, Punct, End };
  Kind kind;
  std::string text;     // ident name, punct char, ket body
  double value = 0;     // Number
  bool imaginary = false;
  int line = 1, column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) bump();
    current_ = Token{};
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_.kind = Token::Kind::End;
      return;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
              text_[pos_] == 'e' || text_[pos_] == 'E' ||
              ((text_[pos_] == '+' || text_[pos_] == '-') && pos_ > start &&
               (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E'))))
        bump();
      current_.kind = Token::Kind::Number;
      current_.text = text_.substr(start, pos_ - start);
      try {
        current_.value = std::stod(current_.text);
      } catch (const std::exception&) {
        throw ParseError("invalid number '" + current_.text + "'", current_.line, current_.column,
                         "number");
      }
      if (pos_ < text_.size() && text_[pos_] == 'i') {
        current_.imaginary = true;
        bump();
      }
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_'))
        bump();
      current_.kind = Token::Kind::Ident;
      current_.text = text_.substr(start, pos_ - start);
      return;
    }
    if (c == '|') {
      bump();
      size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != '>') bump();
      if (pos_ >= text_.size())
        throw ParseError("unterminated ket", current_.line, current_.column, "'>'");
      current_.kind = Token::Kind::Ket;
      current_.text = text_.substr(start, pos_ - start);
      bump();  // '>'
      return;
    }
    if (std::string("+-*/()@=,").find(c) != std::string::npos) {
      current_.kind = Token::Kind::Punct;
      current_.text = std::string(1, c);
      bump();
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, column_, "");
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string text_;
  size_t pos_ = 0;
  int line_ = 1, column_ = 1;
  Token current_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  StateExprPtr parse_input() {
    auto e = parse_expr();
    int local_dim = 0;
    if (is_punct("@")) {
      lex_.take();
      const Token d = lex_.take();
      if (d.kind != Token::Kind::Ident || d.text != "d")
        throw ParseError("expected dimension annotation", d.line, d.column, "'d'");
      expect_punct("=");
      const Token n = lex_.take();
      if (n.kind != Token::Kind::Number || n.imaginary || n.value < 2 ||
          n.value != std::floor(n.value))
        throw ParseError("invalid local dimension", n.line, n.column, "integer >= 2");
      local_dim = static_cast<int>(n.value);
    }
    const Token& end = lex_.peek();
    if (end.kind != Token::Kind::End)
      throw ParseError("trailing input '" + end.text + "'", end.line, end.column, "end of input");
    if (local_dim) {
      auto root = std::make_shared<StateExpr>(*e);
      root->local_dim = local_dim;
      return root;
    }
    return e;
  }

 private:
  bool is_punct(const std::string& p) const {
    return lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == p;
  }
  void expect_punct(const std::string& p) {
    const Token t = lex_.take();
    if (t.kind != Token::Kind::Punct || t.text != p)
      throw ParseError("unexpected token '" + t.text + "'", t.line, t.column, "'" + p + "'");
  }

  StateExprPtr parse_expr() {
    auto node = std::make_shared<StateExpr>();
    node->kind = StateExpr::Kind::Sum;
    node->children.push_back(parse_term());
    while (is_punct("+") || is_punct("-")) {
      const bool minus = lex_.take().text == "-";
      auto term = parse_term();
      if (minus) {
        auto neg = std::make_shared<StateExpr>();
        neg->kind = StateExpr::Kind::Scale;
        neg->scalar = -1.0;
        neg->children.push_back(term);
        term = neg;
      }
      node->children.push_back(term);
    }
    if (node->children.size() == 1) return node->children[0];
    return node;
  }

  bool scalar_ahead() const {
    const Token& t = lex_.peek();
    return t.kind == Token::Kind::Number ||
           (t.kind == Token::Kind::Ident && (t.text == "sqrt" || t.text == "i"));
  }

  StateExprPtr parse_term() {
    if (is_punct("-")) {
      // unary minus on a whole term; folded into an existing scale factor so
      // that printing stays a fixed point of parse-then-print
      lex_.take();
      auto inner = parse_term();
      if (inner->kind == StateExpr::Kind::Scale) {
        auto node = std::make_shared<StateExpr>(*inner);
        node->scalar = -inner->scalar;
        return node;
      }
      auto node = std::make_shared<StateExpr>();
      node->kind = StateExpr::Kind::Scale;
      node->scalar = -1.0;
      node->children.push_back(inner);
      return node;
    }
    if (scalar_ahead()) {
      const cplx s = parse_scalar();
      expect_punct("*");
      auto atom = parse_chain();
      auto node = std::make_shared<StateExpr>();
      node->kind = StateExpr::Kind::Scale;
      node->scalar = s;
      node->children.push_back(atom);
      return maybe_divide(node);
    }
    return maybe_divide(parse_chain());
  }

  StateExprPtr maybe_divide(StateExprPtr node) {
    while (is_punct("/")) {
      lex_.take();
      const cplx s = parse_scalar();
      if (std::abs(s) == 0.0) {
        const Token& t = lex_.peek();
        throw ParseError("division by zero scalar", t.line, t.column, "");
      }
      auto div = std::make_shared<StateExpr>();
      div->kind = StateExpr::Kind::Scale;
      div->scalar = 1.0 / s;
      div->children.push_back(node);
      node = div;
    }
    return node;
  }

  StateExprPtr parse_chain() {
    auto node = parse_atom();
    while (lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == "x") {
      lex_.take();
      auto rhs = parse_atom();
      if (node->kind == StateExpr::Kind::Tensor) {
        auto ext = std::make_shared<StateExpr>(*node);
        ext->children.push_back(rhs);
        node = ext;
      } else {
        auto t = std::make_shared<StateExpr>();
        t->kind = StateExpr::Kind::Tensor;
        t->children.push_back(node);
        t->children.push_back(rhs);
        node = t;
      }
    }
    return node;
  }

  StateExprPtr parse_atom() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Ket) return parse_ket();
    if (t.kind == Token::Kind::Ident) return parse_call();
    if (is_punct("(")) {
      lex_.take();
      auto e = parse_expr();
      expect_punct(")");
      return e;
    }
    throw ParseError("unexpected token '" + t.text + "'", t.line, t.column,
                     "ket, constructor call or '('");
  }

  StateExprPtr parse_ket() {
    const Token t = lex_.take();
    auto node = std::make_shared<StateExpr>();
    node->kind = StateExpr::Kind::Ket;
    if (t.text.find(',') != std::string::npos) {
      std::stringstream ss(t.text);
      std::string part;
      while (std::getline(ss, part, ',')) {
        try {
          node->digits.push_back(std::stoi(part));
        } catch (const std::exception&) {
          throw ParseError("invalid ket entry '" + part + "'", t.line, t.column, "integer");
        }
      }
    } else {
      for (char c : t.text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw ParseError(std::string("invalid ket digit '") + c + "'", t.line, t.column,
                           "digit 0-9");
        node->digits.push_back(c - '0');
      }
    }
    if (node->digits.empty()) throw ParseError("empty ket", t.line, t.column, "digits");
    return node;
  }

  StateExprPtr parse_call() {
    const Token name = lex_.take();
    auto node = std::make_shared<StateExpr>();
    node->kind = StateExpr::Kind::Call;
    node->name = name.text;
    expect_punct("(");
    if (!is_punct(")")) {
      node->args.push_back(parse_scalar());
      while (is_punct(",")) {
        lex_.take();
        node->args.push_back(parse_scalar());
      }
    }
    expect_punct(")");
    return node;
  }

  cplx parse_scalar() {
    cplx v = parse_scalar_factor();
    while (is_punct("*") || is_punct("/")) {
      // a '*' may belong to "scalar '*' atom"; only consume when a scalar follows
      const bool mul = lex_.peek().text == "*";
      if (mul) {
        Lexer save = lex_;  // single-token lookahead past '*'
        lex_.take();
        if (!scalar_ahead()) {
          lex_ = save;
          break;
        }
        v *= parse_scalar_factor();
      } else {
        lex_.take();
        const cplx d = parse_scalar_factor();
        if (std::abs(d) == 0.0)
          throw ParseError("division by zero scalar", lex_.peek().line, lex_.peek().column, "");
        v /= d;
      }
    }
    return v;
  }

  cplx parse_scalar_factor() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Punct && t.text == "-") {
      lex_.take();
      return -parse_scalar_factor();
    }
    if (t.kind == Token::Kind::Number) {
      const Token n = lex_.take();
      return n.imaginary ? cplx(0, n.value) : cplx(n.value);
    }
    if (t.kind == Token::Kind::Ident && t.text == "i") {
      lex_.take();
      return cplx(0, 1);
    }
    if (t.kind == Token::Kind::Ident && t.text == "sqrt") {
      lex_.take();
      expect_punct("(");
      const cplx inner = parse_scalar();
      expect_punct(")");
      return std::sqrt(inner);
    }
    if (t.kind == Token::Kind::Punct && t.text == "(") {
      lex_.take();
      const cplx inner = parse_scalar();
      expect_punct(")");
      return inner;
    }
    throw ParseError("expected scalar, got '" + t.text + "'", t.line, t.column,
                     "number, i, sqrt or '('");
  }

  Lexer lex_;
};

void format_scalar(std::ostream& os, cplx s) {
  if (s.imag() == 0.0) {
    os << s.real();
  } else if (s.real() == 0.0) {
    os << s.imag() << "i";
  } else {
    os << "(" << s.real() << "+" << s.imag() << "i)";
  }
}

void print_node(std::ostream& os, const StateExpr& e) {
  switch (e.kind) {
    case StateExpr::Kind::Ket: {
      os << "|";
      bool wide = false;
      for (int d : e.digits) wide = wide || d > 9;
      for (size_t i = 0; i < e.digits.size(); ++i) {
        if (wide && i) os << ",";
        os << e.digits[i];
      }
      os << ">";
      break;
    }
    case StateExpr::Kind::Call: {
      os << e.name << "(";
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) os << ",";
        format_scalar(os, e.args[i]);
      }
      os << ")";
      break;
    }
    case StateExpr::Kind::Scale:
      format_scalar(os, e.scalar);
      os << "*(";
      print_node(os, *e.children[0]);
      os << ")";
      break;
    case StateExpr::Kind::Sum:
      os << "(";
      for (size_t i = 0; i < e.children.size(); ++i) {
        if (i) os << " + ";
        print_node(os, *e.children[i]);
      }
      os << ")";
      break;
    case StateExpr::Kind::Tensor:
      for (size_t i = 0; i < e.children.size(); ++i) {
        if (i) os << " x ";
        os << "(";
        print_node(os, *e.children[i]);
        os << ")";
      }
      break;
  }
}

struct Value {
  std::vector<int> dims;
  cvec amps;  // unnormalized
};

int to_int_arg(const cplx& z, const std::string& where) {
  if (z.imag() != 0.0 || z.real() != std::floor(z.real()))
    throw EvalError(where + ": expected an integer argument");
  return static_cast<int>(z.real());
}

Value from_state(const MultipartiteState& s) { return Value{s.dims(), s.amps()}; }

Value eval_node(const StateExpr& e, int d) {
  switch (e.kind) {
    case StateExpr::Kind::Ket: {
      Value v;
      v.amps = {1.0};
      for (int digit : e.digits) {
        if (digit < 0 || digit >= d)
          throw EvalError("ket digit " + std::to_string(digit) +
                          " out of range for local dimension " + std::to_string(d));
        cvec next(v.amps.size() * d);
        for (size_t i = 0; i < v.amps.size(); ++i) next[i * d + digit] = v.amps[i];
        v.amps = std::move(next);
        v.dims.push_back(d);
      }
      return v;
    }
    case StateExpr::Kind::Call: {
      const auto& a = e.args;
      if (e.name == "ghz") {
        if (a.size() != 2) throw EvalError("ghz expects (L, d)");
        return from_state(make_ghz(to_int_arg(a[0], "ghz"), to_int_arg(a[1], "ghz")));
      }
      if (e.name == "w") {
        if (a.size() != 1) throw EvalError("w expects (L)");
        return from_state(make_w(to_int_arg(a[0], "w")));
      }
      if (e.name == "dicke") {
        if (a.size() != 2) throw EvalError("dicke expects (L, k)");
        return from_state(make_dicke(to_int_arg(a[0], "dicke"), to_int_arg(a[1], "dicke")));
      }
      if (e.name == "schmidt_state") {
        std::vector<double> w;
        for (const auto& z : a) {
          if (z.imag() != 0.0) throw EvalError("schmidt_state: weights must be real");
          w.push_back(z.real());
        }
        return from_state(make_schmidt_state(w));
      }
      throw EvalError("unknown constructor '" + e.name + "'");
    }
    case StateExpr::Kind::Scale: {
      Value v = eval_node(*e.children[0], d);
      for (auto& z : v.amps) z *= e.scalar;
      return v;
    }
    case StateExpr::Kind::Sum: {
      Value v = eval_node(*e.children[0], d);
      for (size_t i = 1; i < e.children.size(); ++i) {
        Value w = eval_node(*e.children[i], d);
        if (w.dims != v.dims)
          throw EvalError("summands have inconsistent factor structure");
        for (size_t j = 0; j < v.amps.size(); ++j) v.amps[j] += w.amps[j];
      }
      return v;
    }
    case StateExpr::Kind::Tensor: {
      Value v = eval_node(*e.children[0], d);
      for (size_t i = 1; i < e.children.size(); ++i) {
        Value w = eval_node(*e.children[i], d);
        cvec next(v.amps.size() * w.amps.size());
        for (size_t a = 0; a < v.amps.size(); ++a)
          for (size_t b = 0; b < w.amps.size(); ++b)
            next[a * w.amps.size() + b] = v.amps[a] * w.amps[b];
        v.amps = std::move(next);
        v.dims.insert(v.dims.end(), w.dims.begin(), w.dims.end());
      }
      return v;
    }
  }
  throw EvalError("corrupt expression tree");
}

}  // namespace

StateExprPtr parse(const std::string& text) { return Parser(text).parse_input(); }

std::string print(const StateExpr& expr) {
  std::ostringstream os;
  os.precision(17);
  print_node(os, expr);
  if (expr.local_dim) os << " @ d=" << expr.local_dim;
  return os.str();
}

MultipartiteState eval(const StateExpr& expr, int default_dim) {
  const int d = expr.local_dim ? expr.local_dim : default_dim;
  Value v = eval_node(expr, d);
  double norm2 = 0;
  for (const auto& z : v.amps) norm2 += std::norm(z);
  if (std::sqrt(norm2) <= 1e-12) throw EvalError("expression evaluates to the zero vector");
  return MultipartiteState(std::move(v.dims), std::move(v.amps));
}

MultipartiteState eval_state(const std::string& text, int default_dim) {
  return eval(*parse(text), default_dim);
}

}  // namespace sympent
