#include "sysfile.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace plurind {

namespace {

struct Token {
  enum Kind { Ident, Int, Punct, End } kind = End;
  std::string text;
  int line = 0;
  int col = 0;
};

[[noreturn]] void parse_fail(const Token& at, const std::string& msg) {
  fail(ErrorCode::Parse, "line " + std::to_string(at.line) + ", col " +
                             std::to_string(at.col) + ": " + msg);
}

std::vector<Token> tokenize_line(const std::string& text, int line_no) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.line = line_no;
    t.col = static_cast<int>(i) + 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      t.kind = Token::Ident;
      t.text = text.substr(i, j - i);
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      t.kind = Token::Int;
      t.text = text.substr(i, j - i);
      i = j;
    } else if (std::string("+-*^()/,:=").find(c) != std::string::npos) {
      t.kind = Token::Punct;
      t.text = std::string(1, c);
      ++i;
    } else {
      t.kind = Token::Punct;
      t.text = std::string(1, c);
      parse_fail(t, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Token::End;
  end.line = line_no;
  end.col = static_cast<int>(text.size()) + 1;
  out.push_back(end);
  return out;
}

// Recursive-descent expression parser producing exact polynomials.
class ExprParser {
 public:
  ExprParser(const std::vector<Token>& tokens, size_t pos,
             const std::map<std::string, int>& vars, int n)
      : tokens_(tokens), pos_(pos), vars_(vars), n_(n) {}

  Polynomial parse_expression() {
    Polynomial acc = Polynomial::zero(n_);
    bool negate = false;
    if (peek().kind == Token::Punct && (peek().text == "+" || peek().text == "-")) {
      negate = peek().text == "-";
      advance();
    }
    acc = parse_term();
    if (negate) acc = -acc;
    while (peek().kind == Token::Punct &&
           (peek().text == "+" || peek().text == "-")) {
      bool minus = peek().text == "-";
      advance();
      Polynomial t = parse_term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  size_t position() const { return pos_; }
  const Token& peek() const { return tokens_[pos_]; }

 private:
  void advance() { ++pos_; }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    for (;;) {
      const Token& t = peek();
      if (t.kind == Token::Punct && t.text == "*") {
        advance();
        acc = acc * parse_factor();
      } else if (t.kind == Token::Ident || t.kind == Token::Int ||
                 (t.kind == Token::Punct && t.text == "(")) {
        parse_fail(t, "missing '*' (implicit products are not allowed)");
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_factor() {
    Polynomial base = parse_base();
    const Token& t = peek();
    if (t.kind == Token::Punct && t.text == "^") {
      advance();
      const Token& e = peek();
      if (e.kind == Token::Punct && e.text == "-")
        parse_fail(e, "negative exponents are not allowed");
      if (e.kind != Token::Int) parse_fail(e, "expected a nonnegative integer exponent");
      long exp = std::stol(e.text);
      if (exp > 64) parse_fail(e, "exponent too large (cap is 64)");
      advance();
      Polynomial acc = Polynomial::constant(n_, Gaussian(1));
      for (long k = 0; k < exp; ++k) acc = acc * base;
      return acc;
    }
    return base;
  }

  Polynomial parse_base() {
    const Token& t = peek();
    if (t.kind == Token::Punct && t.text == "(") {
      advance();
      Polynomial inner = parse_expression();
      const Token& close = peek();
      if (!(close.kind == Token::Punct && close.text == ")"))
        parse_fail(close, "expected ')'");
      advance();
      return inner;
    }
    if (t.kind == Token::Int) {
      BigInt num(t.text);
      advance();
      if (peek().kind == Token::Punct && peek().text == "/") {
        advance();
        const Token& den = peek();
        if (den.kind != Token::Int) parse_fail(den, "expected a denominator");
        BigInt d(den.text);
        if (d == 0) parse_fail(den, "zero denominator");
        advance();
        return Polynomial::constant(n_, Gaussian(Rational(num, d)));
      }
      return Polynomial::constant(n_, Gaussian(Rational(num)));
    }
    if (t.kind == Token::Ident) {
      if (t.text == "i") {
        advance();
        return Polynomial::constant(n_, Gaussian(Rational(0), Rational(1)));
      }
      auto it = vars_.find(t.text);
      if (it == vars_.end()) parse_fail(t, "undeclared variable '" + t.text + "'");
      advance();
      return Polynomial::variable(n_, it->second);
    }
    parse_fail(t, "expected a coefficient, variable, or '('");
  }

  const std::vector<Token>& tokens_;
  size_t pos_;
  const std::map<std::string, int>& vars_;
  int n_;
};

Gaussian constant_of(const Polynomial& p, const Token& at) {
  for (const auto& [e, c] : p.terms())
    for (int v : e)
      if (v != 0) parse_fail(at, "expected a constant expression");
  return p.coefficient(expvec_zero(p.dimension()));
}

}  // namespace

SystemFile parse_system(const std::string& text) {
  SystemFile sys;
  std::map<std::string, int> vars;
  bool saw_at = false;

  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    std::vector<Token> tokens = tokenize_line(line, line_no);
    if (tokens.front().kind == Token::End) continue;
    const Token& head = tokens.front();

    if (head.kind == Token::Ident && tokens.size() >= 2 &&
        tokens[1].kind == Token::Punct && tokens[1].text == ":") {
      if (head.text == "vars") {
        if (!sys.variables.empty()) parse_fail(head, "duplicate vars declaration");
        size_t pos = 2;
        for (;;) {
          const Token& v = tokens[pos];
          if (v.kind != Token::Ident) parse_fail(v, "expected a variable name");
          if (v.text == "i") parse_fail(v, "'i' is reserved for the imaginary unit");
          if (vars.count(v.text)) parse_fail(v, "duplicate variable '" + v.text + "'");
          vars[v.text] = static_cast<int>(sys.variables.size());
          sys.variables.push_back(v.text);
          ++pos;
          if (tokens[pos].kind == Token::Punct && tokens[pos].text == ",") {
            ++pos;
            continue;
          }
          if (tokens[pos].kind == Token::End) break;
          parse_fail(tokens[pos], "expected ',' or end of line");
        }
        if (sys.variables.size() > kMaxDimension)
          fail(ErrorCode::Dimension,
               "line " + std::to_string(head.line) + ": at most 4 variables are supported");
        sys.basepoint.assign(sys.variables.size(), Gaussian());
        continue;
      }
      if (head.text == "at") {
        if (sys.variables.empty()) parse_fail(head, "vars must be declared before at:");
        const Token& open = tokens[2];
        if (!(open.kind == Token::Punct && open.text == "("))
          parse_fail(open, "expected '(' after at:");
        size_t pos = 3;
        GPoint point;
        for (;;) {
          ExprParser ep(tokens, pos, vars, sys.dimension());
          Polynomial c = ep.parse_expression();
          point.push_back(constant_of(c, tokens[pos]));
          pos = ep.position();
          if (tokens[pos].kind == Token::Punct && tokens[pos].text == ",") {
            ++pos;
            continue;
          }
          if (tokens[pos].kind == Token::Punct && tokens[pos].text == ")") {
            ++pos;
            break;
          }
          parse_fail(tokens[pos], "expected ',' or ')'");
        }
        if (tokens[pos].kind != Token::End) parse_fail(tokens[pos], "trailing input after ')'");
        if (point.size() != sys.variables.size())
          parse_fail(head, "basepoint arity does not match the variable count");
        sys.basepoint = std::move(point);
        saw_at = true;
        continue;
      }
      if (head.text == "q") {
        if (sys.variables.empty()) parse_fail(head, "vars must be declared before q:");
        ExprParser ep(tokens, 2, vars, sys.dimension());
        Polynomial c = ep.parse_expression();
        if (tokens[ep.position()].kind != Token::End)
          parse_fail(tokens[ep.position()], "trailing input after q value");
        Gaussian g = constant_of(c, tokens[2]);
        if (!g.is_real() || g.re <= 0) parse_fail(head, "q must be a positive rational");
        sys.q = g.re;
        continue;
      }
      parse_fail(head, "unknown option '" + head.text + "'");
    }

    // Polynomial definition: name = expr.
    if (head.kind != Token::Ident) parse_fail(head, "expected a statement");
    if (sys.variables.empty()) parse_fail(head, "vars must be declared first");
    if (!(tokens.size() >= 2 && tokens[1].kind == Token::Punct && tokens[1].text == "="))
      parse_fail(tokens[1], "expected '=' after the polynomial name");
    if (vars.count(head.text))
      parse_fail(head, "polynomial name collides with a variable");
    for (const auto& [name, p] : sys.polynomials)
      if (name == head.text) parse_fail(head, "duplicate polynomial '" + head.text + "'");
    ExprParser ep(tokens, 2, vars, sys.dimension());
    Polynomial p = ep.parse_expression();
    if (tokens[ep.position()].kind != Token::End)
      parse_fail(tokens[ep.position()], "trailing input after the expression");
    sys.polynomials.emplace_back(head.text, std::move(p));
  }

  if (sys.variables.empty())
    fail(ErrorCode::Parse, "missing 'vars:' declaration");
  if (sys.polynomials.empty())
    fail(ErrorCode::Parse, "the system declares no polynomials");
  (void)saw_at;
  return sys;
}

UFunction SystemFile::to_ufunction() const {
  std::vector<Polynomial> comps;
  comps.reserve(polynomials.size());
  for (const auto& [name, p] : polynomials) {
    if (p.is_zero())
      fail(ErrorCode::Degenerate, "polynomial '" + name + "' is identically zero");
    comps.push_back(p);
  }
  return UFunction(PolyMap(std::move(comps), q), basepoint);
}

namespace {

std::string print_coefficient(const Gaussian& c, bool has_monomial) {
  // Returns a factor string; may start with '-'. Pure units fold into the
  // monomial ("x", "-x", "i*x").
  if (c.im == 0) {
    if (has_monomial && c.re == 1) return "";
    if (has_monomial && c.re == -1) return "-";
    return to_string(c.re) + (has_monomial ? "*" : "");
  }
  if (c.re == 0) {
    std::string s;
    if (c.im == 1)
      s = "i";
    else if (c.im == -1)
      s = "-i";
    else
      s = to_string(c.im) + "*i";
    return s + (has_monomial ? "*" : "");
  }
  std::string s = "(" + to_string(c.re);
  Rational im = c.im;
  if (im > 0)
    s += " + ";
  else {
    s += " - ";
    im = -im;
  }
  if (im != 1) s += to_string(im) + "*";
  s += "i)";
  return s + (has_monomial ? "*" : "");
}

std::string print_polynomial(const Polynomial& p,
                             const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::vector<std::string> terms;
  for (const auto& [e, c] : p.terms()) {
    std::string mono;
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[k];
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    terms.push_back(print_coefficient(c, !mono.empty()) + mono);
  }
  std::string out = terms.front();
  for (size_t k = 1; k < terms.size(); ++k) {
    if (terms[k].front() == '-')
      out += " - " + terms[k].substr(1);
    else
      out += " + " + terms[k];
  }
  return out;
}

}  // namespace

std::string print_point(const GPoint& x) {
  std::string s = "(";
  for (size_t k = 0; k < x.size(); ++k) {
    if (k) s += ", ";
    std::string g = to_string(x[k]);
    // "1+i" and friends need the explicit product for the grammar.
    size_t ipos = g.find('i');
    if (ipos != std::string::npos && ipos > 0 &&
        std::isdigit(static_cast<unsigned char>(g[ipos - 1])))
      g.insert(ipos, "*");
    s += g;
  }
  return s + ")";
}

std::string print_system(const SystemFile& sys) {
  std::string out = "vars: ";
  for (size_t k = 0; k < sys.variables.size(); ++k) {
    if (k) out += ", ";
    out += sys.variables[k];
  }
  out += "\n";
  for (const auto& [name, p] : sys.polynomials)
    out += name + " = " + print_polynomial(p, sys.variables) + "\n";
  bool zero_base = std::all_of(sys.basepoint.begin(), sys.basepoint.end(),
                               [](const Gaussian& g) { return g.is_zero(); });
  if (!zero_base) out += "at: " + print_point(sys.basepoint) + "\n";
  if (sys.q != 2) out += "q: " + to_string(sys.q) + "\n";
  return out;
}

GPoint parse_point(const std::string& text, int dimension) {
  std::string wrapped = "vars: ";
  std::vector<std::string> names;
  for (int k = 0; k < dimension; ++k) {
    if (k) wrapped += ", ";
    std::string v = "v" + std::to_string(k);
    wrapped += v;
  }
  std::string body = text;
  if (body.empty() || body.front() != '(') body = "(" + body + ")";
  wrapped += "\nP = 1\nat: " + body + "\n";
  return parse_system(wrapped).basepoint;
}

}  // namespace plurind
