#include "qex/presentation.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace qex {

int QuiverPresentation::vertex_index(const std::string& name) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return static_cast<int>(i);
  return -1;
}

int QuiverPresentation::arrow_index(const std::string& name) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  return -1;
}

namespace {

struct Token {
  enum Kind { Ident, Number, Sym, End } kind;
  std::string text;
  int col;
};

std::vector<Token> lex_line(const std::string& s, int line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    int col = static_cast<int>(i) + 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Ident, s.substr(i, j - i), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Number, s.substr(i, j - i), col});
      i = j;
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Token::Sym, "->", col});
      i += 2;
    } else if (c == '+' || c == '-' || c == '*' || c == ':' || c == '/') {
      out.push_back({Token::Sym, std::string(1, c), col});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  out.push_back({Token::End, "", static_cast<int>(s.size()) + 1});
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, int line) : t_(std::move(toks)), line_(line) {}

  const Token& peek() const { return t_[i_]; }
  Token take() { return t_[i_++]; }
  bool at_end() const { return t_[i_].kind == Token::End; }

  Token expect_ident(const std::string& what) {
    if (peek().kind != Token::Ident)
      throw ParseError("expected " + what, line_, peek().col);
    return take();
  }
  void expect_sym(const std::string& s) {
    if (peek().kind != Token::Sym || peek().text != s)
      throw ParseError("expected '" + s + "'", line_, peek().col);
    take();
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line_, peek().col);
  }
  int line() const { return line_; }

 private:
  std::vector<Token> t_;
  size_t i_ = 0;
  int line_;
};

Scalar parse_coeff(LineParser& lp) {
  std::string num = lp.take().text;
  if (lp.peek().kind == Token::Sym && lp.peek().text == "/") {
    lp.take();
    if (lp.peek().kind != Token::Number) lp.fail("expected denominator");
    std::string den = lp.take().text;
    if (den == "0") lp.fail("zero denominator");
    return Scalar(mpq_class(num + "/" + den));
  }
  return Scalar(mpz_class(num));
}

// term := [number[/number] '*'] ident ('*' ident)*
RelTerm parse_term(LineParser& lp, const QuiverPresentation& p, bool negate) {
  RelTerm term;
  term.coeff = Scalar(1);
  if (lp.peek().kind == Token::Number) {
    term.coeff = parse_coeff(lp);
    lp.expect_sym("*");
  }
  for (;;) {
    Token id = lp.expect_ident("arrow name");
    int a = p.arrow_index(id.text);
    if (a < 0)
      throw ParseError("unknown arrow '" + id.text + "'", lp.line(), id.col);
    if (!term.arrows.empty()) {
      int prev = term.arrows.back();
      if (p.arrows[prev].tgt != p.arrows[a].src)
        throw ParseError("non-composable path: '" + p.arrows[prev].name +
                             "' ends at '" + p.vertices[p.arrows[prev].tgt] +
                             "' but '" + id.text + "' starts at '" +
                             p.vertices[p.arrows[a].src] + "'",
                         lp.line(), id.col);
    }
    term.arrows.push_back(a);
    if (lp.peek().kind == Token::Sym && lp.peek().text == "*") {
      lp.take();
      continue;
    }
    break;
  }
  if (negate) term.coeff = -term.coeff;
  return term;
}

}  // namespace

QuiverPresentation parse_presentation(const std::string& text) {
  QuiverPresentation p;
  bool field_seen = false;
  std::map<std::string, int> vertex_lines;  // duplicate detection
  std::map<std::string, int> arrow_lines;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    LineParser lp(lex_line(raw, line), line);
    if (lp.at_end()) continue;
    Token head = lp.expect_ident("directive");
    const std::string& d = head.text;

    if (d == "field") {
      if (field_seen) lp.fail("duplicate field directive");
      if (!p.relations.empty()) lp.fail("field must precede relations");
      Token k = lp.take();
      if (k.kind == Token::Ident && k.text == "Q") {
        p.field = Field::rationals();
      } else if (k.kind == Token::Ident && k.text == "F") {
        if (lp.peek().kind != Token::Number) lp.fail("expected prime after F");
        unsigned long pr = std::stoul(lp.take().text);
        try {
          p.field = Field::prime(pr);
        } catch (const std::invalid_argument& e) {
          lp.fail(e.what());
        }
      } else {
        throw ParseError("expected Q or F <p>", line, k.col);
      }
      field_seen = true;
    } else if (d == "vertex") {
      if (lp.at_end()) lp.fail("expected vertex names");
      while (!lp.at_end()) {
        Token id = lp.expect_ident("vertex name");
        if (vertex_lines.count(id.text))
          throw ParseError("duplicate vertex '" + id.text + "'", line, id.col);
        vertex_lines[id.text] = line;
        p.vertices.push_back(id.text);
      }
    } else if (d == "arrow") {
      Token id = lp.expect_ident("arrow name");
      if (arrow_lines.count(id.text))
        throw ParseError("duplicate arrow '" + id.text + "'", line, id.col);
      lp.expect_sym(":");
      Token s = lp.expect_ident("source vertex");
      lp.expect_sym("->");
      Token t = lp.expect_ident("target vertex");
      int si = p.vertex_index(s.text);
      if (si < 0) throw ParseError("unknown vertex '" + s.text + "'", line, s.col);
      int ti = p.vertex_index(t.text);
      if (ti < 0) throw ParseError("unknown vertex '" + t.text + "'", line, t.col);
      if (!lp.at_end()) lp.fail("trailing tokens after arrow declaration");
      arrow_lines[id.text] = line;
      p.arrows.push_back({id.text, si, ti});
    } else if (d == "relation") {
      Relation rel;
      rel.line = line;
      bool negate = false;
      if (lp.peek().kind == Token::Sym &&
          (lp.peek().text == "-" || lp.peek().text == "+")) {
        negate = lp.take().text == "-";
      }
      rel.terms.push_back(parse_term(lp, p, negate));
      while (!lp.at_end()) {
        if (lp.peek().kind != Token::Sym ||
            (lp.peek().text != "+" && lp.peek().text != "-"))
          lp.fail("expected '+' or '-' between terms");
        bool neg = lp.take().text == "-";
        rel.terms.push_back(parse_term(lp, p, neg));
      }
      // All terms share endpoints; words must have length >= 2.
      for (const RelTerm& t : rel.terms)
        if (t.arrows.size() < 2)
          throw ParseError("relation word of length < 2", line, 1);
      rel.src = p.arrows[rel.terms[0].arrows.front()].src;
      rel.tgt = p.arrows[rel.terms[0].arrows.back()].tgt;
      for (const RelTerm& t : rel.terms) {
        if (p.arrows[t.arrows.front()].src != rel.src ||
            p.arrows[t.arrows.back()].tgt != rel.tgt)
          throw ParseError("relation terms do not share source and target", line, 1);
      }
      // Coefficients live in the declared field.
      for (RelTerm& t : rel.terms) t.coeff = p.field.reduce(t.coeff);
      p.relations.push_back(std::move(rel));
    } else {
      throw ParseError("unknown directive '" + d + "'", line, head.col);
    }
  }
  return p;
}

std::string emit_presentation(const QuiverPresentation& p) {
  std::ostringstream out;
  if (p.field.is_rational())
    out << "field Q\n";
  else
    out << "field F " << p.field.characteristic() << "\n";
  if (!p.vertices.empty()) {
    out << "vertex";
    for (const auto& v : p.vertices) out << " " << v;
    out << "\n";
  }
  for (const auto& a : p.arrows)
    out << "arrow " << a.name << ": " << p.vertices[a.src] << " -> "
        << p.vertices[a.tgt] << "\n";
  for (const auto& r : p.relations) {
    out << "relation ";
    for (size_t i = 0; i < r.terms.size(); ++i) {
      const RelTerm& t = r.terms[i];
      Scalar c = t.coeff;
      bool neg = sgn(c) < 0;
      if (i == 0) {
        if (neg) out << "-";
      } else {
        out << (neg ? " - " : " + ");
      }
      Scalar a = abs(c);
      if (a != 1) out << a.get_str() << "*";
      for (size_t k = 0; k < t.arrows.size(); ++k) {
        if (k) out << "*";
        out << p.arrows[t.arrows[k]].name;
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace qex
