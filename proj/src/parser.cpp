#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "apal/formula.hpp"

namespace apal {
namespace {

enum class Tok {
  Ident,     // atoms, agents, keywords false/box/dia/K
  Not,       // ~
  Or,        // |
  And,       // &
  Arrow,     // ->
  DArrow,    // <->
  LBracket,  // [
  RBracket,  // ]
  Less,      // <
  Greater,   // >
  LParen,    // (
  RParen,    // )
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_space();
      std::size_t pos = i_;
      if (i_ >= text_.size()) {
        tokens.push_back({Tok::End, "", pos});
        break;
      }
      char c = text_[i_];
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = i_;
        while (i_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[i_])) ||
                text_[i_] == '_'))
          ++i_;
        tokens.push_back({Tok::Ident, text_.substr(start, i_ - start), pos});
        continue;
      }
      if (text_.compare(i_, 3, "<->") == 0) {
        i_ += 3;
        tokens.push_back({Tok::DArrow, "<->", pos});
        continue;
      }
      if (text_.compare(i_, 2, "->") == 0) {
        i_ += 2;
        tokens.push_back({Tok::Arrow, "->", pos});
        continue;
      }
      Tok kind;
      switch (c) {
        case '~': kind = Tok::Not; break;
        case '|': kind = Tok::Or; break;
        case '&': kind = Tok::And; break;
        case '[': kind = Tok::LBracket; break;
        case ']': kind = Tok::RBracket; break;
        case '<': kind = Tok::Less; break;
        case '>': kind = Tok::Greater; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        default:
          throw ParseError("unknown token '" + std::string(1, c) +
                               "' at position " + std::to_string(pos),
                           pos);
      }
      ++i_;
      tokens.push_back({kind, std::string(1, c), pos});
    }
    return tokens;
  }

 private:
  void skip_space() {
    while (i_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[i_])))
      ++i_;
  }
  const std::string& text_;
  std::size_t i_ = 0;
};

bool is_keyword(const std::string& s) {
  return s == "false" || s == "box" || s == "dia" || s == "K";
}

bool valid_atom(const std::string& s) {
  if (is_keyword(s)) return false;
  if (!std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::islower(static_cast<unsigned char>(c)) &&
        !std::isdigit(static_cast<unsigned char>(c)) && c != '_')
      return false;
  return true;
}

bool valid_agent(const std::string& s) {
  if (is_keyword(s)) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  return std::isalpha(static_cast<unsigned char>(s[0]));
}

// Grammar, loosest to tightest:
//   iff   := imp ("<->" imp)*        right-associative
//   imp   := or ("->" imp)?          right-associative
//   or    := and ("|" and)*          left-associative
//   and   := unary ("&" unary)*      left-associative
//   unary := "~" unary | "K" AGENT unary | "[" iff "]" unary
//          | "<" iff ">" unary | "box" unary | "dia" unary | primary
//   primary := "false" | ATOM | "(" iff ")"
class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula run() {
    Formula f = parse_iff();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[i_]; }
  Token take() { return tokens_[i_++]; }

  [[noreturn]] void fail(const std::string& expected) {
    const Token& t = peek();
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError("syntax error at position " + std::to_string(t.pos) +
                         ": expected " + expected + ", got " + got,
                     t.pos);
  }

  void expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(what);
    ++i_;
  }

  Formula parse_iff() {
    Formula l = parse_imp();
    if (peek().kind == Tok::DArrow) {
      take();
      return Formula::iff(std::move(l), parse_iff());
    }
    return l;
  }

  Formula parse_imp() {
    Formula l = parse_or();
    if (peek().kind == Tok::Arrow) {
      take();
      return Formula::implies(std::move(l), parse_imp());
    }
    return l;
  }

  Formula parse_or() {
    Formula l = parse_and();
    while (peek().kind == Tok::Or) {
      take();
      l = Formula::disj(std::move(l), parse_and());
    }
    return l;
  }

  Formula parse_and() {
    Formula l = parse_unary();
    while (peek().kind == Tok::And) {
      take();
      l = Formula::conj(std::move(l), parse_unary());
    }
    return l;
  }

  Formula parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not:
        take();
        return Formula::neg(parse_unary());
      case Tok::LBracket: {
        take();
        Formula announced = parse_iff();
        expect(Tok::RBracket, "']'");
        return Formula::announce(std::move(announced), parse_unary());
      }
      case Tok::Less: {
        take();
        Formula announced = parse_iff();
        expect(Tok::Greater, "'>'");
        return Formula::dia_announce(std::move(announced), parse_unary());
      }
      case Tok::Ident:
        if (t.text == "box") {
          take();
          return Formula::box(parse_unary());
        }
        if (t.text == "dia") {
          take();
          return Formula::dia(parse_unary());
        }
        if (t.text == "K") {
          take();
          if (peek().kind != Tok::Ident || !valid_agent(peek().text))
            fail("agent identifier");
          std::string agent = take().text;
          return Formula::know(std::move(agent), parse_unary());
        }
        return parse_primary();
      default:
        return parse_primary();
    }
  }

  Formula parse_primary() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      take();
      Formula f = parse_iff();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "false") {
        take();
        return Formula::bottom();
      }
      if (!valid_atom(t.text)) fail("atom identifier");
      return Formula::atom(take().text);
    }
    fail("a formula");
  }

  std::vector<Token> tokens_;
  std::size_t i_ = 0;
};

}  // namespace

Formula parse(const std::string& text) {
  return Parser(Lexer(text).run()).run();
}

namespace {

// Precedence for the primitive constructs only (render never emits the
// derived connectives): disjunction is 1, unary prefixes are 2, atoms 3.
int precedence(const Formula& f) {
  switch (f.kind()) {
    case Kind::Or: return 1;
    case Kind::Neg:
    case Kind::Know:
    case Kind::Announce:
    case Kind::Box: return 2;
    case Kind::Atom:
    case Kind::Bottom: return 3;
  }
  return 3;
}

void render_into(const Formula& f, int min_prec, std::string& out) {
  bool parens = precedence(f) < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case Kind::Atom:
      out += f.name();
      break;
    case Kind::Bottom:
      out += "false";
      break;
    case Kind::Neg:
      out += '~';
      render_into(f.child(), 2, out);
      break;
    case Kind::Or:
      render_into(f.left(), 1, out);
      out += " | ";
      render_into(f.right(), 2, out);
      break;
    case Kind::Know:
      out += "K ";
      out += f.agent();
      out += ' ';
      render_into(f.child(), 2, out);
      break;
    case Kind::Announce:
      out += '[';
      render_into(f.announced(), 0, out);
      out += "] ";
      render_into(f.continuation(), 2, out);
      break;
    case Kind::Box:
      out += "box ";
      render_into(f.child(), 2, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  render_into(f, 0, out);
  return out;
}

}  // namespace apal
