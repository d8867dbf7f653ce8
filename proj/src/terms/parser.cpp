#include <cctype>

#include "tetra/error.hpp"
#include "tetra/term.hpp"

namespace tetra {

namespace {

enum class Tok { end, ident, zero, one, amp, bar, eq, leq, implies, comma, lparen, rparen };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) { lex(); }

  Sentence sentence() {
    std::vector<Comparison> items{comparison()};
    bool quasi = false;
    while (peek().kind == Tok::comma || peek().kind == Tok::implies) {
      const bool arrow = peek().kind == Tok::implies;
      next();
      items.push_back(comparison());
      if (arrow) {
        quasi = true;
        break;
      }
    }
    if (!quasi && items.size() > 1) fail("'=>'");
    expect_end();
    if (!quasi) {
      const auto& c = items.front();
      return c.relation == Relation::equal ? Sentence::identity(c.lhs, c.rhs)
                                           : Sentence::inequality(c.lhs, c.rhs);
    }
    Comparison conclusion = items.back();
    items.pop_back();
    return Sentence::quasi_identity(std::move(items), std::move(conclusion));
  }

  Term whole_term() {
    Term t = term();
    expect_end();
    return t;
  }

 private:
  void lex() {
    std::size_t i = 0;
    while (i < src_.size()) {
      const char c = src_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      const std::size_t start = i;
      auto push = [&](Tok kind, std::size_t len) {
        tokens_.push_back({kind, std::string(src_.substr(start, len)), start});
        i = start + len;
      };
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_')) {
          ++j;
        }
        push(Tok::ident, j - i);
      } else if (c == '0') {
        push(Tok::zero, 1);
      } else if (c == '1') {
        push(Tok::one, 1);
      } else if (c == '&') {
        push(Tok::amp, 1);
      } else if (c == '|') {
        push(Tok::bar, 1);
      } else if (c == ',') {
        push(Tok::comma, 1);
      } else if (c == '(') {
        push(Tok::lparen, 1);
      } else if (c == ')') {
        push(Tok::rparen, 1);
      } else if (src_.substr(i, 2) == "<=") {
        push(Tok::leq, 2);
      } else if (src_.substr(i, 2) == "=>") {
        push(Tok::implies, 2);
      } else if (c == '=') {
        push(Tok::eq, 1);
      } else {
        throw SyntaxError(i, "a term, operator or relation", std::string(src_));
      }
      // Digits other than a lone 0 or 1 are not constants.
      if ((tokens_.back().kind == Tok::zero || tokens_.back().kind == Tok::one) && i < src_.size() &&
          std::isalnum(static_cast<unsigned char>(src_[i]))) {
        throw SyntaxError(start, "the constant 0 or 1", std::string(src_));
      }
    }
    tokens_.push_back({Tok::end, "", src_.size()});
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError(peek().pos, expected, std::string(src_));
  }

  void expect_end() {
    if (peek().kind != Tok::end) fail("end of input");
  }

  Comparison comparison() {
    Term lhs = term();
    Relation rel;
    if (peek().kind == Tok::eq) {
      rel = Relation::equal;
    } else if (peek().kind == Tok::leq) {
      rel = Relation::less_equal;
    } else {
      fail("'=' or '<='");
    }
    next();
    Term rhs = term();
    return Comparison{std::move(lhs), std::move(rhs), rel};
  }

  Term term() {
    Term t = factor();
    while (peek().kind == Tok::bar) {
      next();
      t = Term::join(std::move(t), factor());
    }
    return t;
  }

  Term factor() {
    Term t = atom();
    while (peek().kind == Tok::amp) {
      next();
      t = Term::meet(std::move(t), atom());
    }
    return t;
  }

  Term atom() {
    const Token tok = peek();
    switch (tok.kind) {
      case Tok::zero:
        next();
        return Term::zero();
      case Tok::one:
        next();
        return Term::one();
      case Tok::lparen: {
        next();
        Term inner = term();
        if (peek().kind != Tok::rparen) fail("')'");
        next();
        return inner.with_parens(inner.parens() + 1);
      }
      case Tok::ident: {
        next();
        if (auto op = op_from_spelling(tok.text)) return Term::unary(*op, atom());
        return Term::variable(tok.text);
      }
      default:
        fail("a variable, constant, unary symbol or '('");
    }
  }

  std::string_view src_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Sentence parse_sentence(std::string_view text) { return Parser(text).sentence(); }

Term parse_term(std::string_view text) { return Parser(text).whole_term(); }

}  // namespace tetra
