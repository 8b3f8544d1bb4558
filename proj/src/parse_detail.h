// Lexer and precedence-climbing parser shared by the two concrete syntaxes
// (explicit/implicit belief, and general awareness). The modal keywords and
// the node constructors come from a traits class.
#ifndef DOXA_SRC_PARSE_DETAIL_H_
#define DOXA_SRC_PARSE_DETAIL_H_

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "doxa/errors.h"
#include "doxa/formula.h"

namespace doxa::detail {

enum class Tok {
  Word,
  Int,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Tilde,
  Amp,
  Bar,
  Arrow,
  DoubleArrow,
  End
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

inline std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End:
      return "end of input";
    default:
      return "'" + t.text + "'";
  }
}

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      unsigned char c = static_cast<unsigned char>(src[i]);
      if (c == '\n') {
        ++line;
        column = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++column;
      }
    }
  };
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    Token t{Tok::End, "", line, column};
    std::size_t len = 1;
    if (std::isalpha(c) || c == '_') {
      while (i + len < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i + len])) ||
              src[i + len] == '_'))
        ++len;
      t.kind = Tok::Word;
    } else if (std::isdigit(c)) {
      while (i + len < src.size() &&
             std::isdigit(static_cast<unsigned char>(src[i + len])))
        ++len;
      t.kind = Tok::Int;
    } else if (src.substr(i, 3) == "<->") {
      t.kind = Tok::DoubleArrow;
      len = 3;
    } else if (src.substr(i, 2) == "->") {
      t.kind = Tok::Arrow;
      len = 2;
    } else {
      switch (c) {
        case '[': t.kind = Tok::LBracket; break;
        case ']': t.kind = Tok::RBracket; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case '~': t.kind = Tok::Tilde; break;
        case '&': t.kind = Tok::Amp; break;
        case '|': t.kind = Tok::Bar; break;
        default: {
          // Report the whole UTF-8 sequence, not a lone lead byte.
          std::size_t n = 1;
          while (i + n < src.size() &&
                 (static_cast<unsigned char>(src[i + n]) & 0xC0) == 0x80)
            ++n;
          throw SyntaxError("unexpected character '" +
                                std::string(src.substr(i, n)) + "'",
                            line, column, {});
        }
      }
    }
    t.text = std::string(src.substr(i, len));
    out.push_back(std::move(t));
    advance(len);
  }
  out.push_back(Token{Tok::End, "", line, column});
  return out;
}

// Traits must provide:
//   using Value = ...;
//   static std::vector<std::string> modal_keywords();
//   Value atom(const std::string&), negation(Value), conjunction(Value, Value),
//   disjunction, implication, equivalence, top(), bottom(),
//   Value modal(const std::string& kw, int agent, Value body, const Token& at)
template <typename Traits>
class Parser {
 public:
  using Value = typename Traits::Value;

  Parser(std::string_view src, int n_agents, bool allow_reserved,
         Traits traits)
      : tokens_(tokenize(src)),
        n_agents_(n_agents),
        allow_reserved_(allow_reserved),
        traits_(std::move(traits)) {}

  Value parse() {
    Value v = equivalence();
    if (peek().kind != Tok::End)
      fail("unexpected " + describe(peek()),
           {"end of input", "'&'", "'|'", "'->'", "'<->'"});
    return v;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& what,
                         std::vector<std::string> expected) const {
    std::string msg = what;
    if (!expected.empty()) {
      msg += "; expected ";
      for (std::size_t k = 0; k < expected.size(); ++k) {
        if (k) msg += k + 1 == expected.size() ? " or " : ", ";
        msg += expected[k];
      }
    }
    throw SyntaxError(msg, peek().line, peek().column, std::move(expected));
  }

  void expect(Tok kind, const char* shown) {
    if (peek().kind != kind) fail("unexpected " + describe(peek()), {shown});
    ++pos_;
  }

  Value equivalence() {
    Value v = implication();
    while (peek().kind == Tok::DoubleArrow) {
      ++pos_;
      v = traits_.equivalence(std::move(v), implication());
    }
    return v;
  }

  Value implication() {
    Value v = disjunction();
    if (peek().kind == Tok::Arrow) {
      ++pos_;
      return traits_.implication(std::move(v), implication());
    }
    return v;
  }

  Value disjunction() {
    Value v = conjunction();
    while (peek().kind == Tok::Bar) {
      ++pos_;
      v = traits_.disjunction(std::move(v), conjunction());
    }
    return v;
  }

  Value conjunction() {
    Value v = unary();
    while (peek().kind == Tok::Amp) {
      ++pos_;
      v = traits_.conjunction(std::move(v), unary());
    }
    return v;
  }

  std::vector<std::string> expected_formula() const {
    std::vector<std::string> e{"atom", "'true'", "'false'", "'('", "'~'"};
    for (const std::string& kw : Traits::modal_keywords())
      e.push_back("'" + kw + "['");
    return e;
  }

  bool is_modal_keyword(const std::string& w) const {
    for (const std::string& kw : Traits::modal_keywords())
      if (kw == w) return true;
    return false;
  }

  Value unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Tilde:
        ++pos_;
        return traits_.negation(unary());
      case Tok::LParen: {
        ++pos_;
        Value v = equivalence();
        expect(Tok::RParen, "')'");
        return v;
      }
      case Tok::Word:
        break;
      default:
        fail("unexpected " + describe(t), expected_formula());
    }
    if (t.text == "true") {
      ++pos_;
      return traits_.top();
    }
    if (t.text == "false") {
      ++pos_;
      return traits_.bottom();
    }
    if (is_modal_keyword(t.text)) {
      Token kw = next();
      expect(Tok::LBracket, "'['");
      const Token& num = peek();
      if (num.kind != Tok::Int)
        fail("unexpected " + describe(num), {"agent index"});
      int agent = 0;
      try {
        agent = std::stoi(num.text);
      } catch (const std::out_of_range&) {
        agent = -1;
      }
      if (agent < 1 || agent > n_agents_)
        throw AgentRangeError("agent index " + num.text +
                                  " outside [1, " +
                                  std::to_string(n_agents_) + "]",
                              num.line, num.column);
      ++pos_;
      expect(Tok::RBracket, "']'");
      return traits_.modal(kw.text, agent, unary(), kw);
    }
    if (is_user_atom_name(t.text) ||
        (allow_reserved_ && is_reserved_atom_name(t.text))) {
      ++pos_;
      return traits_.atom(t.text);
    }
    if (is_reserved_atom_name(t.text))
      throw SyntaxError("atom names beginning with '_' are reserved",
                        t.line, t.column, {"atom"});
    fail("unexpected " + describe(t), expected_formula());
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int n_agents_;
  bool allow_reserved_;
  Traits traits_;
};

}  // namespace doxa::detail

#endif  // DOXA_SRC_PARSE_DETAIL_H_
