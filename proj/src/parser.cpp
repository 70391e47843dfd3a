#include "idens/parser.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace idens {

namespace {

struct Token {
  enum class Kind { ident, integer, symbol, end };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      out.push_back({Token::Kind::ident, text.substr(start, i - start), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Token::Kind::integer, text.substr(start, i - start), start});
      continue;
    }
    if (ch == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Token::Kind::symbol, "->", i});
      i += 2;
      continue;
    }
    static const std::string singles = "[](){},;:|&!=-/";
    if (singles.find(ch) != std::string::npos) {
      out.push_back({Token::Kind::symbol, std::string(1, ch), i});
      ++i;
      continue;
    }
    throw parse_error("unexpected character '" + std::string(1, ch) + "'", i, "");
  }
  out.push_back({Token::Kind::end, "", text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  bool accept_symbol(const std::string& s) {
    if (peek().kind == Token::Kind::symbol && peek().text == s) {
      take();
      return true;
    }
    return false;
  }

  bool accept_ident(const std::string& s) {
    if (peek().kind == Token::Kind::ident && peek().text == s) {
      take();
      return true;
    }
    return false;
  }

  void expect_symbol(const std::string& s) {
    if (!accept_symbol(s))
      throw parse_error("unexpected token '" + peek().text + "'", peek().pos, "'" + s + "'");
  }

  void expect_ident(const std::string& s) {
    if (!accept_ident(s))
      throw parse_error("unexpected token '" + peek().text + "'", peek().pos, "'" + s + "'");
  }

  std::uint64_t expect_integer() {
    if (peek().kind != Token::Kind::integer)
      throw parse_error("unexpected token '" + peek().text + "'", peek().pos, "an integer");
    return std::stoull(take().text);
  }

  Rational expect_rational() {
    bool negative = accept_symbol("-");
    mpz_class num(take_integer_text());
    mpz_class den(1);
    if (accept_symbol("/")) den = mpz_class(take_integer_text());
    Rational r(num, den);
    return negative ? -r : r;
  }

  void expect_end() {
    if (peek().kind != Token::Kind::end)
      throw parse_error("trailing input '" + peek().text + "'", peek().pos, "end of input");
  }

  Interval expect_interval() {
    expect_symbol("[");
    Rational lo = expect_rational();
    expect_symbol(",");
    Rational hi = expect_rational();
    expect_symbol("]");
    if (lo > hi) throw parse_error("interval with lo > hi", peek().pos, "lo <= hi");
    return {lo, hi};
  }

  IndexSet index_union() {
    IndexSet left = index_intersection();
    while (accept_symbol("|")) left = left | index_intersection();
    return left;
  }

  IndexSet index_intersection() {
    IndexSet left = index_atom();
    while (accept_symbol("&")) left = left & index_atom();
    return left;
  }

  IndexSet index_atom() {
    if (accept_symbol("!")) return ~index_atom();
    if (accept_symbol("(")) {
      IndexSet inner = index_union();
      expect_symbol(")");
      return inner;
    }
    if (accept_ident("squares")) return IndexSet::squares();
    if (accept_ident("all")) return IndexSet::naturals();
    if (accept_ident("none")) return IndexSet::empty();
    if (accept_ident("ap")) {
      expect_symbol("(");
      std::uint64_t first = expect_integer();
      expect_symbol(",");
      std::uint64_t step = expect_integer();
      expect_symbol(")");
      return IndexSet::ap(first, step);
    }
    if (accept_symbol("{")) {
      std::vector<std::uint64_t> elems;
      if (!accept_symbol("}")) {
        elems.push_back(expect_integer());
        while (accept_symbol(",")) elems.push_back(expect_integer());
        expect_symbol("}");
      }
      return IndexSet::finite(std::move(elems));
    }
    throw parse_error("unexpected token '" + peek().text + "'", peek().pos,
                      "ap(...), squares, {...}, all, none, !, or (");
  }

  WindowFamily family_base() {
    if (accept_ident("symharm")) {
      expect_symbol("(");
      expect_ident("p");
      expect_symbol("=");
      Rational p = expect_rational();
      WindowFamily w = family_exceptions(WindowFamily::symmetric_harmonic(p));
      expect_symbol(")");
      return w;
    }
    if (accept_ident("rgeom")) {
      expect_symbol("(");
      expect_ident("p");
      expect_symbol("=");
      Rational p = expect_rational();
      expect_symbol(",");
      expect_ident("c");
      expect_symbol("=");
      Rational c = expect_rational();
      WindowFamily w = family_exceptions(WindowFamily::right_geometric(p, c));
      expect_symbol(")");
      return w;
    }
    if (accept_ident("prefix")) {
      expect_symbol("(");
      expect_ident("p");
      expect_symbol("=");
      Rational p = expect_rational();
      expect_symbol(";");
      std::vector<Interval> windows{expect_interval()};
      while (accept_symbol(",")) windows.push_back(expect_interval());
      expect_symbol(";");
      expect_ident("then");
      WindowFamily tail = family_base();
      if (tail.center() != p)
        throw parse_error("prefix center differs from tail center", peek().pos,
                          "matching p");
      WindowFamily w = WindowFamily::custom_prefix(std::move(windows), std::move(tail));
      expect_symbol(")");
      return w;
    }
    throw parse_error("unexpected token '" + peek().text + "'", peek().pos,
                      "symharm, rgeom, or prefix");
  }

  // Optional "; except INDEXSET -> [a,b]" inside a family's parentheses.
  WindowFamily family_exceptions(WindowFamily w) {
    if (accept_symbol(";")) {
      expect_ident("except");
      IndexSet ex = index_union();
      expect_symbol("->");
      Interval window = expect_interval();
      return w.with_exceptions(std::move(ex), window);
    }
    return w;
  }

 private:
  std::string take_integer_text() {
    if (peek().kind != Token::Kind::integer)
      throw parse_error("unexpected token '" + peek().text + "'", peek().pos, "an integer");
    return take().text;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

SetSource parse_set(const std::string& text) {
  Parser p(text);
  if (p.accept_ident("empty")) {
    p.expect_end();
    return SetSource{IntervalSet{}};
  }
  if (p.accept_ident("gapset")) {
    p.expect_symbol("(");
    p.expect_ident("c");
    p.expect_symbol("=");
    Rational c = p.expect_rational();
    p.expect_symbol(")");
    p.expect_end();
    return SetSource{GapSet(c)};
  }
  std::vector<Interval> ivs{p.expect_interval()};
  while (p.accept_ident("u")) ivs.push_back(p.expect_interval());
  p.expect_end();
  return SetSource{IntervalSet::normalize(std::move(ivs))};
}

IndexSet parse_index_set(const std::string& text) {
  Parser p(text);
  IndexSet s = p.index_union();
  p.expect_end();
  return s;
}

Ideal parse_ideal(const std::string& text) {
  Parser p(text);
  if (p.accept_ident("fin")) {
    p.expect_end();
    return Ideal::fin;
  }
  if (p.accept_ident("d0")) {
    p.expect_end();
    return Ideal::density_zero;
  }
  throw parse_error("unknown ideal '" + text + "'", 0, "fin or d0");
}

StepSequence parse_steps(const std::string& text) {
  Parser p(text);
  p.expect_ident("steps");
  p.expect_symbol("(");
  p.expect_ident("mod");
  p.expect_symbol("=");
  std::uint64_t modulus = p.expect_integer();
  if (modulus == 0) throw parse_error("modulus must be >= 1", 0, "mod >= 1");
  p.expect_symbol(";");

  std::map<std::uint64_t, Rational> class_map;
  auto read_class = [&] {
    std::uint64_t residue = p.expect_integer();
    p.expect_symbol(":");
    class_map[residue] = p.expect_rational();
  };
  read_class();
  while (p.accept_symbol(",")) read_class();

  std::map<std::uint64_t, Rational> exceptions;
  std::optional<StepSequence::Override> override;
  while (p.accept_symbol(";")) {
    if (p.accept_ident("except")) {
      std::uint64_t idx = p.expect_integer();
      p.expect_symbol("->");
      exceptions[idx] = p.expect_rational();
    } else if (p.accept_ident("on")) {
      if (override)
        throw parse_error("only one override clause is supported", 0, "a single 'on'");
      IndexSet s = p.index_union();
      p.expect_symbol("->");
      Rational v = p.expect_rational();
      override = StepSequence::Override{std::move(s), std::move(v)};
    } else {
      throw parse_error("unexpected clause", 0, "'except' or 'on'");
    }
  }
  p.expect_symbol(")");
  p.expect_end();

  std::vector<Rational> class_values(modulus);
  for (std::uint64_t r = 0; r < modulus; ++r) {
    auto it = class_map.find(r);
    if (it == class_map.end())
      throw parse_error("missing value for residue class " + std::to_string(r), 0,
                        "one value per class 0.." + std::to_string(modulus - 1));
    class_values[r] = it->second;
  }
  return StepSequence(modulus, std::move(class_values), std::move(exceptions),
                      std::move(override));
}

WindowFamily parse_family(const std::string& text) {
  Parser p(text);
  WindowFamily w = p.family_base();
  p.expect_end();
  return w;
}

Rational parse_rational(const std::string& text) {
  Parser p(text);
  Rational r = p.expect_rational();
  p.expect_end();
  return r;
}

}  // namespace idens
