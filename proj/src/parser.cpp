#include "recipcas/parser.hpp"

#include <cctype>
#include <optional>
#include <utility>

namespace recipcas {

namespace {

// Evaluation works on the same variant the caller receives, with polynomials
// promoted to rational functions on demand.  Reciprocal sums combine only
// with reciprocal sums: their representation (not just the value) is the
// point of the type, so silent normalization would lose information.

RationalFunction as_rational(const ParsedValue& v) {
  if (const auto* p = std::get_if<Polynomial>(&v)) return RationalFunction::from_polynomial(*p);
  if (const auto* r = std::get_if<RationalFunction>(&v)) return *r;
  return recip_normalize(std::get<RecipSum>(v));
}

class Parser {
 public:
  Parser(const std::string& text, int vars) : text_(text), vars_(vars) {}

  ParsedValue run() {
    skip_spaces();
    if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
    ParsedValue v = parse_sum();
    skip_spaces();
    if (pos_ < text_.size()) throw ParseError("unexpected trailing input", pos_);
    // Values that turned out to be polynomials are reported as polynomials;
    // the canonical denominator of such a value is exactly 1.
    if (const auto* r = std::get_if<RationalFunction>(&v); r && r->is_polynomial())
      return r->num();
    return v;
  }

 private:
  const std::string& text_;
  int vars_;
  std::size_t pos_ = 0;

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_spaces();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_spaces();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  ParsedValue parse_sum() {
    ParsedValue left = parse_term();
    while (true) {
      const std::size_t at = pos_;
      if (eat('+')) {
        left = combine_add(std::move(left), parse_term(), at);
      } else if (eat('-')) {
        left = combine_add(std::move(left), negate(parse_term()), at);
      } else {
        return left;
      }
    }
  }

  ParsedValue parse_term() {
    ParsedValue left = parse_factor();
    while (true) {
      const std::size_t at = pos_;
      if (eat('*')) {
        left = combine_mul(std::move(left), parse_factor(), at);
      } else if (eat('/')) {
        left = combine_div(std::move(left), parse_factor(), at);
      } else {
        return left;
      }
    }
  }

  ParsedValue parse_factor() {
    if (eat('-')) return negate(parse_factor());
    if (eat('+')) return parse_factor();
    ParsedValue base = parse_primary();
    while (true) {
      const std::size_t at = pos_;
      if (!eat('^')) return base;
      const int e = parse_natural(at);
      base = power(std::move(base), e, at);
    }
  }

  int parse_natural(std::size_t at) {
    skip_spaces();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("exponent must be a nonnegative integer literal", at);
    long long n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = n * 10 + (text_[pos_] - '0');
      if (n > 1000000) throw ParseError("exponent too large", at);
      ++pos_;
    }
    return static_cast<int>(n);
  }

  ParsedValue parse_primary() {
    skip_spaces();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", at);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ParsedValue inner = parse_sum();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        n = n * 10 + (text_[pos_] - '0');
        ++pos_;
      }
      return Polynomial::constant(vars_, Rational(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        word += text_[pos_];
        ++pos_;
      }
      if (word == "sigma" || word == "recip") {
        if (!eat('(')) throw ParseError("expected '(' after " + word, pos_);
        ParsedValue inner = parse_sum();
        if (!eat(')')) throw ParseError("expected ')'", pos_);
        if (word == "sigma") return sigma(as_rational(inner));
        return make_recip(std::move(inner), at);
      }
      return Polynomial::variable(vars_, variable_index(word, at));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", at);
  }

  int variable_index(const std::string& word, std::size_t at) {
    if (word.size() == 1 && vars_ <= 3) {
      const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(word[0])));
      const int index = c == 'x' ? 0 : c == 'y' ? 1 : c == 'z' ? 2 : -1;
      if (index >= 0 && index < vars_) return index;
      throw UnknownVariable(word, at);
    }
    if ((word[0] == 'X' || word[0] == 'x') && word.size() > 1) {
      int index = 0;
      for (std::size_t i = 1; i < word.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(word[i]))) throw UnknownVariable(word, at);
        index = index * 10 + (word[i] - '0');
        if (index > vars_) throw UnknownVariable(word, at);
      }
      if (index >= 1 && index <= vars_) return index - 1;
    }
    throw UnknownVariable(word, at);
  }

  ParsedValue make_recip(ParsedValue inner, std::size_t at) {
    Polynomial f(vars_);
    if (const auto* p = std::get_if<Polynomial>(&inner)) {
      f = *p;
    } else if (const auto* r = std::get_if<RationalFunction>(&inner); r && r->is_polynomial()) {
      f = r->num();
    } else {
      throw ParseError("recip(f) requires f to be a polynomial", at);
    }
    if (f.is_zero()) throw ParseError("recip(f) requires a nonzero polynomial", at);
    return RecipSum(vars_, {std::move(f)});
  }

  static bool is_recip(const ParsedValue& v) { return std::holds_alternative<RecipSum>(v); }

  ParsedValue negate(ParsedValue v) {
    if (const auto* p = std::get_if<Polynomial>(&v)) return -*p;
    if (const auto* r = std::get_if<RationalFunction>(&v)) return -*r;
    return recip_neg(std::get<RecipSum>(v));
  }

  ParsedValue combine_add(ParsedValue a, ParsedValue b, std::size_t at) {
    if (is_recip(a) != is_recip(b))
      throw ParseError("reciprocal sums combine only with reciprocal sums", at);
    if (is_recip(a)) return recip_add(std::get<RecipSum>(a), std::get<RecipSum>(b));
    if (std::holds_alternative<Polynomial>(a) && std::holds_alternative<Polynomial>(b))
      return std::get<Polynomial>(a) + std::get<Polynomial>(b);
    return as_rational(a) + as_rational(b);
  }

  ParsedValue combine_mul(ParsedValue a, ParsedValue b, std::size_t at) {
    if (is_recip(a) != is_recip(b))
      throw ParseError("reciprocal sums combine only with reciprocal sums", at);
    if (is_recip(a)) return recip_mul(std::get<RecipSum>(a), std::get<RecipSum>(b));
    if (std::holds_alternative<Polynomial>(a) && std::holds_alternative<Polynomial>(b))
      return std::get<Polynomial>(a) * std::get<Polynomial>(b);
    return as_rational(a) * as_rational(b);
  }

  ParsedValue combine_div(ParsedValue a, ParsedValue b, std::size_t at) {
    if (is_recip(a) || is_recip(b))
      throw ParseError("reciprocal sums do not support '/'", at);
    const RationalFunction den = as_rational(b);
    if (den.is_zero()) throw ZeroDenominator();
    return as_rational(a) / den;
  }

  ParsedValue power(ParsedValue v, int e, std::size_t at) {
    if (const auto* p = std::get_if<Polynomial>(&v)) return pow(*p, e);
    if (const auto* r = std::get_if<RationalFunction>(&v)) return pow(*r, e);
    const RecipSum& rs = std::get<RecipSum>(v);
    RecipSum out(rs.vars(), {Polynomial::constant(rs.vars(), 1)});
    for (int i = 0; i < e; ++i) out = recip_mul(out, rs);
    return out;
  }
};

}  // namespace

ParsedValue parse_expression(const std::string& text, int vars) {
  if (vars < 1) throw Error("variable count must be at least 1");
  return Parser(text, vars).run();
}

RationalFunction value_as_rational(const ParsedValue& v) { return as_rational(v); }

Polynomial value_as_polynomial(const ParsedValue& v) {
  if (const auto* p = std::get_if<Polynomial>(&v)) return *p;
  if (const auto* r = std::get_if<RationalFunction>(&v); r && r->is_polynomial())
    return r->num();
  throw Error("value is not a polynomial");
}

std::string to_string(const ParsedValue& v) {
  if (const auto* p = std::get_if<Polynomial>(&v)) return to_string(*p);
  if (const auto* r = std::get_if<RationalFunction>(&v)) return to_string(*r);
  return to_string(std::get<RecipSum>(v));
}

namespace {

struct SpecCursor {
  const std::string& text;
  std::size_t pos = 0;

  std::string take_until_colon_or_end() {
    std::string out;
    while (pos < text.size() && text[pos] != ':') out += text[pos++];
    return out;
  }

  bool eat_colon() {
    if (pos < text.size() && text[pos] == ':') {
      ++pos;
      return true;
    }
    return false;
  }
};

int parse_spec_int(const std::string& piece, const std::string& what, std::size_t at) {
  if (piece.empty()) throw ParseError("expected " + what, at);
  int out = 0;
  for (char c : piece) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("expected " + what + ", got '" + piece + "'", at);
    out = out * 10 + (c - '0');
    if (out > 1000000) throw ParseError(what + " too large", at);
  }
  return out;
}

ValuationSpec parse_spec(SpecCursor& cursor, int vars) {
  const std::size_t at = cursor.pos;
  const std::string head = cursor.take_until_colon_or_end();
  if (head == "order") return ValuationSpec::order();
  if (head == "xadic") {
    if (!cursor.eat_colon()) throw ParseError("expected xadic:i", at);
    const int i = parse_spec_int(cursor.take_until_colon_or_end(), "variable index", cursor.pos);
    if (i < 1 || i > vars) throw ParseError("variable index out of range", at);
    return ValuationSpec::x_adic(i - 1);
  }
  if (head == "wsub") {
    if (!cursor.eat_colon()) throw ParseError("expected wsub:p,q,h", at);
    if (vars != 2)
      throw ParseError("wsub valuations require exactly two variables (use --vars 2)", at);
    const std::string rest = cursor.take_until_colon_or_end();
    const auto first = rest.find(',');
    const auto second = rest.find(',', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos)
      throw ParseError("expected wsub:p,q,h", at);
    const int p = parse_spec_int(rest.substr(0, first), "p", at);
    const int q = parse_spec_int(rest.substr(first + 1, second - first - 1), "q", at);
    const int h = parse_spec_int(rest.substr(second + 1), "h", at);
    return ValuationSpec::weighted_sub(p, q, h);
  }
  if (head == "gauss" || head == "lex") {
    if (!cursor.eat_colon()) throw ParseError("expected " + head + ":VAR:SPEC", at);
    const std::string var_name = cursor.take_until_colon_or_end();
    if (!cursor.eat_colon()) throw ParseError("expected " + head + ":VAR:SPEC", at);
    const ParsedValue v = parse_expression(var_name, vars);
    const auto* p = std::get_if<Polynomial>(&v);
    if (!p || p->term_count() != 1 || p->total_degree() != 1 || p->leading_coefficient() != 1)
      throw ParseError("expected a variable name, got '" + var_name + "'", at);
    int var = -1;
    for (int i = 0; i < vars; ++i)
      if (p->degree_in(i) == 1) var = i;
    ValuationSpec inner = parse_spec(cursor, vars);
    return head == "gauss" ? ValuationSpec::gauss_ext(std::move(inner), var)
                           : ValuationSpec::lex_composite(std::move(inner), var);
  }
  throw ParseError("unknown valuation spec '" + head + "'", at);
}

}  // namespace

ValuationSpec parse_valuation_spec(const std::string& text, int vars) {
  SpecCursor cursor{text};
  ValuationSpec spec = parse_spec(cursor, vars);
  if (cursor.pos != text.size()) throw ParseError("unexpected trailing input", cursor.pos);
  return spec;
}

}  // namespace recipcas
