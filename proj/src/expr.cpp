#include "evreg/expr.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "evreg/error.hpp"

namespace evreg {

namespace {

[[noreturn]] void syntax_error(SourcePos pos, std::size_t offset, const std::string& msg) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(pos.line) + ", column " +
                                          std::to_string(pos.column + static_cast<int>(offset)) + ": " + msg);
}

class Parser {
 public:
  Parser(std::string_view text, const FieldPtr& field, std::span<const std::string_view> vars, SourcePos pos)
      : text_(text), field_(field), vars_(vars), pos_(pos), nvars_(static_cast<int>(vars.size())) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip_ws();
    if (i_ != text_.size()) syntax_error(pos_, i_, std::string("unexpected '") + text_[i_] + "'");
    return r;
  }

 private:
  void skip_ws() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }

  bool accept(char c) {
    skip_ws();
    if (i_ < text_.size() && text_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  RationalFunction constant(const FieldElement& c) const {
    return RationalFunction(MPoly::constant(field_, nvars_, c));
  }

  RationalFunction expr() {
    skip_ws();
    RationalFunction acc = term_signed();
    for (;;) {
      if (accept('+')) {
        acc = acc + term_signed();
      } else if (accept('-')) {
        acc = acc - term_signed();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term_signed() {
    if (accept('-')) return -term_signed();
    if (accept('+')) return term_signed();
    return term();
  }

  RationalFunction term() {
    RationalFunction acc = power();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor_signed();
      } else if (accept('/')) {
        const std::size_t at = i_;
        RationalFunction d = factor_signed();
        if (d.is_zero()) syntax_error(pos_, at, "division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction factor_signed() {
    if (accept('-')) return -factor_signed();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (!accept('^')) return base;
    skip_ws();
    bool negative = false;
    if (accept('-')) negative = true;
    skip_ws();
    const std::size_t start = i_;
    while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
    if (start == i_) syntax_error(pos_, start, "expected an integer exponent");
    std::int64_t e = 0;
    try {
      e = std::stoll(std::string(text_.substr(start, i_ - start)));
    } catch (const std::out_of_range&) {
      throw Error(ErrorCode::ExponentOverflow, "exponent too large");
    }
    if (negative) {
      if (base.is_zero()) syntax_error(pos_, start, "negative power of zero");
      e = -e;
    }
    return base.pow(e);
  }

  RationalFunction atom() {
    skip_ws();
    if (i_ >= text_.size()) syntax_error(pos_, i_, "unexpected end of expression");
    const char c = text_[i_];
    if (c == '(') {
      ++i_;
      RationalFunction r = expr();
      if (!accept(')')) syntax_error(pos_, i_, "expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
      return constant(FieldElement(field_, Rational(Integer(std::string(text_.substr(start, i_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i_;
      while (i_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_')) ++i_;
      const std::string_view name = text_.substr(start, i_ - start);
      for (int v = 0; v < nvars_; ++v) {
        if (vars_[static_cast<std::size_t>(v)] == name) return RationalFunction(MPoly::variable(field_, nvars_, v));
      }
      if (name == "t" && !field_->is_rational()) return constant(FieldElement::generator(field_));
      throw Error(ErrorCode::UnknownVariable, "line " + std::to_string(pos_.line) + ", column " +
                                                  std::to_string(pos_.column + static_cast<int>(start)) +
                                                  ": unknown variable '" + std::string(name) + "'");
    }
    syntax_error(pos_, i_, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  FieldPtr field_;
  std::span<const std::string_view> vars_;
  SourcePos pos_;
  int nvars_;
  std::size_t i_ = 0;
};

constexpr std::string_view kDummy[] = {"\x01"};

}  // namespace

RationalFunction parse_rational_function(std::string_view text, const FieldPtr& field,
                                         std::span<const std::string_view> variables, SourcePos pos) {
  if (variables.empty() || variables.size() > static_cast<std::size_t>(kMaxVars)) {
    throw Error(ErrorCode::ArityMismatch, "expressions take one to three variables");
  }
  return Parser(text, field, variables, pos).parse();
}

MPoly parse_polynomial(std::string_view text, const FieldPtr& field, std::span<const std::string_view> variables,
                       SourcePos pos) {
  const RationalFunction r = parse_rational_function(text, field, variables, pos);
  if (!r.is_polynomial()) syntax_error(pos, 0, "expected a polynomial, got " + r.to_string(variables));
  return r.num().scaled(r.den().leading_coefficient().inverse());
}

FieldElement parse_scalar(std::string_view text, const FieldPtr& field, SourcePos pos) {
  const MPoly p = parse_polynomial(text, field, kDummy, pos);
  if (!p.is_constant()) syntax_error(pos, 0, "expected a constant");
  return p.is_zero() ? FieldElement(field) : p.leading_coefficient();
}

FieldPtr parse_minpoly(std::string_view text, SourcePos pos) {
  static constexpr std::string_view kT[] = {"t"};
  const MPoly p = parse_polynomial(text, NumberField::rationals(), kT, pos);
  if (p.total_degree() < 1) syntax_error(pos, 0, "minimal polynomial must have degree >= 1");
  std::vector<Rational> c(static_cast<std::size_t>(p.degree_in(0) + 1), Rational(0));
  for (const auto& [e, coef] : p.terms()) c[static_cast<std::size_t>(e[0])] = coef.rational_part();
  if (c.back() != 1) syntax_error(pos, 0, "minimal polynomial must be monic");
  return NumberField::extension(std::move(c));
}

}  // namespace evreg
