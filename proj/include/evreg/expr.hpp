#pragma once

#include <span>
#include <string_view>

#include "evreg/mpoly.hpp"
#include "evreg/numfield.hpp"

namespace evreg {

// Where a piece of text sits in its source, for error messages.
struct SourcePos {
  int line = 1;
  int column = 1;
};

// Expressions over the field: integer literals, the listed variables, the
// generator t (extension fields only), + - * / and ^ with an integer
// exponent (negative allowed). ^ binds tightest; unary minus applies to the
// following power.
RationalFunction parse_rational_function(std::string_view text, const FieldPtr& field,
                                         std::span<const std::string_view> variables, SourcePos pos = {});
// Same grammar; the result must have a constant denominator.
MPoly parse_polynomial(std::string_view text, const FieldPtr& field, std::span<const std::string_view> variables,
                       SourcePos pos = {});
FieldElement parse_scalar(std::string_view text, const FieldPtr& field, SourcePos pos = {});
// "t^2 - t + 1" as a field.
FieldPtr parse_minpoly(std::string_view text, SourcePos pos = {});

}  // namespace evreg
