#pragma once

// Text grammar for series and closed forms.
//
// Series (the whole input denotes a sum over k >= 1):
//   series   := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor (('*' factor) | ('/' divisor))*
//   factor   := int | 'H[' index ']' ['^' int] | linear '^' '-' int
//   divisor  := int | linear ['^' int] | '(' dfactor ('*' dfactor)* ')' ['^' int]
//   dfactor  := int | linear ['^' int]
//   linear   := index | '(' index ')'
//   index    := 'k' ['+' int]
// Division chains accumulate into one denominator product.
//
// Closed forms:
//   cf       := ['+'|'-'] cterm (('+'|'-') cterm)*
//   cterm    := cfactor (('*' cfactor) | ('/' int))*
//   cfactor  := int | 'zeta(' int ')' ['^' int] | 'EulerSum(' int ',' int ')' | 'S(' int ',' int ')'

#include <span>
#include <string>
#include <string_view>

#include "eulersum/closed_form.hpp"
#include "eulersum/term.hpp"

namespace eulersum {

/// Throws ParseError (ShiftError for negative or non-integer shifts).
SeriesExpression parse_series(std::string_view src);

/// Throws ParseError.
ClosedForm parse_closed_form(std::string_view src);

/// Printers; text output parses back to the same value.
std::string format(const GeneralTerm& term, Format style);
std::string format(const SeriesExpression& series, Format style);
std::string format(std::span<const CanonicalTerm> terms, Format style);

}  // namespace eulersum
