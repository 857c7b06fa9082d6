#pragma once

#include <string>
#include <string_view>

#include "iso3/profile.hpp"

namespace iso3 {

// Parses a one-variable expression into a ProfileFn whose derivatives come
// from the Taylor3 rules.
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := ('+' | '-') unary | power
//   power := atom ('^' unary)?
//   atom  := number | 'pi' | 'e' | name | func '(' expr ')' | '(' expr ')'
//   func  := sin | cos | tan | exp | log | abs | sqrt | atan
//
// Any other identifier is the variable; at most one distinct variable name
// may appear. Throws ParseError with the offending column.
ProfileFn parse_profile(std::string_view text, Interval domain = Interval::all());

}  // namespace iso3
