#pragma once

#include <string_view>

#include "bisimod/formula.hpp"

namespace bisimod {

/// Parse a formula in the ASCII surface syntax
///
///   atom        identifier  [a-z][a-zA-Z0-9_]*
///   constants   false, true
///   prefix      ~  []  <>  [b]  <b>
///   infix       &  |  ->  <->        (-> and <-> right-assoc, & | left-assoc)
///   precedence  prefix > & > | > -> > <->
///
/// The result is core-normalized: sugar is eliminated during parsing.
/// Throws ParseError (with byte offset and expected-token set) on bad input.
Formula parse(std::string_view text);

} // namespace bisimod
