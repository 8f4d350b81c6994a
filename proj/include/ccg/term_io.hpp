#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "ccg/term.hpp"

namespace ccg {

// Concrete LF syntax shared by lexicon files, CLI output and tests:
//
//   term      ::= ('lam' | 'forall' | 'exists') IDENT '.' term | implchain
//   implchain ::= conjchain ('>>' implchain)?     -- right-associative
//   conjchain ::= appchain ('&&' conjchain)?      -- binds tighter than '>>'
//   appchain  ::= atom+                           -- left-associative
//   atom      ::= IDENT | '(' term ')'
//
// A binder may also appear directly as the right operand of '&&' or '>>'.
//
// Constants are identifiers optionally ending in a prime. An identifier
// bound by an enclosing binder is a variable; anything else is a constant.
Term parse_term(std::string_view text);

// Canonical printer. Bound variables are named x, x1, x2, ... in order of
// appearance, skipping names already used by constants; print/parse
// roundtrip up to alpha-equivalence.
std::string print_term(const Term& t);

std::ostream& operator<<(std::ostream& os, const Term& t);

}  // namespace ccg
