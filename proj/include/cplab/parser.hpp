#pragma once

#include <stdexcept>
#include <string>

#include "cplab/presalg.hpp"

namespace cplab {

/// Syntax error with a 1-based column into the input line.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, int column)
      : std::runtime_error(what), column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

/// Word DSL:
///   element := "-"? term (("+"|"-") term)*
///   term    := scalar? factor*          (at least one of the two)
///   factor  := atom ("^" int)? ("'")?   "'" is the adjoint
///   atom    := "X1".."X3" | "u" | "g" | "v" | "U"int | "W"
///            | "E"digit | "e"digit | "g"digit | "(" element ")"
///   scalar  := (rational | "eps" | "delta") ("^" int)?, juxtaposed or "*"-joined
/// Whitespace-separated juxtaposition is multiplication. "E"/"e"/"g"-digit
/// atoms expand to the spectral projections; "W" expands to the algebra's
/// active cube-root candidate.
Element parse_element(const std::string& text, const Algebra& alg);

/// Canonical text form; parse_element(format_element(e)) == e. Coefficients
/// print as rational multiples of "eps"/"delta" powers, non-monomial
/// coefficients split into one output term per basis monomial.
std::string format_element(const Element& e);

}  // namespace cplab
