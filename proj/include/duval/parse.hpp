#pragma once

#include <string>

#include "duval/poly.hpp"

namespace duval {

/// Parse a polynomial in the shared text grammar over the given variables.
/// Terms like "3/2*x^2*y - t^3 + u"; parentheses and implicit-free products
/// via '*' only; '^' takes a nonnegative integer. Whitespace-insensitive.
Poly parse_poly(const std::string& text, const VarSetPtr& vs);

/// Parse a "vars: x y z t" header (the "vars:" prefix is optional).
VarSetPtr parse_vars_header(const std::string& line);

}  // namespace duval
