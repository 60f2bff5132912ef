#pragma once

#include <string>

#include "linkform/complex.hpp"

namespace linkform::cli {

// Builds a complex from a generator expression such as "rp(5)",
// "lens(4,1)", "product(sphere(2),lens(8,1))" or "susp(rp(2))". Any other
// string is read as a complex file. Throws ParseError or ValidationError.
SimplicialComplex resolve_complex(const std::string& spec);

bool is_generator_expression(const std::string& spec);

} // namespace linkform::cli
