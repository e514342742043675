#pragma once

#include <iosfwd>
#include <string>

#include "rp4/complex.hpp"

namespace rp4 {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Facet-list format ("fl"):
//   d=<dim> n=<vertices> f=<facets>
//   one facet per line, space-separated increasing 1-based ids
//   # label <id> <string>      (optional; other # lines are comments)
//
// Bracket format: [[1,2,3],[2,3,4]] on one line, whitespace-insensitive.
// read_complex() auto-detects: input starting with '[' is bracket.

SimplicialComplex read_complex(std::istream& in);
SimplicialComplex read_complex_file(const std::string& path);  // "-" = stdin

void write_fl(std::ostream& out, const SimplicialComplex& c);
void write_bracket(std::ostream& out, const SimplicialComplex& c);
void write_complex_file(const std::string& path, const SimplicialComplex& c,
                        bool bracket = false);  // "-" = stdout

}  // namespace rp4
