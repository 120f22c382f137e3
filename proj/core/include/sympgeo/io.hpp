#pragma once

#include <istream>
#include <ostream>

#include "sympgeo/singular_sets.hpp"

namespace sympgeo {

// Whitespace-separated text formats, byte-stable across runs:
//
//   Subspace block:  k lines, each n space-separated element codes (the
//                    canonical basis rows).
//   PlaneSet file:   header "q n k count", then every block preceded by one
//                    blank line, in set order.
//   Gram file:       header "q n", then n lines of n codes.
//
// Readers are strict about the grammar (token counts, ranges, block count)
// but accept blocks whose rows are any basis of the subspace and members in
// any order: everything is re-canonicalized on input.

void print_subspace(std::ostream& os, const Subspace& s);
void print_plane_set(std::ostream& os, const PlaneSet& x);
void print_gram(std::ostream& os, const Mat& gram);

// Both throw InputError with a line-oriented message on malformed input.
PlaneSet read_plane_set(std::istream& is);
Mat read_gram(std::istream& is);

}  // namespace sympgeo
