#pragma once

#include <vector>

#include "sympgeo/forms.hpp"
#include "sympgeo/subspace.hpp"

namespace sympgeo {

// A permutation-style map on the projective points of GF(q)^n. Points are
// addressed by their index in subspace_table(f, n, 1), so LineMap values are
// only meaningful together with that table.
struct LineMap {
  const Gf* f = nullptr;
  int n = 0;
  std::vector<int> image;  // image[i] = table index of the image of point i

  const Gf& field() const { return *f; }
};

bool operator==(const LineMap& a, const LineMap& b);
inline bool operator!=(const LineMap& a, const LineMap& b) { return !(a == b); }

// Point map induced by an invertible semilinear map v |-> g * sigma(v).
LineMap induce_line_map(const SemilinearMap& m, int n);

// Checks that `lm` is a collineation of the projective space: a bijection on
// points that maps the point set of every 2-dimensional subspace onto the
// point set of a 2-dimensional subspace.  Exhaustive over all point pairs.
bool verify_collineation(const LineMap& lm);

// Recovers (g, sigma) with induce_line_map({g, sigma}, n) == lm. Requires lm
// to be induced by some invertible semilinear map; throws CollineationError
// otherwise. The result is normalized only up to the scalar freedom inherent
// in projective maps: g is determined up to a nonzero scalar factor.
SemilinearMap recover_semilinear(const LineMap& lm);

LineMap compose(const LineMap& outer, const LineMap& inner);

}  // namespace sympgeo
