#pragma once

#include <cstdint>

#include "sympgeo/forms.hpp"

namespace sympgeo {

// splitmix64.  The exact stream is part of the tool's reproducibility
// contract (seeded runs must give identical results across platforms), so
// the generator is spelled out here instead of delegated to std::.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform draw from [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

felem random_elem(SplitMix64& rng, const Gf& f);
felem random_nonzero(SplitMix64& rng, const Gf& f);
Mat random_matrix(SplitMix64& rng, const Gf& f, int rows, int cols);
Mat random_invertible(SplitMix64& rng, const Gf& f, int n);

// Invertible map with the automorphism uniform over the Frobenius powers
// (always the identity over prime fields).
SemilinearMap random_semilinear(SplitMix64& rng, const Gf& f, int n);

// Pullback of the standard symplectic form through a random semilinear map;
// non-singular and symplectic by construction.  n must be even.
BilinearForm random_symplectic_form(SplitMix64& rng, const Gf& f, int n);

Subspace random_subspace(SplitMix64& rng, const Gf& f, int n, int k);

}  // namespace sympgeo
