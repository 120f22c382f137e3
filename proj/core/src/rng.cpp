#include "sympgeo/rng.hpp"

#include "sympgeo/errors.hpp"

namespace sympgeo {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("draw from an empty range");
  const std::uint64_t limit = (~std::uint64_t(0) / bound) * bound;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return r % bound;
}

felem random_elem(SplitMix64& rng, const Gf& f) {
  return felem(rng.below(std::uint64_t(f.q())));
}

felem random_nonzero(SplitMix64& rng, const Gf& f) {
  return felem(1 + rng.below(std::uint64_t(f.q() - 1)));
}

Mat random_matrix(SplitMix64& rng, const Gf& f, int rows, int cols) {
  Mat m(f, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = random_elem(rng, f);
  return m;
}

Mat random_invertible(SplitMix64& rng, const Gf& f, int n) {
  for (;;) {
    Mat m = random_matrix(rng, f, n, n);
    if (rank_of(m) == n) return m;
  }
}

SemilinearMap random_semilinear(SplitMix64& rng, const Gf& f, int n) {
  int e = int(rng.below(std::uint64_t(f.m())));
  return SemilinearMap{random_invertible(rng, f, n), Aut{e}};
}

BilinearForm random_symplectic_form(SplitMix64& rng, const Gf& f, int n) {
  return pullback_form(standard_symplectic(f, n), random_semilinear(rng, f, n));
}

Subspace random_subspace(SplitMix64& rng, const Gf& f, int n, int k) {
  if (k < 0 || k > n) throw InputError("subspace dimension out of range");
  if (k == 0) return Subspace::zero(f, n);
  for (;;) {
    Mat m = random_matrix(rng, f, k, n);
    if (rank_of(m) == k) return Subspace::span_rows(m);
  }
}

}  // namespace sympgeo
