#pragma once

#include "sympgeo/subspace.hpp"

namespace sympgeo {

// A (sigma1, sigma2)-bilinear form on GF(q)^n.  The one evaluation
// convention used throughout the library:
//
//   omega(x, y) = sigma1(x)^T * gram * sigma2(y)
//
// with the automorphisms applied entry-wise to the column vectors x and y.
// Plain bilinear forms have sigma1 = sigma2 = identity.
struct BilinearForm {
  const Gf* f = nullptr;
  int n = 0;
  Mat gram;
  Aut s1{0}, s2{0};

  BilinearForm() = default;
  BilinearForm(const Gf& field, Mat g, Aut sigma1, Aut sigma2);

  const Gf& field() const { return *f; }
  felem eval(const Vec& x, const Vec& y) const;
};

// An invertible semilinear transformation v -> g * sigma(v), sigma applied
// entry-wise.  Acts on subspaces row by row.
struct SemilinearMap {
  Mat g;
  Aut sigma{0};
};

BilinearForm standard_symplectic(const Gf& f, int n);  // block-diagonal [[0,1],[-1,0]]
BilinearForm identity_form(const Gf& f, int n);

// Zero diagonal and gram = -gram^T (with sigma1 == sigma2); equivalent to
// omega(x, x) = 0 for all x.
bool is_symplectic(const BilinearForm& om);
bool non_singular(const BilinearForm& om);

// omega(x, y) = 0 <=> omega(y, x) = 0 for all x, y.  Decided exhaustively:
// over all vector pairs when q^n is small, else over all line pairs (the
// zero relation is invariant under scaling either argument).  MathError on
// singular input.
bool is_reflexive(const BilinearForm& om);

// {y : omega(x, y) = 0 for all x}.
Subspace radical(const BilinearForm& om);

// s -> {y : omega(x, y) = 0 for all x in s}; dimension n - dim(s).
// MathError if the form is singular.
Subspace orthogonal_complement(const BilinearForm& om, const Subspace& s);

// The form omega'(x, y) = omega(y, x): transposed Gram, swapped automorphisms.
BilinearForm transpose_form(const BilinearForm& om);

// omega'(x, y) = omega(f(x), f(y)).
BilinearForm pullback_form(const BilinearForm& om, const SemilinearMap& fmap);

// a * omega (a != 0) and tau(omega); both preserve being symplectic and have
// the same vanishing relation as omega.
BilinearForm scale_form(const BilinearForm& om, felem a);
BilinearForm twist_form(const BilinearForm& om, Aut tau);

// Gram of the restriction of omega to s in the canonical basis of s.
Mat restricted_gram(const BilinearForm& om, const Subspace& s);

// For a plain non-singular symplectic form: a linear change of basis built
// from hyperbolic pairs, greedily over the deterministic coordinate order of
// GF(q)^n, with pullback_form(om, result) equal to standard_symplectic.
SemilinearMap symplectic_basis(const BilinearForm& om);

Vec apply_map(const SemilinearMap& fmap, const Vec& v);
Subspace apply_map(const SemilinearMap& fmap, const Subspace& s);
// f1 after f2.
SemilinearMap compose(const SemilinearMap& f1, const SemilinearMap& f2);
SemilinearMap inverse(const SemilinearMap& fmap);

// Vector with index idx in the deterministic coordinate order: idx written
// base q, most significant digit first.  idx in [0, q^n).
Vec coordinate_vector(const Gf& f, int n, std::uint64_t idx);

}  // namespace sympgeo
