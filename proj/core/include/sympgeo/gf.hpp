#pragma once

#include <cstdint>
#include <vector>

#include "sympgeo/errors.hpp"

namespace sympgeo {

// Code of a field element of GF(p^m): an integer in [0, q) whose base-p
// digits are the coefficients of the residue polynomial, lowest digit first
// (digit 0 = constant term).  For prime fields this is the usual residue.
using felem = std::uint8_t;

// Largest supported field order.
inline constexpr int kMaxFieldOrder = 256;

// Frobenius automorphism a -> a^(p^e) with 0 <= e < m.  Every automorphism of
// GF(p^m) has this shape; the group is cyclic of order m and e = 0 is the
// identity.  Exponents are reduced mod m by the field on use.
struct Aut {
  int e = 0;
};

inline bool operator==(Aut a, Aut b) { return a.e == b.e; }
inline bool operator!=(Aut a, Aut b) { return a.e != b.e; }

// A finite field GF(p^m), q = p^m <= kMaxFieldOrder, with a fixed modulus
// polynomial and precomputed tables (addition, negation, discrete logs for
// multiplication and inversion, Frobenius orbit maps).
//
// Instances come from make_field() only, are immutable, and live until
// process exit, so raw `const Gf*` pointers may be stored freely and field
// identity can be tested by pointer equality.
class Gf {
 public:
  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }

  // Modulus coefficients over GF(p), lowest degree first, size m+1, monic.
  // For m = 1 this is the degree-1 placeholder x.
  const std::vector<int>& modulus() const { return modulus_; }

  felem add(felem a, felem b) const { return add_[size_t(a) * q_ + b]; }
  felem neg(felem a) const { return neg_[a]; }
  felem sub(felem a, felem b) const { return add(a, neg(b)); }

  felem mul(felem a, felem b) const {
    if (a == 0 || b == 0) return 0;
    int s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }

  // Throws MathError on a = 0.
  felem inv(felem a) const {
    if (a == 0) throw MathError("field inverse of zero");
    int s = log_[a] == 0 ? 0 : q_ - 1 - log_[a];
    return exp_[s];
  }

  felem pow(felem a, std::uint64_t k) const;

  // sigma(a) = a^(p^sigma.e); sigma.e is reduced mod m.
  felem frob(Aut sigma, felem a) const {
    return frob_[size_t(norm(sigma.e)) * q_ + a];
  }

  Aut aut_compose(Aut s, Aut t) const { return Aut{norm(s.e + t.e)}; }
  Aut aut_inverse(Aut s) const { return Aut{norm(-s.e)}; }
  Aut identity_aut() const { return Aut{0}; }

  Gf(const Gf&) = delete;
  Gf& operator=(const Gf&) = delete;

 private:
  Gf() = default;
  int norm(int e) const {
    e %= m_;
    return e < 0 ? e + m_ : e;
  }

  int p_ = 0, m_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::vector<felem> add_;   // q*q
  std::vector<felem> neg_;   // q
  std::vector<felem> exp_;   // q-1, exp_[i] = g^i for a fixed generator g
  std::vector<int> log_;     // q, log_[0] unused
  std::vector<felem> frob_;  // m*q, frob_[e*q + a] = a^(p^e)

  friend const Gf& make_field(int p, int m);
};

// Field registry.  Returns the unique instance for (p, m); the reference is
// valid for the rest of the process.  Throws InputError for non-prime p,
// m < 1, orders above kMaxFieldOrder, and extension degrees without a
// built-in modulus.  The modulus table covers GF(4), GF(8), GF(9), GF(16)
// and GF(25); every table entry is re-verified irreducible on first use.
const Gf& make_field(int p, int m);

// Convenience: order q -> field, factoring q as p^m.  InputError if q is not
// a prime power in range.
const Gf& field_of_order(int q);

}  // namespace sympgeo
