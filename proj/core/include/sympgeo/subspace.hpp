#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sympgeo/mat.hpp"

namespace sympgeo {

// A linear subspace of GF(q)^n, stored as its unique k x n basis matrix in
// reduced row echelon form.  Two Subspace values are equal as sets iff their
// basis matrices are entry-wise equal.
class Subspace {
 public:
  static Subspace zero(const Gf& f, int n);
  static Subspace whole(const Gf& f, int n);
  // Span of the rows of m (canonicalizes; zero rows are dropped).
  static Subspace span_rows(const Mat& m);
  static Subspace span_vectors(const Gf& f, int n, const std::vector<Vec>& rows);
  static Subspace line(const Gf& f, const Vec& v);  // v must be nonzero

  const Gf& field() const { return basis_.field(); }
  int ambient() const { return basis_.cols(); }
  int dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  std::vector<int> pivots() const;

  // Canonical representative vector: the first basis row.  dim() >= 1.
  Vec representative() const;

  // Raw bytes identifying the subspace among subspaces of the same
  // Grassmannian; usable as a hash map key.
  std::string key() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  explicit Subspace(Mat rref_basis) : basis_(std::move(rref_basis)) {}
  Mat basis_;

  friend class GrassmannianEnumerator;
};

bool contains(const Subspace& outer, const Subspace& inner);
bool contains_vector(const Subspace& s, const Vec& v);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

// Exact Gaussian binomial [n k]_q; InputError on overflow of 64 bits.
std::uint64_t gaussian_binomial(int n, int k, std::uint64_t q);

// Streams all k-dimensional subspaces of GF(q)^n in a fixed total order:
// pivot-column sets lexicographically, and for each pivot set the free
// entries (scanned row-major) run through an odometer whose last position
// moves fastest.  Restart by constructing a fresh enumerator.
class GrassmannianEnumerator {
 public:
  GrassmannianEnumerator(const Gf& f, int n, int k);
  std::optional<Subspace> next();

 private:
  void load_free_positions();
  const Gf* f_;
  int n_, k_;
  bool done_ = false;
  std::vector<int> comb_;                        // pivot columns
  std::vector<std::pair<int, int>> free_;        // row-major free slots
  std::vector<felem> digits_;
};

std::vector<Subspace> all_subspaces(const Gf& f, int n, int k);

// Strict total order matching the enumeration order above.
bool subspace_less(const Subspace& a, const Subspace& b);

// For dim(s) > k: all k-subspaces of s.  For dim(s) < k: all k-subspaces of
// the ambient space containing s (via the fixed complement spanned by the
// non-pivot unit vectors of s).  Deterministic order; InputError if
// dim(s) == k or k is out of range.
std::vector<Subspace> incident_planes(const Subspace& s, int k);

// Shared immutable enumeration of one Grassmannian with index lookup.
class SubspaceTable {
 public:
  const std::vector<Subspace>& items() const { return items_; }
  int size() const { return int(items_.size()); }
  int index_of(const Subspace& s) const;  // InputError if absent

 private:
  SubspaceTable() = default;
  std::vector<Subspace> items_;
  std::vector<std::pair<std::string, int>> index_;  // sorted by key
  friend const SubspaceTable& subspace_table(const Gf& f, int n, int k);
};

// Process-wide cache; the reference stays valid until exit.
const SubspaceTable& subspace_table(const Gf& f, int n, int k);

}  // namespace sympgeo
