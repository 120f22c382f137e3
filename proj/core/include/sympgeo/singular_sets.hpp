#pragma once

#include <optional>
#include <variant>

#include "sympgeo/forms.hpp"

namespace sympgeo {

// A finite set of k-dimensional subspaces of GF(q)^n, deduplicated and kept
// in the Grassmannian enumeration order.
class PlaneSet {
 public:
  static PlaneSet make(const Gf& f, int n, int k, std::vector<Subspace> members);

  const Gf& field() const { return *f_; }
  int ambient() const { return n_; }
  int plane_dim() const { return k_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<Subspace>& members() const { return members_; }
  bool contains(const Subspace& s) const;

  PlaneSet with_added(const Subspace& s) const;
  PlaneSet with_removed(const Subspace& s) const;

 private:
  PlaneSet() = default;
  const Gf* f_ = nullptr;
  int n_ = 0, k_ = 0;
  std::vector<Subspace> members_;
};

// Same (q, n, k) and the same members; InputError on parameter mismatch.
bool equal_sets(const PlaneSet& a, const PlaneSet& b);

// All k-subspaces on which the restriction of omega is singular (restricted
// Gram rank < k).  Requires a non-singular symplectic form and 1 <= k <= n-1.
// For odd k the restriction is always singular (alternating matrices have
// even rank), so the full Grassmannian is returned.
PlaneSet singular_set(const BilinearForm& om, int k);

// The star condition for X a set of k-planes, k = n-2 or k = 2, n >= 4:
//
//   hyperplane direction (k = n-2): for every hyperplane s there is a line
//   F(s) in s such that the members of X inside s are exactly the k-planes
//   of s through F(s);
//
//   line direction (k = 2): for every line s there is a hyperplane F(s)
//   containing s such that the members of X through s are exactly the
//   planes through s inside F(s).
//
// When the condition holds, F is unique and the checker returns it as a
// witness; otherwise it returns the first failure in enumeration order with
// a concrete counterexample.
enum class StarDirection { hyperplane_to_line, line_to_hyperplane };

struct StarWitness {
  StarDirection direction;
  // sources = the full Grassmannian of hyperplanes (or lines) in enumeration
  // order; images[i] = F(sources[i]).
  std::vector<Subspace> sources;
  std::vector<Subspace> images;
};

struct StarFailure {
  Subspace at;                    // the hyperplane or line that fails
  std::optional<Subspace> plane;  // an offending k-plane when one exists
  std::string reason;
};

using StarCheck = std::variant<StarWitness, StarFailure>;

inline bool accepted(const StarCheck& c) { return std::holds_alternative<StarWitness>(c); }

StarCheck check_star_condition(const PlaneSet& x, StarDirection dir);

// Direction used by the command-line checker: lines for k = 2 (including
// n = 4), hyperplanes for k = n-2 > 2.
StarDirection default_direction(int n, int k);

// Symmetry of an accepted witness: F(s1) incident with s2 iff F(s2) incident
// with s1, over all source pairs.
bool witness_symmetric(const StarWitness& w);

}  // namespace sympgeo
