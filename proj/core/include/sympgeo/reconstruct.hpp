#pragma once

#include <cstdint>
#include <variant>

#include "sympgeo/collineation.hpp"
#include "sympgeo/singular_sets.hpp"

namespace sympgeo {

// Pipeline selector for plane dimension k:
//   direct: requires k = n-2; works on the hyperplane witness of X itself.
//   dual:   requires k = 2; maps X through the identity-form duality into
//           the (n-2)-Grassmannian, runs the direct pipeline there, and
//           pulls the result back.
// For n = 4 the two overlap (k = 2 = n-2) and either can be chosen.
enum class Via { direct, dual };

struct ReconstructionReport {
  int q = 0, n = 0, k = 0;
  std::size_t set_size = 0;
  Via via = Via::direct;
  // Witness of the pipeline that ran: hyperplane->line for direct,
  // line->hyperplane (on X itself) for dual.
  StarWitness witness;
  // Point map recovered on the way; for the direct pipeline it induces
  // l |-> F(complement(identity_form, l)).
  SemilinearMap map;
  BilinearForm form;
  // Always all true in an emitted report; reproduced for the record.
  bool symplectic = false;
  bool non_singular = false;
  bool sset_match = false;
  double elapsed_ms = 0.0;
};

using ReconstructResult = std::variant<ReconstructionReport, StarFailure>;

// From a set X of k-planes (k = 2 or k = n-2, n even >= 4), produce a
// non-singular symplectic form whose singular k-planes are exactly X.
// Returns the failing star check if X does not qualify (the only
// mathematical rejection); throws InputError for out-of-range parameters
// and VerificationError if any later stage contradicts the star witness,
// which would mean a bug, not bad input.
ReconstructResult reconstruct_form(const PlaneSet& x);
ReconstructResult reconstruct_form(const PlaneSet& x, Via via);

enum class TheoremMode { exhaustive, sampled };

struct TheoremSummary {
  int q = 0, n = 0, k = 0;
  TheoremMode mode = TheoremMode::exhaustive;
  int samples = 0;  // requested draws (sampled mode only)
  std::uint64_t seed = 0;
  long forms_tested = 0;
  long distinct_ssets = 0;
  long failures = 0;
};

// For every non-singular symplectic form in scope, checks both directions:
// the singular set satisfies the star condition, and reconstruct_form run
// on the singular set reproduces it.  Exhaustive mode enumerates all
// invertible alternating Grams (plain bilinear); sampled mode draws
// pullbacks of the standard form through seeded random semilinear maps.
// Failures are counted, never thrown.
TheoremSummary verify_theorem(const Gf& f, int n, int k, TheoremMode mode,
                              int samples, std::uint64_t seed);

}  // namespace sympgeo
