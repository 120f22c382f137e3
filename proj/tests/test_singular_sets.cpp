#include <algorithm>
#include <set>

#include "doctest.h"
#include "sympgeo/errors.hpp"
#include "sympgeo/rng.hpp"
#include "sympgeo/singular_sets.hpp"

namespace {

using namespace sympgeo;

// A subspace restriction is singular iff some nonzero vector of the
// subspace pairs to zero with the whole subspace.  This checks that
// directly on vectors, with no matrix rank involved.
bool singular_on(const BilinearForm& om, const Subspace& s) {
  const Gf& f = om.field();
  int k = s.dim();
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= f.q();
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    Vec coeff = coordinate_vector(f, k, idx);
    Vec v(s.ambient(), 0);
    for (int r = 0; r < k; ++r) {
      Vec row = s.basis().row(r);
      for (int c = 0; c < s.ambient(); ++c)
        v[c] = f.add(v[c], f.mul(coeff[r], row[c]));
    }
    bool perp_all = true;
    for (int r = 0; r < k && perp_all; ++r)
      perp_all = om.eval(v, s.basis().row(r)) == 0;
    if (perp_all) return true;
  }
  return false;
}

PlaneSet brute_singular_set(const BilinearForm& om, int k) {
  std::vector<Subspace> mem;
  for (const Subspace& s : all_subspaces(om.field(), om.n, k))
    if (singular_on(om, s)) mem.push_back(s);
  return PlaneSet::make(om.field(), om.n, k, std::move(mem));
}

}  // namespace

TEST_CASE("plane set construction deduplicates and orders") {
  const Gf& f = field_of_order(2);
  auto planes = all_subspaces(f, 4, 2);
  std::vector<Subspace> shuffled = {planes[7], planes[2], planes[7], planes[0], planes[2]};
  PlaneSet x = PlaneSet::make(f, 4, 2, shuffled);
  CHECK(x.size() == 3);
  CHECK(x.members()[0] == planes[0]);
  CHECK(x.members()[1] == planes[2]);
  CHECK(x.members()[2] == planes[7]);
  CHECK(x.contains(planes[2]));
  CHECK(!x.contains(planes[1]));

  PlaneSet grown = x.with_added(planes[1]);
  CHECK(grown.size() == 4);
  CHECK(grown.members()[1] == planes[1]);
  CHECK(x.size() == 3);  // original untouched
  CHECK(equal_sets(x.with_added(planes[2]), x));

  PlaneSet shrunk = x.with_removed(planes[2]);
  CHECK(shrunk.size() == 2);
  CHECK(!shrunk.contains(planes[2]));
  CHECK(equal_sets(x.with_removed(planes[1]), x));

  CHECK_THROWS_AS(PlaneSet::make(f, 4, 2, {Subspace::line(f, {1, 0, 0, 0})}), InputError);
  PlaneSet other = PlaneSet::make(f, 4, 1, {});
  CHECK_THROWS_AS(equal_sets(x, other), InputError);
}

TEST_CASE("singular set equals the vector-level computation") {
  SplitMix64 rng(4001);
  for (int q : {2, 3}) {
    const Gf& f = field_of_order(q);
    std::vector<BilinearForm> forms = {standard_symplectic(f, 4)};
    for (int t = 0; t < 3; ++t) forms.push_back(random_symplectic_form(rng, f, 4));
    for (const BilinearForm& om : forms)
      for (int k = 1; k <= 3; ++k)
        CHECK(equal_sets(singular_set(om, k), brute_singular_set(om, k)));
  }
  const Gf& f4 = field_of_order(4);
  BilinearForm j = standard_symplectic(f4, 4);
  CHECK(equal_sets(singular_set(j, 2), brute_singular_set(j, 2)));
}

TEST_CASE("singular set via hyperplane intersections") {
  // For a hyperplane s, the restriction is singular iff s contains the
  // complement line s' with respect to the form: the radical of the
  // restriction is s intersect s', which is nonzero exactly then.
  const Gf& f = field_of_order(3);
  SplitMix64 rng(4002);
  BilinearForm om = random_symplectic_form(rng, f, 4);
  PlaneSet s3 = singular_set(om, 3);
  std::vector<Subspace> expect;
  for (const Subspace& s : all_subspaces(f, 4, 3))
    if (intersect(s, orthogonal_complement(om, s)).dim() > 0) expect.push_back(s);
  CHECK(equal_sets(s3, PlaneSet::make(f, 4, 3, std::move(expect))));
}

TEST_CASE("odd plane dimension gives the full Grassmannian") {
  const Gf& f = field_of_order(2);
  BilinearForm j = standard_symplectic(f, 4);
  for (int k : {1, 3}) {
    PlaneSet s = singular_set(j, k);
    CHECK(s.size() == gaussian_binomial(4, k, 2));
  }
  CHECK_THROWS_AS(singular_set(j, 0), InputError);
  CHECK_THROWS_AS(singular_set(j, 4), InputError);
  CHECK_THROWS_AS(singular_set(identity_form(f, 4), 2), MathError);
}

TEST_CASE("known size over GF(2) dimension 4") {
  const Gf& f = field_of_order(2);
  PlaneSet s = singular_set(standard_symplectic(f, 4), 2);
  CHECK(s.size() == 15);
}

TEST_CASE("star condition accepts singular sets and yields the perp witness") {
  SplitMix64 rng(4003);
  struct Case {
    int q, n, k;
  };
  for (Case c : {Case{2, 4, 2}, Case{3, 4, 2}, Case{2, 6, 4}, Case{2, 6, 2}}) {
    const Gf& f = field_of_order(c.q);
    BilinearForm om = random_symplectic_form(rng, f, c.n);
    PlaneSet x = singular_set(om, c.k);
    for (StarDirection dir :
         {StarDirection::hyperplane_to_line, StarDirection::line_to_hyperplane}) {
      if (dir == StarDirection::hyperplane_to_line && c.k != c.n - 2) continue;
      if (dir == StarDirection::line_to_hyperplane && c.k != 2) continue;
      StarCheck r = check_star_condition(x, dir);
      REQUIRE(accepted(r));
      const StarWitness& w = std::get<StarWitness>(r);
      CHECK(w.direction == dir);
      int src_dim = dir == StarDirection::hyperplane_to_line ? c.n - 1 : 1;
      CHECK(w.sources.size() == gaussian_binomial(c.n, src_dim, c.q));
      CHECK(w.sources == all_subspaces(f, c.n, src_dim));
      for (std::size_t i = 0; i < w.sources.size(); ++i)
        CHECK(w.images[i] == orthogonal_complement(om, w.sources[i]));
      CHECK(witness_symmetric(w));
    }
  }
}

TEST_CASE("star condition rejects perturbed and degenerate sets") {
  const Gf& f = field_of_order(2);
  BilinearForm j = standard_symplectic(f, 4);
  PlaneSet x = singular_set(j, 2);

  auto planes = all_subspaces(f, 4, 2);
  for (StarDirection dir :
       {StarDirection::hyperplane_to_line, StarDirection::line_to_hyperplane}) {
    Subspace outside = planes[0];
    for (const Subspace& p : planes)
      if (!x.contains(p)) {
        outside = p;
        break;
      }
    StarCheck grown = check_star_condition(x.with_added(outside), dir);
    REQUIRE(!accepted(grown));
    CHECK(!std::get<StarFailure>(grown).reason.empty());
    StarCheck shrunk = check_star_condition(x.with_removed(x.members()[0]), dir);
    REQUIRE(!accepted(shrunk));

    // The full Grassmannian fails: every trace is a full pencil of planes,
    // never the planes through one fixed line.
    StarCheck full = check_star_condition(PlaneSet::make(f, 4, 2, planes), dir);
    REQUIRE(!accepted(full));

    // The empty set fails with an empty trace at the first source.
    StarCheck empty = check_star_condition(PlaneSet::make(f, 4, 2, {}), dir);
    REQUIRE(!accepted(empty));
    CHECK(std::get<StarFailure>(empty).reason ==
          "no member of the set is incident with it");
  }

  PlaneSet lines = PlaneSet::make(f, 4, 1, {});
  CHECK_THROWS_AS(check_star_condition(lines, StarDirection::line_to_hyperplane),
                  InputError);
}

TEST_CASE("default direction picks lines only for plane dimension 2") {
  CHECK(default_direction(4, 2) == StarDirection::line_to_hyperplane);
  CHECK(default_direction(6, 2) == StarDirection::line_to_hyperplane);
  CHECK(default_direction(6, 4) == StarDirection::hyperplane_to_line);
  CHECK_THROWS_AS(default_direction(6, 3), InputError);
  CHECK_THROWS_AS(default_direction(3, 2), InputError);
}
