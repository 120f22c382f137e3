#include <set>
#include <string>

#include "doctest.h"
#include "sympgeo/errors.hpp"
#include "sympgeo/reconstruct.hpp"
#include "sympgeo/rng.hpp"

namespace {

using namespace sympgeo;

ReconstructionReport expect_report(ReconstructResult r) {
  REQUIRE(std::holds_alternative<ReconstructionReport>(r));
  return std::get<ReconstructionReport>(std::move(r));
}

void check_report(const ReconstructionReport& rep, const PlaneSet& x) {
  CHECK(rep.symplectic);
  CHECK(rep.non_singular);
  CHECK(rep.sset_match);
  CHECK(is_symplectic(rep.form));
  CHECK(non_singular(rep.form));
  CHECK(equal_sets(singular_set(rep.form, x.plane_dim()), x));
}

}  // namespace

TEST_CASE("reconstruction recovers forms from their singular sets") {
  SplitMix64 rng(6001);
  struct Case {
    int q, n, k;
  };
  for (Case c : {Case{2, 4, 2}, Case{3, 4, 2}, Case{4, 4, 2}, Case{2, 6, 4}, Case{2, 6, 2}}) {
    const Gf& f = field_of_order(c.q);
    std::vector<BilinearForm> forms = {standard_symplectic(f, c.n)};
    for (int t = 0; t < 2; ++t) forms.push_back(random_symplectic_form(rng, f, c.n));
    for (const BilinearForm& om : forms) {
      PlaneSet x = singular_set(om, c.k);
      ReconstructionReport rep = expect_report(reconstruct_form(x));
      CHECK(rep.q == c.q);
      CHECK(rep.n == c.n);
      CHECK(rep.k == c.k);
      CHECK(rep.set_size == x.size());
      CHECK(rep.via == (c.k == c.n - 2 ? Via::direct : Via::dual));
      check_report(rep, x);
    }
  }
}

TEST_CASE("both pipelines agree in dimension 4") {
  SplitMix64 rng(6002);
  for (int q : {2, 3}) {
    const Gf& f = field_of_order(q);
    BilinearForm om = random_symplectic_form(rng, f, 4);
    PlaneSet x = singular_set(om, 2);
    ReconstructionReport direct = expect_report(reconstruct_form(x, Via::direct));
    ReconstructionReport dual = expect_report(reconstruct_form(x, Via::dual));
    check_report(direct, x);
    check_report(dual, x);
    CHECK(direct.witness.direction == StarDirection::hyperplane_to_line);
    CHECK(dual.witness.direction == StarDirection::line_to_hyperplane);
    CHECK(equal_sets(singular_set(direct.form, 2), singular_set(dual.form, 2)));
  }
}

TEST_CASE("scaled and twisted forms have the same singular set") {
  const Gf& f = field_of_order(4);
  BilinearForm j = standard_symplectic(f, 4);
  PlaneSet base = singular_set(j, 2);
  for (felem a : {felem(2), felem(3)})
    CHECK(equal_sets(singular_set(scale_form(j, a), 2), base));
  CHECK(equal_sets(singular_set(twist_form(j, Aut{1}), 2), base));
}

TEST_CASE("perturbed singular sets are rejected at the star check") {
  SplitMix64 rng(6003);
  const Gf& f = field_of_order(2);
  PlaneSet x = singular_set(standard_symplectic(f, 4), 2);
  auto planes = all_subspaces(f, 4, 2);

  Subspace outside = planes[0];
  for (const Subspace& p : planes)
    if (!x.contains(p)) {
      outside = p;
      break;
    }
  ReconstructResult grown = reconstruct_form(x.with_added(outside));
  REQUIRE(std::holds_alternative<StarFailure>(grown));
  ReconstructResult shrunk = reconstruct_form(x.with_removed(x.members()[3]));
  REQUIRE(std::holds_alternative<StarFailure>(shrunk));

  ReconstructResult full = reconstruct_form(PlaneSet::make(f, 4, 2, planes));
  REQUIRE(std::holds_alternative<StarFailure>(full));
  ReconstructResult empty = reconstruct_form(PlaneSet::make(f, 4, 2, {}));
  REQUIRE(std::holds_alternative<StarFailure>(empty));
}

TEST_CASE("parameter validation") {
  const Gf& f = field_of_order(2);
  PlaneSet planes6 = PlaneSet::make(f, 6, 3, {});
  CHECK_THROWS_AS(reconstruct_form(planes6), InputError);
  PlaneSet odd = PlaneSet::make(f, 5, 3, {});
  CHECK_THROWS_WITH_AS(reconstruct_form(odd),
                       "no non-singular symplectic form exists in odd dimension",
                       InputError);
  PlaneSet small = PlaneSet::make(f, 2, 1, {});
  CHECK_THROWS_AS(reconstruct_form(small), InputError);
  PlaneSet k4 = PlaneSet::make(f, 6, 4, {});
  CHECK_THROWS_AS(reconstruct_form(k4, Via::dual), InputError);
  PlaneSet k2 = PlaneSet::make(f, 6, 2, {});
  CHECK_THROWS_AS(reconstruct_form(k2, Via::direct), InputError);
}

TEST_CASE("theorem verification, exhaustive over GF(2) dimension 4") {
  const Gf& f = field_of_order(2);
  TheoremSummary s = verify_theorem(f, 4, 2, TheoremMode::exhaustive, 0, 0);
  CHECK(s.forms_tested == 28);
  CHECK(s.distinct_ssets == 28);
  CHECK(s.failures == 0);
  CHECK(s.mode == TheoremMode::exhaustive);
}

TEST_CASE("theorem verification, sampled") {
  const Gf& f = field_of_order(3);
  TheoremSummary a = verify_theorem(f, 4, 2, TheoremMode::sampled, 12, 99);
  CHECK(a.forms_tested == 12);
  CHECK(a.failures == 0);
  CHECK(a.distinct_ssets >= 1);
  CHECK(a.distinct_ssets <= 12);
  TheoremSummary b = verify_theorem(f, 4, 2, TheoremMode::sampled, 12, 99);
  CHECK(b.distinct_ssets == a.distinct_ssets);  // same seed, same draws
}

TEST_CASE("theorem verification refuses oversized exhaustive runs") {
  const Gf& f5 = field_of_order(5);
  CHECK_THROWS_AS(verify_theorem(f5, 6, 4, TheoremMode::exhaustive, 0, 0), InputError);
}
