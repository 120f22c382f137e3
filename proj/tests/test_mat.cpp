#include <algorithm>
#include <set>

#include "doctest.h"
#include "sympgeo/errors.hpp"
#include "sympgeo/mat.hpp"
#include "sympgeo/rng.hpp"

namespace {

using namespace sympgeo;

// Every vector in the row space, by walking all coefficient combinations.
std::set<Vec> row_space(const Mat& m) {
  const Gf& f = m.field();
  std::set<Vec> out;
  std::vector<felem> coef(m.rows(), 0);
  for (;;) {
    Vec v(m.cols(), 0);
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        v[c] = f.add(v[c], f.mul(coef[r], m.at(r, c)));
    out.insert(v);
    int pos = m.rows() - 1;
    while (pos >= 0 && coef[pos] == f.q() - 1) coef[pos--] = 0;
    if (pos < 0) break;
    ++coef[pos];
  }
  return out;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_canonical(const RrefResult& rr) {
  const Mat& r = rr.r;
  const Gf& f = r.field();
  REQUIRE(int(rr.pivots.size()) == rr.rank);
  for (int i = 0; i < rr.rank; ++i) {
    int pc = rr.pivots[i];
    if (i > 0) CHECK(pc > rr.pivots[i - 1]);
    CHECK(r.at(i, pc) == 1);
    for (int rr2 = 0; rr2 < r.rows(); ++rr2)
      if (rr2 != i) CHECK(r.at(rr2, pc) == 0);
    for (int c = 0; c < pc; ++c) CHECK(r.at(i, c) == 0);
  }
  for (int i = rr.rank; i < r.rows(); ++i)
    for (int c = 0; c < r.cols(); ++c) CHECK(r.at(i, c) == 0);
  (void)f;
}

}  // namespace

TEST_CASE("rref preserves the row space and is canonical") {
  SplitMix64 rng(1001);
  for (int q : {2, 3, 4, 5}) {
    const Gf& f = field_of_order(q);
    for (int trial = 0; trial < 30; ++trial) {
      int rows = 1 + int(rng.below(5)), cols = 1 + int(rng.below(6));
      Mat m = random_matrix(rng, f, rows, cols);
      if (trial % 3 == 0 && rows >= 2)  // force dependent rows
        for (int c = 0; c < cols; ++c) m.at(rows - 1, c) = m.at(0, c);
      RrefResult rr = rref(m);
      check_canonical(rr);
      std::set<Vec> before = row_space(m), after = row_space(rr.r);
      CHECK(before == after);
      CHECK(before.size() == ipow(std::uint64_t(q), rr.rank));

      // Canonical means invariant under row shuffles.
      Mat shuffled = m;
      for (int r = rows - 1; r > 0; --r) {
        int other = int(rng.below(std::uint64_t(r + 1)));
        for (int c = 0; c < cols; ++c) std::swap(shuffled.at(r, c), shuffled.at(other, c));
      }
      CHECK(rref(shuffled).r == rr.r);
      CHECK(rref(rr.r).r == rr.r);
    }
  }
}

TEST_CASE("kernel is the full solution set of the homogeneous system") {
  SplitMix64 rng(1002);
  for (int q : {2, 3}) {
    const Gf& f = field_of_order(q);
    for (int trial = 0; trial < 20; ++trial) {
      int rows = 1 + int(rng.below(4)), cols = 1 + int(rng.below(5));
      Mat m = random_matrix(rng, f, rows, cols);
      Mat k = kernel(m);
      CHECK(k.rows() == cols - rank_of(m));
      Vec zero(rows, 0);
      for (int r = 0; r < k.rows(); ++r) CHECK(mul(m, k.row(r)) == zero);
      // Brute force: every solution lies in the kernel's row space.
      std::set<Vec> kset = row_space(k);
      std::uint64_t solutions = 0;
      std::vector<felem> x(cols, 0);
      for (std::uint64_t it = 0; it < ipow(std::uint64_t(q), cols); ++it) {
        std::uint64_t t = it;
        for (int c = 0; c < cols; ++c) {
          x[c] = felem(t % q);
          t /= q;
        }
        if (mul(m, x) == zero) {
          ++solutions;
          CHECK(kset.count(x) == 1);
        }
      }
      CHECK(solutions == kset.size());
    }
  }
}

TEST_CASE("invert round trips and rejects singular input") {
  SplitMix64 rng(1003);
  for (int q : {2, 3, 4, 9}) {
    const Gf& f = field_of_order(q);
    for (int n : {1, 2, 3, 4}) {
      Mat m = random_invertible(rng, f, n);
      Mat mi = invert(m);
      CHECK(mul(m, mi) == Mat::identity(f, n));
      CHECK(mul(mi, m) == Mat::identity(f, n));
    }
    Mat s(f, 3, 3);
    s.at(0, 0) = 1;
    s.at(1, 1) = 1;  // rank 2
    CHECK_THROWS_AS(invert(s), SingularMatrixError);
  }
}

TEST_CASE("solve agrees with brute force") {
  SplitMix64 rng(1004);
  for (int q : {2, 3}) {
    const Gf& f = field_of_order(q);
    for (int trial = 0; trial < 40; ++trial) {
      int rows = 1 + int(rng.below(3)), cols = 1 + int(rng.below(4));
      Mat m = random_matrix(rng, f, rows, cols);
      Vec b(rows);
      for (int r = 0; r < rows; ++r) b[r] = random_elem(rng, f);
      bool solvable = false;
      std::vector<felem> x(cols, 0);
      for (std::uint64_t it = 0; it < ipow(std::uint64_t(q), cols) && !solvable; ++it) {
        std::uint64_t t = it;
        for (int c = 0; c < cols; ++c) {
          x[c] = felem(t % q);
          t /= q;
        }
        solvable = mul(m, x) == b;
      }
      std::optional<Vec> got = solve(m, b);
      CHECK(got.has_value() == solvable);
      if (got) CHECK(mul(m, *got) == b);
    }
  }
}

TEST_CASE("matrix algebra identities") {
  SplitMix64 rng(1005);
  for (int q : {2, 3, 4}) {
    const Gf& f = field_of_order(q);
    Mat a = random_matrix(rng, f, 3, 4), b = random_matrix(rng, f, 4, 2),
        c = random_matrix(rng, f, 2, 5);
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(transpose(mul(a, b)) == mul(transpose(b), transpose(a)));
    Mat v = vstack(a, random_matrix(rng, f, 2, 4));
    CHECK(v.rows() == 5);
    CHECK(v.row(0) == a.row(0));

    // Column and row products against explicit sums.
    Vec x(4);
    for (auto& e : x) e = random_elem(rng, f);
    Vec y = mul(a, x);
    for (int r = 0; r < 3; ++r) {
      felem s = 0;
      for (int k = 0; k < 4; ++k) s = f.add(s, f.mul(a.at(r, k), x[k]));
      CHECK(y[r] == s);
    }
    Vec z(3);
    for (auto& e : z) e = random_elem(rng, f);
    Vec w = mul(z, a);
    for (int cidx = 0; cidx < 4; ++cidx) {
      felem s = 0;
      for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(z[k], a.at(k, cidx)));
      CHECK(w[cidx] == s);
    }
    CHECK(dot(f, x, x) == mul(x, transpose(Mat::from_rows(f, 4, {x})))[0]);
  }
}

TEST_CASE("map_entries applies the automorphism entry-wise") {
  const Gf& f = field_of_order(4);
  SplitMix64 rng(1006);
  Mat m = random_matrix(rng, f, 3, 3);
  Aut frob{1};
  Mat fm = map_entries(m, frob);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(fm.at(r, c) == f.frob(frob, m.at(r, c)));
  Mat sm = scale(m, 2);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(sm.at(r, c) == f.mul(2, m.at(r, c)));
}
