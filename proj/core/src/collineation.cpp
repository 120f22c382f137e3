#include "sympgeo/collineation.hpp"

#include <algorithm>
#include <utility>

#include "sympgeo/errors.hpp"

namespace sympgeo {

bool operator==(const LineMap& a, const LineMap& b) {
  return a.f == b.f && a.n == b.n && a.image == b.image;
}

namespace {

void require_valid(const LineMap& lm) {
  if (lm.f == nullptr || lm.n < 2) throw InputError("line map is not initialized");
  const SubspaceTable& pts = subspace_table(*lm.f, lm.n, 1);
  if (int(lm.image.size()) != pts.size())
    throw InputError("line map image list does not cover the point set");
  for (int i : lm.image)
    if (i < 0 || i >= pts.size()) throw InputError("line map image index out of range");
}

bool is_permutation(const std::vector<int>& image) {
  std::vector<char> seen(image.size(), 0);
  for (int i : image) {
    if (seen[i]) return false;
    seen[i] = 1;
  }
  return true;
}

}  // namespace

LineMap induce_line_map(const SemilinearMap& m, int n) {
  const Gf& f = m.g.field();
  if (m.g.rows() != n || m.g.cols() != n)
    throw InputError("semilinear map has the wrong ambient dimension");
  if (rank_of(m.g) != n) throw InputError("semilinear map is singular");
  const SubspaceTable& pts = subspace_table(f, n, 1);
  LineMap lm{&f, n, std::vector<int>(pts.size())};
  for (int i = 0; i < pts.size(); ++i) {
    Vec w = apply_map(m, pts.items()[i].representative());
    lm.image[i] = pts.index_of(Subspace::line(f, w));
  }
  return lm;
}

bool verify_collineation(const LineMap& lm) {
  require_valid(lm);
  if (!is_permutation(lm.image)) return false;
  const Gf& f = *lm.f;
  const SubspaceTable& pts = subspace_table(f, lm.n, 1);
  const int np = pts.size();
  // Every line (2-subspace) carries q+1 points: span(u), and span(u + a*v)
  // for each scalar a.  Their images must land inside the span of the two
  // image points, which pins the image point set to a single line.
  for (int i = 0; i < np; ++i) {
    const Vec u = pts.items()[i].representative();
    for (int j = i + 1; j < np; ++j) {
      const Vec v = pts.items()[j].representative();
      Subspace target = Subspace::span_vectors(
          f, lm.n,
          {pts.items()[lm.image[i]].representative(),
           pts.items()[lm.image[j]].representative()});
      if (target.dim() != 2) return false;
      for (int a = 0; a < f.q(); ++a) {
        Vec w(u);
        for (int c = 0; c < lm.n; ++c) w[c] = f.add(w[c], f.mul(felem(a), v[c]));
        int k = pts.index_of(Subspace::line(f, w));
        if (!contains_vector(target, pts.items()[lm.image[k]].representative()))
          return false;
      }
    }
  }
  return true;
}

SemilinearMap recover_semilinear(const LineMap& lm) {
  require_valid(lm);
  const Gf& f = *lm.f;
  const int n = lm.n;
  const SubspaceTable& pts = subspace_table(f, n, 1);
  if (!is_permutation(lm.image))
    throw CollineationError("line map is not a bijection on points");

  auto image_rep = [&](const Vec& v) {
    int i = pts.index_of(Subspace::line(f, v));
    return pts.items()[lm.image[i]].representative();
  };

  // Images of the unit points fix the columns of g up to scalars; the image
  // of the all-ones point fixes the scalars up to one global factor.
  Mat v_cols(f, n, n);
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    Vec w = image_rep(e);
    for (int r = 0; r < n; ++r) v_cols.at(r, i) = w[r];
  }
  std::optional<Vec> c = solve(v_cols, image_rep(Vec(n, 1)));
  if (!c || rank_of(v_cols) != n)
    throw CollineationError("images of the coordinate frame are dependent");
  Mat g(f, n, n);
  for (int i = 0; i < n; ++i) {
    if ((*c)[i] == 0)
      throw CollineationError("images of the coordinate frame are dependent");
    for (int r = 0; r < n; ++r) g.at(r, i) = f.mul((*c)[i], v_cols.at(r, i));
  }

  // The matrix is now pinned up to a scalar; only the field automorphism is
  // left, and there are only m candidates.  Matching the full induced map is
  // both the search and the mandatory verification.
  for (int e = 0; e < f.m(); ++e) {
    SemilinearMap cand{g, Aut{e}};
    if (induce_line_map(cand, n) == lm) return cand;
  }
  throw CollineationError("line map is not induced by any semilinear map");
}

LineMap compose(const LineMap& outer, const LineMap& inner) {
  require_valid(outer);
  require_valid(inner);
  if (outer.f != inner.f || outer.n != inner.n)
    throw InputError("line maps live on different point sets");
  LineMap r{outer.f, outer.n, std::vector<int>(inner.image.size())};
  for (size_t i = 0; i < inner.image.size(); ++i)
    r.image[i] = outer.image[inner.image[i]];
  return r;
}

}  // namespace sympgeo
