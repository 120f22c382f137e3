#pragma once

#include <optional>
#include <vector>

#include "sympgeo/gf.hpp"

namespace sympgeo {

using Vec = std::vector<felem>;

// Dense matrix over a fixed field, row-major, byte per entry.  Vectors are
// treated as columns in formulas (y = M x), but stored as plain Vec.
struct Mat {
  const Gf* f = nullptr;
  int nrows = 0, ncols = 0;
  std::vector<felem> e;

  Mat() = default;
  Mat(const Gf& field, int rows, int cols)
      : f(&field), nrows(rows), ncols(cols), e(size_t(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw InputError("negative matrix shape");
  }

  static Mat identity(const Gf& field, int n);
  static Mat from_rows(const Gf& field, int cols, const std::vector<Vec>& rows);

  const Gf& field() const { return *f; }
  int rows() const { return nrows; }
  int cols() const { return ncols; }

  felem at(int r, int c) const { return e[size_t(r) * ncols + c]; }
  felem& at(int r, int c) { return e[size_t(r) * ncols + c]; }

  Vec row(int r) const { return Vec(e.begin() + size_t(r) * ncols, e.begin() + size_t(r + 1) * ncols); }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.f == b.f && a.nrows == b.nrows && a.ncols == b.ncols && a.e == b.e;
  }
};

Mat mul(const Mat& a, const Mat& b);
// y = M x, x a column vector of size cols.
Vec mul(const Mat& m, const Vec& x);
// y^T = x^T M, x of size rows.
Vec mul(const Vec& x, const Mat& m);
felem dot(const Gf& f, const Vec& a, const Vec& b);
Mat transpose(const Mat& m);
// Entry-wise Frobenius image.
Mat map_entries(const Mat& m, Aut sigma);
Vec map_entries(const Gf& f, const Vec& v, Aut sigma);
Mat scale(const Mat& m, felem a);
// Rows of a above rows of b.
Mat vstack(const Mat& a, const Mat& b);

struct RrefResult {
  Mat r;
  int rank = 0;
  std::vector<int> pivots;  // pivot column per pivot row, strictly increasing
};

// Reduced row echelon form.  Pivot search scans rows top-to-bottom within
// columns left-to-right; pivots are normalized to 1 and cleared above and
// below, so the result is the canonical RREF of the row space.  GF(2) input
// runs on a bit-packed representation with word-wide XOR elimination.
RrefResult rref(const Mat& m);
int rank_of(const Mat& m);

// Basis of the right null space {x : M x = 0}, returned as rows in RREF.
Mat kernel(const Mat& m);

// Inverse of a square matrix; SingularMatrixError if rank-deficient.
Mat invert(const Mat& m);

// One solution of M x = b (free coordinates set to 0), or nullopt if the
// system is inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

}  // namespace sympgeo
