#include "sympgeo/mat.hpp"

#include <cstdint>

namespace sympgeo {
namespace {

void check_same_field(const Mat& a, const Mat& b) {
  if (a.f != b.f) throw InputError("matrices over different fields");
}

RrefResult rref_generic(const Mat& m) {
  RrefResult out;
  out.r = m;
  Mat& r = out.r;
  const Gf& f = m.field();
  int cur = 0;
  for (int c = 0; c < r.cols() && cur < r.rows(); ++c) {
    int pr = -1;
    for (int i = cur; i < r.rows(); ++i)
      if (r.at(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != cur)
      for (int j = 0; j < r.cols(); ++j) std::swap(r.at(pr, j), r.at(cur, j));
    felem s = f.inv(r.at(cur, c));
    if (s != 1)
      for (int j = c; j < r.cols(); ++j) r.at(cur, j) = f.mul(s, r.at(cur, j));
    for (int i = 0; i < r.rows(); ++i) {
      if (i == cur) continue;
      felem t = r.at(i, c);
      if (t == 0) continue;
      for (int j = c; j < r.cols(); ++j)
        r.at(i, j) = f.sub(r.at(i, j), f.mul(t, r.at(cur, j)));
    }
    out.pivots.push_back(c);
    ++cur;
  }
  out.rank = cur;
  return out;
}

// GF(2) fast path: rows packed into 64-bit words, elimination by word XOR.
RrefResult rref_gf2(const Mat& m) {
  const int rows = m.rows(), cols = m.cols();
  const int wpr = (cols + 63) / 64;
  std::vector<std::uint64_t> bits(size_t(rows) * wpr, 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (m.at(i, j)) bits[size_t(i) * wpr + j / 64] |= std::uint64_t(1) << (j % 64);

  auto bit = [&](int i, int j) {
    return (bits[size_t(i) * wpr + j / 64] >> (j % 64)) & 1;
  };

  RrefResult out;
  int cur = 0;
  for (int c = 0; c < cols && cur < rows; ++c) {
    int pr = -1;
    for (int i = cur; i < rows; ++i)
      if (bit(i, c)) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != cur)
      for (int w = 0; w < wpr; ++w)
        std::swap(bits[size_t(pr) * wpr + w], bits[size_t(cur) * wpr + w]);
    for (int i = 0; i < rows; ++i) {
      if (i == cur || !bit(i, c)) continue;
      for (int w = 0; w < wpr; ++w)
        bits[size_t(i) * wpr + w] ^= bits[size_t(cur) * wpr + w];
    }
    out.pivots.push_back(c);
    ++cur;
  }
  out.rank = cur;
  out.r = Mat(m.field(), rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.r.at(i, j) = felem(bit(i, j));
  return out;
}

}  // namespace

Mat Mat::identity(const Gf& field, int n) {
  Mat m(field, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const Gf& field, int cols, const std::vector<Vec>& rows) {
  Mat m(field, int(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (int(rows[i].size()) != cols) throw InputError("row length mismatch");
    for (int j = 0; j < cols; ++j) m.at(int(i), j) = rows[i][j];
  }
  return m;
}

Mat mul(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
  const Gf& f = a.field();
  Mat c(f, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      felem av = a.at(i, k);
      if (av == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        c.at(i, j) = f.add(c.at(i, j), f.mul(av, b.at(k, j)));
    }
  return c;
}

Vec mul(const Mat& m, const Vec& x) {
  if (int(x.size()) != m.cols()) throw InputError("matrix-vector shape mismatch");
  const Gf& f = m.field();
  Vec y(m.rows(), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      y[i] = f.add(y[i], f.mul(m.at(i, j), x[j]));
  return y;
}

Vec mul(const Vec& x, const Mat& m) {
  if (int(x.size()) != m.rows()) throw InputError("vector-matrix shape mismatch");
  const Gf& f = m.field();
  Vec y(m.cols(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < m.cols(); ++j)
      y[j] = f.add(y[j], f.mul(x[i], m.at(i, j)));
  }
  return y;
}

felem dot(const Gf& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("dot product length mismatch");
  felem s = 0;
  for (size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

Mat transpose(const Mat& m) {
  Mat t(m.field(), m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

Mat map_entries(const Mat& m, Aut sigma) {
  Mat t = m;
  for (auto& v : t.e) v = m.field().frob(sigma, v);
  return t;
}

Vec map_entries(const Gf& f, const Vec& v, Aut sigma) {
  Vec t = v;
  for (auto& x : t) x = f.frob(sigma, x);
  return t;
}

Mat scale(const Mat& m, felem a) {
  Mat t = m;
  for (auto& v : t.e) v = m.field().mul(a, v);
  return t;
}

Mat vstack(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  if (a.cols() != b.cols()) throw InputError("vstack width mismatch");
  Mat c(a.field(), a.rows() + b.rows(), a.cols());
  std::copy(a.e.begin(), a.e.end(), c.e.begin());
  std::copy(b.e.begin(), b.e.end(), c.e.begin() + a.e.size());
  return c;
}

RrefResult rref(const Mat& m) {
  if (!m.f) throw InputError("rref of a default-constructed matrix");
  if (m.field().q() == 2 && m.rows() > 0 && m.cols() > 0) return rref_gf2(m);
  return rref_generic(m);
}

int rank_of(const Mat& m) { return rref(m).rank; }

Mat kernel(const Mat& m) {
  RrefResult rr = rref(m);
  const Gf& f = m.field();
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : rr.pivots) is_pivot[c] = 1;
  std::vector<Vec> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(m.cols(), 0);
    v[c] = 1;
    for (int i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = f.neg(rr.r.at(i, c));
    basis.push_back(std::move(v));
  }
  Mat b = Mat::from_rows(f, m.cols(), basis);
  return rref(b).r;  // canonicalize; row count is already cols - rank
}

Mat invert(const Mat& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  const int n = m.rows();
  Mat aug(m.field(), n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult rr = rref(aug);
  // The identity block keeps the augmented rank at n no matter what m is;
  // m is invertible exactly when every pivot lands in the left block.
  if (rr.rank < n || (n > 0 && rr.pivots.back() >= n))
    throw SingularMatrixError("matrix is singular");
  Mat inv(m.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = rr.r.at(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (int(b.size()) != m.rows()) throw InputError("solve shape mismatch");
  Mat aug(m.field(), m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RrefResult rr = rref(aug);
  for (int i = 0; i < rr.rank; ++i)
    if (rr.pivots[i] == m.cols()) return std::nullopt;  // row (0 .. 0 | 1)
  Vec x(m.cols(), 0);
  for (int i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.r.at(i, m.cols());
  return x;
}

}  // namespace sympgeo
