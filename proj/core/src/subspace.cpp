#include "sympgeo/subspace.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace sympgeo {
namespace {

void check_same_space(const Subspace& a, const Subspace& b) {
  if (&a.field() != &b.field() || a.ambient() != b.ambient())
    throw InputError("subspaces of different ambient spaces");
}

}  // namespace

Subspace Subspace::zero(const Gf& f, int n) {
  if (n < 0) throw InputError("negative ambient dimension");
  return Subspace(Mat(f, 0, n));
}

Subspace Subspace::whole(const Gf& f, int n) { return Subspace(Mat::identity(f, n)); }

Subspace Subspace::span_rows(const Mat& m) {
  RrefResult rr = rref(m);
  Mat basis(m.field(), rr.rank, m.cols());
  std::copy(rr.r.e.begin(), rr.r.e.begin() + size_t(rr.rank) * m.cols(), basis.e.begin());
  return Subspace(std::move(basis));
}

Subspace Subspace::span_vectors(const Gf& f, int n, const std::vector<Vec>& rows) {
  return span_rows(Mat::from_rows(f, n, rows));
}

Subspace Subspace::line(const Gf& f, const Vec& v) {
  Subspace s = span_vectors(f, int(v.size()), {v});
  if (s.dim() != 1) throw InputError("line through the zero vector");
  return s;
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> p;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < ambient(); ++j)
      if (basis_.at(i, j) != 0) {
        p.push_back(j);
        break;
      }
  return p;
}

Vec Subspace::representative() const {
  if (dim() < 1) throw MathError("representative of the zero subspace");
  return basis_.row(0);
}

std::string Subspace::key() const {
  std::string k;
  k.reserve(basis_.e.size() + 1);
  k.push_back(char(dim()));
  for (felem v : basis_.e) k.push_back(char(v));
  return k;
}

bool contains_vector(const Subspace& s, const Vec& v) {
  if (int(v.size()) != s.ambient()) throw InputError("vector length mismatch");
  const Gf& f = s.field();
  Vec w = v;
  const std::vector<int> piv = s.pivots();
  for (int i = 0; i < s.dim(); ++i) {
    felem c = w[piv[i]];
    if (c == 0) continue;
    for (int j = 0; j < s.ambient(); ++j)
      w[j] = f.sub(w[j], f.mul(c, s.basis().at(i, j)));
  }
  for (felem x : w)
    if (x != 0) return false;
  return true;
}

bool contains(const Subspace& outer, const Subspace& inner) {
  check_same_space(outer, inner);
  for (int i = 0; i < inner.dim(); ++i)
    if (!contains_vector(outer, inner.basis().row(i))) return false;
  return true;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_same_space(a, b);
  // Zassenhaus: row reduce [A | A; B | 0]; rows whose left half vanished
  // carry an intersection basis in their right half.
  const Gf& f = a.field();
  const int n = a.ambient();
  Mat block(f, a.dim() + b.dim(), 2 * n);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < n; ++j) {
      block.at(i, j) = a.basis().at(i, j);
      block.at(i, n + j) = a.basis().at(i, j);
    }
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < n; ++j) block.at(a.dim() + i, j) = b.basis().at(i, j);
  RrefResult rr = rref(block);
  std::vector<Vec> rows;
  for (int i = 0; i < rr.rank; ++i) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j)
      if (rr.r.at(i, j) != 0) left_zero = false;
    if (left_zero) rows.push_back(Vec(rr.r.e.begin() + size_t(i) * 2 * n + n,
                                      rr.r.e.begin() + size_t(i + 1) * 2 * n));
  }
  return Subspace::span_vectors(f, n, rows);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  check_same_space(a, b);
  return Subspace::span_rows(vstack(a.basis(), b.basis()));
}

std::uint64_t gaussian_binomial(int n, int k, std::uint64_t q) {
  if (n < 0 || k < 0) throw InputError("negative Grassmannian parameters");
  if (k > n) return 0;
  if (q < 2) throw InputError("Gaussian binomial needs q >= 2");
  // q-Pascal recurrence in exact integers, overflow checked.
  std::vector<std::vector<unsigned __int128>> g(n + 1);
  for (int i = 0; i <= n; ++i) {
    g[i].assign(std::min(i, k) + 1, 0);
    g[i][0] = 1;
    for (int j = 1; j <= std::min(i, k); ++j) {
      unsigned __int128 qp = 1;
      for (int t = 0; t < j; ++t) qp *= q;
      g[i][j] = (j <= i - 1 ? g[i - 1][j] * qp : 0) + g[i - 1][j - 1];
    }
  }
  unsigned __int128 v = g[n][std::min(n, k)];
  if (v > std::uint64_t(-1)) throw InputError("Gaussian binomial overflows 64 bits");
  return std::uint64_t(v);
}

GrassmannianEnumerator::GrassmannianEnumerator(const Gf& f, int n, int k)
    : f_(&f), n_(n), k_(k) {
  if (n < 0 || k < 0 || k > n) throw InputError("Grassmannian parameters out of range");
  comb_.resize(k);
  for (int i = 0; i < k; ++i) comb_[i] = i;
  load_free_positions();
}

void GrassmannianEnumerator::load_free_positions() {
  free_.clear();
  std::vector<char> is_pivot(n_, 0);
  for (int c : comb_) is_pivot[c] = 1;
  for (int i = 0; i < k_; ++i)
    for (int c = comb_[i] + 1; c < n_; ++c)
      if (!is_pivot[c]) free_.push_back({i, c});
  digits_.assign(free_.size(), 0);
}

std::optional<Subspace> GrassmannianEnumerator::next() {
  if (done_) return std::nullopt;
  Mat basis(*f_, k_, n_);
  for (int i = 0; i < k_; ++i) basis.at(i, comb_[i]) = 1;
  for (size_t t = 0; t < free_.size(); ++t)
    basis.at(free_[t].first, free_[t].second) = digits_[t];
  Subspace out{std::move(basis)};

  // Advance: odometer over free entries (last position fastest), then the
  // pivot combination in lexicographic order.
  const int q = f_->q();
  int t = int(digits_.size()) - 1;
  while (t >= 0 && digits_[t] == q - 1) {
    digits_[t] = 0;
    --t;
  }
  if (t >= 0) {
    ++digits_[t];
  } else {
    int i = k_ - 1;
    while (i >= 0 && comb_[i] == n_ - k_ + i) --i;
    if (i < 0) {
      done_ = true;
    } else {
      ++comb_[i];
      for (int j = i + 1; j < k_; ++j) comb_[j] = comb_[i] + (j - i);
      load_free_positions();
    }
  }
  return out;
}

std::vector<Subspace> all_subspaces(const Gf& f, int n, int k) {
  GrassmannianEnumerator en(f, n, k);
  std::vector<Subspace> out;
  while (auto s = en.next()) out.push_back(std::move(*s));
  return out;
}

bool subspace_less(const Subspace& a, const Subspace& b) {
  if (&a.field() != &b.field() || a.ambient() != b.ambient() || a.dim() != b.dim())
    throw InputError("subspace_less compares within one Grassmannian");
  const std::vector<int> pa = a.pivots(), pb = b.pivots();
  if (pa != pb) return pa < pb;
  // Same pivot set: row-major entry comparison matches the free-entry
  // odometer order because non-free entries coincide.
  return a.basis().e < b.basis().e;
}

std::vector<Subspace> incident_planes(const Subspace& s, int k) {
  const Gf& f = s.field();
  const int n = s.ambient(), d = s.dim();
  if (k < 0 || k > n) throw InputError("incident plane dimension out of range");
  if (k == d) throw InputError("incident_planes requires k != dim(s)");
  std::vector<Subspace> out;
  if (k < d) {
    // k-subspaces of s, lifted from coefficient space.
    GrassmannianEnumerator en(f, d, k);
    while (auto c = en.next())
      out.push_back(Subspace::span_rows(mul(c->basis(), s.basis())));
  } else {
    // k-subspaces containing s: subspaces of the fixed complement spanned by
    // the non-pivot unit vectors, joined onto s.
    std::vector<char> is_pivot(n, 0);
    for (int c : s.pivots()) is_pivot[c] = 1;
    std::vector<int> cols;
    for (int c = 0; c < n; ++c)
      if (!is_pivot[c]) cols.push_back(c);
    GrassmannianEnumerator en(f, n - d, k - d);
    while (auto u = en.next()) {
      Mat rows(f, k - d, n);
      for (int i = 0; i < k - d; ++i)
        for (int j = 0; j < n - d; ++j) rows.at(i, cols[j]) = u->basis().at(i, j);
      out.push_back(Subspace::span_rows(vstack(s.basis(), rows)));
    }
  }
  return out;
}

int SubspaceTable::index_of(const Subspace& s) const {
  const std::string k = s.key();
  auto it = std::lower_bound(index_.begin(), index_.end(), k,
                             [](const auto& a, const std::string& v) { return a.first < v; });
  if (it == index_.end() || it->first != k)
    throw InputError("subspace not in this Grassmannian table");
  return it->second;
}

const SubspaceTable& subspace_table(const Gf& f, int n, int k) {
  static std::mutex mu;
  static std::map<std::tuple<const Gf*, int, int>, std::unique_ptr<SubspaceTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{&f, n, k}];
  if (!slot) {
    auto t = std::unique_ptr<SubspaceTable>(new SubspaceTable());
    t->items_ = all_subspaces(f, n, k);
    t->index_.reserve(t->items_.size());
    for (size_t i = 0; i < t->items_.size(); ++i)
      t->index_.push_back({t->items_[i].key(), int(i)});
    std::sort(t->index_.begin(), t->index_.end());
    slot = std::move(t);
  }
  return *slot;
}

}  // namespace sympgeo
