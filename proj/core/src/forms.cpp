#include "sympgeo/forms.hpp"

namespace sympgeo {
namespace {

std::uint64_t pow_u64(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void check_space(const BilinearForm& om, const Subspace& s) {
  if (&om.field() != &s.field() || om.n != s.ambient())
    throw InputError("form and subspace live in different spaces");
}

}  // namespace

BilinearForm::BilinearForm(const Gf& field, Mat g, Aut sigma1, Aut sigma2)
    : f(&field), n(g.rows()), gram(std::move(g)), s1(sigma1), s2(sigma2) {
  if (gram.rows() != gram.cols()) throw InputError("Gram matrix must be square");
  if (gram.f != f) throw InputError("Gram matrix over the wrong field");
}

felem BilinearForm::eval(const Vec& x, const Vec& y) const {
  if (int(x.size()) != n || int(y.size()) != n)
    throw InputError("form evaluation length mismatch");
  const Gf& field = *f;
  Vec t = mul(gram, map_entries(field, y, s2));
  return dot(field, map_entries(field, x, s1), t);
}

BilinearForm standard_symplectic(const Gf& f, int n) {
  if (n <= 0 || n % 2 != 0) throw InputError("standard symplectic form needs even n > 0");
  Mat g(f, n, n);
  for (int t = 0; t + 1 < n; t += 2) {
    g.at(t, t + 1) = 1;
    g.at(t + 1, t) = f.neg(1);
  }
  return BilinearForm(f, std::move(g), Aut{0}, Aut{0});
}

BilinearForm identity_form(const Gf& f, int n) {
  return BilinearForm(f, Mat::identity(f, n), Aut{0}, Aut{0});
}

bool is_symplectic(const BilinearForm& om) {
  if (om.s1 != om.s2) return false;
  const Gf& f = om.field();
  for (int i = 0; i < om.n; ++i) {
    if (om.gram.at(i, i) != 0) return false;
    for (int j = i + 1; j < om.n; ++j)
      if (om.gram.at(i, j) != f.neg(om.gram.at(j, i))) return false;
  }
  return true;
}

bool non_singular(const BilinearForm& om) { return rank_of(om.gram) == om.n; }

Vec coordinate_vector(const Gf& f, int n, std::uint64_t idx) {
  Vec v(n, 0);
  for (int j = n - 1; j >= 0; --j) {
    v[j] = felem(idx % f.q());
    idx /= f.q();
  }
  return v;
}

bool is_reflexive(const BilinearForm& om) {
  if (!non_singular(om)) throw MathError("reflexivity is defined for non-singular forms");
  const Gf& f = om.field();
  const std::uint64_t total = pow_u64(f.q(), om.n);
  if (total <= 1024) {
    for (std::uint64_t i = 0; i < total; ++i) {
      Vec x = coordinate_vector(f, om.n, i);
      for (std::uint64_t j = 0; j < total; ++j) {
        Vec y = coordinate_vector(f, om.n, j);
        if ((om.eval(x, y) == 0) != (om.eval(y, x) == 0)) return false;
      }
    }
    return true;
  }
  // omega(ax, by) = sigma1(a) sigma2(b) omega(x, y), so vanishing only
  // depends on the lines spanned; pairs of line representatives suffice.
  const auto& lines = subspace_table(f, om.n, 1).items();
  for (const Subspace& a : lines) {
    Vec x = a.representative();
    for (const Subspace& b : lines) {
      Vec y = b.representative();
      if ((om.eval(x, y) == 0) != (om.eval(y, x) == 0)) return false;
    }
  }
  return true;
}

Subspace radical(const BilinearForm& om) {
  // omega(x, y) = 0 for all x  <=>  gram * sigma2(y) = 0.
  Mat k = kernel(om.gram);
  return Subspace::span_rows(map_entries(k, om.field().aut_inverse(om.s2)));
}

Subspace orthogonal_complement(const BilinearForm& om, const Subspace& s) {
  check_space(om, s);
  if (!non_singular(om)) throw MathError("orthogonal complement of a singular form");
  // y is orthogonal to s iff sigma1(B) * gram * sigma2(y) = 0.
  Mat m = mul(map_entries(s.basis(), om.s1), om.gram);
  Mat k = kernel(m);
  return Subspace::span_rows(map_entries(k, om.field().aut_inverse(om.s2)));
}

BilinearForm transpose_form(const BilinearForm& om) {
  return BilinearForm(om.field(), transpose(om.gram), om.s2, om.s1);
}

BilinearForm pullback_form(const BilinearForm& om, const SemilinearMap& fmap) {
  if (fmap.g.f != om.f || fmap.g.rows() != om.n)
    throw InputError("pullback map does not match the form's space");
  const Gf& f = om.field();
  Mat a = mul(mul(transpose(map_entries(fmap.g, om.s1)), om.gram), map_entries(fmap.g, om.s2));
  return BilinearForm(f, std::move(a), f.aut_compose(om.s1, fmap.sigma),
                      f.aut_compose(om.s2, fmap.sigma));
}

BilinearForm scale_form(const BilinearForm& om, felem a) {
  if (a == 0) throw MathError("scaling a form by zero");
  return BilinearForm(om.field(), scale(om.gram, a), om.s1, om.s2);
}

BilinearForm twist_form(const BilinearForm& om, Aut tau) {
  const Gf& f = om.field();
  return BilinearForm(f, map_entries(om.gram, tau), f.aut_compose(tau, om.s1),
                      f.aut_compose(tau, om.s2));
}

Mat restricted_gram(const BilinearForm& om, const Subspace& s) {
  check_space(om, s);
  const int k = s.dim();
  Mat r(om.field(), k, k);
  for (int i = 0; i < k; ++i) {
    Vec bi = s.basis().row(i);
    for (int j = 0; j < k; ++j) r.at(i, j) = om.eval(bi, s.basis().row(j));
  }
  return r;
}

SemilinearMap symplectic_basis(const BilinearForm& om) {
  const Gf& f = om.field();
  if (om.s1 != Aut{0} || om.s2 != Aut{0})
    throw MathError("symplectic basis requires a plain bilinear form");
  if (om.n % 2 != 0) throw MathError("symplectic basis requires even dimension");
  if (!is_symplectic(om)) throw MathError("form is not symplectic");
  if (!non_singular(om)) throw MathError("form is singular");

  const std::uint64_t total = pow_u64(f.q(), om.n);
  Subspace w = Subspace::whole(f, om.n);
  std::vector<Vec> pairs;
  while (w.dim() > 0) {
    Vec u, v;
    for (std::uint64_t i = 1; i < total && u.empty(); ++i) {
      Vec c = coordinate_vector(f, om.n, i);
      if (contains_vector(w, c)) u = std::move(c);
    }
    for (std::uint64_t i = 1; i < total && v.empty(); ++i) {
      Vec c = coordinate_vector(f, om.n, i);
      if (contains_vector(w, c) && om.eval(u, c) != 0) v = std::move(c);
    }
    if (u.empty() || v.empty())
      throw VerificationError("hyperbolic pair search failed on a non-singular form");
    felem s = f.inv(om.eval(u, v));
    for (auto& x : v) x = f.mul(s, x);
    pairs.push_back(u);
    pairs.push_back(v);
    Subspace uv = Subspace::span_vectors(f, om.n, {u, v});
    w = intersect(w, orthogonal_complement(om, uv));
  }

  Mat g(f, om.n, om.n);
  for (int c = 0; c < om.n; ++c)
    for (int r = 0; r < om.n; ++r) g.at(r, c) = pairs[c][r];
  SemilinearMap out{std::move(g), Aut{0}};
  if (!(pullback_form(om, out).gram == standard_symplectic(f, om.n).gram))
    throw VerificationError("hyperbolic basis does not reproduce the standard form");
  return out;
}

Vec apply_map(const SemilinearMap& fmap, const Vec& v) {
  return mul(fmap.g, map_entries(fmap.g.field(), v, fmap.sigma));
}

Subspace apply_map(const SemilinearMap& fmap, const Subspace& s) {
  if (fmap.g.f != &s.field() || fmap.g.cols() != s.ambient())
    throw InputError("map does not match the subspace's space");
  std::vector<Vec> rows;
  for (int i = 0; i < s.dim(); ++i) rows.push_back(apply_map(fmap, s.basis().row(i)));
  return Subspace::span_vectors(s.field(), s.ambient(), rows);
}

SemilinearMap compose(const SemilinearMap& f1, const SemilinearMap& f2) {
  const Gf& f = f1.g.field();
  return SemilinearMap{mul(f1.g, map_entries(f2.g, f1.sigma)),
                       f.aut_compose(f1.sigma, f2.sigma)};
}

SemilinearMap inverse(const SemilinearMap& fmap) {
  const Gf& f = fmap.g.field();
  Aut si = f.aut_inverse(fmap.sigma);
  return SemilinearMap{map_entries(invert(fmap.g), si), si};
}

}  // namespace sympgeo
