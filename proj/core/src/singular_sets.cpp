#include "sympgeo/singular_sets.hpp"

#include <algorithm>

namespace sympgeo {

PlaneSet PlaneSet::make(const Gf& f, int n, int k, std::vector<Subspace> members) {
  if (k < 0 || k > n) throw InputError("plane dimension out of range");
  for (const Subspace& s : members) {
    if (&s.field() != &f || s.ambient() != n || s.dim() != k)
      throw InputError("plane set member with mismatched parameters");
  }
  std::sort(members.begin(), members.end(), subspace_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  PlaneSet ps;
  ps.f_ = &f;
  ps.n_ = n;
  ps.k_ = k;
  ps.members_ = std::move(members);
  return ps;
}

bool PlaneSet::contains(const Subspace& s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s, subspace_less);
  return it != members_.end() && *it == s;
}

PlaneSet PlaneSet::with_added(const Subspace& s) const {
  std::vector<Subspace> m = members_;
  m.push_back(s);
  return make(*f_, n_, k_, std::move(m));
}

PlaneSet PlaneSet::with_removed(const Subspace& s) const {
  std::vector<Subspace> m;
  for (const Subspace& t : members_)
    if (t != s) m.push_back(t);
  return make(*f_, n_, k_, std::move(m));
}

bool equal_sets(const PlaneSet& a, const PlaneSet& b) {
  if (&a.field() != &b.field() || a.ambient() != b.ambient() ||
      a.plane_dim() != b.plane_dim())
    throw InputError("plane sets with different parameters");
  return a.members() == b.members();
}

PlaneSet singular_set(const BilinearForm& om, int k) {
  if (k < 1 || k > om.n - 1) throw InputError("singular_set needs 1 <= k <= n-1");
  if (!non_singular(om)) throw MathError("singular_set needs a non-singular form");
  if (!is_symplectic(om)) throw MathError("singular_set needs a symplectic form");
  const Gf& f = om.field();
  std::vector<Subspace> members;
  if (k % 2 == 1) {
    // Restricted Grams are alternating, so odd k is always rank-deficient.
    members = all_subspaces(f, om.n, k);
  } else {
    GrassmannianEnumerator en(f, om.n, k);
    while (auto s = en.next())
      if (rank_of(restricted_gram(om, *s)) < k) members.push_back(std::move(*s));
  }
  return PlaneSet::make(f, om.n, k, std::move(members));
}

StarDirection default_direction(int n, int k) {
  if (n < 4 || (k != 2 && k != n - 2))
    throw InputError("no star direction for this plane dimension");
  return k == 2 ? StarDirection::line_to_hyperplane : StarDirection::hyperplane_to_line;
}

StarCheck check_star_condition(const PlaneSet& x, StarDirection dir) {
  const Gf& f = x.field();
  const int n = x.ambient(), k = x.plane_dim();
  if (n < 4) throw InputError("star condition needs ambient dimension >= 4");
  const bool h2l = dir == StarDirection::hyperplane_to_line;
  if (h2l ? k != n - 2 : k != 2)
    throw InputError("star condition direction does not match the plane dimension");

  const int src_dim = h2l ? n - 1 : 1;
  const auto& sources = subspace_table(f, n, src_dim).items();

  StarWitness w;
  w.direction = dir;
  w.sources = sources;
  w.images.reserve(sources.size());

  for (const Subspace& s : sources) {
    // Members of X incident with s, in set order.
    std::vector<Subspace> trace;
    for (const Subspace& l : x.members())
      if (h2l ? contains(s, l) : contains(l, s)) trace.push_back(l);
    if (trace.empty())
      return StarFailure{s, std::nullopt, "no member of the set is incident with it"};

    // The only possible F(s): intersection (resp. sum) of the trace.
    Subspace cand = trace[0];
    std::optional<Subspace> breaker;
    for (size_t i = 1; i < trace.size(); ++i) {
      Subspace next = h2l ? intersect(cand, trace[i]) : sum(cand, trace[i]);
      if (h2l ? (cand.dim() >= 1 && next.dim() < 1)
              : (cand.dim() <= n - 1 && next.dim() > n - 1))
        if (!breaker) breaker = trace[i];
      cand = std::move(next);
    }
    const int want = h2l ? 1 : n - 1;
    if (cand.dim() != want) {
      std::string reason;
      if (h2l)
        reason = cand.dim() < 1 ? "members inside it have no common line"
                                : "members inside it share more than a line";
      else
        reason = cand.dim() < n - 1 ? "members through it span less than a hyperplane"
                                    : "members through it span the whole space";
      return StarFailure{s, breaker, reason};
    }

    // Every incident k-plane pinned by the candidate must belong to X.
    // (The trace is contained in that pencil by construction.)
    std::vector<Subspace> pencil;
    for (const Subspace& l : incident_planes(s, k))
      if (h2l ? contains(l, cand) : contains(cand, l)) pencil.push_back(l);
    std::sort(pencil.begin(), pencil.end(), subspace_less);
    if (pencil.size() != trace.size() ||
        !std::equal(pencil.begin(), pencil.end(), trace.begin())) {
      for (const Subspace& l : pencil)
        if (!x.contains(l))
          return StarFailure{s, l, "the pencil through the candidate has a plane outside the set"};
      return StarFailure{s, std::nullopt, "pencil mismatch"};  // unreachable
    }
    w.images.push_back(std::move(cand));
  }
  return w;
}

bool witness_symmetric(const StarWitness& w) {
  const bool h2l = w.direction == StarDirection::hyperplane_to_line;
  const size_t m = w.sources.size();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      bool ij = h2l ? contains(w.sources[j], w.images[i])
                    : contains(w.images[i], w.sources[j]);
      bool ji = h2l ? contains(w.sources[i], w.images[j])
                    : contains(w.images[j], w.sources[i]);
      if (ij != ji) return false;
    }
  return true;
}

}  // namespace sympgeo
