#include "sympgeo/reconstruct.hpp"

#include <chrono>
#include <set>
#include <string>
#include <utility>

#include "sympgeo/errors.hpp"
#include "sympgeo/rng.hpp"

namespace sympgeo {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void require_shape(const PlaneSet& x) {
  const int n = x.ambient(), k = x.plane_dim();
  if (n % 2 != 0)
    throw InputError("no non-singular symplectic form exists in odd dimension");
  if (n < 4) throw InputError("ambient dimension must be at least 4");
  if (k != 2 && k != n - 2)
    throw InputError("reconstruction handles plane dimension 2 or n-2 only");
}

struct PipelineOutcome {
  StarWitness witness;
  SemilinearMap map;
  BilinearForm form;
};

// The hyperplane pipeline for k = n-2.  Rejection is possible only at the
// star check; every later stage is guaranteed by the accepted witness, so
// its failure is reported as a VerificationError.
std::variant<PipelineOutcome, StarFailure> run_direct(const PlaneSet& x) {
  const Gf& f = x.field();
  const int n = x.ambient();
  const int k = n - 2;

  StarCheck chk = check_star_condition(x, StarDirection::hyperplane_to_line);
  if (!accepted(chk)) return std::get<StarFailure>(std::move(chk));
  StarWitness w = std::get<StarWitness>(std::move(chk));

  BilinearForm om0 = identity_form(f, n);
  if (!is_reflexive(om0))
    throw VerificationError("reference form lost reflexivity");

  const SubspaceTable& pts = subspace_table(f, n, 1);
  const SubspaceTable& hyps = subspace_table(f, n, n - 1);

  // Witness image of each hyperplane, addressed by table index.
  std::vector<int> img_pt(hyps.size(), -1);
  for (size_t i = 0; i < w.sources.size(); ++i)
    img_pt[hyps.index_of(w.sources[i])] = pts.index_of(w.images[i]);
  for (int v : img_pt)
    if (v < 0) throw VerificationError("star witness does not cover all hyperplanes");

  // Point map l |-> F(l^perp), the composition of the reference duality
  // with the witness.
  LineMap lm{&f, n, std::vector<int>(pts.size())};
  for (int i = 0; i < pts.size(); ++i) {
    Subspace h = orthogonal_complement(om0, pts.items()[i]);
    lm.image[i] = img_pt[hyps.index_of(h)];
  }

  // Orthogonality of the point map with respect to the reference form:
  // every point is orthogonal to its image, and orthogonality between a
  // point and an image is symmetric in the pair.  Both are scaling
  // invariant, so representatives decide them.
  std::vector<Vec> rep(pts.size()), frep(pts.size());
  for (int i = 0; i < pts.size(); ++i) {
    rep[i] = pts.items()[i].representative();
    frep[i] = pts.items()[lm.image[i]].representative();
  }
  for (int i = 0; i < pts.size(); ++i)
    if (om0.eval(rep[i], frep[i]) != 0)
      throw VerificationError("a point is not orthogonal to its image");
  for (int i = 0; i < pts.size(); ++i)
    for (int j = i + 1; j < pts.size(); ++j)
      if ((om0.eval(rep[i], frep[j]) == 0) != (om0.eval(rep[j], frep[i]) == 0))
        throw VerificationError("point-image orthogonality is not symmetric");

  if (!verify_collineation(lm))
    throw VerificationError("induced point map is not a collineation");
  SemilinearMap gm;
  try {
    gm = recover_semilinear(lm);
  } catch (const CollineationError& e) {
    throw VerificationError(std::string("point map recovery failed: ") + e.what());
  }

  // Gram of the output form: impose F(s) orthogonal to all of s, for every
  // hyperplane s.  n*n unknowns; the witness pins the solution to a line.
  const Aut sg = gm.sigma;
  Mat cons(f, hyps.size() * (n - 1), n * n);
  int row = 0;
  for (int h = 0; h < hyps.size(); ++h) {
    Vec sw = map_entries(f, pts.items()[img_pt[h]].representative(), sg);
    const Mat& basis = hyps.items()[h].basis();
    for (int r = 0; r < n - 1; ++r) {
      Vec sb = map_entries(f, basis.row(r), sg);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          cons.at(row, i * n + j) = f.mul(sb[i], sw[j]);
      ++row;
    }
  }
  Mat null_basis = kernel(cons);
  if (null_basis.rows() != 1)
    throw VerificationError("output Gram is not determined up to scalar");
  Mat gram(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram.at(i, j) = null_basis.at(0, i * n + j);
  BilinearForm om(f, gram, sg, sg);

  if (!non_singular(om)) throw VerificationError("output form is singular");
  if (!is_symplectic(om)) throw VerificationError("output form is not symplectic");
  for (int h = 0; h < hyps.size(); ++h)
    if (!(orthogonal_complement(om, hyps.items()[h]) == pts.items()[img_pt[h]]))
      throw VerificationError("output form disagrees with the star witness");
  if (!equal_sets(singular_set(om, k), x))
    throw VerificationError("output form has the wrong singular set");

  return PipelineOutcome{std::move(w), std::move(gm), std::move(om)};
}

// The k = 2 pipeline: dualize through the identity form, reconstruct in the
// (n-2)-Grassmannian, and pull the result back through the recovered
// composition of the two dualities.
std::variant<PipelineOutcome, StarFailure> run_dual(const PlaneSet& x) {
  const Gf& f = x.field();
  const int n = x.ambient();

  StarCheck chk = check_star_condition(x, StarDirection::line_to_hyperplane);
  if (!accepted(chk)) return std::get<StarFailure>(std::move(chk));
  StarWitness w = std::get<StarWitness>(std::move(chk));

  BilinearForm om0 = identity_form(f, n);
  std::vector<Subspace> duals;
  duals.reserve(x.size());
  for (const Subspace& s : x.members())
    duals.push_back(orthogonal_complement(om0, s));
  PlaneSet xd = PlaneSet::make(f, n, n - 2, std::move(duals));
  if (xd.size() != x.size())
    throw VerificationError("duality collapsed members of the input set");

  auto inner = run_direct(xd);
  if (!std::holds_alternative<PipelineOutcome>(inner))
    throw VerificationError(
        "dual set fails the hyperplane star check despite an accepted line check");
  PipelineOutcome in = std::get<PipelineOutcome>(std::move(inner));

  // Composition of the two dualities on points: l |-> (l^perp0)^perp';
  // a collineation, whose semilinear realization transports the inner form
  // back to the input Grassmannian.
  const SubspaceTable& pts = subspace_table(f, n, 1);
  LineMap lm{&f, n, std::vector<int>(pts.size())};
  for (int i = 0; i < pts.size(); ++i) {
    Subspace h = orthogonal_complement(om0, pts.items()[i]);
    lm.image[i] = pts.index_of(orthogonal_complement(in.form, h));
  }
  SemilinearMap gm;
  try {
    gm = recover_semilinear(lm);
  } catch (const CollineationError& e) {
    throw VerificationError(std::string("duality composition is not semilinear: ") + e.what());
  }

  BilinearForm om = pullback_form(in.form, gm);
  if (!non_singular(om)) throw VerificationError("output form is singular");
  if (!is_symplectic(om)) throw VerificationError("output form is not symplectic");
  // Witness consistency on the input side: F(l) must be the orthogonal
  // complement of l under the output form, for every line.
  for (size_t i = 0; i < w.sources.size(); ++i)
    if (!(orthogonal_complement(om, w.sources[i]) == w.images[i]))
      throw VerificationError("output form disagrees with the line witness");
  if (!equal_sets(singular_set(om, 2), x))
    throw VerificationError("output form has the wrong singular set");

  return PipelineOutcome{std::move(w), std::move(gm), std::move(om)};
}

}  // namespace

ReconstructResult reconstruct_form(const PlaneSet& x) {
  require_shape(x);
  return reconstruct_form(
      x, x.plane_dim() == x.ambient() - 2 ? Via::direct : Via::dual);
}

ReconstructResult reconstruct_form(const PlaneSet& x, Via via) {
  const auto t0 = Clock::now();
  require_shape(x);
  const int n = x.ambient(), k = x.plane_dim();
  if (via == Via::direct && k != n - 2)
    throw InputError("the direct pipeline requires plane dimension n-2");
  if (via == Via::dual && k != 2)
    throw InputError("the dual pipeline requires plane dimension 2");

  auto out = via == Via::direct ? run_direct(x) : run_dual(x);
  if (std::holds_alternative<StarFailure>(out))
    return std::get<StarFailure>(std::move(out));
  PipelineOutcome po = std::get<PipelineOutcome>(std::move(out));

  ReconstructionReport rep;
  rep.q = x.field().q();
  rep.n = n;
  rep.k = k;
  rep.set_size = x.size();
  rep.via = via;
  rep.witness = std::move(po.witness);
  rep.map = std::move(po.map);
  rep.form = std::move(po.form);
  rep.symplectic = true;
  rep.non_singular = true;
  rep.sset_match = true;
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

TheoremSummary verify_theorem(const Gf& f, int n, int k, TheoremMode mode,
                              int samples, std::uint64_t seed) {
  if (n % 2 != 0 || n < 4)
    throw InputError("theorem verification needs even ambient dimension >= 4");
  if (k != 2 && k != n - 2)
    throw InputError("theorem verification handles plane dimension 2 or n-2 only");
  if (mode == TheoremMode::sampled && samples < 1)
    throw InputError("sampled mode needs at least one draw");

  TheoremSummary sm;
  sm.q = f.q();
  sm.n = n;
  sm.k = k;
  sm.mode = mode;
  sm.samples = mode == TheoremMode::sampled ? samples : 0;
  sm.seed = seed;

  std::set<std::string> sset_keys;
  auto run_one = [&](const BilinearForm& om) {
    ++sm.forms_tested;
    try {
      PlaneSet s = singular_set(om, k);
      std::string key;
      for (const Subspace& m : s.members()) key += m.key();
      sset_keys.insert(key);
      if (!accepted(check_star_condition(s, default_direction(n, k)))) {
        ++sm.failures;
        return;
      }
      ReconstructResult r = reconstruct_form(s);
      if (!std::holds_alternative<ReconstructionReport>(r)) ++sm.failures;
    } catch (const Error&) {
      ++sm.failures;
    }
  };

  if (mode == TheoremMode::exhaustive) {
    // All alternating Grams, driven by the strictly-upper-triangle entries.
    const int slots = n * (n - 1) / 2;
    double total = 1;
    for (int i = 0; i < slots; ++i) total *= f.q();
    if (total > double(1 << 20))
      throw InputError("exhaustive form enumeration too large; use sampled mode");
    std::vector<felem> upper(slots, 0);
    for (;;) {
      Mat a(f, n, n);
      int t = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++t) {
          a.at(i, j) = upper[t];
          a.at(j, i) = f.neg(upper[t]);
        }
      if (rank_of(a) == n)
        run_one(BilinearForm(f, a, f.identity_aut(), f.identity_aut()));
      int pos = slots - 1;
      while (pos >= 0 && upper[pos] == f.q() - 1) upper[pos--] = 0;
      if (pos < 0) break;
      ++upper[pos];
    }
  } else {
    SplitMix64 rng(seed);
    for (int i = 0; i < samples; ++i)
      run_one(random_symplectic_form(rng, f, n));
  }

  sm.distinct_ssets = long(sset_keys.size());
  return sm;
}

}  // namespace sympgeo
