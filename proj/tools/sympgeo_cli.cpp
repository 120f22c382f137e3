// Command-line front end: enumerate Grassmannians, compute singular sets,
// check the star condition, reconstruct forms, and verify the
// characterization on whole families of forms.
//
// Exit codes: 0 success, 1 mathematical rejection (the input set fails the
// star condition), 2 input error, 3 internal verification failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sympgeo/errors.hpp"
#include "sympgeo/io.hpp"
#include "sympgeo/reconstruct.hpp"

namespace {

using namespace sympgeo;

constexpr std::uint64_t kMaxEnumeration = 2'000'000;

// "-" selects standard input.
std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PlaneSet load_plane_set(const std::string& path) {
  std::istringstream ss(slurp(path));
  return read_plane_set(ss);
}

void check_scale(int n, int k, std::uint64_t q) {
  if (gaussian_binomial(n, k, q) > kMaxEnumeration)
    throw InputError("Grassmannian too large for a desk-scale run");
}

const char* direction_word(const PlaneSet& x, const Subspace& at) {
  return at.dim() == x.ambient() - 1 ? "hyperplane" : "line";
}

void print_rejection(std::ostream& os, const PlaneSet& x, const StarFailure& fail) {
  os << "rejected " << x.field().q() << ' ' << x.ambient() << ' ' << x.plane_dim()
     << ' ' << direction_word(x, fail.at) << '\n';
  os << "reason: " << fail.reason << '\n';
  os << '\n';
  print_subspace(os, fail.at);
  if (fail.plane) {
    os << "\noffender\n";
    print_subspace(os, *fail.plane);
  }
}

int cmd_enumerate(int q, int n, int k) {
  const Gf& f = field_of_order(q);
  if (n < 1 || n > 16) throw InputError("ambient dimension out of range");
  if (k < 0 || k > n) throw InputError("plane dimension out of range");
  check_scale(n, k, std::uint64_t(q));
  PlaneSet ps = PlaneSet::make(f, n, k, all_subspaces(f, n, k));
  print_plane_set(std::cout, ps);
  return 0;
}

int cmd_sset(int q, int n, int k, const std::string& gram_path) {
  const Gf& f = field_of_order(q);
  std::istringstream ss(slurp(gram_path));
  Mat gram = read_gram(ss);
  if (gram.field().q() != q || gram.rows() != n)
    throw InputError("Gram file disagrees with --q/--n");
  BilinearForm om(f, gram, f.identity_aut(), f.identity_aut());
  if (!is_symplectic(om)) throw InputError("gram is not symplectic");
  if (!non_singular(om)) throw InputError("gram is singular");
  if (k < 1 || k > n - 1) throw InputError("plane dimension out of range");
  check_scale(n, k, std::uint64_t(q));
  if (k % 2 != 0)
    std::cerr << "note: odd plane dimension, every restriction is singular; "
                 "the full Grassmannian follows\n";
  print_plane_set(std::cout, singular_set(om, k));
  return 0;
}

int cmd_check(const std::string& set_path) {
  PlaneSet ps = load_plane_set(set_path);
  const int n = ps.ambient(), k = ps.plane_dim();
  if (n < 4 || (k != 2 && k != n - 2))
    throw InputError("the star condition is defined for k = 2 or k = n-2, n >= 4");
  StarCheck chk = check_star_condition(ps, default_direction(n, k));
  if (!accepted(chk)) {
    print_rejection(std::cout, ps, std::get<StarFailure>(chk));
    return 1;
  }
  const StarWitness& w = std::get<StarWitness>(chk);
  std::cout << "accepted " << ps.field().q() << ' ' << n << ' ' << k << ' '
            << (w.direction == StarDirection::hyperplane_to_line ? "hyperplane" : "line")
            << ' ' << w.sources.size() << '\n';
  for (size_t i = 0; i < w.sources.size(); ++i) {
    std::cout << '\n';
    print_subspace(std::cout, w.sources[i]);
    std::cout << "->\n";
    print_subspace(std::cout, w.images[i]);
  }
  return 0;
}

int cmd_reconstruct(const std::string& set_path, const std::string& via_flag) {
  PlaneSet ps = load_plane_set(set_path);
  ReconstructResult res =
      via_flag.empty()
          ? reconstruct_form(ps)
          : reconstruct_form(ps, via_flag == "dual" ? Via::dual : Via::direct);
  if (std::holds_alternative<StarFailure>(res)) {
    print_rejection(std::cout, ps, std::get<StarFailure>(res));
    return 1;
  }
  const ReconstructionReport& rep = std::get<ReconstructionReport>(res);
  print_gram(std::cout, rep.form.gram);
  std::cout << '\n';
  std::cout << "via=" << (rep.via == Via::direct ? "direct" : "dual") << '\n';
  std::cout << "q=" << rep.q << " n=" << rep.n << " k=" << rep.k
            << " set-size=" << rep.set_size << '\n';
  std::cout << "sigma=" << rep.form.s1.e << '\n';
  std::cout << "symplectic=" << (rep.symplectic ? "true" : "false") << '\n';
  std::cout << "non-singular=" << (rep.non_singular ? "true" : "false") << '\n';
  std::cout << "sset-match=" << (rep.sset_match ? "true" : "false") << '\n';
  std::cerr << "elapsed-ms=" << rep.elapsed_ms << '\n';
  return 0;
}

int cmd_verify_theorem(int q, int n, int k, const std::string& mode, int samples,
                       std::uint64_t seed) {
  const Gf& f = field_of_order(q);
  TheoremMode tm = mode == "sampled" ? TheoremMode::sampled : TheoremMode::exhaustive;
  TheoremSummary sm = verify_theorem(f, n, k, tm, samples, seed);
  std::cout << "q=" << sm.q << " n=" << sm.n << " k=" << sm.k << " mode=" << mode;
  if (tm == TheoremMode::sampled)
    std::cout << " samples=" << sm.samples << " seed=" << sm.seed;
  std::cout << '\n';
  std::cout << "forms=" << sm.forms_tested << " distinct-ssets=" << sm.distinct_ssets
            << " failures=" << sm.failures << '\n';
  return sm.failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symplectic geometry over small finite fields"};
  app.require_subcommand(1);

  int q = 2, n = 4, k = -1;
  std::string gram_path, set_path, via, mode = "exhaustive";
  int samples = 50;
  std::uint64_t seed = 0;

  CLI::App* c_enum = app.add_subcommand("enumerate", "list all k-planes of GF(q)^n");
  c_enum->add_option("--q", q, "field order")->required();
  c_enum->add_option("--n", n, "ambient dimension")->required();
  c_enum->add_option("--k", k, "plane dimension")->required();

  CLI::App* c_sset = app.add_subcommand(
      "sset", "singular k-planes of a symplectic form (Gram file or - for stdin)");
  c_sset->add_option("--q", q, "field order")->required();
  c_sset->add_option("--n", n, "ambient dimension")->required();
  c_sset->add_option("--k", k, "plane dimension")->required();
  c_sset->add_option("--gram", gram_path, "Gram file")->required();

  CLI::App* c_check = app.add_subcommand(
      "check", "decide the star condition for a plane set file (- for stdin)");
  c_check->add_option("--set", set_path, "plane set file")->required();

  CLI::App* c_rec = app.add_subcommand(
      "reconstruct", "recover a symplectic form from a star-condition set");
  c_rec->add_option("--set", set_path, "plane set file")->required();
  c_rec->add_option("--via", via, "pipeline for n = 4: direct or dual")
      ->check(CLI::IsMember({"direct", "dual"}));

  CLI::App* c_ver = app.add_subcommand(
      "verify-theorem", "round-trip the characterization over a family of forms");
  c_ver->add_option("--q", q, "field order")->required();
  c_ver->add_option("--n", n, "ambient dimension")->required();
  c_ver->add_option("--k", k, "plane dimension (default n-2)");
  c_ver->add_option("--mode", mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  c_ver->add_option("--samples", samples, "draws in sampled mode");
  c_ver->add_option("--seed", seed, "PRNG seed for sampled mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_enum)) return cmd_enumerate(q, n, k);
    if (app.got_subcommand(c_sset)) return cmd_sset(q, n, k, gram_path);
    if (app.got_subcommand(c_check)) return cmd_check(set_path);
    if (app.got_subcommand(c_rec)) return cmd_reconstruct(set_path, via);
    if (app.got_subcommand(c_ver))
      return cmd_verify_theorem(q, n, k < 0 ? n - 2 : k, mode, samples, seed);
    throw InputError("no subcommand");
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const VerificationError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
