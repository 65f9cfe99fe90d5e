// Command-line surface: exact bigraded cohomology of configuration spaces
// of points on an elliptic curve, with the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
// guard exceeded.

#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

#include "../vendor/CLI11.hpp"
#include "ellconf/format.hpp"

using namespace ellconf;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct Common {
  int n = 2;
  std::string format = "text";
  std::string cache_dir;
  bool allow_large = false;
};

void add_common(CLI::App* cmd, Common& c, bool need_n = true) {
  auto* n_opt = cmd->add_option("--n", c.n, "number of points");
  if (need_n) n_opt->required();
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv", "latex"}))
      ->default_val("text");
  cmd->add_option("--cache-dir", c.cache_dir,
                  "cache directory (default: $ELLCONF_CACHE_DIR)");
  cmd->add_flag("--allow-large", c.allow_large,
                "admit n = 7 for the zero-sum and classes workloads");
}

std::unique_ptr<Cache> make_cache(const Common& c) {
  std::string dir = c.cache_dir;
  if (dir.empty())
    if (const char* env = std::getenv("ELLCONF_CACHE_DIR")) dir = env;
  if (dir.empty()) return nullptr;
  auto cache = std::make_unique<Cache>(dir);
  if (!cache->enabled()) {
    std::cerr << "warning: cache directory '" << dir
              << "' is not writable; caching disabled\n";
    return nullptr;
  }
  return cache;
}

// enforces the resource policy; returns an exit code to propagate, or 0
int check_guard(const Common& c, bool full_suite) {
  if (c.n < 1) {
    std::cerr << "error: n must be >= 1\n";
    return kExitUsage;
  }
  if (guard_allows(c.n, full_suite, c.allow_large)) return 0;
  std::cerr << "error: n = " << c.n
            << " exceeds the resource guard (full workloads run for n <= 6; "
               "n = 7 is admitted for zero-sum and classes workloads with "
               "--allow-large)\n";
  return kExitGuard;
}

Format fmt(const Common& c) { return *parse_format(c.format); }

int run_basis(const Common& c, const std::string& model, int p, int q,
              bool oracle) {
  if (model != "a" && model != "b") {
    std::cerr << "error: --model must be a or b\n";
    return kExitUsage;
  }
  if (oracle && model != "a") {
    std::cerr << "error: --oracle is only available for --model a\n";
    return kExitUsage;
  }
  if (int rc = check_guard(c, /*full_suite=*/model == "a")) return rc;
  auto cache = make_cache(c);
  Model m(c.n, cache.get());
  BasisListing listing;
  listing.n = c.n;
  listing.p = p;
  listing.q = q;
  if (model == "a") {
    listing.model = ModelId::A;
    const Model::Slice& s = m.slice(p, q);
    listing.dim = s.dim();
    for (const Monomial& mono : s.elems)
      listing.monomials.push_back(to_string(mono, c.n));
    if (oracle) listing.oracle_dim = m.oracle_quotient_dim(ModelId::A, p, q);
  } else {
    listing.model = ModelId::B;
    const WeightBlocks& b = m.slice_b(p, q);
    listing.dim = b.dim;
    for (int k = 0; k < b.dim; ++k)
      listing.monomials.push_back(
          to_string(m.expand(p, q, b.basis_vector(k))));
  }
  std::cout << render_basis(listing, fmt(c));
  if (listing.oracle_dim && *listing.oracle_dim != listing.dim)
    return kExitVerify;
  return 0;
}

int run_betti(const Common& c, const std::string& space_s) {
  Space s = space_s == "conf"    ? Space::Conf
            : space_s == "uconf" ? Space::UConf
            : space_s == "m"     ? Space::M
                                 : Space::UM;
  bool full = (s == Space::Conf || s == Space::UConf);
  if (int rc = check_guard(c, full)) return rc;
  auto cache = make_cache(c);
  Model m(c.n, cache.get());
  Cohomology coh(m);
  std::cout << render_betti(s, c.n, coh.betti_polynomial(s), fmt(c));
  return 0;
}

int run_hodge(const Common& c, const std::string& space_s, bool groth) {
  Space s = space_s == "conf"    ? Space::Conf
            : space_s == "uconf" ? Space::UConf
            : space_s == "m"     ? Space::M
                                 : Space::UM;
  bool full = (s == Space::Conf || s == Space::UConf);
  if (int rc = check_guard(c, full)) return rc;
  auto cache = make_cache(c);
  Model m(c.n, cache.get());
  Cohomology coh(m);
  if (groth)
    std::cout << render_groth(s, c.n, coh.grothendieck_polynomial(s), fmt(c));
  else
    std::cout << render_hodge(s, c.n, coh.hodge_polynomial(s), fmt(c));
  return 0;
}

int run_decompose(const Common& c, int p, int q) {
  if (int rc = check_guard(c, /*full_suite=*/true)) return rc;
  auto cache = make_cache(c);
  Model m(c.n, cache.get());
  const Model::Slice& s = m.slice(p, q);
  DecomposeResult d;
  d.n = c.n;
  d.p = p;
  d.q = q;
  d.dim = s.dim();
  for (int w : s.weight) ++d.weight_dims[w];
  d.irreps = irrep_multiplicities(d.weight_dims);
  std::cout << render_decompose(d, fmt(c));
  return 0;
}

int run_partitions(const Common& c, int p, int q) {
  // purely combinatorial: no resource guard beyond the enumeration budget
  PartitionTable t;
  t.n = c.n;
  t.p = p;
  t.q = q;
  for (const MarkedPartition& mp : enumerate_marked(c.n, p, q)) {
    PartitionRow row;
    row.partition = mp;
    row.z_order = stabilizer(mp).z_order;
    row.xi_trivial = xi_is_trivial(mp);
    row.induced_dim = induced_dim(mp);
    t.total_dim += row.induced_dim;
    if (row.xi_trivial) ++t.invariant_dim;
    t.rows.push_back(std::move(row));
  }
  std::cout << render_partitions(t, fmt(c));
  return 0;
}

int run_classes(const Common& c) {
  if (c.n < 2) {
    std::cerr << "error: classes require n >= 2\n";
    return kExitUsage;
  }
  if (int rc = check_guard(c, /*full_suite=*/false)) return rc;
  auto cache = make_cache(c);
  Model m(c.n, cache.get());
  Cohomology coh(m);
  ClassesSummary cs;
  cs.n = c.n;
  std::vector<ClassName> names{ClassName::Gamma, ClassName::GammaBar};
  if (c.n > 2) {
    names.push_back(ClassName::Alpha);
    names.push_back(ClassName::AlphaBar);
  }
  if (c.n > 3) names.push_back(ClassName::Beta);
  for (ClassName name : names) {
    NamedClass cls = build_class(m, name);
    auto [p, q] = *cls.value.bidegree();
    cs.classes.emplace_back(
        to_string(name), "bidegree (" + std::to_string(p) + "," +
                             std::to_string(q) + "), " +
                             std::to_string(cls.value.t.size()) +
                             " terms, cocycle");
  }
  if (c.n > 2)
    cs.checks = verify_power_nonvanishing(coh).checks;
  std::cout << render_classes(cs, fmt(c));
  for (const Check& k : cs.checks)
    if (!k.pass) return kExitVerify;
  return 0;
}

int run_verify(const Common& c, const std::string& suite) {
  bool full = !(suite == "classes");
  if (int rc = check_guard(c, full)) return rc;
  if (c.n < 2) {
    std::cerr << "error: verify requires n >= 2\n";
    return kExitUsage;
  }
  if ((suite == "ring" || suite == "formality") && c.n < 4) {
    std::cerr << "error: suite '" << suite << "' requires n >= 4\n";
    return kExitUsage;
  }
  auto cache = make_cache(c);
  VerificationReport rep = verify_suite(suite, c.n, cache.get());
  std::cout << render_report(rep, fmt(c));
  return rep.pass() ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact bigraded cohomology of configuration spaces of points on an "
      "elliptic curve"};
  app.require_subcommand(1);

  Common c_basis, c_betti, c_hodge, c_dec, c_part, c_cls, c_ver;
  std::string basis_model = "a", betti_space, hodge_space, suite = "all";
  int p = 0, q = 0, dp = 0, dq = 0, pp = 0, pq = 0;
  bool oracle = false, groth = false;

  CLI::App* basis = app.add_subcommand("basis", "basis of one bidegree slice");
  add_common(basis, c_basis);
  basis->add_option("--model", basis_model, "model: a (full) or b (zero-sum)")
      ->check(CLI::IsMember({"a", "b"}))
      ->default_val("a");
  basis->add_option("--p", p, "letter degree")->required();
  basis->add_option("--q", q, "edge degree")->required();
  basis->add_flag("--oracle", oracle,
                  "cross-check the dimension against the relation-ideal "
                  "oracle (model a)");

  CLI::App* betti = app.add_subcommand("betti", "Betti polynomial");
  add_common(betti, c_betti);
  betti->add_option("--space", betti_space, "conf, uconf, m or um")
      ->check(CLI::IsMember({"conf", "uconf", "m", "um"}))
      ->required();

  CLI::App* hodge = app.add_subcommand("hodge", "bigraded Hodge polynomial");
  add_common(hodge, c_hodge);
  hodge->add_option("--space", hodge_space, "conf, uconf, m or um")
      ->check(CLI::IsMember({"conf", "uconf", "m", "um"}))
      ->required();
  hodge->add_flag("--grothendieck", groth,
                  "coefficients in the representation ring of SL2");

  CLI::App* dec = app.add_subcommand(
      "decompose", "torus-weight profile and irreducible multiplicities");
  add_common(dec, c_dec);
  dec->add_option("--p", dp, "letter degree")->required();
  dec->add_option("--q", dq, "edge degree")->required();

  CLI::App* part = app.add_subcommand(
      "partitions", "marked-partition table of one slice");
  add_common(part, c_part);
  part->add_option("--p", pp, "letter degree")->required();
  part->add_option("--q", pq, "edge degree")->required();

  CLI::App* cls = app.add_subcommand(
      "classes", "distinguished classes and their coefficient extractions");
  add_common(cls, c_cls);

  CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
  add_common(ver, c_ver);
  ver->add_option("--suite", suite, "verification suite")
      ->check(CLI::IsMember({"all", "dims", "reps", "cohomology", "classes",
                             "ring", "formality"}))
      ->default_val("all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (basis->parsed()) return run_basis(c_basis, basis_model, p, q, oracle);
    if (betti->parsed()) return run_betti(c_betti, betti_space);
    if (hodge->parsed()) return run_hodge(c_hodge, hodge_space, groth);
    if (dec->parsed()) return run_decompose(c_dec, dp, dq);
    if (part->parsed()) return run_partitions(c_part, pp, pq);
    if (cls->parsed()) return run_classes(c_cls);
    if (ver->parsed()) return run_verify(c_ver, suite);
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  }
  return kExitUsage;
}
