#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>

#include "CLI11.hpp"
#include "gaugenorm/dominance.hpp"
#include "gaugenorm/duality.hpp"
#include "gaugenorm/errors.hpp"
#include "gaugenorm/extreme2.hpp"
#include "gaugenorm/json_io.hpp"
#include "gaugenorm/norms.hpp"
#include "proptest.hpp"

namespace {

using namespace gaugenorm;
using nlohmann::json;
namespace gj = gaugenorm::json;

enum Exit : int {
  kOk = 0,
  kNotDominated = 1,
  kBadInput = 2,
  kNumerical = 3,
  kUnsupported = 4,
  kDimension = 5,
  kInvariantFailed = 6,
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_snumbers(const std::string& path) {
  const auto t = gj::matrix_from_json(gj::read_file(path));
  const auto s = s_numbers(t);
  emit({{"n", t.n()}, {"s", s.s}, {"mu", gj::to_json(mu_step(s))}});
  return kOk;
}

struct NormArgs {
  std::string spec_file;
  std::string operand_file;
  bool dual = false;
  bool profile = false;
};

int cmd_norm(const NormArgs& a) {
  const auto spec = gj::spec_from_json(gj::read_file(a.spec_file));
  if (a.profile) {
    std::cout << profile_of(spec).to_csv();
    return kOk;
  }
  if (a.operand_file.empty()) throw ParseError("norm needs an operand file unless --profile is given");
  const auto operand = gj::operand_from_json(gj::read_file(a.operand_file));
  const std::size_t n = std::visit(
      [](const auto& x) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, CMatrix>)
          return x.n();
        else
          return x.size();
      },
      operand);

  if (!a.dual) {
    const double v = std::holds_alternative<CMatrix>(operand)
                         ? norm_mat(spec, std::get<CMatrix>(operand))
                         : norm_vec(spec, std::span<const Complex>(std::get<std::vector<Complex>>(operand)));
    emit({{"spec", spec.describe()}, {"norm", v}});
    return kOk;
  }
  if (spec.is_polyhedral() && n > kMaxLpDim)
    throw UnsupportedSpec("--dual for " + spec.kind() + " is limited to n <= " + std::to_string(kMaxLpDim));
  double primal = 0.0;
  DualResult d;
  if (const auto* m = std::get_if<CMatrix>(&operand)) {
    primal = norm_mat(spec, *m);
    d = dual_mat(spec, *m);
  } else {
    const auto& x = std::get<std::vector<Complex>>(operand);
    primal = norm_vec(spec, std::span<const Complex>(x));
    d = dual_vec(spec, std::span<const Complex>(x));
  }
  emit({{"spec", spec.describe()}, {"primal", primal}, {"dual", d.value}, {"witness", d.witness}});
  return kOk;
}

int cmd_dominance(const std::string& s_file, const std::string& t_file) {
  const auto s = gj::matrix_from_json(gj::read_file(s_file));
  const auto t = gj::matrix_from_json(gj::read_file(t_file));
  const auto v = kyfan_dominates(t, s);
  json out = gj::to_json(v);
  std::vector<double> margins;
  for (std::size_t k = 0; k < v.partial_sums_s.size(); ++k) margins.push_back(v.partial_sums_t[k] - v.partial_sums_s[k]);
  out["margins"] = margins;
  if (v.violating_k) out["separating_spec"] = gj::to_json(separating_spec(t.n(), *v.violating_k));
  emit(out);
  return v.dominates ? kOk : kNotDominated;
}

int cmd_decompose(const std::string& path) {
  const auto in = gj::read_file(path);
  Profile profile = Profile::piecewise_linear({0.0, 1.0}, {1.0, 1.0});
  if (in.is_object() && in.contains("kind"))
    profile = profile_of(gj::spec_from_json(in));
  else if (in.is_object() && in.contains("atoms"))
    profile = reconstruct(gj::measure_from_json(in));
  else
    profile = gj::profile_from_json(in);
  profile = profile.sampled();

  const auto adm = admissibility(profile);
  json out = {{"profile", gj::to_json(profile)}, {"admissibility", gj::to_json(adm)}};
  if (!adm.admissible()) {
    emit(out);
    std::cerr << "error: inadmissible profile: violates " << adm.violated << '\n';
    return kBadInput;
  }
  const auto mu = decompose(profile);
  out["measure"] = gj::to_json(mu);
  out["round_trip_error"] = max_profile_difference(reconstruct(mu), profile);
  emit(out);
  return kOk;
}

int cmd_lpcheck(double p, std::size_t points) {
  if (points < 2) throw DomainError("lpcheck needs at least two grid points");
  std::vector<double> grid, errors;
  double worst = 0.0;
  for (std::size_t i = 0; i < points; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(points - 1);
    const double e = std::fabs(lp_density_integral(p, s) - lp_profile(p, s));
    grid.push_back(s);
    errors.push_back(e);
    worst = std::max(worst, e);
  }
  constexpr double kContract = 1e-6;
  emit({{"p", p}, {"grid", grid}, {"errors", errors}, {"max_error", worst}, {"passed", worst <= kContract}});
  return worst <= kContract ? kOk : kInvariantFailed;
}

struct ProptestArgs {
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::string suite = "all";
  std::string witness_file = "proptest_witness.json";
};

int cmd_proptest(ProptestArgs a) {
  if (const char* env = std::getenv("GAUGENORM_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0') throw ParseError(std::string("GAUGENORM_SEED is not an integer: ") + env);
    a.seed = v;
  }
  cli::ProptestOptions o;
  o.seed = a.seed;
  o.trials = a.trials;
  o.suite = a.suite;
#ifdef GAUGENORM_INJECT_TRIANGLE_BUG
  o.negate_triangle = true;
#endif
  const auto result = cli::run_proptest(o);
  emit(result.report);
  if (result.passed()) return kOk;
  std::ofstream w(a.witness_file);
  w << json({{"seed", a.seed}, {"suite", a.suite}, {"failures", result.witnesses}}).dump(2) << '\n';
  std::cerr << "error: invariant failure; witness written to " << a.witness_file << '\n';
  return kInvariantFailed;
}

int run(int argc, char** argv) {
  CLI::App app{"gaugenorm: unitarily invariant norms, duals, dominance and M2 profiles"};
  app.require_subcommand(1);

  std::string matrix_file;
  auto* sn = app.add_subcommand("snumbers", "Singular values and the mu_s step function of a matrix");
  sn->add_option("matrix", matrix_file, "Matrix JSON file")->required();

  NormArgs norm_args;
  auto* nm = app.add_subcommand("norm", "Evaluate a norm (or its dual) on a matrix or vector");
  nm->add_option("spec", norm_args.spec_file, "Norm spec JSON file")->required();
  nm->add_option("operand", norm_args.operand_file, "Matrix or vector JSON file");
  nm->add_flag("--dual", norm_args.dual, "Print the dual norm with its LP witness");
  nm->add_flag("--profile", norm_args.profile, "Print the M2 norm profile as CSV");

  std::string s_file, t_file;
  auto* dm = app.add_subcommand("dominance", "Is S dominated by T in every Ky Fan norm?");
  dm->add_option("S", s_file, "Matrix JSON file for S")->required();
  dm->add_option("T", t_file, "Matrix JSON file for T")->required();

  std::string profile_file;
  auto* dc = app.add_subcommand("decompose", "Decompose an M2 profile into <t>-norm atoms");
  dc->add_option("input", profile_file, "Profile, norm spec or atomic measure JSON file")->required();

  double p = 2.0;
  std::size_t points = 11;
  auto* lc = app.add_subcommand("lpcheck", "Check the L^p mixing-density identity on a uniform grid");
  lc->add_option("--p", p, "Exponent p > 1")->required();
  lc->add_option("--points", points, "Number of grid points on [0,1]");

  ProptestArgs prop;
  auto* pt = app.add_subcommand("proptest", "Run seeded property-test suites");
  pt->add_option("--seed", prop.seed, "Seed (GAUGENORM_SEED overrides)");
  pt->add_option("--trials", prop.trials, "Trials per invariant");
  pt->add_option("--suite", prop.suite, "Suite name")->check(CLI::IsMember(cli::suite_names()));
  pt->add_option("--witness-file", prop.witness_file, "Where to dump failing inputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*sn) return cmd_snumbers(matrix_file);
    if (*nm) return cmd_norm(norm_args);
    if (*dm) return cmd_dominance(s_file, t_file);
    if (*dc) return cmd_decompose(profile_file);
    if (*lc) return cmd_lpcheck(p, points);
    if (*pt) return cmd_proptest(prop);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const UnsupportedSpec& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUnsupported;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDimension;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kBadInput;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
