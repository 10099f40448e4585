#include "proptest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "gaugenorm/dominance.hpp"
#include "gaugenorm/duality.hpp"
#include "gaugenorm/extreme2.hpp"
#include "gaugenorm/generators.hpp"
#include "gaugenorm/json_io.hpp"
#include "gaugenorm/norms.hpp"

namespace gaugenorm::cli {

namespace {

using nlohmann::json;
namespace gj = gaugenorm::json;

// Tally for one invariant inside a suite.
struct Tally {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double worst = 0.0;

  json to_json() const {
    return {{"invariant", name}, {"trials", trials}, {"failures", failures}, {"worst_excess", worst}};
  }
};

class Suite {
public:
  Suite(std::string name, ProptestResult& out) : name_(std::move(name)), out_(out) {}

  // Records one sample of `name`; `excess` > 0 means the invariant failed.
  void record(const std::string& name, double excess, const std::function<json()>& witness) {
    record_batch(name, 1, excess > 0.0 ? 1 : 0, excess, witness);
  }

  // Records `trials` samples at once, `failures` of which failed; `worst` is
  // the largest excess among them.
  void record_batch(const std::string& name, std::size_t trials, std::size_t failures, double worst,
                    const std::function<json()>& witness) {
    auto it = std::find_if(tallies_.begin(), tallies_.end(), [&](const Tally& t) { return t.name == name; });
    if (it == tallies_.end()) {
      tallies_.push_back({name});
      it = std::prev(tallies_.end());
    }
    it->trials += trials;
    it->worst = std::max(it->worst, worst);
    if (failures > 0) {
      if (it->failures == 0)
        out_.witnesses.push_back({{"suite", name_}, {"invariant", name}, {"excess", worst}, {"input", witness()}});
      it->failures += failures;
    }
  }

  json finish() const {
    json inv = json::array();
    bool ok = true;
    for (const auto& t : tallies_) {
      inv.push_back(t.to_json());
      ok = ok && t.failures == 0;
    }
    return {{"suite", name_}, {"passed", ok}, {"invariants", inv}};
  }

private:
  std::string name_;
  ProptestResult& out_;
  std::vector<Tally> tallies_;
};

json vec_json(const std::vector<double>& x) { return x; }

std::size_t dim(Rng& rng, std::int64_t hi) { return static_cast<std::size_t>(rng.integer(1, hi)); }

json run_axioms(const ProptestOptions& o, ProptestResult& out) {
  Rng rng(o.seed);
  Suite suite("axioms", out);
  const auto specs = gen::battery(rng, 4);
  AxiomOptions opts;
  opts.trials = o.trials;
  opts.seed = o.seed;
  opts.negate_triangle = o.negate_triangle;
  for (const auto& spec : specs) {
    const auto report = check_norm_axioms(spec, opts);
    for (const auto& c : report.checks)
      suite.record_batch(c.name, c.trials, c.passed ? 0 : 1, std::max(c.worst_excess, 0.0),
                         [&] { return json{{"spec", gj::to_json(spec)}, {"witness", c.witness}}; });
  }
  return suite.finish();
}

json run_duality(const ProptestOptions& o, ProptestResult& out) {
  Rng rng(o.seed ^ 0x6475616c);
  Suite suite("duality", out);
  for (std::size_t trial = 0; trial < o.trials; ++trial) {
    const auto n = dim(rng, 6);
    const auto x = gen::vector(rng, n), y = gen::vector(rng, n);
    const auto specs = gen::polyhedral_battery(rng, n);
    const auto& spec = specs[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(specs.size()) - 1))];
    auto input = [&] { return json{{"spec", gj::to_json(spec)}, {"x", vec_json(x)}, {"y", vec_json(y)}}; };

    const auto inv = involution_check(spec, x);
    suite.record("involution", std::fabs(inv.primal - inv.double_dual) - 1e-8 * (1.0 + inv.primal), input);

    double tau = 0;
    for (std::size_t i = 0; i < n; ++i) tau += x[i] * y[i];
    tau = std::fabs(tau) / static_cast<double>(n);
    const double bound = norm_vec(spec, std::span<const double>(x)) * dual_vec(spec, std::span<const double>(y)).value;
    suite.record("pairing_bound", tau - bound - 1e-8, input);

    const std::vector<double> ones(n, 1.0);
    if (std::fabs(norm_vec(spec, std::span<const double>(ones)) - 1.0) <= 1e-12)
      suite.record("normalized_dual", std::fabs(dual_vec(spec, std::span<const double>(ones)).value - 1.0) - 1e-8, input);
  }
  return suite.finish();
}

json run_dominance(const ProptestOptions& o, ProptestResult& out) {
  Rng rng(o.seed ^ 0x646f6d);
  Suite suite("dominance", out);
  for (std::size_t trial = 0; trial < o.trials; ++trial) {
    const auto n = dim(rng, 6);
    const auto [t, s] = gen::majorization_pair(rng, n);
    auto input = [&] { return json{{"T", gj::to_json(t)}, {"S", gj::to_json(s)}}; };
    const auto verdict = kyfan_dominates(t, s);
    suite.record("generated_pair_dominated", verdict.dominates ? 0.0 : 1.0, input);
    if (!verdict.dominates) continue;
    const auto specs = gen::battery(rng, n);
    for (const auto& spec : specs) {
      const double excess = norm_mat(spec, s) - norm_mat(spec, t) - kDominanceConclusionTol;
      suite.record("transfer", excess, [&] {
        auto j = input();
        j["spec"] = gj::to_json(spec);
        return j;
      });
    }
  }
  return suite.finish();
}

json run_extreme2(const ProptestOptions& o, ProptestResult& out) {
  Rng rng(o.seed ^ 0x6532);
  Suite suite("extreme2", out);
  for (std::size_t trial = 0; trial < o.trials; ++trial) {
    const auto p = gen::admissible_profile(rng);
    const auto back = reconstruct(decompose(p));
    suite.record("round_trip", max_profile_difference(p, back) - 1e-10, [&] { return gj::to_json(p); });

    const auto specs = gen::battery(rng, 2);
    const auto& spec = specs[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(specs.size()) - 1))];
    const auto a = admissibility(profile_of(spec));
    suite.record("profile_admissible", a.admissible() ? 0.0 : 1.0, [&] { return gj::to_json(spec); });
  }
  const double t = Rng(o.seed).uniform(0.5, 1.0);
  const auto ext = not_convex_combination(t, o.trials, o.seed);
  suite.record("extremality", ext.violations > 0 ? static_cast<double>(ext.violations) : 0.0,
               [&] { return json{{"t", t}, {"violations", ext.violations}}; });
  return suite.finish();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"axioms", "duality", "dominance", "extreme2", "all"};
  return names;
}

ProptestResult run_proptest(const ProptestOptions& o) {
  ProptestResult out;
  json suites = json::array();
  const bool all = o.suite == "all";
  if (all || o.suite == "axioms") suites.push_back(run_axioms(o, out));
  if (all || o.suite == "duality") suites.push_back(run_duality(o, out));
  if (all || o.suite == "dominance") suites.push_back(run_dominance(o, out));
  if (all || o.suite == "extreme2") suites.push_back(run_extreme2(o, out));
  out.report = {{"seed", o.seed}, {"trials", o.trials}, {"suite", o.suite}, {"passed", out.passed()}, {"suites", suites}};
  return out;
}

}  // namespace gaugenorm::cli
