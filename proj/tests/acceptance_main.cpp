// Acceptance gate: runs every suite and aggregates the records into the
// twelve top-level criteria, one pass/fail line each. Exit code is nonzero
// if any criterion fails.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "weyl/suites.hpp"

namespace {

struct Criterion {
  std::string id;
  std::string title;
  std::vector<std::string> checks;
  double max_runtime_ms = 0.0;  // 0 = no budget
};

}  // namespace

int main() {
  weyl::SuiteConfig config;
  config.suite = "all";
  config.seed = 20260810;
  const weyl::SuiteReport report = weyl::run_suite(config);

  std::map<std::string, const weyl::CheckRecord*> by_id;
  for (const auto& c : report.checks) by_id[c.id] = &c;

  const std::vector<Criterion> criteria = {
      {"C01", "twisted-product exactness (unitarity, involution, associativity, commutator)",
       {"weyl.unitarity", "weyl.involution", "weyl.associativity", "weyl.commutator",
        "weyl.cocycle"},
       5000.0},
      {"C02", "kernel positivity for the built-in states, indefinite witness",
       {"states.kernel_psd", "states.kernel_indefinite"},
       10000.0},
      {"C03", "constraint-state diagnostics (lattice, invariance, phase identity)",
       {"states.dirac_lattice", "states.dirac_invariance", "states.phase_identity"}},
      {"C04", "regularity dichotomy on the dyadic grid",
       {"states.regularity_fock", "states.regularity_dirac"}},
      {"C05", "finite-span GNS identities (residual, rank by classes)",
       {"gns.residual_identity", "gns.rank_classes"}},
      {"C06", "discretized position-space representation (N=1024, X=16)",
       {"grid.weyl_relation", "grid.fock_match", "grid.decay"}},
      {"C07", "quasifree family converges at the closed-form rate",
       {"states.quasifree_convergence"}},
      {"C08", "scaling negligibility of the Gaussian functionals", {"states.colombeau"}},
      {"C09", "atomic measure identities (duality, product lemma, split transforms)",
       {"measures.duality", "measures.product_lemma", "measures.identity21",
        "measures.identity23"},
       5000.0},
      {"C10", "finite-dimensional subspace transform witness", {"measures.bochner"}},
      {"C11", "Gaussian Monte Carlo functionals and moments",
       {"measures.mc_char", "measures.mc_moment"}},
      {"C12", "deformed torus representation and trace", {"torus.relation", "torus.trace"}},
  };

  bool all_pass = true;
  for (const auto& crit : criteria) {
    bool pass = true;
    double worst = 0.0, tol = 0.0, ms = 0.0;
    std::string failing;
    for (const auto& id : crit.checks) {
      const auto it = by_id.find(id);
      if (it == by_id.end()) {
        pass = false;
        failing += id + "(missing) ";
        continue;
      }
      const auto* rec = it->second;
      ms += rec->runtime_ms;
      if (!rec->pass) {
        pass = false;
        failing += id + " ";
      }
      // Report the member with the least margin, normalized by tolerance.
      if (tol == 0.0 || std::abs(rec->extremal) / rec->tolerance > worst / tol) {
        worst = rec->extremal;
        tol = rec->tolerance;
      }
    }
    if (crit.max_runtime_ms > 0.0 && ms > crit.max_runtime_ms) {
      pass = false;
      failing += "runtime ";
    }
    all_pass = all_pass && pass;
    std::printf("[%s] %s %s  extremal=%.3g tol=%.3g runtime=%.0fms%s%s\n",
                pass ? "PASS" : "FAIL", crit.id.c_str(), crit.title.c_str(), worst, tol, ms,
                failing.empty() ? "" : "  failed: ", failing.c_str());
  }
  std::printf("%s: %zu criteria\n", all_pass ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              criteria.size());
  return all_pass ? 0 : 1;
}
