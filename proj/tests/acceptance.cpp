/* Acceptance suite: every release criterion, one pass/fail line each.
 * All checks are exact (zero residual); there are no tolerances to tune.
 * Exit code 0 iff every criterion passes. */

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cherednik/verifier.hpp"

using namespace cherednik;

namespace {

struct Criterion {
    int number;
    std::string description;
    std::function<bool(std::string&)> run;
};

bool suite_passes(AlgebraId alg, const std::string& suite, int nmax, Mode mode,
                  std::uint64_t seed, int trials, std::string& detail) {
    CheckConfig cfg;
    cfg.algebra = alg;
    cfg.suites = {suite};
    cfg.nmax = nmax;
    cfg.mode = mode;
    cfg.seed = seed;
    cfg.trials = trials;
    const auto reports = run_suite(cfg);
    for (const auto& r : reports) {
        if (!r.advisory && !r.pass) {
            detail += std::string(" [") + r.id + " @ " +
                      (r.witness ? r.witness->input : "?") + "]";
            return false;
        }
    }
    return true;
}

bool check_ids_pass(AlgebraId alg, const std::string& suite, int nmax,
                    const std::string& id_fragment, std::string& detail) {
    CheckConfig cfg;
    cfg.algebra = alg;
    cfg.suites = {suite};
    cfg.nmax = nmax;
    const auto reports = run_suite(cfg);
    bool found = false;
    for (const auto& r : reports) {
        if (r.id.find(id_fragment) == std::string::npos) continue;
        found = true;
        if (!r.pass) {
            detail += " [" + r.id + "]";
            return false;
        }
    }
    if (!found) detail += " [no check matching '" + id_fragment + "']";
    return found;
}

} // namespace

int main() {
    const std::vector<AlgebraId> all_algebras = {AlgebraId::V, AlgebraId::III, AlgebraId::III_D7,
                                                 AlgebraId::III_D8};
    std::vector<Criterion> criteria;

    criteria.push_back({1, "defining relations of all four algebras on z^k, |k| <= 10, symbolic",
                        [&](std::string& d) {
                            bool ok = true;
                            for (auto alg : all_algebras)
                                ok &= suite_passes(alg, "relations", 10, Mode::Symbolic, 0, 1, d);
                            return ok;
                        }});

    criteria.push_back(
        {2, "ZY/YZ, ordering and reorder relations for v and iii on z^k, |k| <= 8, symbolic",
         [&](std::string& d) {
             return suite_passes(AlgebraId::V, "bz", 8, Mode::Symbolic, 0, 1, d) &
                    suite_passes(AlgebraId::III, "bz", 8, Mode::Symbolic, 0, 1, d);
         }});

    criteria.push_back(
        {3, "Y/Z eigen-equations for v and iii, n <= 10 symbolic and n <= 25 random (3 seeds)",
         [&](std::string& d) {
             bool ok = true;
             for (auto alg : {AlgebraId::V, AlgebraId::III}) {
                 ok &= suite_passes(alg, "eigen", 10, Mode::Symbolic, 0, 1, d);
                 for (std::uint64_t seed : {1, 2, 3})
                     ok &= suite_passes(alg, "eigen", 25, Mode::Specialized, seed, 1, d);
             }
             return ok;
         }});

    criteria.push_back({4, "T1 action on E_{+-j} (v, iii; j <= 10) and T0/T1 ladder (d7, d8; j <= 12)",
                        [&](std::string& d) {
                            bool ok = true;
                            for (auto alg : {AlgebraId::V, AlgebraId::III})
                                ok &= suite_passes(alg, "actions", 10, Mode::Symbolic, 0, 1, d);
                            for (auto alg : {AlgebraId::III_D7, AlgebraId::III_D8})
                                ok &= suite_passes(alg, "actions", 12, Mode::Symbolic, 0, 1, d);
                            return ok;
                        }});

    criteria.push_back({5, "all six iterated ladder formulas, j, l <= 8, k in {-2, 0, 3}",
                        [&](std::string& d) {
                            return suite_passes(AlgebraId::III_D7, "iterated", 8, Mode::Symbolic,
                                                0, 1, d) &
                                   suite_passes(AlgebraId::III_D8, "iterated", 8, Mode::Symbolic,
                                                0, 1, d);
                        }});

    criteria.push_back({6, "extreme-term tables of all four families, n <= 12",
                        [&](std::string& d) {
                            bool ok = true;
                            for (auto alg : all_algebras)
                                ok &= suite_passes(alg, "leading", 12, Mode::Symbolic, 0, 1, d);
                            return ok;
                        }});

    criteria.push_back({7, "denominator-cleared forward-shift identity, n <= 12",
                        [&](std::string& d) {
                            return suite_passes(AlgebraId::V, "forward-shift", 12, Mode::Symbolic,
                                                0, 1, d);
                        }});

    criteria.push_back({8, "degeneration chain c->0, b->0, a->0, symmetric and non-symmetric, n <= 12",
                        [&](std::string& d) {
                            return suite_passes(AlgebraId::V, "degenerations", 12, Mode::Symbolic,
                                                0, 1, d);
                        }});

    criteria.push_back({9, "eta-twisted generators satisfy the image relations on z^k, |k| <= 8",
                        [&](std::string& d) {
                            return suite_passes(AlgebraId::III, "eta", 8, Mode::Symbolic, 0, 1, d);
                        }});

    criteria.push_back({10, "closed form of Y agrees with T1 T0 on z^k, |k| <= 8",
                        [&](std::string& d) {
                            return check_ids_pass(AlgebraId::V, "eigen", 8,
                                                  "explicit-y-vs-composition", d);
                        }});

    criteria.push_back(
        {11, "dagger coefficients have integer q-powers and the E-basis is unitriangular, n <= 12",
         [&](std::string& d) {
             bool ok = true;
             for (auto alg : all_algebras) {
                 ok &= check_ids_pass(alg, "leading", 12, "dagger-integral-powers", d);
                 ok &= check_ids_pass(alg, "leading", 12, "triangular", d);
             }
             return ok;
         }});

    criteria.push_back(
        {12, "every deliberately perturbed relation fails with a nonzero witness",
         [&](std::string& d) {
             bool ok = true;
             const auto symbolic = mutation_controls(Mode::Symbolic);
             ok &= symbolic.size() >= 5;
             for (const auto& r : symbolic) {
                 if (r.pass || !r.witness || r.witness->residual.is_zero()) {
                     d += " [" + r.id + " did not fail with a witness]";
                     ok = false;
                 }
             }
             for (const auto& r : mutation_controls(Mode::Specialized, 7, 3)) {
                 if (r.pass || !r.witness || r.witness->residual.is_zero()) {
                     d += " [" + r.id + " did not fail at any sampled point]";
                     ok = false;
                 }
             }
             return ok;
         }});

    criteria.push_back(
        {13, "identical configurations produce byte-identical report JSON",
         [&](std::string& d) {
             CheckConfig c1;
             c1.algebra = AlgebraId::V;
             c1.suites = {"relations"};
             c1.nmax = 4;
             CheckConfig c2;
             c2.algebra = AlgebraId::III;
             c2.suites = {"eigen"};
             c2.nmax = 3;
             c2.mode = Mode::Specialized;
             c2.seed = 11;
             c2.trials = 2;
             for (const auto& cfg : {c1, c2}) {
                 const std::string r1 = report_json(cfg, run_suite(cfg));
                 const std::string r2 = report_json(cfg, run_suite(cfg));
                 if (r1 != r2) {
                     d += " [reports differ]";
                     return false;
                 }
             }
             return true;
         }});

    int failures = 0;
    for (auto& c : criteria) {
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail += std::string(" [exception: ") + e.what() + "]";
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  criterion %2d (%5.1fs): %s%s\n", ok ? "PASS" : "FAIL", c.number, secs,
                    c.description.c_str(), detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
    return 1;
}
