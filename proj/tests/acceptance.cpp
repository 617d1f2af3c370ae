// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Each criterion pins its tolerance and sampling plan in code.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ellu2/campaign.hpp"

#ifndef ELLU2_CLI_PATH
#define ELLU2_CLI_PATH "ellu2"
#endif

namespace {

using ellu2::CampaignConfig;
using ellu2::CheckResult;
using ellu2::Report;
using ellu2::run_campaign;

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int criterion, const std::string& what, bool pass, double residual, double tol,
            double secs, double budget) {
    bool ok = pass && secs < budget;
    if (!ok) ++failures;
    std::printf("%s  criterion %2d: %s (max residual %.3e, tol %.1e, %.2fs of %gs)\n",
                ok ? "PASS" : "FAIL", criterion, what.c_str(), residual, tol, secs, budget);
}

const CheckResult& find(const Report& rep, const std::string& id) {
    for (const auto& c : rep.checks)
        if (c.id == id) return c;
    std::fprintf(stderr, "missing check %s\n", id.c_str());
    std::exit(2);
}

// residual over a named subset of checks, each at its pinned tolerance
struct Agg {
    double residual = 0.0;
    bool pass = true;
    void add(const CheckResult& c, double tol) {
        residual = std::max(residual, c.max_residual);
        pass = pass && c.max_residual < tol;
    }
};

nlohmann::json stripped(const std::string& path) {
    std::ifstream in(path);
    nlohmann::json j = nlohmann::json::parse(in);
    for (auto& c : j["checks"]) c.erase("wall_ms");
    return j;
}

} // namespace

int main() {
    const std::vector<std::pair<double, double>> pq_sets = {{0.1, 0.5}, {0.3, 0.4}, {0.5, 0.7}};

    // 1. theta inversion and quasi-periodicity, 200 points per (p,q) set
    {
        Timer t;
        Agg agg;
        for (auto [p, q] : pq_sets) {
            CampaignConfig cfg{.p = p, .q = q, .seed = 2026};
            Report rep = run_campaign(cfg, {"theta-inversion", "theta-quasiperiodicity"});
            agg.add(find(rep, "theta-inversion"), 1e-12);
            agg.add(find(rep, "theta-quasiperiodicity"), 1e-12);
        }
        report(1, "theta inversion + quasi-periodicity over three (p,q) sets", agg.pass,
               agg.residual, 1e-12, t.seconds(), 1.0);
    }

    // 2. addition formula, 100 4-tuples per (p,q) set
    {
        Timer t;
        Agg agg;
        for (auto [p, q] : pq_sets) {
            CampaignConfig cfg{.p = p, .q = q, .seed = 2027};
            Report rep = run_campaign(cfg, {"theta-addition"});
            agg.add(find(rep, "theta-addition"), 1e-11);
        }
        report(2, "four-term theta addition formula", agg.pass, agg.residual, 1e-11, t.seconds(),
               1.0);
    }

    // 3. Yang-Baxter: elliptic at 50 random (lambda, z1, z2, z3), rational at 50 lambda
    {
        Timer t;
        CampaignConfig cfg{.seed = 2028};
        Report rep = run_campaign(cfg, {"qdybe-elliptic", "qdybe-rational"});
        const auto& ell = find(rep, "qdybe-elliptic");
        const auto& rat = find(rep, "qdybe-rational");
        bool pass = ell.max_residual < 1e-10 && rat.max_residual < 1e-12;
        report(3, "dynamical Yang-Baxter equation, elliptic and rational", pass,
               std::max(ell.max_residual, rat.max_residual), 1e-10, t.seconds(), 2.0);
    }

    // 4. flagship: closed form = convolution oracle = representation oracle,
    //    every admissible index with M, N <= 3, 10 dynamical samples each;
    //    off the weight shell all three vanish
    {
        Timer t;
        CampaignConfig cfg{.seed = 2029, .max_mn = 3};
        Report rep = run_campaign(cfg, {"matrix-pairing-flagship", "matrix-pairing-mismatch"});
        const auto& flag = find(rep, "matrix-pairing-flagship");
        const auto& mis = find(rep, "matrix-pairing-mismatch");
        bool pass = flag.max_residual < 1e-8 && mis.max_residual < 1e-12;
        report(4, "closed form = convolution oracle = representation oracle, M,N <= 3", pass,
               flag.max_residual, 1e-8, t.seconds(), 60.0);
    }

    // 5. generator/matrix-element consistency at N = 1 and at the corners k <= 4
    {
        Timer t;
        CampaignConfig cfg{.seed = 2030};
        Report rep = run_campaign(cfg, {"gen-pairing-n1", "gen-pairing-corners"});
        Agg agg;
        agg.add(find(rep, "gen-pairing-n1"), 1e-12);
        agg.add(find(rep, "gen-pairing-corners"), 1e-12);
        report(5, "generator pairing table at N = 1; corner shifts up to k = 4", agg.pass,
               agg.residual, 1e-12, t.seconds(), 5.0);
    }

    // 6. determinant pairings from the convolution engine + counit identity
    {
        Timer t;
        CampaignConfig cfg{.seed = 2031};
        Report rep = run_campaign(cfg, {"det-pairing"});
        Agg agg;
        agg.add(find(rep, "det-pairing-convolution"), 1e-10);
        agg.add(find(rep, "det-pairing-counit"), 1e-10);
        report(6, "determinant pairings via convolution; <X, det det^{-1}> = counit", agg.pass,
               agg.residual, 1e-10, t.seconds(), 5.0);
    }

    // 7. weak action identity over all 16 generator pairs, N <= 2, 5 samples
    {
        Timer t;
        CampaignConfig cfg{.seed = 2032};
        Report rep = run_campaign(cfg, {"action-weak"});
        const auto& c = find(rep, "action-weak");
        report(7, "weak action identity on all generator pairs", c.max_residual < 1e-10,
               c.max_residual, 1e-10, t.seconds(), 10.0);
    }

    // 8. antipode compatibility on all generator pairs
    {
        Timer t;
        CampaignConfig cfg{.seed = 2033};
        Report rep = run_campaign(cfg, {"antipode"});
        const auto& c = find(rep, "antipode-compat");
        report(8, "antipode compatibility of the pairing", c.max_residual < 1e-10,
               c.max_residual, 1e-10, t.seconds(), 10.0);
    }

    // 9. star compatibility at real lambda and unimodular spectral points
    {
        Timer t;
        CampaignConfig cfg{.seed = 2034};
        Report rep = run_campaign(cfg, {"star"});
        const auto& c = find(rep, "star-compat");
        report(9, "star compatibility of the pairing", c.max_residual < 1e-10, c.max_residual,
               1e-10, t.seconds(), 10.0);
    }

    // 10. singular vectors vanish to machine zero for N <= 4; v_{N/2} is
    //     spherical for N in {2, 4}
    {
        Timer t;
        CampaignConfig cfg{.seed = 2035};
        Report rep = run_campaign(cfg, {"singular"});
        const auto& sing = find(rep, "singular-vectors");
        const auto& sph = find(rep, "spherical-vectors");
        bool pass = sing.max_residual < 1e-13 && sph.max_residual < 0.5;
        report(10, "beta kills v_N and gamma kills v_0; v_{N/2} spherical", pass,
               sing.max_residual, 1e-13, t.seconds(), 5.0);
    }

    // 11. balancing condition of the closed-form series parameters across the
    //     flagship sampling
    {
        Timer t;
        CampaignConfig cfg{.seed = 2036, .max_mn = 3};
        Report rep = run_campaign(cfg, {"matrix-pairing-balance"});
        const auto& c = find(rep, "matrix-pairing-balance");
        report(11, "12V11 balancing condition at all flagship points", c.max_residual < 1e-10,
               c.max_residual, 1e-10, t.seconds(), 30.0);
    }

    // 12. the full command-line campaign finishes quickly and is
    //     deterministic for a fixed seed
    {
        Timer t;
        std::string cli = ELLU2_CLI_PATH;
        std::string out1 = "acc_report_1.json", out2 = "acc_report_2.json";
        std::string cmd1 = cli + " verify all --seed 11 --json " + out1 + " > /dev/null";
        std::string cmd2 = cli + " verify all --seed 11 --json " + out2 + " > /dev/null";
        int rc1 = std::system(cmd1.c_str());
        int rc2 = std::system(cmd2.c_str());
        bool pass = rc1 == 0 && rc2 == 0;
        if (pass) pass = stripped(out1) == stripped(out2);
        report(12, "verify all is deterministic per seed and fast", pass, pass ? 0.0 : 1.0, 0.5,
               t.seconds(), 120.0);
    }

    if (failures == 0) {
        std::printf("acceptance: all criteria pass\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
