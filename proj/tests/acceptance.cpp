// Acceptance run: one line per criterion with its verdict and wall time.
// A criterion passes only when every trial passes and the time limit holds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "osdrazin/campaign.hpp"
#include "osdrazin/ring_lab.hpp"

using namespace osdrazin;

namespace {

struct Tally {
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::vector<std::string> details;

    void add(const CampaignResult& r, const std::string& label)
    {
        trials += r.reports.size();
        const auto failed = r.aggregate["failed"].get<std::size_t>();
        failures += failed;
        if (r.budget_exceeded) ++failures;
        if (failed || r.budget_exceeded) details.push_back(label + ": " + std::to_string(failed) + " failed");
    }

    void campaign(const std::string& id, std::size_t trials, std::size_t dim, std::size_t dim_max,
                  const std::string& family = "", const std::string& scalar = "rational", std::uint64_t seed = 2024)
    {
        CampaignConfig c;
        c.theorem = id;
        c.trials = trials;
        c.dim = dim;
        c.dim_max = dim_max;
        c.family = family;
        c.scalar = scalar;
        c.seed = seed;
        add(run_campaign(c), id + (family.empty() ? "" : "/" + family));
    }
};

bool criterion(int number, const char* title, double limit, const std::function<void(Tally&)>& body)
{
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(t);
    } catch (const std::exception& e) {
        ++t.failures;
        t.details.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = t.failures == 0 && secs < limit;
    std::printf("criterion %d: %s  %-44s trials=%zu failures=%zu time=%.2fs limit=%.0fs\n", number, ok ? "PASS" : "FAIL",
                title, t.trials, t.failures, secs, limit);
    for (const auto& d : t.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    return ok;
}

} // namespace

int main()
{
    bool all = true;

    all &= criterion(1, "Azumaya realization, exhaustive audit", 10, [](Tally& t) {
        const struct {
            std::size_t k;
            std::int64_t m;
            long long elements;
        } rings[] = {{2, 2, 16}, {2, 3, 81}, {1, 6, 6}};
        for (const auto& r : rings) {
            const auto rep = theorem_2_7_audit(FiniteRingSpec(r.k, r.m));
            ++t.trials;
            const bool ok = rep.passed() && rep.indices.at("elements") == r.elements;
            if (!ok) {
                ++t.failures;
                t.details.push_back(rep.instance_id + " failed");
            }
        }
    });

    const char* quad_families[] = {"classical", "case-II", "solved"};

    all &= criterion(2, "Drazin transfer with index preservation", 60, [&](Tally& t) {
        for (const char* fam : quad_families) {
            t.campaign("thm-3.5-left", 1000, 2, 4, fam);
            t.campaign("thm-3.5-right", 1000, 2, 4, fam);
        }
    });

    all &= criterion(3, "generalized Drazin transfers", 60, [&](Tally& t) {
        for (const char* fam : quad_families) {
            t.campaign("thm-3.6-left", 1000, 2, 4, fam);
            t.campaign("thm-3.6-right", 1000, 2, 4, fam);
        }
        for (const char* fam : {"idempotent", "planted"}) {
            t.campaign("thm-4.5-left", 1000, 2, 4, fam);
            t.campaign("thm-4.5-right", 1000, 2, 4, fam);
        }
    });

    all &= criterion(4, "intertwined pair transfers", 60, [](Tally& t) {
        for (const char* id : {"thm-4.0-left", "thm-4.0-right", "thm-4.1-left", "thm-4.1-right", "thm-4.2-left",
                               "thm-4.2-right", "thm-4.3-left", "thm-4.3-right"}) {
            t.campaign(id, 1, 2, 0, "exhaustive-ring", "mod:2");
            t.campaign(id, 500, 2, 4, "mixed");
        }
    });

    all &= criterion(5, "partial Cline formula", 30, [](Tally& t) {
        t.campaign("prop-cline-left", 500, 2, 5);
        t.campaign("prop-cline-right", 500, 2, 5);
    });

    all &= criterion(6, "spectral identities", 60, [](Tally& t) {
        t.campaign("cor-3.11", 1000, 4, 0, "random");
        t.campaign("cor-3.11", 500, 4, 0, "planted-jordan");
        t.campaign("cor-3.10", 500, 2, 4);
        t.campaign("cor-4.7", 300, 2, 4);
    });

    all &= criterion(7, "binomial identities, n = 1..4", 30, [](Tally& t) {
        CampaignConfig c;
        c.theorem = "thm-3.3-binomial";
        c.trials = 200;
        c.dim = 2;
        c.dim_max = 4;
        c.seed = 2024;
        const auto r = run_campaign(c);
        t.add(r, c.theorem);
        std::size_t sym = 0, sym_fail = 0;
        for (const auto& [name, pf] : r.aggregate["checks"].items())
            if (name.rfind("quad-aca-", 0) == 0) {
                sym += pf["pass"].get<std::size_t>();
                sym_fail += pf["fail"].get<std::size_t>();
            }
        // the two orderings of the identity pair are the same equation
        t.details.push_back("a c_n a = d b_n a: " + std::to_string(sym) + " hold, " + std::to_string(sym_fail) +
                            " fail (both orderings read the same)");
    });

    all &= criterion(8, "Drazin index minimality", 30, [](Tally& t) { t.campaign("def-1.2-minimality", 1000, 1, 5); });

    std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}
