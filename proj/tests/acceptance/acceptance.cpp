// Acceptance run: one line per criterion, exit status 0 iff every criterion passes.

#include "cacti/suites.hpp"

#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

using namespace cacti;

namespace {

struct Criterion {
    int id;
    std::string text;
    std::string suite;
    SuiteConfig config;
    // Selects the checks of the suite report that belong to this criterion.
    std::function<bool(const std::string&)> select;
};

bool any(const std::string&) { return true; }

bool starts(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

} // namespace

int main()
{
    const auto named = [](const std::string& s) { return starts(s, "act(") || starts(s, "cyclic brace"); };
    const auto operadicity = [](const std::string& s) { return starts(s, "operadicity"); };
    const auto chain_map = [](const std::string& s) { return starts(s, "chain map"); };

    SuiteConfig action_cfg;
    action_cfg.n = 2;
    action_cfg.max_degree = 1;

    std::vector<Criterion> criteria{
        {1, "boundary squares to zero, n <= 3, degree <= 4", "d2", {3, 4, "", 1, 0}, any},
        {2, "cell counts of K'(1) and K(2); Euler characteristic 0 for n = 1,2,3", "euler", {3, -1, "", 1, 0}, any},
        {3, "Betti numbers of K'(1), K'(2), K(2)", "homology", {2, -1, "", 1, 0}, any},
        {4, "Frobenius axioms and snake identity for dual, z2, z3, m2", "frobenius", {}, any},
        {5, "Hochschild d^2, Delta^2, Delta d + d Delta, cup Leibniz; 50 seeds, four algebras", "hochschild",
         {0, -1, "", 1, 50}, any},
        {6, "named actions t0, O', tau2, cyclic braces over dual and z2", "action", action_cfg, named},
        {7, "operadicity of the action, n <= 2, degree <= 1, arities <= 2", "action", action_cfg, operadicity},
        {8, "action is a chain map over the same range", "action", action_cfg, chain_map},
        {9, "BV identities on HH(dual), HH(z2) up to degree 3", "bv", {0, 3, "", 1, 0}, any},
        {10, "operad axioms on chains, exhaustive n <= 2, degree <= 1, plus 100 random", "operad", {2, 1, "", 1, 100}, any},
    };

    std::map<std::string, SuiteReport> cache;
    bool all = true;
    for (const auto& c : criteria) {
        const std::string key = c.suite + "/" + std::to_string(c.config.n) + "/" + std::to_string(c.config.max_degree);
        if (!cache.count(key)) cache[key] = run_suite(c.suite, c.config);
        const SuiteReport& r = cache[key];
        long cases = 0, failures = 0;
        std::string witness;
        for (const auto& chk : r.checks) {
            if (!c.select(chk.name)) continue;
            cases += chk.cases;
            failures += chk.failures;
            if (witness.empty() && !chk.witness.empty()) witness = chk.name + ": " + chk.witness;
        }
        const bool pass = failures == 0 && cases > 0;
        all = all && pass;
        std::printf("criterion %2d: %s  %s [%ld cases, %ld failures]\n", c.id, pass ? "PASS" : "FAIL", c.text.c_str(), cases,
                    failures);
        if (!witness.empty()) std::printf("              witness: %s\n", witness.c_str());
        std::fflush(stdout);
    }
    std::printf("%s\n", all ? "all criteria pass" : "some criteria FAIL");
    return all ? 0 : 1;
}
