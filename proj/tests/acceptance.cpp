// Acceptance report: one PASS/FAIL line per criterion.

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gsp4/cli.hpp"
#include "gsp4/io.hpp"
#include "gsp4/suites.hpp"

#ifndef GSP4_DATA_DIR
#define GSP4_DATA_DIR "data"
#endif

namespace {

struct Timed {
    gsp4::SuiteResult result;
    double seconds;
};

struct Criterion {
    int number;
    std::string title;
    std::string suite;
    std::vector<std::string> checks;
    double limit_seconds;
};

}  // namespace

int main() {
    std::map<std::string, Timed> suites;
    for (const auto& name : gsp4::suite_names()) {
        auto start = std::chrono::steady_clock::now();
        gsp4::SuiteResult r = gsp4::run_suite(name);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        suites.emplace(name, Timed{r, secs});
    }

    const std::vector<Criterion> criteria = {
        {1, "C' = C for 0 <= k' <= k <= 12", "constants", {"C' = C for 91 weight pairs"}, 10},
        {2, "projection matrix, 81 entries", "ktypes", {"projection matrix entries", "projection matrix matches reference"}, 1},
        {3, "standard bases and lowering relations", "ktypes",
         {"9-space = tau(3,-1) + tau(2,0) + tau(1,1)", "standard basis w_4..w_0 (exact)",
          "standard basis x_2..x_0 (one common scalar), y_0", "lowering relations LOWER v_s = (d - s + 1) v_{s-1}"},
         5},
        {4, "Pochhammer identity and sub-identities", "constants",
         {"Pochhammer binomial identity", "simplification chain keeps the value (k + k' <= 8)",
          "alternating sum of the a_r is 4/3", "sum of (i+1)_4 for i <= m is (m+1)_5 / 5 (m <= 30)"},
         5},
        {5, "constant assembly", "constants",
         {"main constant assembly and pi exponent (k <= 8)", "3^3 5 cancels in the main constant (k <= 8)"}, 10},
        {6, "Siegel volume and zeta values", "constants",
         {"Siegel volume 2 xi(2) xi(4) = pi^3/270",
          "zeta(2)/pi^2 = 1/6, zeta(4)/pi^4 = 1/90, numerator of zeta(12)/pi^12 = 691"},
         10},
        {7, "lattice duality", "lattice",
         {"dual index = p-part of discriminant (50 per prime)", "split/project duality on conforming instances"}, 30},
        {8, "691 congruence", "modforms", {"tau(n) = sigma_11(n) mod 691 for n <= 200"}, 10},
        {9, "pairing coefficient (d <= 12)", "ktypes", {"pairing coefficient vs RAISE^i LOWER^i (d <= 12)"}, 5},
        {10, "Weyl construction", "lie", {"Weyl construction dimensions", "contractions annihilate Weyl modules"}, 5},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const Timed& t = suites.at(c.suite);
        bool ok = t.seconds <= c.limit_seconds;
        std::string detail;
        for (const auto& name : c.checks) {
            bool found = false;
            for (const auto& r : t.result.checks)
                if (r.name == name) {
                    found = true;
                    ok = ok && r.ok();
                    detail += " [" + name + ": " + std::to_string(r.passed) + "/" + std::to_string(r.total) + "]";
                }
            if (!found) {
                ok = false;
                detail += " [" + name + ": missing]";
            }
        }
        double secs = t.seconds;
        if (c.number == 8) {
            std::string delta = std::string(GSP4_DATA_DIR) + "/delta.json";
            std::string e12 = std::string(GSP4_DATA_DIR) + "/e12.json";
            const char* argv[] = {"gsp4tool", "congruence", delta.c_str(), e12.c_str(), "--bound", "100", "--format", "json"};
            std::ostringstream out, err;
            auto start = std::chrono::steady_clock::now();
            int rc = gsp4::run_cli(8, argv, out, err);
            secs += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            bool primes = false;
            gsp4::Json report = rc == 0 ? gsp4::Json::parse(out.str()) : gsp4::Json::object();
            if (report.contains("results"))
                for (const auto& entry : report["results"])
                    if (entry["name"] == "congruence primes") primes = entry["value"] == gsp4::Json::parse("[691]");
            ok = ok && primes && secs <= c.limit_seconds;
            detail += std::string(" [shipped Delta/E12 scan: ") + (primes ? "[691]" : "unexpected: " + err.str()) + "]";
        }
        all = all && ok;
        std::cout << "criterion " << c.number << " " << c.title << ": " << (ok ? "PASS" : "FAIL") << " ("
                  << secs << " s)" << detail << "\n";
    }
    std::cout << (all ? "all criteria PASS" : "some criteria FAIL") << "\n";
    return all ? 0 : 1;
}
