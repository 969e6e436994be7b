// One line per acceptance criterion. Each criterion runs its scaled suite
// and is held to the time limit below in addition to the suite's own checks.

#include "suites/suites.hpp"

#include <cstdio>
#include <exception>
#include <string>

namespace {

struct Criterion {
    int id;
    const char* title;
    const char* suite;
    double limit_s;
};

constexpr Criterion criteria[] = {
    {1, "sunflower oracle equivalence", "sunflower-oracle", 60},
    {2, "Erdos-Rado extraction, n=2, k=3", "erdos-rado", 60},
    {3, "linear-order golden table, duality, associativity", "lo-golden", 10},
    {4, "age property checks", "ages", 300},
    {5, "indivisibility witnesses and bootstrap", "indivisibility", 60},
    {6, "witness construction invariants", "witness", 600},
    {7, "encoding invariants", "encodings", 120},
    {8, "2-sunflower verification implies indivisibility", "composition", 600},
};

} // namespace

int main() {
    int failed = 0;
    for (const auto& c : criteria) {
        bool pass = false;
        std::string detail;
        double seconds = 0;
        try {
            const auto r = deltasys::suites::run_suite(c.suite);
            seconds = r.seconds;
            pass = r.pass() && r.seconds <= c.limit_s;
            for (const auto& a : r.assertions) {
                if (!a.pass) {
                    detail += "; failed: " + a.name + (a.detail.empty() ? "" : " (" + a.detail + ")");
                }
            }
            if (r.seconds > c.limit_s) {
                detail += "; over time limit";
            }
        } catch (const std::exception& e) {
            detail = std::string("; error: ") + e.what();
        }
        std::printf("[%s] criterion %d: %s (%.2f s, limit %.0f s)%s\n", pass ? "PASS" : "FAIL", c.id, c.title, seconds,
                    c.limit_s, detail.c_str());
        std::fflush(stdout);
        failed += pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", int(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
