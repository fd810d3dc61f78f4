// Acceptance runner: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is exact; the only numeric limits are wall-clock
// budgets on the two big suites.

#include <chrono>
#include <iostream>

#include "siltlab/suites.hpp"

using namespace siltlab;

namespace {

int failures = 0;

double run_timed(const std::function<SuiteResult()>& fn, SuiteResult& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int num, const std::string& label, const SuiteResult& r, double seconds,
            double limit_seconds = 0.0) {
    bool pass = r.pass();
    if (limit_seconds > 0.0 && seconds > limit_seconds) pass = false;
    std::printf("[%s] criterion %2d: %s (%.1fs%s)\n", pass ? "PASS" : "FAIL", num,
                label.c_str(), seconds,
                limit_seconds > 0.0
                    ? (", limit " + std::to_string(static_cast<int>(limit_seconds)) + "s")
                          .c_str()
                    : "");
    if (!r.pass())
        for (const auto& c : r.checks)
            if (!c.pass)
                std::printf("       failed: %s%s\n", c.name.c_str(),
                            c.detail.empty() ? "" : (" (" + c.detail + ")").c_str());
    if (!pass) ++failures;
}

}  // namespace

int main() {
    Field f = Field::fp(101);
    std::uint64_t seed = 0;
    SuiteResult r;
    double s;

    s = run_timed([&] { return suite_example_2_3(f); }, r);
    report(1, "morphism-category example: 11 objects, 4 projectives, 4 injectives", r, s, 5.0);

    s = run_timed([&] { return suite_lemma_2_2(f, seed, 100, 0); }, r);
    report(2, "homological embedding: 100 random ext/hom comparisons over 2 and 3 columns",
           r, s, 30.0);

    s = run_timed([&] { return suite_corollary_2_6(f); }, r);
    report(3, "global dimension of the column algebras (base + columns - 1)", r, s);

    s = run_timed([&] { return suite_lemma_2_2(f, seed, 0, 50); }, r);
    report(4, "column-position dimension formulas on 50 stripped random modules", r, s);

    s = run_timed([&] { return suite_theorem_2_9(f); }, r);
    report(5, "two-term enumeration (5 classes) and the tilting bijection round trip", r, s);

    s = run_timed([&] { return suite_example_2_8(f); }, r);
    report(6, "canonical tilting and cotilting modules for 2 and 3 columns", r, s);

    s = run_timed([&] { return suite_silting_sanity(f); }, r);
    report(7, "silting predicate sanity on the named fixtures", r, s);

    s = run_timed([&] { return suite_windows(f, seed); }, r);
    report(8, "windows of the enumerated classes and membership spot checks", r, s);

    s = run_timed([&] { return suite_duality(f, seed); }, r);
    report(9, "duality: cosilting duals and membership transport", r, s);

    s = run_timed([&] { return suite_cross_checks(f, seed); }, r);
    report(10, "cross-checks: resolution homs, cone identity, minimal models", r, s);

    if (failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
