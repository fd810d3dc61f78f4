#pragma once

#include <cstdint>

#include "siltlab/bridge.hpp"

namespace siltlab {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckLine> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(const std::string& name, bool ok, const std::string& detail = "") {
        checks.push_back({name, ok, detail});
    }
};

/// The morphism-category example: the eleven indecomposables over the
/// two-column algebra, with their projective/injective classification.
SuiteResult suite_example_2_3(const Field& field);

/// Homological-embedding comparison: seeded random instances over the two-
/// and three-column algebras satisfying the hypothesis, degrees 1..4, both
/// engines must agree exactly; plus the column-position dimension formulas
/// on summand-stripped random instances.
SuiteResult suite_lemma_2_2(const Field& field, std::uint64_t seed, int transport_instances = 100,
                            int formula_instances = 50);

/// Global dimension of the column algebras: base + columns - 1 on the
/// finite fixtures, cap overflow on the infinite one.
SuiteResult suite_corollary_2_6(const Field& field);

/// Two-term enumeration and the silting <-> tilting bijection round trip.
SuiteResult suite_theorem_2_9(const Field& field);

/// The canonical tilting and cotilting modules for 2 and 3 columns.
SuiteResult suite_example_2_8(const Field& field);

/// Windows of the enumerated two-term silting complexes and membership
/// spot checks around them.
SuiteResult suite_windows(const Field& field, std::uint64_t seed);

/// Silting predicate sanity on the named fixtures (acceptance criterion 7).
SuiteResult suite_silting_sanity(const Field& field);

/// Duality: enumerated silting classes dualize to cosilting complexes, and
/// class membership transports (acceptance criterion 9).
SuiteResult suite_duality(const Field& field, std::uint64_t seed);

/// Numerical cross-checks: resolution-complex Homs vs ext dimensions, the
/// cone alternating-sum identity, minimal-model idempotence and hom-table
/// invariance (acceptance criterion 10).
SuiteResult suite_cross_checks(const Field& field, std::uint64_t seed);

}  // namespace siltlab
