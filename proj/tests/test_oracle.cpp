// Independent oracles: exhaustive enumerations and dual-route checks that
// cross-validate the production algorithms on the desk fixtures.

#include "doctest.h"
#include "fixtures.hpp"
#include "siltlab/sampling.hpp"
#include "siltlab/silting.hpp"
#include "siltlab/tilting.hpp"

using namespace siltlab;
using namespace siltlab::fixtures;

namespace {

// Exhaustive enumeration of minimal two-term complexes over a2 with at most
// two indecomposable summands, stratified by the rank of the differential.
// Over a2 the only radical homs between projectives are P -> Q blocks, and
// the automorphism groups of both sides act by row/column operations, so the
// rank classifies the differential up to isomorphism.
std::vector<ChainComplex> oracle_two_term_complexes(const AlgebraPtr& a) {
    const Field& f = a->field();
    StandardModules mods = standard_modules(a);
    int vm = a->quiver().vertex_index("v-1");
    int v0 = a->quiver().vertex_index("v0");
    Representation bigq = mods.projectives[vm];   // dim (1,1)
    Representation smallp = mods.projectives[v0]; // dim (0,1)

    std::vector<ChainComplex> out;
    for (int a1 = 0; a1 <= 2; ++a1)          // copies of P in degree -1
        for (int b1 = 0; b1 <= 2; ++b1)      // copies of Q in degree -1
            for (int a0 = 0; a0 <= 2; ++a0)  // copies of P in degree 0
                for (int b0 = 0; b0 <= 2; ++b0) {
                    if (a1 + b1 + a0 + b0 == 0) continue;
                    std::vector<Representation> up, down;
                    for (int k = 0; k < a1; ++k) up.push_back(smallp);
                    for (int k = 0; k < b1; ++k) up.push_back(bigq);
                    for (int k = 0; k < a0; ++k) down.push_back(smallp);
                    for (int k = 0; k < b0; ++k) down.push_back(bigq);
                    int max_rank = std::min(a1, b0);  // only P -> Q is radical
                    for (int r = 0; r <= max_rank; ++r) {
                        std::map<int, Representation> terms;
                        std::map<int, RepMorphism> diffs;
                        Representation p1 =
                            up.empty() ? zero_representation(a) : direct_sum(up).sum;
                        Representation p0 =
                            down.empty() ? zero_representation(a) : direct_sum(down).sum;
                        if (!p1.is_zero()) terms.emplace(-1, p1);
                        if (!p0.is_zero()) terms.emplace(0, p0);
                        if (terms.empty()) continue;
                        if (r > 0 || (!p1.is_zero() && !p0.is_zero())) {
                            RepMorphism d = zero_morphism(p1, p0);
                            // the i-th P copy maps onto the radical of the
                            // i-th Q copy for i < r
                            for (int i = 0; i < r; ++i) {
                                // P copies occupy the first a1 slots at v0;
                                // Q copies sit after the P copies at degree 0
                                Matrix& m0 = d.vertex_maps[v0];
                                m0.set(a0 + i, i, f.one());
                            }
                            if (!is_zero(d)) diffs.emplace(-1, d);
                        }
                        ChainComplex c = make_complex(a, std::move(terms), std::move(diffs));
                        if (!validate_complex(c)) continue;
                        if (!has_radical_differentials(c)) continue;
                        if (decompose_complex(c).size() > 0 &&
                            c.total_dim() > 0) {
                            int summands = 0;
                            for (const auto& [part, mult] : decompose_complex(c))
                                summands += mult;
                            if (summands <= 2) out.push_back(std::move(c));
                        }
                    }
                }
    return out;
}

}  // namespace

TEST_CASE("oracle: exhaustive two-term enumeration over a2 finds 5 classes") {
    auto a = a2();
    std::vector<ChainComplex> all = oracle_two_term_complexes(a);
    // the K_0 rank argument: a silting complex over a2 needs exactly two
    // indecomposable summands, so the <= 2 restriction is exhaustive
    std::vector<ChainComplex> silting_classes;
    for (const ChainComplex& c : all) {
        if (is_silting(c).verdict != Verdict::True) continue;
        bool known = false;
        for (const ChainComplex& k : silting_classes)
            if (complexes_homotopy_equivalent(k, c)) known = true;
        if (!known) silting_classes.push_back(c);
    }
    CHECK(silting_classes.size() == 5);

    // the production enumerator agrees class by class
    std::vector<ChainComplex> produced = enumerate_two_term_silting(a);
    REQUIRE(produced.size() == silting_classes.size());
    for (const ChainComplex& c : silting_classes) {
        bool matched = false;
        for (const ChainComplex& p : produced)
            if (complexes_homotopy_equivalent(p, c)) matched = true;
        CHECK(matched);
    }
}

TEST_CASE("single summands never pass the generation check") {
    auto a = a2();
    for (const ChainComplex& c : oracle_two_term_complexes(a)) {
        int summands = 0;
        for (const auto& [part, mult] : decompose_complex(c)) summands += mult;
        if (summands == 1)
            CHECK(is_silting(c).verdict != Verdict::True);
    }
}

TEST_CASE("cotilting by definition vs the dual oracle") {
    auto a = a2();
    Representation p = rep_p(a), s = rep_s(a);
    // P (+) S has a self-extension (Ext^1(S, P) = 1), so both the direct
    // definition and the dual-route test must reject it
    CHECK(*ext_dim(s, p, 1) == 1);
    CHECK_FALSE(is_cotilting(direct_sum({p, s}).sum, 1).verdict);
}

TEST_CASE("decompose invariants on seeded random modules") {
    auto a = a2();
    auto sq = square();
    std::mt19937_64 rng(2024);
    for (int inst = 0; inst < 12; ++inst) {
        const AlgebraPtr& alg = inst % 2 ? a : sq;
        Representation m = random_module(alg, rng);
        auto parts = decompose(m);
        int total = 0;
        for (const auto& [rep, mult] : parts) {
            CHECK(is_indecomposable(rep));
            total += mult * rep.total_dim();
        }
        CHECK(total == m.total_dim());
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                CHECK_FALSE(indec_isomorphic(parts[i].first, parts[j].first));
    }
}

TEST_CASE("pd zero iff a sum of standard projectives") {
    auto a = a2();
    StandardModules mods = standard_modules(a);
    std::mt19937_64 rng(77);
    for (int inst = 0; inst < 12; ++inst) {
        Representation m = random_module(a, rng);
        bool proj_sum = true;
        for (const auto& [part, mult] : decompose(m)) {
            bool is_std = false;
            for (const Representation& p : mods.projectives)
                if (indec_isomorphic(part, p)) is_std = true;
            proj_sum = proj_sum && is_std;
        }
        CHECK((*pd(m, 10) == 0) == proj_sum);
    }
}

TEST_CASE("ext bidirectional oracle over the square algebra") {
    auto sq = square();
    AlgebraPtr op = opposite(sq);
    std::mt19937_64 rng(4242);
    for (int inst = 0; inst < 10; ++inst) {
        Representation m = random_module(sq, rng);
        Representation n = random_module(sq, rng);
        for (int j = 0; j <= 3; ++j)
            CHECK(*ext_dim(m, n, j) == *ext_dim(dualize(n, op), dualize(m, op), j));
    }
}
