#include "siltlab/suites.hpp"

#include "siltlab/sampling.hpp"

namespace siltlab {

namespace {

struct A2Fixture {
    AlgebraPtr a;
    Representation p, q, s;
    ChainComplex xpq;

    explicit A2Fixture(const Field& f) {
        Quiver quiver({"v-1", "v0"}, {{"a", "v-1", "v0"}});
        a = build_algebra(f, quiver, {}, 16);
        p = make_representation(a, {0, 1}, {Matrix(1, 0, f)});
        Matrix one(1, 1, f);
        one.set(0, 0, f.one());
        q = make_representation(a, {1, 1}, {one});
        s = make_representation(a, {1, 0}, {Matrix(0, 1, f)});
        RepMorphism incl{p, q, {Matrix(1, 0, f), one}};
        xpq = make_complex(a, {{-1, p}, {0, q}}, {{-1, incl}});
    }

    ChainComplex xpq_plus_q() const {
        return direct_sum_complex({xpq, stalk(q, 0)}).sum;
    }
};

AlgebraPtr point_algebra(const Field& f) { return build_algebra(f, Quiver({"v"}, {}), {}, 16); }

AlgebraPtr dual_numbers(const Field& f) {
    Quiver q({"v"}, {{"x", "v", "v"}});
    Relation r;
    r.terms.push_back({f.one(), {"x", "x"}});
    return build_algebra(f, q, {r}, 16);
}

// The eleven indecomposables of the two-column category over a2, paired
// with their expected projectivity/injectivity flags.
struct ExampleObject {
    std::string name;
    Representation module;
    bool projective;
    bool injective;
};

std::vector<ExampleObject> example_objects(const BnAlgebra& bn, const A2Fixture& fx) {
    const Field& f = fx.a->field();
    auto from_cols = [&](const Representation& x, const Representation& y,
                         const RepMorphism* d) {
        std::map<int, Representation> terms;
        if (!x.is_zero()) terms.emplace(-1, x);
        if (!y.is_zero()) terms.emplace(0, y);
        std::map<int, RepMorphism> diffs;
        if (d != nullptr) diffs.emplace(-1, *d);
        return theta_inv(bn, make_complex(fx.a, std::move(terms), std::move(diffs)));
    };
    Representation z = zero_representation(fx.a);
    RepMorphism incl{fx.p, fx.q, {Matrix(1, 0, f), Matrix::identity(1, f)}};
    RepMorphism pi{fx.q, fx.s, {Matrix::identity(1, f), Matrix(0, 1, f)}};
    RepMorphism idp = identity_morphism(fx.p), idq = identity_morphism(fx.q),
                ids = identity_morphism(fx.s);

    std::vector<ExampleObject> out;
    out.push_back({"(0->P)", from_cols(z, fx.p, nullptr), true, false});
    out.push_back({"(0->Q)", from_cols(z, fx.q, nullptr), true, false});
    out.push_back({"(0->S)", from_cols(z, fx.s, nullptr), false, false});
    out.push_back({"(P=P)", from_cols(fx.p, fx.p, &idp), true, false});
    out.push_back({"(Q=Q)", from_cols(fx.q, fx.q, &idq), true, true});
    out.push_back({"(S=S)", from_cols(fx.s, fx.s, &ids), false, true});
    out.push_back({"(P->Q)", from_cols(fx.p, fx.q, &incl), false, false});
    out.push_back({"(Q->S)", from_cols(fx.q, fx.s, &pi), false, false});
    out.push_back({"(P->0)", from_cols(fx.p, z, nullptr), false, false});
    out.push_back({"(Q->0)", from_cols(fx.q, z, nullptr), false, true});
    out.push_back({"(S->0)", from_cols(fx.s, z, nullptr), false, true});
    return out;
}

}  // namespace

SuiteResult suite_example_2_3(const Field& field) {
    SuiteResult out;
    out.suite = "example-2-3";
    A2Fixture fx(field);
    BnAlgebra b2 = build_Bn(fx.a, 2);
    std::vector<ExampleObject> objs = example_objects(b2, fx);

    bool all_valid = true, all_indec = true;
    for (const auto& o : objs) {
        all_valid = all_valid && validate_representation(o.module);
        all_indec = all_indec && is_indecomposable(o.module);
    }
    out.add("11 objects validate", all_valid);
    out.add("all indecomposable", all_indec);

    bool pairwise = true;
    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = i + 1; j < objs.size(); ++j)
            pairwise = pairwise && !indec_isomorphic(objs[i].module, objs[j].module);
    out.add("pairwise non-isomorphic", pairwise);

    int projectives = 0, injectives = 0;
    bool flags_ok = true;
    std::string bad;
    for (const auto& o : objs) {
        RepClassification c = classify(b2, o.module, 16);
        projectives += c.is_projective ? 1 : 0;
        injectives += c.is_injective ? 1 : 0;
        if (c.is_projective != o.projective || c.is_injective != o.injective) {
            flags_ok = false;
            bad += o.name + " ";
        }
    }
    out.add("exactly 4 projectives", projectives == 4, std::to_string(projectives));
    out.add("exactly 4 injectives", injectives == 4, std::to_string(injectives));
    out.add("classification matches the printed quiver", flags_ok, bad);
    return out;
}

SuiteResult suite_lemma_2_2(const Field& field, std::uint64_t seed, int transport_instances,
                            int formula_instances) {
    SuiteResult out;
    out.suite = "lemma-2-2";
    A2Fixture fx(field);

    int agree = 0, total = 0;
    for (int n : {2, 3}) {
        BnAlgebra bn = build_Bn(fx.a, n);
        int count = transport_instances / 2;
        for (int inst = 0; inst < count; ++inst) {
            std::mt19937_64 rng(mix_seed(seed, n * 1000 + inst));
            Representation m = random_column_module(bn, ColumnKind::Projective, rng,
                                                    n == 2 ? 2 : 1);
            Representation nn = random_module(bn.algebra, rng);
            for (int j = 1; j <= 4; ++j) {
                ExtTransportReport r = ext_transport(bn, m, nn, j);
                ++total;
                if (r.hypothesis_met && r.agree()) ++agree;
            }
        }
    }
    out.add("ext transport agrees on " + std::to_string(total) + " comparisons",
            agree == total, std::to_string(agree) + "/" + std::to_string(total));

    int pd_ok = 0, pd_total = 0, inj_ok = 0, inj_total = 0;
    for (int n : {2, 3}) {
        BnAlgebra bn = build_Bn(fx.a, n);
        AlgebraPtr op = opposite(bn.algebra);
        int count = formula_instances / 2;
        for (int inst = 0; inst < count; ++inst) {
            std::mt19937_64 rng(mix_seed(seed ^ 0xf0f0f0f0ULL, n * 1000 + inst));
            Representation m = random_column_module(bn, ColumnKind::Projective, rng,
                                                    n == 2 ? 2 : 1);
            std::vector<Representation> rest;
            for (const auto& [part, mult] : decompose(m))
                if (*pd(part, 16) > 0) rest.push_back(part);
            if (!rest.empty()) {
                Representation r = direct_sum(rest).sum;
                ++pd_total;
                if (*pd(r, 16) == -theta(bn, r).lo()) ++pd_ok;
            }
            Representation mi = random_column_module(bn, ColumnKind::Injective, rng,
                                                     n == 2 ? 2 : 1);
            std::vector<Representation> resti;
            for (const auto& [part, mult] : decompose(mi))
                if (*pd(dualize(part, op), 16) > 0) resti.push_back(part);
            if (!resti.empty()) {
                Representation r = direct_sum(resti).sum;
                ++inj_total;
                if (*pd(dualize(r, op), 16) == bn.n - 1 + theta(bn, r).hi()) ++inj_ok;
            }
        }
    }
    out.add("projective-column dimension formula", pd_ok == pd_total,
            std::to_string(pd_ok) + "/" + std::to_string(pd_total));
    out.add("injective-column dimension formula", inj_ok == inj_total,
            std::to_string(inj_ok) + "/" + std::to_string(inj_total));
    return out;
}

SuiteResult suite_corollary_2_6(const Field& field) {
    SuiteResult out;
    out.suite = "corollary-2-6";
    A2Fixture fx(field);
    AlgebraPtr pt = point_algebra(field);

    auto check = [&](const std::string& name, const AlgebraPtr& base, int n, int expected) {
        auto g = global_dimension(build_Bn(base, n).algebra, 16);
        out.add(name, g && *g == expected, g ? std::to_string(*g) : "ExceedsCap");
    };
    check("semisimple base, 2 columns -> 1", pt, 2, 1);
    check("semisimple base, 3 columns -> 2", pt, 3, 2);
    check("a2 base, 2 columns -> 2", fx.a, 2, 2);
    check("a2 base, 3 columns -> 3", fx.a, 3, 3);

    auto g = global_dimension(build_Bn(dual_numbers(field), 2).algebra, 16);
    out.add("dual numbers base, 2 columns -> cap exceeded", !g.has_value(),
            g ? std::to_string(*g) : "ExceedsCap");
    return out;
}

SuiteResult suite_theorem_2_9(const Field& field) {
    SuiteResult out;
    out.suite = "theorem-2-9";
    A2Fixture fx(field);
    BnAlgebra b2 = build_Bn(fx.a, 2);

    std::vector<ChainComplex> classes = enumerate_two_term_silting(fx.a);
    out.add("exactly 5 two-term silting classes", classes.size() == 5,
            std::to_string(classes.size()));

    bool tilt_ok = true, round_ok = true;
    std::vector<Representation> tilts;
    for (const ChainComplex& t : classes) {
        Representation tilt = silting_to_tilting(b2, t);
        tilt_ok = tilt_ok && is_tilting(tilt, 1).verdict && in_rep_p(b2, tilt);
        ChainComplex back = tilting_to_silting(b2, tilt);
        round_ok = round_ok && complexes_homotopy_equivalent(back, t);
        tilts.push_back(std::move(tilt));
    }
    out.add("each class maps to a 1-tilting module", tilt_ok);
    out.add("round trip recovers every class", round_ok);

    bool distinct = true;
    for (std::size_t i = 0; i < tilts.size(); ++i)
        for (std::size_t j = i + 1; j < tilts.size(); ++j)
            distinct = distinct && !are_isomorphic(tilts[i], tilts[j]);
    out.add("distinct classes give inequivalent tilting modules", distinct);
    return out;
}

SuiteResult suite_example_2_8(const Field& field) {
    SuiteResult out;
    out.suite = "example-2-8";
    A2Fixture fx(field);
    for (int n : {2, 3}) {
        BnAlgebra bn = build_Bn(fx.a, n);
        TiltingReport t = is_tilting(canonical_tilting(bn), n - 1);
        out.add("canonical tilting module, n = " + std::to_string(n), t.verdict, t.failure);
        TiltingReport c = is_cotilting(canonical_cotilting(bn), n - 1);
        out.add("canonical cotilting module, n = " + std::to_string(n), c.verdict, c.failure);
    }
    return out;
}

SuiteResult suite_windows(const Field& field, std::uint64_t seed) {
    SuiteResult out;
    out.suite = "windows";
    A2Fixture fx(field);
    std::vector<ChainComplex> classes = enumerate_two_term_silting(fx.a);
    out.add("5 enumerated classes", classes.size() == 5, std::to_string(classes.size()));

    bool contained = true, tight = true;
    for (const ChainComplex& t : classes) {
        auto [lo, hi] = intermediate_window(t);
        contained = contained && lo >= -1 && hi <= 0;
        if (lo < hi) tight = tight && (lo == -1 && hi == 0);
    }
    out.add("windows inside [-1, 0]", contained);
    out.add("both-degree classes have window (-1, 0)", tight);

    // membership spot checks: stalks placed at degree <= -1 are members,
    // the regular module placed at degree +1 is not
    bool members_ok = true, nonmember_ok = true;
    Representation reg = regular_module(fx.a);
    std::vector<Representation> testers{fx.p, fx.q, fx.s, reg};
    for (int i = 0; i < 4; ++i) {
        std::mt19937_64 rng(mix_seed(seed, i));
        testers.push_back(random_module(fx.a, rng));
    }
    for (const ChainComplex& t : classes) {
        for (const Representation& m : testers)
            for (int d : {-1, -2})
                members_ok = members_ok && silting_class_member(t, stalk(m, d)).member;
        nonmember_ok = nonmember_ok && !silting_class_member(t, stalk(reg, 1)).member;
    }
    out.add("stalks in degrees <= -1 are members", members_ok);
    out.add("the degree +1 regular stalk is a non-member", nonmember_ok);
    return out;
}

SuiteResult suite_silting_sanity(const Field& field) {
    SuiteResult out;
    out.suite = "silting-sanity";
    A2Fixture fx(field);
    ChainComplex areg = stalk(regular_module(fx.a), 0);

    out.add("regular stalk is presilting", is_presilting(areg));
    out.add("regular stalk plus its shift is not presilting",
            !is_presilting(direct_sum_complex({areg, shift(areg, 1)}).sum));

    SiltingResult r = is_silting(fx.xpq_plus_q());
    out.add("two-term fixture is silting", r.verdict == Verdict::True);
    out.add("certificate within 2 steps", r.certificate.steps <= 2,
            std::to_string(r.certificate.steps));

    bool never_true = true;
    for (int cap : {default_silting_step_cap(fx.xpq), 20})
        never_true = never_true && is_silting(fx.xpq, cap).verdict != Verdict::True;
    out.add("a lone two-term summand is never silting", never_true);
    return out;
}

SuiteResult suite_duality(const Field& field, std::uint64_t seed) {
    SuiteResult out;
    out.suite = "duality";
    A2Fixture fx(field);
    AlgebraPtr op = opposite(fx.a);
    std::vector<ChainComplex> classes = enumerate_two_term_silting(fx.a);
    out.add("5 enumerated classes", classes.size() == 5, std::to_string(classes.size()));

    bool dual_ok = true;
    for (const ChainComplex& t : classes)
        dual_ok =
            dual_ok && is_cosilting(dualize_complex(t, op)).verdict == Verdict::True;
    out.add("duals of all classes are cosilting", dual_ok);

    // membership transport on seeded pairs
    AlgebraPtr op2 = opposite(op);
    bool transport_ok = true;
    int pair_index = 0;
    for (const ChainComplex& t : classes) {
        ChainComplex c = dualize_complex(t, op);
        for (int k = 0; k < 4; ++k, ++pair_index) {
            std::mt19937_64 rng(mix_seed(seed, pair_index));
            ChainComplex v = random_perfect_complex(op, -1, 1, rng, 1);
            bool co = cosilting_class_member(c, v).member;
            bool si = silting_class_member(dualize_complex(c, op2), dualize_complex(v, op2))
                          .member;
            transport_ok = transport_ok && (co == si);
        }
    }
    out.add("cosilting membership matches the dual silting membership on " +
                std::to_string(pair_index) + " pairs",
            transport_ok);
    return out;
}

SuiteResult suite_cross_checks(const Field& field, std::uint64_t seed) {
    SuiteResult out;
    out.suite = "cross-checks";
    A2Fixture fx(field);
    BnAlgebra b2 = build_Bn(fx.a, 2);

    int prop_ok = 0, prop_total = 0;
    for (int inst = 0; inst < 25; ++inst) {
        std::mt19937_64 rng(mix_seed(seed, inst));
        for (const AlgebraPtr& alg : {fx.a, b2.algebra}) {
            Representation m = random_module(alg, rng);
            Representation nn = random_module(alg, rng);
            ChainComplex pm = resolution_complex(m, 16);
            for (int j = 0; j <= 3; ++j) {
                ++prop_total;
                if (graded_hom(pm, stalk(nn, 0), j).dim == *ext_dim(m, nn, j)) ++prop_ok;
            }
        }
    }
    out.add("resolution-complex Homs equal ext dimensions", prop_ok == prop_total,
            std::to_string(prop_ok) + "/" + std::to_string(prop_total));

    bool cone_ok = true;
    std::mt19937_64 rng(mix_seed(seed, 999));
    for (int inst = 0; inst < 20; ++inst) {
        ChainComplex x = random_perfect_complex(fx.a, -1, 1, rng);
        ChainComplex y = random_perfect_complex(fx.a, -1, 1, rng);
        ChainMap f = random_chain_map(x, y, rng);
        ChainComplex c = cone(f);
        long sum = 0;
        for (int i = -3; i <= 3; ++i) {
            int sgn = (i % 2 == 0) ? 1 : -1;
            sum += sgn * (cohomology(x, i).total_dim() - cohomology(y, i).total_dim() +
                          cohomology(c, i).total_dim());
        }
        cone_ok = cone_ok && sum == 0;
    }
    out.add("cone alternating-sum identity on 20 chain maps", cone_ok);

    bool minimal_ok = true;
    for (int inst = 0; inst < 8; ++inst) {
        ChainComplex x = random_perfect_complex(fx.a, -1, 0, rng);
        ChainComplex junk = cone(identity_chain_map(stalk(fx.q, 0)));
        ChainComplex fat = direct_sum_complex({x, junk}).sum;
        ChainComplex slim = minimal_model(fat);
        minimal_ok = minimal_ok && complex_equal(minimal_model(slim), slim);
        ChainComplex y = random_perfect_complex(fx.a, -1, 0, rng);
        for (int s = -1; s <= 2; ++s) {
            minimal_ok = minimal_ok && graded_hom(fat, y, s).dim == graded_hom(slim, y, s).dim;
            minimal_ok = minimal_ok && graded_hom(y, fat, s).dim == graded_hom(y, slim, s).dim;
        }
    }
    out.add("minimal models: idempotent, hom dimensions invariant", minimal_ok);
    return out;
}

}  // namespace siltlab
