#include "doctest.h"
#include "fixtures.hpp"
#include "siltlab/io.hpp"
#include "siltlab/silting.hpp"

#ifndef SILTLAB_FIXTURES
#define SILTLAB_FIXTURES "."
#endif

using namespace siltlab;

namespace {
const std::filesystem::path kFixtures{SILTLAB_FIXTURES};
}

TEST_CASE("load the shipped fixtures") {
    Loader loader;
    AlgebraPtr a = loader.algebra(kFixtures / "a2.json");
    CHECK(a->dimension() == 3);
    CHECK(a->field().name() == "Fp:101");

    Representation p = loader.representation(kFixtures / "p.json");
    Representation q = loader.representation(kFixtures / "q.json");
    CHECK(p.total_dim() == 1);
    CHECK(q.total_dim() == 2);
    CHECK(hom_dim(p, q) == 1);

    ChainComplex x = loader.complex(kFixtures / "xpq.json");
    CHECK(validate_complex(x));
    CHECK(x.lo() == -1);
    CHECK(x.hi() == 0);

    ChainComplex t = loader.complex(kFixtures / "xpq_plus_q.json");
    CHECK(is_silting(t).verdict == Verdict::True);

    BnAlgebra b2 = loader.bn(kFixtures / "b2.json");
    CHECK(b2.algebra->dimension() == 9);

    CHECK(loader.algebra(kFixtures / "dual_numbers.json")->dimension() == 2);
}

TEST_CASE("json round trips") {
    Loader loader;
    AlgebraPtr a = loader.algebra(kFixtures / "a2.json");
    json aj = algebra_to_json(*a);
    AlgebraPtr a2 = loader.algebra_from_json(aj, ".");
    CHECK(a2->same_presentation(*a));
    CHECK(a2->dimension() == a->dimension());

    Representation q = loader.representation(kFixtures / "q.json");
    json qj = representation_to_json(q, "a2.json");
    qj["algebra"] = aj;  // inline the algebra for a self-contained document
    Representation q2 = loader.representation_from_json(qj, ".");
    CHECK(q2.dims == q.dims);
    CHECK(q2.arrow_maps[0].equals(q.arrow_maps[0]));

    ChainComplex x = loader.complex(kFixtures / "xpq.json");
    json xj = complex_to_json(x, "a2.json");
    for (auto& [deg, term] : xj.at("terms").items()) term["algebra"] = aj;
    ChainComplex x2 = loader.complex_from_json(xj, kFixtures);
    CHECK(complex_equal(x2, x));
}

TEST_CASE("rationals round trip through coefficient strings") {
    Field q = Field::rationals();
    Quiver quiver({"v"}, {{"x", "v", "v"}});
    Relation r;
    r.terms.push_back({q.parse_scalar("2/3"), {"x", "x"}});
    AlgebraPtr a = build_algebra(q, quiver, {r}, 10);
    CHECK(a->dimension() == 2);
    Loader loader;
    json j = algebra_to_json(*a);
    CHECK(j["relations"][0][0]["coeff"] == "2/3");
    CHECK(loader.algebra_from_json(j, ".")->dimension() == 2);
}

TEST_CASE("io errors carry the IoError code") {
    Loader loader;
    CHECK_THROWS_AS(loader.algebra(kFixtures / "no_such_file.json"), SiltError);
    try {
        loader.algebra(kFixtures / "no_such_file.json");
    } catch (const SiltError& e) {
        CHECK(e.code() == ErrorCode::IoError);
    }
}
