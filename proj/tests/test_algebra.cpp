#include "doctest.h"
#include "fixtures.hpp"

using namespace siltlab;

TEST_CASE("field arithmetic is exact") {
    Field f101 = Field::fp(101);
    CHECK(f101.characteristic() == 101);
    Scalar a = f101.from_int(57), b = f101.from_int(99);
    CHECK(f101.eq(f101.mul(a, f101.inv(a)), f101.one()));
    CHECK(f101.eq(f101.add(a, b), f101.from_int(156 % 101)));

    Field q = Field::rationals();
    CHECK(q.characteristic() == 0);
    Scalar third = q.parse_scalar("1/3");
    CHECK(q.eq(q.mul(third, q.from_int(3)), q.one()));
    CHECK(q.to_string(q.div(q.from_int(2), q.from_int(-4))) == "-1/2");

    CHECK_THROWS_AS(Field::fp(100), SiltError);
    CHECK(Field::parse("Fp:101") == f101);
}

TEST_CASE("matrix rank, kernel, solve") {
    Field f = Field::fp(101);
    Matrix m(2, 3, f);
    // [1 2 3; 2 4 6] has rank 1
    int vals[2][3] = {{1, 2, 3}, {2, 4, 6}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) m.set(i, j, f.from_int(vals[i][j]));
    CHECK(m.rank() == 1);
    Matrix ker = m.kernel_basis();
    CHECK(ker.cols() == 2);
    CHECK(m.mul(ker).is_zero());

    Matrix id = Matrix::identity(3, f);
    CHECK(id.inverse()->equals(id));
    Matrix rhs = m.col(2);
    auto sol = m.solve(rhs);
    REQUIRE(sol);
    CHECK(m.mul(*sol).equals(rhs));
}

TEST_CASE("a2 path basis") {
    auto a = fixtures::a2();
    CHECK(a->dimension() == 3);
    AlgebraInfo info = a->info();
    CHECK(info.num_vertices == 2);
    CHECK(info.num_arrows == 1);
    int length_one = 0;
    for (const auto& e : info.basis)
        if (e.length == 1) ++length_one;
    CHECK(length_one == 1);
}

TEST_CASE("truncated polynomial ring and the free loop") {
    CHECK(fixtures::dual_numbers()->dimension() == 2);
    CHECK(fixtures::point()->dimension() == 1);

    Quiver loop({"v"}, {{"x", "v", "v"}});
    CHECK_THROWS_AS(build_algebra(Field::fp(101), loop, {}, 10), SiltError);
    // x^3 = 0 gives dimension 3
    Field f = Field::fp(101);
    Relation cube;
    cube.terms.push_back({f.one(), {"x", "x", "x"}});
    CHECK(build_algebra(f, loop, {cube}, 10)->dimension() == 3);
}

TEST_CASE("commutative square: dimension 9, one independent length-2 path") {
    auto sq = fixtures::square();
    CHECK(sq->dimension() == 9);
    AlgebraInfo info = sq->info();
    CHECK(info.num_vertices == 4);
    CHECK(info.num_arrows == 4);
    int length_two = 0;
    for (const auto& e : info.basis)
        if (e.length == 2) ++length_two;
    CHECK(length_two == 1);
}

TEST_CASE("malformed relations are rejected") {
    Field f = Field::fp(101);
    Quiver q({"u", "w"}, {{"a", "u", "w"}, {"b", "w", "u"}});
    Relation short_rel;
    short_rel.terms.push_back({f.one(), {"a"}});
    CHECK_THROWS_AS(build_algebra(f, q, {short_rel}, 10), SiltError);

    Relation non_parallel;
    non_parallel.terms.push_back({f.one(), {"a", "b"}});   // u -> u
    non_parallel.terms.push_back({f.one(), {"b", "a"}});   // w -> w
    CHECK_THROWS_AS(build_algebra(f, q, {non_parallel}, 10), SiltError);

    Relation non_composable;
    non_composable.terms.push_back({f.one(), {"a", "a"}});
    CHECK_THROWS_AS(build_algebra(f, q, {non_composable}, 10), SiltError);
}

TEST_CASE("multiplication table is associative and unital") {
    for (AlgebraPtr a : {fixtures::a2(), fixtures::square(), fixtures::dual_numbers(),
                         fixtures::a2(Field::rationals())}) {
        const Field& f = a->field();
        int n = a->dimension();
        auto mult = [&](const LinComb& x, int j) {
            LinComb out;
            for (const auto& [i, c] : x)
                for (const auto& [k, d] : a->multiply(i, j)) {
                    bool found = false;
                    for (auto& [ki, kc] : out)
                        if (ki == k) {
                            kc = f.add(kc, f.mul(c, d));
                            found = true;
                            break;
                        }
                    if (!found) out.emplace_back(k, f.mul(c, d));
                }
            return out;
        };
        auto norm = [&](LinComb x) {
            std::sort(x.begin(), x.end(),
                      [](const auto& l, const auto& r) { return l.first < r.first; });
            LinComb out;
            for (auto& [i, c] : x)
                if (!f.is_zero(c)) out.emplace_back(i, c);
            return out;
        };
        auto eq = [&](const LinComb& x, const LinComb& y) {
            LinComb nx = norm(x), ny = norm(y);
            if (nx.size() != ny.size()) return false;
            for (std::size_t t = 0; t < nx.size(); ++t)
                if (nx[t].first != ny[t].first || !f.eq(nx[t].second, ny[t].second))
                    return false;
            return true;
        };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    LinComb left = mult(a->multiply(i, j), k);
                    LinComb right;
                    for (const auto& [m, c] : a->multiply(j, k)) {
                        for (const auto& [x, d] : a->multiply(i, m)) {
                            right.emplace_back(x, f.mul(c, d));
                        }
                    }
                    CHECK(eq(left, right));
                }
        for (int i = 0; i < n; ++i) {
            const BasisPath& b = a->basis_path(i);
            LinComb self{{i, f.one()}};
            CHECK(eq(a->multiply(a->trivial_path(b.target), i), self));
            CHECK(eq(a->multiply(i, a->trivial_path(b.source)), self));
        }
    }
}

TEST_CASE("opposite preserves dimension and is an involution") {
    for (AlgebraPtr a : {fixtures::a2(), fixtures::square(), fixtures::dual_numbers()}) {
        AlgebraPtr op = opposite(a);
        CHECK(op->dimension() == a->dimension());
        AlgebraPtr opop = opposite(op);
        CHECK(opop->same_presentation(*a));
    }
    // opposite(A2): the arrow now runs v0 -> v-1
    AlgebraPtr op = opposite(fixtures::a2());
    CHECK(op->quiver().arrow(0).source == op->quiver().vertex_index("v0"));
}
