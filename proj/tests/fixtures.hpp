#pragma once

#include "siltlab/decompose.hpp"
#include "siltlab/rep.hpp"
#include "siltlab/resolution.hpp"

namespace siltlab::fixtures {

// The running example: v-1 --a--> v0 over F_101.
inline AlgebraPtr a2(const Field& f = Field::fp(101)) {
    Quiver q({"v-1", "v0"}, {{"a", "v-1", "v0"}});
    return build_algebra(f, q, {}, 10);
}

// P = (0 -> K): the simple projective at v0.
inline Representation rep_p(const AlgebraPtr& a) {
    const Field& f = a->field();
    return make_representation(a, {0, 1}, {Matrix(1, 0, f)});
}

// Q = (K -1-> K): the projective at v-1 (also injective at v0).
inline Representation rep_q(const AlgebraPtr& a) {
    const Field& f = a->field();
    Matrix m(1, 1, f);
    m.set(0, 0, f.one());
    return make_representation(a, {1, 1}, {m});
}

// S = (K -> 0): the simple at v-1.
inline Representation rep_s(const AlgebraPtr& a) {
    const Field& f = a->field();
    return make_representation(a, {1, 0}, {Matrix(0, 1, f)});
}

// The inclusion P -> Q.
inline RepMorphism incl_p_q(const Representation& p, const Representation& q) {
    const Field& f = p.algebra->field();
    Matrix at_v0(1, 1, f);
    at_v0.set(0, 0, f.one());
    return RepMorphism{p, q, {Matrix(1, 0, f), at_v0}};
}

// k[x]/x^2: one vertex, one loop, x.x = 0.
inline AlgebraPtr dual_numbers(const Field& f = Field::fp(101)) {
    Quiver q({"v"}, {{"x", "v", "v"}});
    Relation r;
    r.terms.push_back({f.one(), {"x", "x"}});
    return build_algebra(f, q, {r}, 10);
}

// Semisimple point: one vertex, no arrows.
inline AlgebraPtr point(const Field& f = Field::fp(101)) {
    return build_algebra(f, Quiver({"v"}, {}), {}, 10);
}

// Commutative square with one commutativity relation (the bound quiver
// presentation of the n=2 column algebra over a2).
inline AlgebraPtr square(const Field& f = Field::fp(101)) {
    Quiver q({"nw", "ne", "sw", "se"},
             {{"top", "nw", "ne"}, {"left", "nw", "sw"}, {"right", "ne", "se"},
              {"bottom", "sw", "se"}});
    Relation r;
    r.terms.push_back({f.one(), {"top", "right"}});
    r.terms.push_back({f.neg(f.one()), {"left", "bottom"}});
    return build_algebra(f, q, {r}, 10);
}

}  // namespace siltlab::fixtures
