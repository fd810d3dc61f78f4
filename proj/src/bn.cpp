#include "siltlab/bn.hpp"

#include "siltlab/resolution.hpp"

namespace siltlab {

namespace {

std::string column_name(const std::string& base, int j) {
    return base + "@" + std::to_string(j);
}

}  // namespace

int BnAlgebra::vertex(int base_vertex, int column) const {
    int nv = base->quiver().num_vertices();
    return (column - column_lo()) * nv + base_vertex;
}

int BnAlgebra::vertical_arrow(int base_arrow, int column) const {
    int na = base->quiver().num_arrows();
    return (column - column_lo()) * na + base_arrow;
}

int BnAlgebra::horizontal_arrow(int base_vertex, int column) const {
    int nv = base->quiver().num_vertices();
    int na = base->quiver().num_arrows();
    return n * na + (column - column_lo()) * nv + base_vertex;
}

BnAlgebra build_Bn(const AlgebraPtr& base, int n) {
    if (n < 1) throw SiltError(ErrorCode::InvalidArgument, "column count must be positive");
    const Quiver& q = base->quiver();
    const Field& f = base->field();

    std::vector<std::string> vertices;
    for (int j = -n + 1; j <= 0; ++j)
        for (int v = 0; v < q.num_vertices(); ++v)
            vertices.push_back(column_name(q.vertex_name(v), j));

    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    for (int j = -n + 1; j <= 0; ++j)
        for (int a = 0; a < q.num_arrows(); ++a)
            arrows.emplace_back(column_name(q.arrow(a).name, j),
                                column_name(q.vertex_name(q.arrow(a).source), j),
                                column_name(q.vertex_name(q.arrow(a).target), j));
    for (int j = -n + 1; j <= -1; ++j)
        for (int v = 0; v < q.num_vertices(); ++v)
            arrows.emplace_back(column_name(q.vertex_name(v) + ">", j),
                                column_name(q.vertex_name(v), j),
                                column_name(q.vertex_name(v), j + 1));

    std::vector<Relation> relations;
    // column copies of the base relations
    for (const Relation& rel : base->relations())
        for (int j = -n + 1; j <= 0; ++j) {
            Relation r;
            for (const auto& term : rel.terms) {
                Relation::Term t;
                t.coeff = term.coeff;
                for (const auto& name : term.path) t.path.push_back(column_name(name, j));
                r.terms.push_back(std::move(t));
            }
            relations.push_back(std::move(r));
        }
    // commutativity of every (vertical x horizontal) square
    for (int j = -n + 1; j <= -1; ++j)
        for (int a = 0; a < q.num_arrows(); ++a) {
            const auto& arr = q.arrow(a);
            Relation r;
            r.terms.push_back({f.one(),
                               {column_name(arr.name, j),
                                column_name(q.vertex_name(arr.target) + ">", j)}});
            r.terms.push_back({f.neg(f.one()),
                               {column_name(q.vertex_name(arr.source) + ">", j),
                                column_name(arr.name, j + 1)}});
            relations.push_back(std::move(r));
        }
    // consecutive horizontal arrows compose to zero
    for (int j = -n + 1; j <= -2; ++j)
        for (int v = 0; v < q.num_vertices(); ++v) {
            Relation r;
            r.terms.push_back({f.one(),
                               {column_name(q.vertex_name(v) + ">", j),
                                column_name(q.vertex_name(v) + ">", j + 1)}});
            relations.push_back(std::move(r));
        }

    BnAlgebra bn;
    bn.base = base;
    bn.n = n;
    bn.algebra = build_algebra(f, Quiver(std::move(vertices), std::move(arrows)), relations,
                               base->length_cap() + n);
    return bn;
}

ChainComplex theta(const BnAlgebra& bn, const Representation& m) {
    const Quiver& q = bn.base->quiver();
    const Field& f = bn.base->field();
    std::map<int, Representation> terms;
    for (int j = bn.column_lo(); j <= 0; ++j) {
        std::vector<int> dims;
        std::vector<Matrix> maps;
        for (int v = 0; v < q.num_vertices(); ++v) dims.push_back(m.dims[bn.vertex(v, j)]);
        for (int a = 0; a < q.num_arrows(); ++a)
            maps.push_back(m.arrow_maps[bn.vertical_arrow(a, j)]);
        Representation t{bn.base, std::move(dims), std::move(maps)};
        if (!t.is_zero()) terms.emplace(j, std::move(t));
    }
    std::map<int, RepMorphism> diffs;
    for (int j = bn.column_lo(); j <= -1; ++j) {
        if (!terms.count(j) || !terms.count(j + 1)) continue;
        std::vector<Matrix> vmaps;
        for (int v = 0; v < q.num_vertices(); ++v)
            vmaps.push_back(m.arrow_maps[bn.horizontal_arrow(v, j)]);
        diffs.emplace(j, RepMorphism{terms.at(j), terms.at(j + 1), std::move(vmaps)});
    }
    (void)f;
    ChainComplex x;
    x.algebra = bn.base;
    x.terms = std::move(terms);
    x.differentials = std::move(diffs);
    return x;
}

ChainMap theta(const BnAlgebra& bn, const RepMorphism& f) {
    ChainComplex src = theta(bn, f.source);
    ChainComplex tgt = theta(bn, f.target);
    ChainMap out{src, tgt, 0, {}};
    const Quiver& q = bn.base->quiver();
    for (int j = bn.column_lo(); j <= 0; ++j) {
        if (!src.has_term(j) || !tgt.has_term(j)) continue;
        std::vector<Matrix> vmaps;
        for (int v = 0; v < q.num_vertices(); ++v)
            vmaps.push_back(f.vertex_maps[bn.vertex(v, j)]);
        RepMorphism comp{src.terms.at(j), tgt.terms.at(j), std::move(vmaps)};
        if (!is_zero(comp)) out.components.emplace(j, std::move(comp));
    }
    return out;
}

Representation theta_inv(const BnAlgebra& bn, const ChainComplex& x) {
    if (!x.is_zero() && (x.lo() < bn.column_lo() || x.hi() > 0))
        throw SiltError(ErrorCode::SupportOutOfRange,
                        "complex support exceeds the column window [" +
                            std::to_string(bn.column_lo()) + ", 0]");
    const Quiver& q = bn.base->quiver();
    const Field& f = bn.base->field();
    int nv_total = bn.algebra->quiver().num_vertices();
    std::vector<int> dims(nv_total, 0);
    for (int j = bn.column_lo(); j <= 0; ++j) {
        Representation t = x.term_at(j);
        for (int v = 0; v < q.num_vertices(); ++v) dims[bn.vertex(v, j)] = t.dims[v];
    }
    std::vector<Matrix> maps(bn.algebra->quiver().num_arrows(), Matrix(0, 0, f));
    for (int j = bn.column_lo(); j <= 0; ++j) {
        Representation t = x.term_at(j);
        for (int a = 0; a < q.num_arrows(); ++a)
            maps[bn.vertical_arrow(a, j)] = t.arrow_maps[a];
    }
    for (int j = bn.column_lo(); j <= -1; ++j) {
        RepMorphism d = x.differential_at(j);
        for (int v = 0; v < q.num_vertices(); ++v)
            maps[bn.horizontal_arrow(v, j)] = d.vertex_maps[v];
    }
    return make_representation(bn.algebra, std::move(dims), std::move(maps));
}

RepMorphism theta_inv(const BnAlgebra& bn, const ChainMap& f) {
    if (f.shift != 0)
        throw SiltError(ErrorCode::InvalidArgument, "theta_inv of a shifted chain map");
    Representation src = theta_inv(bn, f.source);
    Representation tgt = theta_inv(bn, f.target);
    const Quiver& q = bn.base->quiver();
    std::vector<Matrix> vmaps(bn.algebra->quiver().num_vertices(),
                              Matrix(0, 0, bn.base->field()));
    for (int j = bn.column_lo(); j <= 0; ++j) {
        RepMorphism comp = f.component_at(j);
        for (int v = 0; v < q.num_vertices(); ++v)
            vmaps[bn.vertex(v, j)] = comp.vertex_maps[v];
    }
    return RepMorphism{std::move(src), std::move(tgt), std::move(vmaps)};
}

Representation make_special(const BnAlgebra& bn, const Representation& x, int j,
                            SpecialFlavor flavor) {
    if (j < bn.column_lo() || j > 0)
        throw SiltError(ErrorCode::IndexOutOfRange,
                        "column index " + std::to_string(j) + " outside [" +
                            std::to_string(bn.column_lo()) + ", 0]");
    int lo = (flavor == SpecialFlavor::Lower) ? j : j - 1;
    if (flavor == SpecialFlavor::Lower && j == 0) return theta_inv(bn, stalk(x, 0));
    if (flavor == SpecialFlavor::Upper && j == bn.column_lo())
        return theta_inv(bn, stalk(x, j));
    std::map<int, Representation> terms{{lo, x}, {lo + 1, x}};
    std::map<int, RepMorphism> diffs{{lo, identity_morphism(x)}};
    ChainComplex c = make_complex(bn.base, std::move(terms), std::move(diffs));
    return theta_inv(bn, c);
}

Representation canonical_tilting(const BnAlgebra& bn) {
    Representation reg = regular_module(bn.base);
    std::vector<Representation> parts;
    for (int j = bn.column_lo(); j <= 0; ++j)
        parts.push_back(make_special(bn, reg, j, SpecialFlavor::Upper));
    return direct_sum(parts).sum;
}

Representation canonical_cotilting(const BnAlgebra& bn) {
    Representation cog = injective_cogenerator(bn.base);
    std::vector<Representation> parts;
    for (int j = bn.column_lo(); j <= 0; ++j)
        parts.push_back(make_special(bn, cog, j, SpecialFlavor::Lower));
    return direct_sum(parts).sum;
}

bool in_rep_p(const BnAlgebra& bn, const Representation& m) {
    ChainComplex x = theta(bn, m);
    return projective_terms(x);
}

bool in_rep_i(const BnAlgebra& bn, const Representation& m) {
    ChainComplex x = theta(bn, m);
    return injective_terms(x, opposite(bn.base));
}

}  // namespace siltlab
