#include "siltlab/complex.hpp"

#include "siltlab/resolution.hpp"

namespace siltlab {

Representation ChainComplex::term_at(int i) const {
    auto it = terms.find(i);
    return it != terms.end() ? it->second : zero_representation(algebra);
}

RepMorphism ChainComplex::differential_at(int i) const {
    auto it = differentials.find(i);
    if (it != differentials.end()) return it->second;
    return zero_morphism(term_at(i), term_at(i + 1));
}

int ChainComplex::total_dim() const {
    int d = 0;
    for (const auto& [i, t] : terms) d += t.total_dim();
    return d;
}

ChainComplex make_complex(AlgebraPtr algebra, std::map<int, Representation> terms,
                          std::map<int, RepMorphism> differentials) {
    ChainComplex x;
    x.algebra = std::move(algebra);
    for (auto& [i, t] : terms) {
        if (t.is_zero()) continue;
        if (t.algebra != x.algebra && !t.algebra->same_presentation(*x.algebra))
            throw SiltError(ErrorCode::AlgebraMismatch, "complex term over a different algebra");
        x.terms.emplace(i, std::move(t));
    }
    for (auto& [i, d] : differentials) {
        if (!x.has_term(i) || !x.has_term(i + 1)) continue;
        if (d.source.dims != x.terms.at(i).dims || d.target.dims != x.terms.at(i + 1).dims)
            throw SiltError(ErrorCode::ShapeMismatch,
                            "differential at degree " + std::to_string(i) +
                                " does not match the adjacent terms");
        if (!morphism_valid(d))
            throw SiltError(ErrorCode::NotChainMap,
                            "differential at degree " + std::to_string(i) +
                                " is not a module morphism");
        if (is_zero(d)) continue;
        x.differentials.emplace(i, std::move(d));
    }
    return x;
}

bool validate_complex(const ChainComplex& x) {
    for (const auto& [i, d] : x.differentials) {
        if (!x.differentials.count(i + 1)) continue;
        if (!is_zero(compose(x.differentials.at(i + 1), d))) return false;
    }
    return true;
}

ChainComplex stalk(const Representation& m, int degree) {
    ChainComplex x;
    x.algebra = m.algebra;
    if (!m.is_zero()) x.terms.emplace(degree, m);
    return x;
}

ChainComplex shift(const ChainComplex& x, int k) {
    ChainComplex y;
    y.algebra = x.algebra;
    const Field& f = x.algebra->field();
    for (const auto& [i, t] : x.terms) y.terms.emplace(i - k, t);
    for (const auto& [i, d] : x.differentials) {
        RepMorphism nd = (k % 2 == 0) ? d : scale(d, f.neg(f.one()));
        y.differentials.emplace(i - k, std::move(nd));
    }
    return y;
}

RepMorphism ChainMap::component_at(int i) const {
    auto it = components.find(i);
    if (it != components.end()) return it->second;
    return zero_morphism(source.term_at(i), target.term_at(i + shift));
}

bool chain_map_valid(const ChainMap& f) {
    const Field& F = f.source.algebra->field();
    for (const auto& [i, c] : f.components)
        if (!morphism_valid(c)) return false;
    int lo = std::min(f.source.lo(), f.target.lo() - f.shift) - 1;
    int hi = std::max(f.source.hi(), f.target.hi() - f.shift) + 1;
    Scalar sign = (f.shift % 2 == 0) ? F.one() : F.neg(F.one());
    for (int i = lo; i <= hi; ++i) {
        // d_Y^{i+s} f^i = (-1)^s f^{i+1} d_X^i
        RepMorphism lhs = compose(f.target.differential_at(i + f.shift), f.component_at(i));
        RepMorphism rhs =
            scale(compose(f.component_at(i + 1), f.source.differential_at(i)), sign);
        for (std::size_t v = 0; v < lhs.vertex_maps.size(); ++v)
            if (!lhs.vertex_maps[v].equals(rhs.vertex_maps[v])) return false;
    }
    return true;
}

ChainMap zero_chain_map(const ChainComplex& x, const ChainComplex& y, int shift) {
    return ChainMap{x, y, shift, {}};
}

ChainMap identity_chain_map(const ChainComplex& x) {
    ChainMap f{x, x, 0, {}};
    for (const auto& [i, t] : x.terms) f.components.emplace(i, identity_morphism(t));
    return f;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    ChainMap out{f.source, g.target, f.shift + g.shift, {}};
    for (const auto& [i, c] : f.components) {
        if (!g.target.has_term(i + out.shift)) continue;
        RepMorphism comp = compose(g.component_at(i + f.shift), c);
        if (!is_zero(comp)) out.components.emplace(i, std::move(comp));
    }
    return out;
}

ChainMap add(const ChainMap& f, const ChainMap& g) {
    ChainMap out{f.source, f.target, f.shift, {}};
    for (const auto& [i, t] : f.source.terms) {
        if (!f.target.has_term(i + f.shift)) continue;
        RepMorphism sum = add(f.component_at(i), g.component_at(i));
        if (!is_zero(sum)) out.components.emplace(i, std::move(sum));
    }
    return out;
}

ChainMap scale(const ChainMap& f, const Scalar& c) {
    ChainMap out{f.source, f.target, f.shift, {}};
    for (const auto& [i, comp] : f.components) out.components.emplace(i, scale(comp, c));
    return out;
}

bool is_zero(const ChainMap& f) {
    for (const auto& [i, c] : f.components)
        if (!is_zero(c)) return false;
    return true;
}

ChainComplex cone(const ChainMap& f) {
    if (f.shift != 0 || !chain_map_valid(f))
        throw SiltError(ErrorCode::NotChainMap, "cone requires a valid shift-0 chain map");
    const ChainComplex& x = f.source;
    const ChainComplex& y = f.target;
    const Field& F = x.algebra->field();

    std::map<int, Representation> terms;
    std::map<int, DirectSum> sums;
    int lo = std::min(x.lo() - 1, y.lo()) - 1;
    int hi = std::max(x.hi() - 1, y.hi()) + 1;
    for (int i = lo; i <= hi; ++i) {
        Representation xt = x.term_at(i + 1);
        Representation yt = y.term_at(i);
        if (xt.is_zero() && yt.is_zero()) continue;
        DirectSum ds = direct_sum({xt, yt});
        terms.emplace(i, ds.sum);
        sums.emplace(i, std::move(ds));
    }
    std::map<int, RepMorphism> diffs;
    for (int i = lo; i <= hi; ++i) {
        if (!terms.count(i) || !terms.count(i + 1)) continue;
        const DirectSum& src = sums.at(i);
        const DirectSum& tgt = sums.at(i + 1);
        RepMorphism dx = scale(x.differential_at(i + 1), F.neg(F.one()));
        RepMorphism d =
            add(compose(tgt.inclusions[0], compose(dx, src.projections[0])),
                add(compose(tgt.inclusions[1], compose(f.component_at(i + 1), src.projections[0])),
                    compose(tgt.inclusions[1], compose(y.differential_at(i), src.projections[1]))));
        if (!is_zero(d)) diffs.emplace(i, std::move(d));
    }
    ChainComplex c;
    c.algebra = x.algebra;
    c.terms = std::move(terms);
    c.differentials = std::move(diffs);
    return c;
}

Representation cohomology(const ChainComplex& x, int i) {
    Representation t = x.term_at(i);
    if (t.is_zero()) return t;
    RepMorphism out = x.differential_at(i);
    SubQuotient z = kernel(out);  // cycles
    RepMorphism in = x.differential_at(i - 1);
    // express boundaries inside the cycle coordinates
    std::vector<Matrix> boundary_in_z;
    for (std::size_t v = 0; v < z.rep.dims.size(); ++v) {
        Matrix img = in.vertex_maps[v].column_space_basis();
        auto sol = z.map.vertex_maps[v].solve(img);
        if (!sol)
            throw SiltError(ErrorCode::InvalidArgument,
                            "cohomology of an invalid complex (d.d != 0)");
        boundary_in_z.push_back(std::move(*sol));
    }
    return quotient(z.rep, boundary_in_z).rep;
}

std::map<int, int> cohomology_dims(const ChainComplex& x) {
    std::map<int, int> out;
    if (x.is_zero()) return out;
    for (int i = x.lo(); i <= x.hi(); ++i) {
        int d = cohomology(x, i).total_dim();
        if (d) out[i] = d;
    }
    return out;
}

bool is_acyclic(const ChainComplex& x) { return cohomology_dims(x).empty(); }

ComplexDirectSum direct_sum_complex(const std::vector<ChainComplex>& parts) {
    if (parts.empty())
        throw SiltError(ErrorCode::InvalidArgument, "direct_sum_complex of nothing");
    AlgebraPtr alg = parts.front().algebra;
    ComplexDirectSum out;

    int lo = 0, hi = -1;
    bool any = false;
    for (const ChainComplex& p : parts) {
        if (p.is_zero()) continue;
        lo = any ? std::min(lo, p.lo()) : p.lo();
        hi = any ? std::max(hi, p.hi()) : p.hi();
        any = true;
    }
    out.sum.algebra = alg;
    if (!any) {
        for (const ChainComplex& p : parts) {
            out.inclusions.push_back(zero_chain_map(p, out.sum));
            out.projections.push_back(zero_chain_map(out.sum, p));
        }
        return out;
    }

    std::map<int, DirectSum> sums;
    for (int i = lo; i <= hi; ++i) {
        std::vector<Representation> slices;
        bool nonzero = false;
        for (const ChainComplex& p : parts) {
            slices.push_back(p.term_at(i));
            nonzero = nonzero || !slices.back().is_zero();
        }
        if (!nonzero) continue;
        DirectSum ds = direct_sum(slices);
        out.sum.terms.emplace(i, ds.sum);
        sums.emplace(i, std::move(ds));
    }
    for (int i = lo; i < hi; ++i) {
        if (!sums.count(i) || !sums.count(i + 1)) continue;
        const DirectSum& src = sums.at(i);
        const DirectSum& tgt = sums.at(i + 1);
        RepMorphism d = zero_morphism(src.sum, tgt.sum);
        for (std::size_t p = 0; p < parts.size(); ++p)
            d = add(d, compose(tgt.inclusions[p],
                               compose(parts[p].differential_at(i), src.projections[p])));
        if (!is_zero(d)) out.sum.differentials.emplace(i, std::move(d));
    }
    for (std::size_t p = 0; p < parts.size(); ++p) {
        ChainMap inc = zero_chain_map(parts[p], out.sum);
        ChainMap proj = zero_chain_map(out.sum, parts[p]);
        for (const auto& [i, ds] : sums) {
            if (!parts[p].term_at(i).is_zero()) {
                inc.components.emplace(i, ds.inclusions[p]);
                proj.components.emplace(i, ds.projections[p]);
            }
        }
        out.inclusions.push_back(std::move(inc));
        out.projections.push_back(std::move(proj));
    }
    return out;
}

ChainComplex dualize_complex(const ChainComplex& x, const AlgebraPtr& opposite_algebra) {
    ChainComplex y;
    y.algebra = opposite_algebra;
    for (const auto& [i, t] : x.terms) y.terms.emplace(-i, dualize(t, opposite_algebra));
    for (const auto& [i, d] : x.differentials)
        y.differentials.emplace(-i - 1, dualize(d, opposite_algebra));
    return y;
}

bool projective_terms(const ChainComplex& x) {
    for (const auto& [i, t] : x.terms)
        if (!is_projective(t)) return false;
    return true;
}

bool injective_terms(const ChainComplex& x, const AlgebraPtr& opposite_algebra) {
    for (const auto& [i, t] : x.terms)
        if (!is_injective(t, opposite_algebra)) return false;
    return true;
}

bool complex_equal(const ChainComplex& a, const ChainComplex& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (const auto& [i, t] : a.terms) {
        if (!b.has_term(i)) return false;
        if (t.dims != b.terms.at(i).dims) return false;
        for (std::size_t k = 0; k < t.arrow_maps.size(); ++k)
            if (!t.arrow_maps[k].equals(b.terms.at(i).arrow_maps[k])) return false;
    }
    for (int i = a.lo(); i < a.hi(); ++i) {
        RepMorphism da = a.differential_at(i), db = b.differential_at(i);
        for (std::size_t v = 0; v < da.vertex_maps.size(); ++v)
            if (!da.vertex_maps[v].equals(db.vertex_maps[v])) return false;
    }
    return true;
}

}  // namespace siltlab
