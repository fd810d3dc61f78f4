#include "siltlab/minimal.hpp"

#include "siltlab/resolution.hpp"

namespace siltlab {

namespace {

void require_projective_terms(const ChainComplex& x) {
    if (!projective_terms(x))
        throw SiltError(ErrorCode::NotProjectiveTerms,
                        "operation requires a complex of projectives");
}

// Pack a complex into a module over the column algebra of its width, after
// shifting its top degree to 0.
struct Packed {
    BnAlgebra bn;
    int shift_amount = 0;  // original = shift(packed-as-complex, -shift_amount)
    Representation module;
};

Packed pack(const ChainComplex& x) {
    Packed p;
    p.shift_amount = x.hi();
    p.bn = build_Bn(x.algebra, std::max(1, x.width()));
    p.module = theta_inv(p.bn, shift(x, p.shift_amount));
    return p;
}

}  // namespace

bool has_radical_differentials(const ChainComplex& x) {
    for (const auto& [i, d] : x.differentials) {
        std::vector<Matrix> rad = radical_spans(d.target);
        for (std::size_t v = 0; v < rad.size(); ++v) {
            Matrix joint = rad[v].hstack(d.vertex_maps[v]);
            if (joint.rank() != rad[v].cols()) return false;
        }
    }
    return true;
}

MinimalModel minimal_model_with_maps(const ChainComplex& x) {
    require_projective_terms(x);
    if (x.is_zero() || has_radical_differentials(x))
        return MinimalModel{x, identity_chain_map(x), identity_chain_map(x)};

    Packed p = pack(x);
    Splitting split = split_summands(p.module);
    std::vector<RepMorphism> kept_proj, kept_incl;
    std::vector<Representation> kept;
    for (std::size_t i = 0; i < split.factors.size(); ++i) {
        if (is_acyclic(theta(p.bn, split.factors[i]))) continue;  // contractible
        kept.push_back(split.factors[i]);
        kept_incl.push_back(split.inclusions[i]);
        kept_proj.push_back(split.projections[i]);
    }
    if (kept.empty()) {
        ChainComplex zero;
        zero.algebra = x.algebra;
        return MinimalModel{zero, zero_chain_map(x, zero), zero_chain_map(zero, x)};
    }
    DirectSum ds = direct_sum(kept);
    RepMorphism to_m = into_sum(kept_proj, ds);    // M -> (+) kept
    RepMorphism from_m = from_sum(kept_incl, ds);  // (+) kept -> M
    MinimalModel out;
    out.model = shift(theta(p.bn, ds.sum), -p.shift_amount);
    out.to_model = shift_chain_map(theta(p.bn, to_m), -p.shift_amount);
    out.from_model = shift_chain_map(theta(p.bn, from_m), -p.shift_amount);
    // re-thread endpoints so the maps reference x itself
    out.to_model.source = x;
    out.from_model.target = x;
    return out;
}

ChainComplex minimal_model(const ChainComplex& x) { return minimal_model_with_maps(x).model; }

std::vector<std::pair<ChainComplex, int>> decompose_complex(const ChainComplex& x) {
    require_projective_terms(x);
    if (x.is_zero()) return {};
    if (!has_radical_differentials(x))
        throw SiltError(ErrorCode::InvalidArgument,
                        "decompose_complex expects a minimal complex");
    Packed p = pack(x);
    auto parts = decompose(p.module);
    std::vector<std::pair<ChainComplex, int>> out;
    for (const auto& [rep, mult] : parts)
        out.emplace_back(shift(theta(p.bn, rep), -p.shift_amount), mult);
    return out;
}

bool complexes_homotopy_equivalent(const ChainComplex& a, const ChainComplex& b) {
    ChainComplex ma = minimal_model(a);
    ChainComplex mb = minimal_model(b);
    if (ma.is_zero() || mb.is_zero()) return ma.is_zero() == mb.is_zero();
    if (ma.lo() != mb.lo() || ma.hi() != mb.hi()) return false;
    Packed pa = pack(ma);
    Representation other = theta_inv(pa.bn, shift(mb, pa.shift_amount));
    return are_isomorphic(pa.module, other);
}

ChainMap shift_chain_map(const ChainMap& f, int k) {
    ChainMap out{shift(f.source, k), shift(f.target, k), f.shift, {}};
    for (const auto& [i, c] : f.components) out.components.emplace(i - k, c);
    return out;
}

}  // namespace siltlab
