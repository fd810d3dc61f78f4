#include "siltlab/bridge.hpp"

namespace siltlab {

RepClassification classify(const BnAlgebra& bn, const Representation& m, int cap) {
    RepClassification out;
    if (m.is_zero()) return out;
    AlgebraPtr op = opposite(bn.algebra);

    out.pdim = pd(m, cap);
    out.is_projective = out.pdim && *out.pdim == 0;
    out.injdim = pd(dualize(m, op), cap);
    out.is_injective = out.injdim && *out.injdim == 0;
    ChainComplex image = theta(bn, m);
    out.is_contractible = is_acyclic(image);
    out.in_rep_p = in_rep_p(bn, m);
    out.in_rep_i = in_rep_i(bn, m);
    out.contractible_projective = out.is_contractible && out.is_projective;
    out.contractible_injective = out.is_contractible && out.is_injective;

    auto column_support = [&](const Representation& r) {
        ChainComplex t = theta(bn, r);
        return std::pair<int, int>{t.lo(), t.hi()};
    };
    if (out.in_rep_p) {
        // strip projective summands, read the smallest occupied column
        std::vector<Representation> rest;
        for (const auto& [part, mult] : decompose(m)) {
            auto p = pd(part, cap);
            if (p && *p == 0) continue;
            rest.push_back(part);
        }
        if (rest.empty()) {
            out.formula_pd = 0;
        } else {
            int j = 0;
            for (std::size_t i = 0; i < rest.size(); ++i)
                j = std::min(j, column_support(rest[i]).first);
            out.formula_pd = -j;
        }
    }
    if (out.in_rep_i) {
        std::vector<Representation> rest;
        for (const auto& [part, mult] : decompose(m)) {
            auto p = pd(dualize(part, op), cap);
            if (p && *p == 0) continue;
            rest.push_back(part);
        }
        if (rest.empty()) {
            out.formula_injdim = 0;
        } else {
            int j = bn.column_lo();
            for (std::size_t i = 0; i < rest.size(); ++i)
                j = std::max(j, column_support(rest[i]).second);
            out.formula_injdim = bn.n - 1 + j;
        }
    }
    return out;
}

Representation silting_to_tilting(const BnAlgebra& bn, const ChainComplex& x) {
    if (!is_n_silting(x, bn.n))
        throw SiltError(ErrorCode::NotNSilting,
                        "input is not n-silting for n = " + std::to_string(bn.n));
    std::vector<Representation> parts{theta_inv(bn, minimal_model(x))};
    Representation reg = regular_module(bn.base);
    for (int j = bn.column_lo(); j <= -1; ++j)
        parts.push_back(make_special(bn, reg, j, SpecialFlavor::Lower));
    return direct_sum(parts).sum;
}

ChainComplex tilting_to_silting(const BnAlgebra& bn, const Representation& t) {
    if (!in_rep_p(bn, t))
        throw SiltError(ErrorCode::NotInRepP, "module has a non-projective column");
    TiltingReport report = is_tilting(t, bn.n - 1);
    if (!report.verdict)
        throw SiltError(ErrorCode::NotTilting, "module is not tilting: " + report.failure);
    return minimal_model(theta(bn, t));
}

ExtTransportReport ext_transport(const BnAlgebra& bn, const Representation& m,
                                 const Representation& n, int j, int cap) {
    ExtTransportReport out;
    out.hypothesis_met = in_rep_p(bn, m) || in_rep_i(bn, n);
    auto module_side = ext_dim(m, n, j, cap);
    if (!module_side)
        throw SiltError(ErrorCode::InvalidArgument, "resolution cap too small for ext_transport");
    out.module_side = *module_side;
    // At degree 0 the comparison is against plain chain maps (the full
    // embedding into the category of complexes); at positive degrees it is
    // the derived Hom of the images.
    if (j == 0)
        out.derived_side = chain_map_space_dim(theta(bn, m), theta(bn, n), 0);
    else
        out.derived_side = derived_hom_dim(theta(bn, m), theta(bn, n), j);
    return out;
}

}  // namespace siltlab
