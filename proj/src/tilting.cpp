#include "siltlab/tilting.hpp"

#include <algorithm>

namespace siltlab {

namespace {

// Deterministic summand order: (total dim, dim vector) ascending.
void sort_summands(std::vector<Representation>& summands) {
    std::stable_sort(summands.begin(), summands.end(),
                     [](const Representation& a, const Representation& b) {
                         if (a.total_dim() != b.total_dim())
                             return a.total_dim() < b.total_dim();
                         return a.dims < b.dims;
                     });
}

std::vector<Scalar> flatten_morphism(const RepMorphism& f) {
    std::vector<Scalar> out;
    for (const Matrix& mv : f.vertex_maps)
        for (std::size_t i = 0; i < mv.rows(); ++i)
            for (std::size_t j = 0; j < mv.cols(); ++j) out.push_back(mv.at(i, j));
    return out;
}

}  // namespace

RepMorphism minimal_left_approximation(const Representation& x,
                                       const std::vector<Representation>& summands_in) {
    const Field& f = x.algebra->field();
    std::vector<Representation> summands = summands_in;
    sort_summands(summands);

    // copies: (summand index, basis morphism x -> summand)
    std::vector<std::pair<std::size_t, RepMorphism>> copies;
    std::vector<std::vector<RepMorphism>> hom_to(summands.size());
    for (std::size_t i = 0; i < summands.size(); ++i) {
        hom_to[i] = hom_space(x, summands[i]);
        for (const RepMorphism& b : hom_to[i]) copies.emplace_back(i, b);
    }
    // pairwise homs between summands, needed for the stripping checks
    std::vector<std::vector<std::vector<RepMorphism>>> pair_homs(
        summands.size(), std::vector<std::vector<RepMorphism>>(summands.size()));
    for (std::size_t i = 0; i < summands.size(); ++i)
        for (std::size_t j = 0; j < summands.size(); ++j)
            pair_homs[i][j] = hom_space(summands[i], summands[j]);

    // f is a left approximation iff for every summand S_j the composites
    // {g . f_c : c kept, g in Hom(S_{i(c)}, S_j)} span Hom(x, S_j).
    auto is_approximation = [&](const std::vector<bool>& kept) {
        for (std::size_t j = 0; j < summands.size(); ++j) {
            if (hom_to[j].empty()) continue;
            std::size_t width = flatten_morphism(hom_to[j].front()).size();
            RowSpace span(width, f);
            std::size_t need = hom_to[j].size();
            std::size_t got = 0;
            for (std::size_t c = 0; c < copies.size() && got < need; ++c) {
                if (!kept[c]) continue;
                for (const RepMorphism& g : pair_homs[copies[c].first][j])
                    if (span.add(flatten_morphism(compose(g, copies[c].second)))) ++got;
            }
            if (got < need) return false;
        }
        return true;
    };

    std::vector<bool> kept(copies.size(), true);
    for (std::size_t c = 0; c < copies.size(); ++c) {
        kept[c] = false;
        if (!is_approximation(kept)) kept[c] = true;
    }

    std::vector<Representation> parts;
    std::vector<RepMorphism> comps;
    for (std::size_t c = 0; c < copies.size(); ++c)
        if (kept[c]) {
            parts.push_back(summands[copies[c].first]);
            comps.push_back(copies[c].second);
        }
    if (parts.empty()) return zero_morphism(x, zero_representation(x.algebra));
    DirectSum ds = direct_sum(parts);
    return into_sum(comps, ds);
}

TiltingReport is_tilting(const Representation& m, int d, int cap) {
    TiltingReport report;
    if (m.is_zero()) {
        report.failure = "zero module";
        return report;
    }
    report.pdim = pd(m, std::max(cap, d + 1));
    if (!report.pdim || *report.pdim > d) {
        report.failure = "projective dimension exceeds " + std::to_string(d);
        return report;
    }
    for (int i = 1; i <= *report.pdim; ++i) {
        int e = *ext_dim(m, m, i, std::max(cap, *report.pdim + 1));
        report.self_ext.push_back(e);
        if (e != 0) {
            report.failure = "nonzero self-extensions in degree " + std::to_string(i);
            return report;
        }
    }

    std::vector<Representation> summands;
    for (const auto& [rep, mult] : decompose(m)) summands.push_back(rep);

    Representation current = regular_module(m.algebra);
    for (int k = 0; !current.is_zero(); ++k) {
        if (k > d) {
            report.failure = "coresolution exceeds length " + std::to_string(d);
            return report;
        }
        RepMorphism approx = minimal_left_approximation(current, summands);
        bool injective = true;
        for (const Matrix& mv : approx.vertex_maps)
            if (mv.kernel_basis().cols() != 0) injective = false;
        if (!injective) {
            // ApproximationStall: the left approximation cannot start an
            // exact coresolution at this stage.
            report.failure = "approximation stall at stage " + std::to_string(k);
            return report;
        }
        report.coresolution.push_back(approx);
        current = cokernel(approx).rep;
        report.cokernels.push_back(current);
    }
    report.verdict = true;
    return report;
}

TiltingReport is_cotilting(const Representation& m, int d, int cap) {
    AlgebraPtr op = opposite(m.algebra);
    return is_tilting(dualize(m, op), d, cap);
}

}  // namespace siltlab
