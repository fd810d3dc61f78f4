#include "siltlab/resolution.hpp"

namespace siltlab {

RepMorphism projective_cover(const Representation& m) {
    const AlgebraPtr& alg = m.algebra;
    const Field& f = alg->field();
    const Quiver& q = alg->quiver();
    int nv = q.num_vertices();

    // Lifts of a basis of M / rad M, per vertex: complete the radical span
    // by identity columns and keep the completing ones.
    std::vector<Matrix> rad = radical_spans(m);
    std::vector<Matrix> lifts;
    for (int v = 0; v < nv; ++v) {
        Matrix ext = rad[v].hstack(Matrix::identity(m.dims[v], f));
        std::vector<std::size_t> idx = ext.independent_columns();
        std::vector<std::size_t> extra;
        for (std::size_t k : idx)
            if (k >= rad[v].cols()) extra.push_back(k);
        Matrix c(m.dims[v], extra.size(), f);
        for (std::size_t j = 0; j < extra.size(); ++j)
            for (int i = 0; i < m.dims[v]; ++i) c.set(i, j, ext.at(i, extra[j]));
        lifts.push_back(std::move(c));
    }

    StandardModules std_mods = standard_modules(alg);
    std::vector<Representation> parts;
    std::vector<std::pair<int, int>> origin;  // (vertex, lift column)
    for (int v = 0; v < nv; ++v)
        for (std::size_t j = 0; j < lifts[v].cols(); ++j) {
            parts.push_back(std_mods.projectives[v]);
            origin.emplace_back(v, static_cast<int>(j));
        }
    if (parts.empty()) {
        Representation p = zero_representation(alg);
        return zero_morphism(p, m);
    }
    DirectSum ds = direct_sum(parts);

    // Path bases of the projectives, in algebra basis order (this matches the
    // construction in standard_modules).
    std::vector<std::vector<std::vector<int>>> paths_at(nv,
                                                        std::vector<std::vector<int>>(nv));
    for (int i = 0; i < alg->dimension(); ++i) {
        const BasisPath& b = alg->basis_path(i);
        paths_at[b.source][b.target].push_back(i);
    }

    std::vector<RepMorphism> comps;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        auto [v, j] = origin[p];
        std::vector<Matrix> maps;
        for (int w = 0; w < nv; ++w) {
            const auto& paths = paths_at[v][w];
            Matrix fw(m.dims[w], paths.size(), f);
            for (std::size_t col = 0; col < paths.size(); ++col) {
                const BasisPath& b = alg->basis_path(paths[col]);
                Matrix act = eval_path(m, b.arrows, v);  // M(v) -> M(w)
                for (int i = 0; i < m.dims[w]; ++i) {
                    Scalar s = f.zero();
                    for (int k = 0; k < m.dims[v]; ++k)
                        s = f.add(s, f.mul(act.at(i, k), lifts[v].at(k, j)));
                    fw.set(i, col, s);
                }
            }
            maps.push_back(std::move(fw));
        }
        comps.push_back(RepMorphism{parts[p], m, std::move(maps)});
    }
    return from_sum(comps, ds);
}

Resolution min_proj_resolution(const Representation& m, int cap) {
    Resolution res;
    res.resolved = m;
    Representation current = m;
    RepMorphism prev_incl;  // kernel inclusion into the previous term
    for (int k = 0;; ++k) {
        if (current.is_zero()) {
            res.complete = true;
            break;
        }
        if (k > cap) break;
        RepMorphism cover = projective_cover(current);
        res.terms.push_back(cover.source);
        res.maps.push_back(k == 0 ? cover : compose(prev_incl, cover));
        SubQuotient ker = kernel(cover);
        current = ker.rep;
        prev_incl = ker.map;
    }
    return res;
}

std::optional<int> pd(const Representation& m, int cap) {
    Resolution res = min_proj_resolution(m, cap);
    if (!res.complete) return std::nullopt;
    return std::max(0, res.length());
}

bool is_projective(const Representation& m) {
    RepMorphism cover = projective_cover(m);
    for (const Matrix& fv : cover.vertex_maps)
        if (fv.kernel_basis().cols() != 0) return false;
    return true;
}

bool is_injective(const Representation& m, const AlgebraPtr& opposite_algebra) {
    return is_projective(dualize(m, opposite_algebra));
}

std::optional<int> injective_dimension(const Representation& m,
                                       const AlgebraPtr& opposite_algebra, int cap) {
    return pd(dualize(m, opposite_algebra), cap);
}

namespace {

// Rank of Hom(P_i, N) -> Hom(P_{i+1}, N), g |-> g . d.
std::size_t precompose_rank(const std::vector<RepMorphism>& homs, const RepMorphism& d) {
    if (homs.empty()) return 0;
    const Field& f = homs.front().source.algebra->field();
    std::size_t width = 0;
    for (std::size_t v = 0; v < d.source.dims.size(); ++v)
        width += std::size_t(homs.front().target.dims[v]) * d.source.dims[v];
    RowSpace rs(width, f);
    std::size_t rank = 0;
    for (const RepMorphism& g : homs) {
        RepMorphism comp = compose(g, d);
        std::vector<Scalar> row;
        row.reserve(width);
        for (const Matrix& mv : comp.vertex_maps)
            for (std::size_t i = 0; i < mv.rows(); ++i)
                for (std::size_t j = 0; j < mv.cols(); ++j) row.push_back(mv.at(i, j));
        if (rs.add(std::move(row))) ++rank;
    }
    return rank;
}

}  // namespace

std::optional<int> ext_dim(const Representation& m, const Representation& n, int j, int cap) {
    if (j < 0) throw SiltError(ErrorCode::InvalidArgument, "ext_dim: negative degree");
    if (j == 0) return hom_dim(m, n);
    Resolution res = min_proj_resolution(m, cap);
    if (!res.complete && static_cast<int>(res.terms.size()) < j + 2) return std::nullopt;
    if (res.complete && j > res.length()) return 0;

    std::vector<RepMorphism> hom_j = hom_space(res.terms[j], n);
    std::size_t rank_out = 0;
    if (j + 1 < static_cast<int>(res.terms.size()))
        rank_out = precompose_rank(hom_j, res.maps[j + 1]);
    std::vector<RepMorphism> hom_prev = hom_space(res.terms[j - 1], n);
    std::size_t rank_in = precompose_rank(hom_prev, res.maps[j]);
    return static_cast<int>(hom_j.size() - rank_out - rank_in);
}

std::optional<int> global_dimension(const AlgebraPtr& algebra, int cap) {
    StandardModules mods = standard_modules(algebra);
    int best = 0;
    for (const Representation& s : mods.simples) {
        std::optional<int> d = pd(s, cap);
        if (!d) return std::nullopt;
        best = std::max(best, *d);
    }
    return best;
}

}  // namespace siltlab
