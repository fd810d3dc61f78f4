#include "siltlab/rep.hpp"

#include <numeric>

namespace siltlab {

namespace {

void require_same_algebra(const Representation& a, const Representation& b, const char* op) {
    if (!same_algebra(a, b))
        throw SiltError(ErrorCode::AlgebraMismatch, std::string(op) + ": different algebras");
}

}  // namespace

bool same_algebra(const Representation& a, const Representation& b) {
    return a.algebra == b.algebra || a.algebra->same_presentation(*b.algebra);
}

int Representation::total_dim() const {
    return std::accumulate(dims.begin(), dims.end(), 0);
}

Representation make_representation(AlgebraPtr algebra, std::vector<int> dims,
                                   std::vector<Matrix> arrow_maps) {
    const Quiver& q = algebra->quiver();
    if (static_cast<int>(dims.size()) != q.num_vertices() ||
        static_cast<int>(arrow_maps.size()) != q.num_arrows())
        throw SiltError(ErrorCode::ShapeMismatch, "representation data sizes do not match quiver");
    for (int a = 0; a < q.num_arrows(); ++a) {
        const auto& arr = q.arrow(a);
        const Matrix& m = arrow_maps[a];
        if (static_cast<int>(m.rows()) != dims[arr.target] ||
            static_cast<int>(m.cols()) != dims[arr.source])
            throw SiltError(ErrorCode::ShapeMismatch,
                            "matrix for arrow '" + arr.name + "' has wrong shape");
    }
    return Representation{std::move(algebra), std::move(dims), std::move(arrow_maps)};
}

Representation zero_representation(AlgebraPtr algebra) {
    const Quiver& q = algebra->quiver();
    const Field& f = algebra->field();
    std::vector<int> dims(q.num_vertices(), 0);
    std::vector<Matrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a) maps.emplace_back(0, 0, f);
    return Representation{std::move(algebra), std::move(dims), std::move(maps)};
}

Matrix eval_path(const Representation& m, const std::vector<int>& arrows, int source_vertex) {
    const Field& f = m.algebra->field();
    int v = arrows.empty() ? source_vertex : m.algebra->quiver().arrow(arrows.front()).source;
    Matrix acc = Matrix::identity(m.dims[v], f);
    for (int a : arrows) acc = m.arrow_maps[a].mul(acc);
    return acc;
}

bool validate_representation(const Representation& m) {
    const Field& f = m.algebra->field();
    const Quiver& q = m.algebra->quiver();
    for (const Relation& rel : m.algebra->relations()) {
        Matrix sum;
        bool first = true;
        for (const auto& term : rel.terms) {
            if (f.is_zero(term.coeff)) continue;
            std::vector<int> arrows;
            for (const auto& name : term.path) arrows.push_back(q.arrow_index(name));
            Matrix val = eval_path(m, arrows, 0).scale(term.coeff);
            sum = first ? val : sum.add(val);
            first = false;
        }
        if (!first && !sum.is_zero()) return false;
    }
    return true;
}

RepMorphism zero_morphism(const Representation& src, const Representation& tgt) {
    require_same_algebra(src, tgt, "zero_morphism");
    const Field& f = src.algebra->field();
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < src.dims.size(); ++v)
        maps.emplace_back(tgt.dims[v], src.dims[v], f);
    return RepMorphism{src, tgt, std::move(maps)};
}

RepMorphism identity_morphism(const Representation& m) {
    const Field& f = m.algebra->field();
    std::vector<Matrix> maps;
    for (int d : m.dims) maps.push_back(Matrix::identity(d, f));
    return RepMorphism{m, m, std::move(maps)};
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < f.vertex_maps.size(); ++v)
        maps.push_back(g.vertex_maps[v].mul(f.vertex_maps[v]));
    return RepMorphism{f.source, g.target, std::move(maps)};
}

RepMorphism add(const RepMorphism& f, const RepMorphism& g) {
    std::vector<Matrix> maps;
    for (std::size_t v = 0; v < f.vertex_maps.size(); ++v)
        maps.push_back(f.vertex_maps[v].add(g.vertex_maps[v]));
    return RepMorphism{f.source, f.target, std::move(maps)};
}

RepMorphism scale(const RepMorphism& f, const Scalar& c) {
    std::vector<Matrix> maps;
    for (const Matrix& m : f.vertex_maps) maps.push_back(m.scale(c));
    return RepMorphism{f.source, f.target, std::move(maps)};
}

RepMorphism negate(const RepMorphism& f) {
    std::vector<Matrix> maps;
    for (const Matrix& m : f.vertex_maps) maps.push_back(m.neg());
    return RepMorphism{f.source, f.target, std::move(maps)};
}

bool is_zero(const RepMorphism& f) {
    for (const Matrix& m : f.vertex_maps)
        if (!m.is_zero()) return false;
    return true;
}

bool is_identity(const RepMorphism& f) {
    for (const Matrix& m : f.vertex_maps)
        if (!m.is_identity()) return false;
    return true;
}

bool morphism_valid(const RepMorphism& f) {
    const Quiver& q = f.source.algebra->quiver();
    for (std::size_t v = 0; v < f.vertex_maps.size(); ++v) {
        const Matrix& m = f.vertex_maps[v];
        if (static_cast<int>(m.rows()) != f.target.dims[v] ||
            static_cast<int>(m.cols()) != f.source.dims[v])
            return false;
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
        const auto& arr = q.arrow(a);
        Matrix lhs = f.target.arrow_maps[a].mul(f.vertex_maps[arr.source]);
        Matrix rhs = f.vertex_maps[arr.target].mul(f.source.arrow_maps[a]);
        if (!lhs.equals(rhs)) return false;
    }
    return true;
}

std::vector<RepMorphism> hom_space(const Representation& m, const Representation& n) {
    require_same_algebra(m, n, "hom_space");
    const Field& f = m.algebra->field();
    const Quiver& q = m.algebra->quiver();
    int nv = q.num_vertices();

    std::vector<std::size_t> offset(nv + 1, 0);
    for (int v = 0; v < nv; ++v)
        offset[v + 1] = offset[v] + std::size_t(n.dims[v]) * std::size_t(m.dims[v]);
    std::size_t unknowns = offset[nv];

    std::size_t n_rows = 0;
    for (int a = 0; a < q.num_arrows(); ++a)
        n_rows += std::size_t(n.dims[q.arrow(a).target]) * std::size_t(m.dims[q.arrow(a).source]);

    Matrix sys(n_rows, unknowns, f);
    std::size_t row0 = 0;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int v = q.arrow(a).source, w = q.arrow(a).target;
        const Matrix& na = n.arrow_maps[a];
        const Matrix& ma = m.arrow_maps[a];
        // Row (i, j): sum_k N(a)[i,k] f_v[k,j] - sum_l f_w[i,l] M(a)[l,j] = 0
        for (int i = 0; i < n.dims[w]; ++i)
            for (int j = 0; j < m.dims[v]; ++j) {
                std::size_t r = row0 + std::size_t(i) * m.dims[v] + j;
                for (int k = 0; k < n.dims[v]; ++k)
                    sys.set(r, offset[v] + std::size_t(k) * m.dims[v] + j, na.at(i, k));
                for (int l = 0; l < m.dims[w]; ++l) {
                    std::size_t c = offset[w] + std::size_t(i) * m.dims[w] + l;
                    sys.set(r, c, f.sub(sys.at(r, c), ma.at(l, j)));
                }
            }
        row0 += std::size_t(n.dims[w]) * std::size_t(m.dims[v]);
    }

    Matrix ker = sys.kernel_basis();
    std::vector<RepMorphism> basis;
    for (std::size_t col = 0; col < ker.cols(); ++col) {
        std::vector<Matrix> maps;
        for (int v = 0; v < nv; ++v) {
            Matrix fv(n.dims[v], m.dims[v], f);
            for (int i = 0; i < n.dims[v]; ++i)
                for (int j = 0; j < m.dims[v]; ++j)
                    fv.set(i, j, ker.at(offset[v] + std::size_t(i) * m.dims[v] + j, col));
            maps.push_back(std::move(fv));
        }
        basis.push_back(RepMorphism{m, n, std::move(maps)});
    }
    return basis;
}

int hom_dim(const Representation& m, const Representation& n) {
    return static_cast<int>(hom_space(m, n).size());
}

DirectSum direct_sum(const std::vector<Representation>& parts) {
    if (parts.empty()) throw SiltError(ErrorCode::InvalidArgument, "direct_sum of nothing");
    AlgebraPtr alg = parts.front().algebra;
    const Field& f = alg->field();
    int nv = alg->quiver().num_vertices();

    std::vector<int> dims(nv, 0);
    std::vector<std::vector<int>> starts(parts.size(), std::vector<int>(nv, 0));
    for (std::size_t p = 0; p < parts.size(); ++p) {
        require_same_algebra(parts.front(), parts[p], "direct_sum");
        for (int v = 0; v < nv; ++v) {
            starts[p][v] = dims[v];
            dims[v] += parts[p].dims[v];
        }
    }
    std::vector<Matrix> maps;
    for (int a = 0; a < alg->quiver().num_arrows(); ++a) {
        int v = alg->quiver().arrow(a).source, w = alg->quiver().arrow(a).target;
        Matrix block(dims[w], dims[v], f);
        for (std::size_t p = 0; p < parts.size(); ++p)
            block.paste(starts[p][w], starts[p][v], parts[p].arrow_maps[a]);
        maps.push_back(std::move(block));
    }
    DirectSum out;
    out.sum = Representation{alg, dims, std::move(maps)};
    for (std::size_t p = 0; p < parts.size(); ++p) {
        std::vector<Matrix> inc, proj;
        for (int v = 0; v < nv; ++v) {
            Matrix iv(dims[v], parts[p].dims[v], f);
            iv.paste(starts[p][v], 0, Matrix::identity(parts[p].dims[v], f));
            inc.push_back(iv);
            proj.push_back(iv.transpose());
        }
        out.inclusions.push_back(RepMorphism{parts[p], out.sum, std::move(inc)});
        out.projections.push_back(RepMorphism{out.sum, parts[p], std::move(proj)});
    }
    return out;
}

RepMorphism into_sum(const std::vector<RepMorphism>& components, const DirectSum& target) {
    RepMorphism out = zero_morphism(components.front().source, target.sum);
    for (std::size_t p = 0; p < components.size(); ++p)
        out = add(out, compose(target.inclusions[p], components[p]));
    return out;
}

RepMorphism from_sum(const std::vector<RepMorphism>& components, const DirectSum& source) {
    RepMorphism out = zero_morphism(source.sum, components.front().target);
    for (std::size_t p = 0; p < components.size(); ++p)
        out = add(out, compose(components[p], source.projections[p]));
    return out;
}

SubQuotient sub_representation(const Representation& m, const std::vector<Matrix>& spans) {
    const Quiver& q = m.algebra->quiver();
    std::vector<int> dims;
    for (const Matrix& s : spans) dims.push_back(static_cast<int>(s.cols()));
    std::vector<Matrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int v = q.arrow(a).source, w = q.arrow(a).target;
        Matrix img = m.arrow_maps[a].mul(spans[v]);
        auto sol = spans[w].solve(img);
        if (!sol)
            throw SiltError(ErrorCode::InvalidArgument,
                            "span is not invariant under arrow '" + q.arrow(a).name + "'");
        maps.push_back(std::move(*sol));
    }
    Representation sub{m.algebra, std::move(dims), std::move(maps)};
    std::vector<Matrix> inc = spans;
    return SubQuotient{sub, RepMorphism{sub, m, std::move(inc)}};
}

SubQuotient kernel(const RepMorphism& fm) {
    std::vector<Matrix> spans;
    for (const Matrix& fv : fm.vertex_maps) spans.push_back(fv.kernel_basis());
    return sub_representation(fm.source, spans);
}

SubQuotient image(const RepMorphism& fm) {
    std::vector<Matrix> spans;
    for (const Matrix& fv : fm.vertex_maps) spans.push_back(fv.column_space_basis());
    return sub_representation(fm.target, spans);
}

SubQuotient quotient(const Representation& m, const std::vector<Matrix>& spans) {
    const Field& f = m.algebra->field();
    const Quiver& q = m.algebra->quiver();
    int nv = q.num_vertices();

    std::vector<Matrix> sections, projections;
    std::vector<int> dims;
    for (int v = 0; v < nv; ++v) {
        // Extend the span columns to a full basis by identity columns.
        Matrix ext = spans[v].hstack(Matrix::identity(m.dims[v], f));
        std::vector<std::size_t> idx = ext.independent_columns();
        Matrix full(m.dims[v], idx.size(), f);
        std::size_t extra = 0;
        for (std::size_t k = 0; k < idx.size(); ++k) {
            for (int i = 0; i < m.dims[v]; ++i) full.set(i, k, ext.at(i, idx[k]));
            if (idx[k] >= spans[v].cols()) ++extra;
        }
        Matrix inv = *full.inverse();
        std::size_t rank = idx.size() - extra;
        dims.push_back(static_cast<int>(extra));
        projections.push_back(inv.submatrix(rank, 0, extra, m.dims[v]));
        sections.push_back(full.submatrix(0, rank, m.dims[v], extra));
    }
    std::vector<Matrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int v = q.arrow(a).source, w = q.arrow(a).target;
        maps.push_back(projections[w].mul(m.arrow_maps[a]).mul(sections[v]));
    }
    Representation quot{m.algebra, std::move(dims), std::move(maps)};
    return SubQuotient{quot, RepMorphism{m, quot, std::move(projections)}};
}

SubQuotient cokernel(const RepMorphism& fm) {
    std::vector<Matrix> spans;
    for (const Matrix& fv : fm.vertex_maps) spans.push_back(fv.column_space_basis());
    return quotient(fm.target, spans);
}

std::vector<Matrix> generated_submodule_spans(const Representation& m,
                                              const std::vector<Matrix>& seeds) {
    const Field& f = m.algebra->field();
    const Quiver& q = m.algebra->quiver();
    int nv = q.num_vertices();
    std::vector<RowSpace> spaces;
    for (int v = 0; v < nv; ++v) spaces.emplace_back(m.dims[v], f);

    std::vector<std::vector<std::vector<Scalar>>> pending(nv);
    auto push_col = [&](int v, std::vector<Scalar> col) {
        if (spaces[v].add(col)) pending[v].push_back(std::move(col));
    };
    for (int v = 0; v < nv; ++v)
        for (std::size_t j = 0; j < seeds[v].cols(); ++j) {
            std::vector<Scalar> col;
            for (int i = 0; i < m.dims[v]; ++i) col.push_back(seeds[v].at(i, j));
            push_col(v, std::move(col));
        }
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::vector<std::vector<Scalar>>> work(nv);
        for (int v = 0; v < nv; ++v) work[v].swap(pending[v]);
        for (int a = 0; a < q.num_arrows(); ++a) {
            int v = q.arrow(a).source, w = q.arrow(a).target;
            for (const auto& col : work[v]) {
                std::vector<Scalar> img(m.dims[w], f.zero());
                for (int i = 0; i < m.dims[w]; ++i)
                    for (int k = 0; k < m.dims[v]; ++k)
                        img[i] = f.add(img[i], f.mul(m.arrow_maps[a].at(i, k), col[k]));
                std::size_t before = spaces[w].dim();
                push_col(w, std::move(img));
                if (spaces[w].dim() > before) changed = true;
            }
        }
    }
    std::vector<Matrix> spans;
    for (int v = 0; v < nv; ++v) {
        Matrix s(m.dims[v], spaces[v].dim(), f);
        for (std::size_t k = 0; k < spaces[v].dim(); ++k)
            for (int i = 0; i < m.dims[v]; ++i) s.set(i, k, spaces[v].rows()[k][i]);
        spans.push_back(std::move(s));
    }
    return spans;
}

std::vector<Matrix> radical_spans(const Representation& m) {
    const Field& f = m.algebra->field();
    const Quiver& q = m.algebra->quiver();
    std::vector<Matrix> spans;
    for (int v = 0; v < q.num_vertices(); ++v) {
        Matrix acc(m.dims[v], 0, f);
        for (int a = 0; a < q.num_arrows(); ++a)
            if (q.arrow(a).target == v) acc = acc.hstack(m.arrow_maps[a]);
        spans.push_back(acc.column_space_basis());
    }
    return spans;
}

SubQuotient top(const Representation& m) { return quotient(m, radical_spans(m)); }

StandardModules standard_modules(const AlgebraPtr& algebra) {
    const Field& f = algebra->field();
    const Quiver& q = algebra->quiver();
    int nv = q.num_vertices();
    StandardModules out;

    for (int v = 0; v < nv; ++v) {
        std::vector<int> dims(nv, 0);
        dims[v] = 1;
        std::vector<Matrix> maps;
        for (int a = 0; a < q.num_arrows(); ++a)
            maps.emplace_back(dims[q.arrow(a).target], dims[q.arrow(a).source], f);
        out.simples.push_back(Representation{algebra, std::move(dims), std::move(maps)});
    }

    // P(v): basis at w = residue classes of paths v -> w; arrows act by
    // composing on the left (apply the arrow after the path).
    for (int v = 0; v < nv; ++v) {
        std::vector<std::vector<int>> paths_at(nv);  // basis indices
        std::vector<int> pos(algebra->dimension(), -1);
        for (int i = 0; i < algebra->dimension(); ++i) {
            const BasisPath& b = algebra->basis_path(i);
            if (b.source != v) continue;
            pos[i] = static_cast<int>(paths_at[b.target].size());
            paths_at[b.target].push_back(i);
        }
        std::vector<int> dims(nv);
        for (int w = 0; w < nv; ++w) dims[w] = static_cast<int>(paths_at[w].size());
        std::vector<Matrix> maps;
        for (int a = 0; a < q.num_arrows(); ++a) {
            int s = q.arrow(a).source, t = q.arrow(a).target;
            Matrix ma(dims[t], dims[s], f);
            for (int j = 0; j < dims[s]; ++j) {
                LinComb one{{paths_at[s][j], f.one()}};
                for (const auto& [idx, c] : algebra->apply_arrows(one, {a}))
                    ma.set(pos[idx], j, c);
            }
            maps.push_back(std::move(ma));
        }
        out.projectives.push_back(Representation{algebra, std::move(dims), std::move(maps)});
    }

    // I(v): dual of the path spaces into v; the arrow action is the
    // transpose of precomposition.
    for (int v = 0; v < nv; ++v) {
        std::vector<std::vector<int>> paths_into(nv);
        std::vector<int> pos(algebra->dimension(), -1);
        for (int i = 0; i < algebra->dimension(); ++i) {
            const BasisPath& b = algebra->basis_path(i);
            if (b.target != v) continue;
            pos[i] = static_cast<int>(paths_into[b.source].size());
            paths_into[b.source].push_back(i);
        }
        std::vector<int> dims(nv);
        for (int w = 0; w < nv; ++w) dims[w] = static_cast<int>(paths_into[w].size());
        std::vector<Matrix> maps;
        for (int a = 0; a < q.num_arrows(); ++a) {
            int s = q.arrow(a).source, t = q.arrow(a).target;
            // R: paths (t -> v) -> span of paths (s -> v), p |-> p . arrow.
            Matrix r(dims[s], dims[t], f);
            for (int j = 0; j < dims[t]; ++j) {
                const BasisPath& p = algebra->basis_path(paths_into[t][j]);
                std::vector<int> word{a};
                word.insert(word.end(), p.arrows.begin(), p.arrows.end());
                for (const auto& [idx, c] : algebra->word_normal_form(s, word))
                    r.set(pos[idx], j, c);
            }
            maps.push_back(r.transpose());
        }
        out.injectives.push_back(Representation{algebra, std::move(dims), std::move(maps)});
    }
    return out;
}

Representation regular_module(const AlgebraPtr& algebra) {
    return direct_sum(standard_modules(algebra).projectives).sum;
}

Representation injective_cogenerator(const AlgebraPtr& algebra) {
    return direct_sum(standard_modules(algebra).injectives).sum;
}

Representation dualize(const Representation& m, const AlgebraPtr& opposite_algebra) {
    const Quiver& q = m.algebra->quiver();
    std::vector<Matrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a) maps.push_back(m.arrow_maps[a].transpose());
    return make_representation(opposite_algebra, m.dims, std::move(maps));
}

RepMorphism dualize(const RepMorphism& f, const AlgebraPtr& opposite_algebra) {
    std::vector<Matrix> maps;
    for (const Matrix& fv : f.vertex_maps) maps.push_back(fv.transpose());
    return RepMorphism{dualize(f.target, opposite_algebra), dualize(f.source, opposite_algebra),
                       std::move(maps)};
}

}  // namespace siltlab
