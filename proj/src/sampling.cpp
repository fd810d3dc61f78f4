#include "siltlab/sampling.hpp"

#include "siltlab/homtable.hpp"

namespace siltlab {

namespace {

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
    if (f.kind() == FieldKind::Prime) {
        std::uniform_int_distribution<std::int64_t> dist(0, f.characteristic() - 1);
        return f.from_int(dist(rng));
    }
    std::uniform_int_distribution<int> dist(-4, 4);
    return f.from_int(dist(rng));
}

// Random morphism src -> tgt, optionally constrained to kill the image of
// prev (i.e. candidate . prev = 0).
RepMorphism random_constrained_hom(const Representation& src, const Representation& tgt,
                                   const RepMorphism* prev, std::mt19937_64& rng) {
    const Field& f = src.algebra->field();
    std::vector<RepMorphism> basis = hom_space(src, tgt);
    if (basis.empty()) return zero_morphism(src, tgt);
    std::vector<RepMorphism> usable;
    if (prev == nullptr) {
        usable = basis;
    } else {
        // coefficient combinations c with (sum c_k h_k) . prev = 0
        std::size_t width = 0;
        for (std::size_t v = 0; v < src.dims.size(); ++v)
            width += std::size_t(tgt.dims[v]) * prev->source.dims[v];
        Matrix sys(width, basis.size(), f);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            RepMorphism comp = compose(basis[k], *prev);
            std::size_t r = 0;
            for (const Matrix& mv : comp.vertex_maps)
                for (std::size_t i = 0; i < mv.rows(); ++i)
                    for (std::size_t j = 0; j < mv.cols(); ++j) sys.set(r++, k, mv.at(i, j));
        }
        Matrix ker = sys.kernel_basis();
        for (std::size_t c = 0; c < ker.cols(); ++c) {
            RepMorphism g = zero_morphism(src, tgt);
            for (std::size_t k = 0; k < basis.size(); ++k)
                g = add(g, scale(basis[k], ker.at(k, c)));
            usable.push_back(std::move(g));
        }
    }
    RepMorphism out = zero_morphism(src, tgt);
    for (const RepMorphism& g : usable) out = add(out, scale(g, random_scalar(f, rng)));
    return out;
}

Representation random_projective(std::mt19937_64& rng, int max_mult,
                                 const std::vector<Representation>& gens) {
    std::uniform_int_distribution<int> dist(0, max_mult);
    std::vector<Representation> parts;
    for (const Representation& p : gens)
        for (int c = dist(rng); c > 0; --c) parts.push_back(p);
    if (parts.empty()) parts.push_back(gens[rng() % gens.size()]);
    return direct_sum(parts).sum;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Representation random_module(const AlgebraPtr& a, std::mt19937_64& rng, int max_mult) {
    StandardModules mods = standard_modules(a);
    const Field& f = a->field();
    for (int attempt = 0; attempt < 32; ++attempt) {
        Representation p = random_projective(rng, max_mult, mods.projectives);
        // random submodule: close a few random vectors under the arrows
        std::vector<Matrix> seeds;
        std::uniform_int_distribution<int> nseeds(0, 2);
        for (std::size_t v = 0; v < p.dims.size(); ++v) {
            int k = nseeds(rng);
            Matrix s(p.dims[v], k, f);
            for (int j = 0; j < k; ++j)
                for (int i = 0; i < p.dims[v]; ++i) s.set(i, j, random_scalar(f, rng));
            seeds.push_back(std::move(s));
        }
        Representation q = quotient(p, generated_submodule_spans(p, seeds)).rep;
        if (!q.is_zero()) return q;
    }
    return standard_modules(a).simples.front();
}

Representation random_column_module(const BnAlgebra& bn, ColumnKind kind, std::mt19937_64& rng,
                                    int max_mult) {
    StandardModules mods = standard_modules(bn.base);
    const std::vector<Representation>& gens =
        kind == ColumnKind::Projective ? mods.projectives : mods.injectives;
    std::uniform_int_distribution<int> dist(0, max_mult);
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::map<int, Representation> terms;
        for (int j = bn.column_lo(); j <= 0; ++j) {
            std::vector<Representation> parts;
            for (const Representation& g : gens)
                for (int c = dist(rng); c > 0; --c) parts.push_back(g);
            if (!parts.empty()) {
                Representation t = direct_sum(parts).sum;
                if (!t.is_zero()) terms.emplace(j, std::move(t));
            }
        }
        if (terms.empty()) continue;
        std::map<int, RepMorphism> diffs;
        const RepMorphism* prev = nullptr;
        RepMorphism last = zero_morphism(zero_representation(bn.base),
                                         zero_representation(bn.base));
        for (int j = bn.column_lo(); j <= -1; ++j) {
            if (!terms.count(j) || !terms.count(j + 1)) {
                prev = nullptr;
                continue;
            }
            RepMorphism d = random_constrained_hom(terms.at(j), terms.at(j + 1), prev, rng);
            last = d;
            prev = &last;
            if (!is_zero(d)) diffs.emplace(j, std::move(d));
        }
        ChainComplex x = make_complex(bn.base, std::move(terms), std::move(diffs));
        if (!validate_complex(x)) continue;
        Representation m = theta_inv(bn, x);
        if (!m.is_zero()) return m;
    }
    throw SiltError(ErrorCode::InvalidArgument, "random column module generation failed");
}

ChainComplex random_perfect_complex(const AlgebraPtr& a, int lo, int hi, std::mt19937_64& rng,
                                    int max_mult) {
    StandardModules mods = standard_modules(a);
    std::uniform_int_distribution<int> dist(0, max_mult);
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::map<int, Representation> terms;
        for (int j = lo; j <= hi; ++j) {
            std::vector<Representation> parts;
            for (const Representation& g : mods.projectives)
                for (int c = dist(rng); c > 0; --c) parts.push_back(g);
            if (!parts.empty()) terms.emplace(j, direct_sum(parts).sum);
        }
        if (terms.empty()) continue;
        std::map<int, RepMorphism> diffs;
        const RepMorphism* prev = nullptr;
        RepMorphism last = zero_morphism(zero_representation(a), zero_representation(a));
        for (int j = lo; j <= hi - 1; ++j) {
            if (!terms.count(j) || !terms.count(j + 1)) {
                prev = nullptr;
                continue;
            }
            RepMorphism d = random_constrained_hom(terms.at(j), terms.at(j + 1), prev, rng);
            last = d;
            prev = &last;
            if (!is_zero(d)) diffs.emplace(j, std::move(d));
        }
        ChainComplex x = make_complex(a, std::move(terms), std::move(diffs));
        if (validate_complex(x) && !x.is_zero()) return x;
    }
    throw SiltError(ErrorCode::InvalidArgument, "random perfect complex generation failed");
}

ChainMap random_chain_map(const ChainComplex& x, const ChainComplex& y, std::mt19937_64& rng) {
    const Field& f = x.algebra->field();
    ChainMap out = zero_chain_map(x, y);
    for (const ChainMap& b : graded_hom(x, y, 0).basis)
        out = add(out, scale(b, random_scalar(f, rng)));
    // plus a random boundary so that representatives are not special
    for (const auto& [j, xt] : x.terms) {
        if (!y.has_term(j - 1)) continue;
        for (const RepMorphism& h : hom_space(xt, y.terms.at(j - 1))) {
            RepMorphism hp = scale(h, random_scalar(f, rng));
            ChainMap bh = zero_chain_map(x, y);
            RepMorphism up = compose(y.differential_at(j - 1), hp);
            if (!is_zero(up)) bh.components.emplace(j, up);
            if (x.has_term(j - 1) && y.has_term(j - 2)) {
                // unused branch for shift-0 maps; boundaries at j-1 come from
                // the h component of the previous degree
            }
            if (x.has_term(j - 1)) {
                RepMorphism down = compose(hp, x.differential_at(j - 1));
                if (!is_zero(down)) {
                    auto it = bh.components.find(j - 1);
                    if (it != bh.components.end())
                        it->second = add(it->second, down);
                    else
                        bh.components.emplace(j - 1, down);
                }
            }
            out = add(out, bh);
        }
    }
    return out;
}

}  // namespace siltlab
