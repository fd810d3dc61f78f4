#include "siltlab/algebra.hpp"

#include <algorithm>
#include <set>

namespace siltlab {

namespace {

// A word in the free path category: arrow indices in application order.
// Trivial words carry the vertex instead.
struct Word {
    int src_if_empty = -1;
    std::vector<int> arrows;

    bool operator<(const Word& o) const {
        if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
        if (arrows != o.arrows) return arrows < o.arrows;
        return src_if_empty < o.src_if_empty;
    }
};

LinComb lincomb_add(const Field& F, const LinComb& a, const LinComb& b, const Scalar& factor) {
    LinComb out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Scalar v = F.mul(b[j].second, factor);
            if (!F.is_zero(v)) out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            Scalar v = F.add(a[i].second, F.mul(b[j].second, factor));
            if (!F.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

struct GenTerm {
    Scalar coeff;
    Word word;
};

// One relation-consequence generator, tracked by its longest term.
struct Generator {
    std::vector<GenTerm> terms;
    int max_len = 0;
};

constexpr std::size_t kPathBudget = 200000;

class Builder {
public:
    Builder(const Field& f, const Quiver& q, std::vector<Generator> gens, int cap)
        : F(f), Q(q), gens_(std::move(gens)), cap_(cap) {}

    void run() {
        // Restart whenever the elimination uncovers an ideal element supported
        // on shorter basis paths; it is re-fed as an extra generator.
        for (int attempt = 0; attempt < 100; ++attempt) {
            if (eliminate()) return;
        }
        throw SiltError(ErrorCode::BudgetExceeded, "path basis completion did not stabilize");
    }

    std::vector<BasisPath> basis;
    std::vector<int> trivial;
    std::map<Word, LinComb> nf;  // normal forms over final basis indices

private:
    int word_source(const Word& w) const {
        return w.arrows.empty() ? w.src_if_empty : Q.arrow(w.arrows.front()).source;
    }
    int word_target(const Word& w) const {
        return w.arrows.empty() ? w.src_if_empty : Q.arrow(w.arrows.back()).target;
    }

    // Full normal form of a word all of whose proper prefixes lie in decided
    // levels. Memoized in nf.
    const LinComb& nf_full(const Word& w) {
        auto it = nf.find(w);
        if (it != nf.end()) return it->second;
        Word prefix{w.src_if_empty, {w.arrows.begin(), w.arrows.end() - 1}};
        if (prefix.arrows.empty()) prefix.src_if_empty = Q.arrow(w.arrows.front()).source;
        int a = w.arrows.back();
        const LinComb& base = nf_full(prefix);
        LinComb out;
        for (const auto& [idx, c] : base) {
            const BasisPath& b = basis[idx];
            if (b.target != Q.arrow(a).source) continue;
            Word ext{b.source, b.arrows};
            ext.arrows.push_back(a);
            out = lincomb_add(F, out, nf_full(ext), c);
        }
        return nf.emplace(w, std::move(out)).first->second;
    }

    // Returns true on success, false when a discovery forces a restart.
    bool eliminate() {
        basis.clear();
        trivial.assign(Q.num_vertices(), -1);
        nf.clear();

        for (int v = 0; v < Q.num_vertices(); ++v) {
            trivial[v] = static_cast<int>(basis.size());
            basis.push_back(BasisPath{v, v, {}});
            nf[Word{v, {}}] = LinComb{{trivial[v], F.one()}};
        }

        std::vector<int> prev_alive;  // basis indices of the previous length
        for (int v = 0; v < Q.num_vertices(); ++v) prev_alive.push_back(trivial[v]);
        std::vector<Word> prev_dead;

        std::vector<char> gen_done(gens_.size(), 0);

        for (int len = 1; len <= cap_; ++len) {
            // Candidates: alive paths of the previous length extended by one
            // arrow, ordered lexicographically by arrow-name sequence.
            std::vector<Word> cands;
            for (int idx : prev_alive) {
                const BasisPath& b = basis[idx];
                for (int a = 0; a < Q.num_arrows(); ++a) {
                    if (Q.arrow(a).source != b.target) continue;
                    Word w{b.source, b.arrows};
                    w.arrows.push_back(a);
                    cands.push_back(std::move(w));
                }
            }
            std::sort(cands.begin(), cands.end(), [&](const Word& x, const Word& y) {
                return name_seq(x) < name_seq(y);
            });
            if (basis.size() + cands.size() > kPathBudget)
                throw SiltError(ErrorCode::BudgetExceeded, "path budget exceeded");

            std::map<Word, std::size_t> slot;
            for (std::size_t s = 0; s < cands.size(); ++s) slot[cands[s]] = s;

            // Columns: candidates first in descending lex order (so the
            // eliminations rewrite larger paths by smaller ones), then the
            // existing basis.
            std::size_t C = cands.size();
            std::size_t width = C + basis.size();
            auto col_of_slot = [&](std::size_t s) { return C - 1 - s; };

            std::vector<std::vector<Scalar>> raw_rows;
            auto add_row = [&](const std::vector<GenTerm>& terms) {
                std::vector<Scalar> row(width, F.zero());
                bool nonzero = false;
                for (const auto& t : terms) {
                    LinComb red = pre_nf(t.word, len, slot, C);
                    for (const auto& [col, c] : red) {
                        Scalar v = F.add(row[col], F.mul(c, t.coeff));
                        nonzero = nonzero || !F.is_zero(v);
                        row[col] = std::move(v);
                    }
                }
                nonzero = false;
                for (const auto& s : row)
                    if (!F.is_zero(s)) {
                        nonzero = true;
                        break;
                    }
                if (nonzero) raw_rows.push_back(std::move(row));
            };

            if (len >= 2) {
                // Close the previous level's ideal rows under multiplication
                // by single arrows on both sides.
                for (const Word& d : prev_dead) {
                    std::vector<GenTerm> terms{{F.one(), d}};
                    for (const auto& [idx, c] : nf.at(d))
                        terms.push_back({F.neg(c), Word{basis[idx].source, basis[idx].arrows}});
                    for (int a = 0; a < Q.num_arrows(); ++a) {
                        std::vector<GenTerm> lm, rm;
                        for (const auto& t : terms) {
                            if (word_target(t.word) == Q.arrow(a).source) {
                                Word w = t.word;
                                w.arrows.push_back(a);
                                lm.push_back({t.coeff, std::move(w)});
                            }
                            if (Q.arrow(a).target == word_source(t.word)) {
                                Word w{t.word.src_if_empty, {}};
                                w.arrows.push_back(a);
                                w.arrows.insert(w.arrows.end(), t.word.arrows.begin(),
                                                t.word.arrows.end());
                                rm.push_back({t.coeff, std::move(w)});
                            }
                        }
                        if (!lm.empty()) add_row(lm);
                        if (!rm.empty()) add_row(rm);
                    }
                }
            }
            for (std::size_t g = 0; g < gens_.size(); ++g)
                if (!gen_done[g] && gens_[g].max_len == len) {
                    add_row(gens_[g].terms);
                    gen_done[g] = 1;
                }

            RowSpace rs(width, F);
            for (auto& r : raw_rows) rs.add(std::move(r));

            // Discoveries: reduced rows whose pivot falls outside the
            // candidate block witness ideal elements among shorter paths.
            bool discovered = false;
            std::vector<char> dead(C, 0);
            for (const auto& row : rs.rows()) {
                std::size_t piv = width;
                for (std::size_t j = 0; j < width; ++j)
                    if (!F.is_zero(row[j])) {
                        piv = j;
                        break;
                    }
                if (piv < C) {
                    dead[piv] = 1;
                } else {
                    Generator g;
                    for (std::size_t j = piv; j < width; ++j) {
                        if (F.is_zero(row[j])) continue;
                        const BasisPath& b = basis[j - C];
                        g.terms.push_back({row[j], Word{b.source, b.arrows}});
                        g.max_len = std::max(g.max_len, b.length());
                    }
                    if (g.max_len < 2)
                        throw SiltError(ErrorCode::MalformedRelation,
                                        "relations generate a non-admissible ideal");
                    gens_.push_back(std::move(g));
                    discovered = true;
                }
            }
            if (discovered) return false;

            // Survivors become basis paths, in ascending lex order.
            std::vector<int> alive_now;
            for (std::size_t s = 0; s < cands.size(); ++s) {
                if (dead[col_of_slot(s)]) continue;
                int idx = static_cast<int>(basis.size());
                const Word& w = cands[s];
                basis.push_back(BasisPath{word_source(w), word_target(w), w.arrows});
                nf[w] = LinComb{{idx, F.one()}};
                alive_now.push_back(idx);
            }
            std::vector<Word> dead_now;
            for (const auto& row : rs.rows()) {
                std::size_t piv = 0;
                while (F.is_zero(row[piv])) ++piv;
                const Word& w = cands[C - 1 - piv];
                LinComb tail;
                for (std::size_t j = piv + 1; j < width; ++j) {
                    if (F.is_zero(row[j])) continue;
                    int idx;
                    if (j < C) {
                        auto it = nf.find(cands[C - 1 - j]);
                        idx = it->second.front().first;
                    } else {
                        idx = static_cast<int>(j - C);
                    }
                    tail.emplace_back(idx, F.neg(row[j]));
                }
                std::sort(tail.begin(), tail.end());
                nf[w] = std::move(tail);
                dead_now.push_back(w);
            }

            if (alive_now.empty()) {
                // Any generator longer than the stabilization length must
                // still evaluate to zero; otherwise restart with it reduced.
                bool late_discovery = false;
                for (std::size_t g = 0; g < gens_.size(); ++g) {
                    if (gen_done[g]) continue;
                    LinComb v;
                    for (const auto& t : gens_[g].terms)
                        v = lincomb_add(F, v, nf_full(t.word), t.coeff);
                    if (!v.empty()) {
                        Generator ng;
                        for (const auto& [idx, c] : v) {
                            ng.terms.push_back({c, Word{basis[idx].source, basis[idx].arrows}});
                            ng.max_len = std::max(ng.max_len, basis[idx].length());
                        }
                        if (ng.max_len < 2)
                            throw SiltError(ErrorCode::MalformedRelation,
                                            "relations generate a non-admissible ideal");
                        gens_.push_back(std::move(ng));
                        late_discovery = true;
                    }
                }
                if (late_discovery) return false;
                return true;
            }
            prev_alive = std::move(alive_now);
            prev_dead = std::move(dead_now);
        }
        throw SiltError(ErrorCode::NotFiniteDimensional,
                        "paths survive at length cap " + std::to_string(cap_));
    }

    // Normal form of a word of length <= len over the joint column space
    // (candidate columns, then basis columns).
    LinComb pre_nf(const Word& w, int len, const std::map<Word, std::size_t>& slot,
                   std::size_t C) {
        LinComb out;
        auto add_basis = [&](const LinComb& v, const Scalar& c) {
            for (const auto& [idx, s] : v) {
                LinComb one{{static_cast<int>(C) + idx, F.mul(s, c)}};
                out = lincomb_add(F, out, one, F.one());
            }
        };
        if (static_cast<int>(w.arrows.size()) < len) {
            add_basis(nf_full(w), F.one());
            return out;
        }
        Word prefix{0, {w.arrows.begin(), w.arrows.end() - 1}};
        prefix.src_if_empty =
            prefix.arrows.empty() ? Q.arrow(w.arrows.front()).source : -1;
        int a = w.arrows.back();
        const LinComb base = nf_full(prefix);
        for (const auto& [idx, c] : base) {
            const BasisPath& b = basis[idx];
            if (b.target != Q.arrow(a).source) continue;
            Word ext{b.source, b.arrows};
            ext.arrows.push_back(a);
            if (static_cast<int>(ext.arrows.size()) == len) {
                std::size_t s = slot.at(ext);
                LinComb one{{static_cast<int>(C - 1 - s), c}};
                out = lincomb_add(F, out, one, F.one());
            } else {
                add_basis(nf_full(ext), c);
            }
        }
        return out;
    }

    std::vector<std::string> name_seq(const Word& w) const {
        std::vector<std::string> names;
        names.reserve(w.arrows.size());
        for (int a : w.arrows) names.push_back(Q.arrow(a).name);
        return names;
    }

    const Field& F;
    const Quiver& Q;
    std::vector<Generator> gens_;
    int cap_;
};

std::vector<Generator> validate_relations(const Field& F, const Quiver& Q,
                                          const std::vector<Relation>& relations) {
    std::vector<Generator> gens;
    for (const Relation& rel : relations) {
        Generator g;
        int src = -1, tgt = -1;
        for (const auto& term : rel.terms) {
            if (F.is_zero(term.coeff)) continue;
            if (term.path.size() < 2)
                throw SiltError(ErrorCode::MalformedRelation,
                                "relation path has length < 2");
            Word w;
            for (const auto& name : term.path) {
                int a = Q.arrow_index(name);
                if (!w.arrows.empty() && Q.arrow(w.arrows.back()).target != Q.arrow(a).source)
                    throw SiltError(ErrorCode::MalformedRelation,
                                    "relation path is not composable at arrow '" + name + "'");
                w.arrows.push_back(a);
            }
            int s = Q.arrow(w.arrows.front()).source;
            int t = Q.arrow(w.arrows.back()).target;
            if (src == -1) {
                src = s;
                tgt = t;
            } else if (s != src || t != tgt) {
                throw SiltError(ErrorCode::MalformedRelation, "relation paths are not parallel");
            }
            g.max_len = std::max(g.max_len, static_cast<int>(w.arrows.size()));
            g.terms.push_back({term.coeff, std::move(w)});
        }
        if (!g.terms.empty()) gens.push_back(std::move(g));
    }
    return gens;
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertices,
               std::vector<std::tuple<std::string, std::string, std::string>> arrows)
    : vertices_(std::move(vertices)) {
    for (int v = 0; v < static_cast<int>(vertices_.size()); ++v) {
        if (!vertex_index_.emplace(vertices_[v], v).second)
            throw SiltError(ErrorCode::InvalidArgument, "duplicate vertex '" + vertices_[v] + "'");
    }
    for (const auto& [name, s, t] : arrows) {
        Arrow a{name, vertex_index(s), vertex_index(t)};
        int idx = static_cast<int>(arrows_.size());
        if (!arrow_index_.emplace(name, idx).second)
            throw SiltError(ErrorCode::InvalidArgument, "duplicate arrow '" + name + "'");
        arrows_.push_back(std::move(a));
    }
}

int Quiver::vertex_index(const std::string& name) const {
    auto it = vertex_index_.find(name);
    if (it == vertex_index_.end())
        throw SiltError(ErrorCode::InvalidArgument, "unknown vertex '" + name + "'");
    return it->second;
}

int Quiver::arrow_index(const std::string& name) const {
    auto it = arrow_index_.find(name);
    if (it == arrow_index_.end())
        throw SiltError(ErrorCode::InvalidArgument, "unknown arrow '" + name + "'");
    return it->second;
}

Quiver Quiver::reversed() const {
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    for (const Arrow& a : arrows_)
        arrows.emplace_back(a.name, vertices_[a.target], vertices_[a.source]);
    return Quiver(vertices_, std::move(arrows));
}

LinComb BoundQuiverAlgebra::step(int basis_index, int arrow) const {
    return step_[basis_index][arrow];
}

LinComb BoundQuiverAlgebra::apply_arrows(const LinComb& b, const std::vector<int>& arrows) const {
    LinComb v = b;
    for (int a : arrows) {
        LinComb next;
        for (const auto& [idx, c] : v)
            next = lincomb_add(field_, next, step_[idx][a], c);
        v = std::move(next);
    }
    return v;
}

LinComb BoundQuiverAlgebra::word_normal_form(int source_vertex,
                                             const std::vector<int>& arrows) const {
    LinComb v{{trivial_[arrows.empty() ? source_vertex
                                       : quiver_.arrow(arrows.front()).source],
               field_.one()}};
    return apply_arrows(v, arrows);
}

AlgebraInfo BoundQuiverAlgebra::info() const {
    AlgebraInfo out;
    out.dimension = dimension();
    out.num_vertices = quiver_.num_vertices();
    out.num_arrows = quiver_.num_arrows();
    for (const BasisPath& b : basis_) {
        AlgebraInfo::Entry e;
        e.source = quiver_.vertex_name(b.source);
        e.target = quiver_.vertex_name(b.target);
        e.length = b.length();
        if (b.arrows.empty()) {
            e.path = "e_" + e.source;
        } else {
            for (std::size_t k = 0; k < b.arrows.size(); ++k) {
                if (k) e.path += ".";
                e.path += quiver_.arrow(b.arrows[k]).name;
            }
        }
        out.basis.push_back(std::move(e));
    }
    return out;
}

bool BoundQuiverAlgebra::same_presentation(const BoundQuiverAlgebra& o) const {
    if (field_ != o.field_) return false;
    if (quiver_.num_vertices() != o.quiver_.num_vertices() ||
        quiver_.num_arrows() != o.quiver_.num_arrows())
        return false;
    for (int v = 0; v < quiver_.num_vertices(); ++v)
        if (quiver_.vertex_name(v) != o.quiver_.vertex_name(v)) return false;
    for (int a = 0; a < quiver_.num_arrows(); ++a) {
        const auto& x = quiver_.arrow(a);
        const auto& y = o.quiver_.arrow(a);
        if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
    }
    return true;
}

AlgebraPtr build_algebra(const Field& field, const Quiver& quiver,
                         const std::vector<Relation>& relations, int length_cap) {
    if (length_cap < 1)
        throw SiltError(ErrorCode::InvalidArgument, "length cap must be positive");
    Builder builder(field, quiver, validate_relations(field, quiver, relations), length_cap);
    builder.run();

    auto alg = std::shared_ptr<BoundQuiverAlgebra>(new BoundQuiverAlgebra(field, quiver));
    alg->relations_ = relations;
    alg->length_cap_ = length_cap;
    alg->basis_ = std::move(builder.basis);
    alg->trivial_ = std::move(builder.trivial);

    int dim = alg->dimension();
    alg->step_.assign(dim, std::vector<LinComb>(quiver.num_arrows()));
    for (int i = 0; i < dim; ++i) {
        const BasisPath& b = alg->basis_[i];
        for (int a = 0; a < quiver.num_arrows(); ++a) {
            if (quiver.arrow(a).source != b.target) continue;
            auto key = b.arrows;
            key.push_back(a);
            alg->step_[i][a] = builder.nf.at({b.source, key});
        }
    }
    alg->mult_.assign(dim, std::vector<LinComb>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const BasisPath& bi = alg->basis_[i];
            const BasisPath& bj = alg->basis_[j];
            if (bj.target != bi.source) continue;
            LinComb v{{j, field.one()}};
            alg->mult_[i][j] = alg->apply_arrows(v, bi.arrows);
        }

    // Every input relation must vanish in the computed basis.
    for (const Relation& rel : relations) {
        LinComb v;
        for (const auto& t : rel.terms) {
            if (field.is_zero(t.coeff)) continue;
            std::vector<int> arrows;
            for (const auto& name : t.path) arrows.push_back(quiver.arrow_index(name));
            LinComb w = alg->word_normal_form(0, arrows);
            for (auto& [idx, c] : w) c = field.mul(c, t.coeff);
            v = lincomb_add(field, v, w, field.one());
        }
        if (!v.empty())
            throw SiltError(ErrorCode::MalformedRelation,
                            "relation does not vanish in the computed basis");
    }
    return alg;
}

AlgebraPtr opposite(const AlgebraPtr& algebra) {
    const Quiver& q = algebra->quiver();
    std::vector<Relation> relations;
    for (const Relation& rel : algebra->relations()) {
        Relation r;
        for (const auto& term : rel.terms) {
            Relation::Term t;
            t.coeff = term.coeff;
            t.path.assign(term.path.rbegin(), term.path.rend());
            r.terms.push_back(std::move(t));
        }
        relations.push_back(std::move(r));
    }
    return build_algebra(algebra->field(), q.reversed(), relations, algebra->length_cap());
}

}  // namespace siltlab
