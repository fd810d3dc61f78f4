#include "siltlab/decompose.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace siltlab {

namespace {

// ---------------------------------------------------------------------------
// Dense univariate polynomials, coefficients ascending. Used only for the
// minimal-polynomial analysis of endomorphism algebras.
// ---------------------------------------------------------------------------

using Poly = std::vector<Scalar>;

void poly_trim(const Field& F, Poly& p) {
    while (!p.empty() && F.is_zero(p.back())) p.pop_back();
}

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_monic(const Field& F, Poly p) {
    poly_trim(F, p);
    if (p.empty()) return p;
    Scalar inv = F.inv(p.back());
    for (auto& c : p) c = F.mul(c, inv);
    return p;
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    return r;
}

// both quotient and remainder
std::pair<Poly, Poly> poly_divmod(const Field& F, Poly a, const Poly& b) {
    poly_trim(F, a);
    Poly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, F.zero());
    Scalar lead_inv = F.inv(b.back());
    while (poly_deg(a) >= poly_deg(b)) {
        int shift = poly_deg(a) - poly_deg(b);
        Scalar c = F.mul(a.back(), lead_inv);
        q[shift] = F.add(q[shift], c);
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
        poly_trim(F, a);
    }
    return {std::move(q), std::move(a)};
}

Poly poly_mod(const Field& F, const Poly& a, const Poly& b) {
    return poly_divmod(F, a, b).second;
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
    poly_trim(F, a);
    poly_trim(F, b);
    while (!b.empty()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, std::move(a));
}

// u*a + v*b = gcd(a,b); only u is needed for the CRT idempotent.
Poly poly_ext_gcd_u(const Field& F, Poly a, Poly b) {
    Poly old_u{F.one()}, u{};
    poly_trim(F, a);
    poly_trim(F, b);
    while (!b.empty()) {
        auto [q, r] = poly_divmod(F, a, b);
        a = std::move(b);
        b = std::move(r);
        Poly qu = poly_mul(F, q, u);
        Poly nu = old_u;
        if (nu.size() < qu.size()) nu.resize(qu.size(), F.zero());
        for (std::size_t i = 0; i < qu.size(); ++i) nu[i] = F.sub(nu[i], qu[i]);
        poly_trim(F, nu);
        old_u = std::move(u);
        u = std::move(nu);
    }
    // normalize so that u*a0 + v*b0 = 1 (a now holds the gcd, assumed nonconstant-free)
    Scalar inv = F.inv(a.back());
    for (auto& c : old_u) c = F.mul(c, inv);
    return old_u;
}

Poly poly_derivative(const Field& F, const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(F.mul(p[i], F.from_int(i)));
    poly_trim(F, d);
    return d;
}

Poly poly_powmod(const Field& F, Poly base, mpz_class e, const Poly& mod) {
    Poly r{F.one()};
    base = poly_mod(F, base, mod);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = poly_mod(F, poly_mul(F, r, base), mod);
        base = poly_mod(F, poly_mul(F, base, base), mod);
        e >>= 1;
    }
    return r;
}

// Squarefree part f / gcd(f, f'). Valid in char 0 and in char p when all
// multiplicities are < p; callers keep degrees below the characteristic.
Poly squarefree_part(const Field& F, const Poly& f) {
    Poly d = poly_derivative(F, f);
    if (d.empty()) return {};  // inseparable corner, give up
    Poly g = poly_gcd(F, f, d);
    if (poly_deg(g) == 0) return poly_monic(F, f);
    return poly_monic(F, poly_divmod(F, f, g).first);
}

enum class FactorOutcome { Split, Irreducible, Unknown };

struct FactorResult {
    FactorOutcome outcome = FactorOutcome::Unknown;
    Poly f1, f2;  // coprime nonconstant factors when outcome == Split
};

// A coprime split of the squarefree g over F_p: distinct-degree blocks first,
// then randomized equal-degree splitting.
FactorResult split_squarefree_fp(const Field& F, const Poly& g, std::mt19937_64& rng) {
    FactorResult out;
    int n = poly_deg(g);
    if (n == 1) {
        out.outcome = FactorOutcome::Irreducible;
        return out;
    }
    if (n < 1) return out;
    mpz_class p(static_cast<long>(F.characteristic()));
    Poly x{F.zero(), F.one()};
    for (int d = 1; 2 * d <= n; ++d) {
        // gcd(g, x^(p^d) - x): product of irreducible factors of degree <= d.
        mpz_class pd;
        mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), d);
        Poly xq = poly_powmod(F, x, pd, g);
        Poly diff = xq;
        if (diff.size() < 2) diff.resize(2, F.zero());
        diff[1] = F.sub(diff[1], F.one());
        poly_trim(F, diff);
        Poly h = poly_gcd(F, g, diff);
        int dh = poly_deg(h);
        if (dh > 0 && dh < n) {
            out.outcome = FactorOutcome::Split;
            out.f1 = h;
            out.f2 = poly_monic(F, poly_divmod(F, g, h).first);
            return out;
        }
        if (dh == n) {
            // all factors have degree d: Cantor-Zassenhaus equal-degree split
            mpz_class exp = (pd - 1) / 2;
            std::uniform_int_distribution<std::int64_t> dist(0, F.characteristic() - 1);
            for (int tries = 0; tries < 256; ++tries) {
                Poly r(n, F.zero());
                for (auto& c : r) c = F.from_int(dist(rng));
                poly_trim(F, r);
                if (poly_deg(r) < 1) continue;
                Poly s = poly_powmod(F, r, exp, g);
                if (s.empty()) continue;
                s[0] = F.sub(s[0], F.one());
                poly_trim(F, s);
                Poly h2 = poly_gcd(F, g, s);
                int dh2 = poly_deg(h2);
                if (dh2 > 0 && dh2 < n) {
                    out.outcome = FactorOutcome::Split;
                    out.f1 = h2;
                    out.f2 = poly_monic(F, poly_divmod(F, g, h2).first);
                    return out;
                }
            }
            return out;  // Unknown: equal-degree splitting was unlucky
        }
    }
    out.outcome = FactorOutcome::Irreducible;
    return out;
}

bool rat_is_square(const mpq_class& q, mpq_class& root) {
    if (sgn(q) < 0) return false;
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = mpq_class(rn) / mpq_class(rd);
    return true;
}

// Coprime split over Q for degree <= 3 (quadratic discriminant, cubic
// rational roots). Degree >= 4 is not attempted; the caller falls back to
// other elements or reports DecompositionFailure.
FactorResult split_squarefree_q(const Field& F, const Poly& g) {
    FactorResult out;
    int n = poly_deg(g);
    if (n == 1) {
        out.outcome = FactorOutcome::Irreducible;
        return out;
    }
    if (n == 2) {
        mpq_class a = std::get<mpq_class>(g[2]), b = std::get<mpq_class>(g[1]),
                  c = std::get<mpq_class>(g[0]);
        mpq_class disc = b * b - 4 * a * c, root;
        if (!rat_is_square(disc, root)) {
            out.outcome = FactorOutcome::Irreducible;
            return out;
        }
        mpq_class r1 = (-b + root) / (2 * a);
        Poly f1{F.neg(Scalar(r1)), F.one()};
        out.outcome = FactorOutcome::Split;
        out.f1 = f1;
        out.f2 = poly_monic(F, poly_divmod(F, g, f1).first);
        return out;
    }
    if (n == 3) {
        // rational roots p/q with p | a0_num-ish, after clearing denominators
        mpz_class lcm(1);
        for (const auto& c : g) {
            const mpq_class& q = std::get<mpq_class>(c);
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        }
        std::vector<mpz_class> ic;
        for (const auto& c : g) ic.push_back(mpz_class(std::get<mpq_class>(c) * mpq_class(lcm)));
        auto divisors = [](mpz_class v) {
            std::vector<mpz_class> out;
            v = abs(v);
            if (v == 0) return out;
            for (mpz_class d = 1; d * d <= v; ++d)
                if (v % d == 0) {
                    out.push_back(d);
                    out.push_back(v / d);
                }
            return out;
        };
        for (const mpz_class& pn : divisors(ic[0]))
            for (const mpz_class& qn : divisors(ic[3]))
                for (int sign = -1; sign <= 1; sign += 2) {
                    mpq_class r = mpq_class(sign * pn) / mpq_class(qn);
                    r.canonicalize();
                    // evaluate
                    mpq_class val(0);
                    for (int i = n; i >= 0; --i) val = val * r + std::get<mpq_class>(g[i]);
                    if (val == 0) {
                        Poly f1{F.neg(Scalar(r)), F.one()};
                        out.outcome = FactorOutcome::Split;
                        out.f1 = f1;
                        out.f2 = poly_monic(F, poly_divmod(F, g, f1).first);
                        return out;
                    }
                }
        out.outcome = FactorOutcome::Irreducible;  // cubic with no rational root
        return out;
    }
    return out;  // degree >= 4 over Q: unknown
}

// Lift the coprime split of the squarefree part to a coprime factorization
// of f itself (primary components), then the CRT idempotent u*f1 mod f.
Poly crt_idempotent(const Field& F, const Poly& f, const Poly& g1) {
    Poly f1 = poly_gcd(F, f, g1);
    for (;;) {
        Poly next = poly_gcd(F, f, poly_mul(F, f1, f1));
        if (poly_deg(next) == poly_deg(f1)) break;
        f1 = std::move(next);
    }
    Poly f2 = poly_monic(F, poly_divmod(F, f, f1).first);
    Poly u = poly_ext_gcd_u(F, f1, f2);
    return poly_mod(F, poly_mul(F, u, f1), f);  // = 0 mod f1, 1 mod f2
}

// ---------------------------------------------------------------------------
// Endomorphism-algebra analysis
// ---------------------------------------------------------------------------

// Coordinates of endomorphisms relative to the hom basis: flattened total
// matrices stacked as columns.
struct EndAlgebra {
    Field F;
    std::vector<RepMorphism> basis;
    Matrix basis_mat;  // flattened basis morphisms as columns

    explicit EndAlgebra(std::vector<RepMorphism> b) : F(b.front().source.algebra->field()) {
        basis = std::move(b);
        std::size_t width = flat(basis.front()).rows();
        basis_mat = Matrix(width, basis.size(), F);
        for (std::size_t k = 0; k < basis.size(); ++k)
            basis_mat.paste(0, k, flat(basis[k]));
    }

    static Matrix flat(const RepMorphism& f) {
        Matrix out(0, 1, f.source.algebra->field());
        for (const Matrix& mv : f.vertex_maps) out = out.vstack(mv.flatten_row().transpose());
        return out;
    }

    RepMorphism from_coords(const std::vector<Scalar>& c) const {
        RepMorphism out = zero_morphism(basis.front().source, basis.front().target);
        for (std::size_t k = 0; k < basis.size(); ++k)
            out = add(out, scale(basis[k], c[k]));
        return out;
    }

    Scalar trace(const RepMorphism& f) const {
        Scalar t = F.zero();
        for (const Matrix& mv : f.vertex_maps)
            for (std::size_t i = 0; i < std::min(mv.rows(), mv.cols()); ++i)
                t = F.add(t, mv.at(i, i));
        return t;
    }
};

// Minimal polynomial of an endomorphism via Krylov iteration on the
// flattened powers.
Poly min_poly(const Field& F, const RepMorphism& f) {
    RepMorphism id = identity_morphism(f.source);
    RepMorphism cur = id;
    Matrix span(EndAlgebra::flat(id).rows(), 0, F);
    for (;;) {
        Matrix flat = EndAlgebra::flat(cur);
        if (span.cols()) {
            auto sol = span.solve(flat);
            if (sol) {
                Poly p;
                for (std::size_t i = 0; i < sol->rows(); ++i) p.push_back(F.neg(sol->at(i, 0)));
                p.push_back(F.one());
                return p;
            }
        }
        span = span.hstack(flat);
        cur = compose(cur, f);
    }
}

RepMorphism eval_poly(const Field&, const Poly& p, const RepMorphism& f) {
    RepMorphism out = zero_morphism(f.source, f.target);
    RepMorphism pw = identity_morphism(f.source);
    for (std::size_t i = 0; i < p.size(); ++i) {
        out = add(out, scale(pw, p[i]));
        pw = compose(pw, f);
    }
    return out;
}

// Split M along an idempotent endomorphism: M = ker(e) (+) im(e).
std::pair<SubQuotient, SubQuotient> idempotent_split(const Representation&,
                                                     const RepMorphism& e) {
    SubQuotient k = kernel(e);
    SubQuotient i = image(e);
    return {std::move(k), std::move(i)};
}

// Retractions for a two-term split given by inclusions: per vertex
// [K_v | I_v] is invertible; the projections are blocks of the inverse.
std::pair<RepMorphism, RepMorphism> split_projections(const Representation& m,
                                                      const SubQuotient& k,
                                                      const SubQuotient& i) {
    std::vector<Matrix> pk, pi;
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
        Matrix joint = k.map.vertex_maps[v].hstack(i.map.vertex_maps[v]);
        auto inv = joint.inverse();
        if (!inv)
            throw SiltError(ErrorCode::DecompositionFailure,
                            "idempotent did not split the module");
        std::size_t dk = k.map.vertex_maps[v].cols();
        pk.push_back(inv->submatrix(0, 0, dk, m.dims[v]));
        pi.push_back(inv->submatrix(dk, 0, inv->rows() - dk, m.dims[v]));
    }
    return {RepMorphism{m, k.rep, std::move(pk)}, RepMorphism{m, i.rep, std::move(pi)}};
}

struct Splitter {
    int budget;
    std::mt19937_64 rng;

    explicit Splitter(int b, unsigned long long seed) : budget(b), rng(seed) {}

    FactorResult coprime_split(const Field& F, const Poly& f) {
        FactorResult unknown;
        if (poly_deg(f) < 1) return unknown;
        if (F.kind() == FieldKind::Prime &&
            poly_deg(f) >= static_cast<int>(F.characteristic()))
            return unknown;  // squarefree-part shortcut not valid here
        Poly g = squarefree_part(F, f);
        if (poly_deg(g) < 1) return unknown;
        if (poly_deg(g) == 1) {
            // primary minimal polynomial: no split from this element
            unknown.outcome = FactorOutcome::Irreducible;
            unknown.f1 = g;
            return unknown;
        }
        if (F.kind() == FieldKind::Prime) return split_squarefree_fp(F, g, rng);
        return split_squarefree_q(F, g);
    }

    // One split step: a two-part split of M, or nullopt when M is certified
    // indecomposable. Throws DecompositionFailure when neither is reached.
    std::optional<std::array<std::pair<SubQuotient, RepMorphism>, 2>> split_once(
        const Representation& m) {
        const Field& F = m.algebra->field();
        std::vector<RepMorphism> homs = hom_space(m, m);
        if (homs.size() == 1) return std::nullopt;  // End = k
        EndAlgebra E(std::move(homs));

        auto split_by = [&](const RepMorphism& f, const Poly& mp, const Poly& g1)
            -> std::optional<std::array<std::pair<SubQuotient, RepMorphism>, 2>> {
            Poly e = crt_idempotent(F, mp, g1);
            RepMorphism em = eval_poly(F, e, f);
            auto [k, i] = idempotent_split(m, em);
            if (k.rep.is_zero() || i.rep.is_zero()) return std::nullopt;
            auto [pk, pi] = split_projections(m, k, i);
            return std::array<std::pair<SubQuotient, RepMorphism>, 2>{
                std::make_pair(std::move(k), std::move(pk)),
                std::make_pair(std::move(i), std::move(pi))};
        };

        // Radical via the trace form (valid in char 0 / char > dim End).
        std::size_t n = E.basis.size();
        bool trace_ok = F.kind() == FieldKind::Rationals ||
                        F.characteristic() > static_cast<std::int64_t>(n);
        std::size_t quotient_dim = 0;
        if (trace_ok) {
            Matrix gram(n, n, F);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    gram.set(i, j, E.trace(compose(E.basis[i], E.basis[j])));
            quotient_dim = n - gram.kernel_basis().cols();
            if (quotient_dim == 1) return std::nullopt;  // End is local
        }

        // Work through basis elements, then seeded random combinations. A
        // coprime factor split of a minimal polynomial yields an idempotent;
        // a primitive element with irreducible minimal polynomial of degree
        // dim(End/rad) certifies that End/rad is a field.
        std::uniform_int_distribution<std::int64_t> dist(
            F.kind() == FieldKind::Prime ? 0 : -9,
            F.kind() == FieldKind::Prime ? F.characteristic() - 1 : 9);
        std::size_t round = 0;
        while (budget > 0) {
            --budget;
            RepMorphism f = [&] {
                if (round < n) return E.basis[round];
                std::vector<Scalar> c;
                for (std::size_t i = 0; i < n; ++i) c.push_back(F.from_int(dist(rng)));
                return E.from_coords(c);
            }();
            ++round;
            Poly mp = min_poly(F, f);
            FactorResult fr = coprime_split(F, mp);
            if (fr.outcome == FactorOutcome::Split) {
                auto s = split_by(f, mp, fr.f1);
                if (s) return s;
            } else if (fr.outcome == FactorOutcome::Irreducible && trace_ok &&
                       quotient_dim >= 2) {
                // fr.f1 is unset for the fp path; recompute the squarefree part.
                Poly sf = squarefree_part(F, mp);
                if (poly_deg(sf) == static_cast<int>(quotient_dim))
                    return std::nullopt;  // k[f mod rad] = End/rad is a field
            }
        }
        throw SiltError(ErrorCode::DecompositionFailure,
                        "idempotent search exhausted its budget");
    }
};

}  // namespace

Splitting split_summands(const Representation& m, int budget, unsigned long long seed) {
    Splitting out;
    if (m.is_zero()) return out;
    Splitter splitter(budget, seed ^ 0x9e3779b97f4a7c15ULL);

    // Worklist of (piece, inclusion into m, projection from m).
    std::vector<std::tuple<Representation, RepMorphism, RepMorphism>> work;
    work.emplace_back(m, identity_morphism(m), identity_morphism(m));
    while (!work.empty()) {
        auto [piece, incl, proj] = std::move(work.back());
        work.pop_back();
        auto split = splitter.split_once(piece);
        if (!split) {
            out.factors.push_back(piece);
            out.inclusions.push_back(incl);
            out.projections.push_back(proj);
            continue;
        }
        for (auto& [sq, retraction] : *split)
            work.emplace_back(sq.rep, compose(incl, sq.map), compose(retraction, proj));
    }
    return out;
}

std::vector<std::pair<Representation, int>> decompose(const Representation& m, int budget,
                                                      unsigned long long seed) {
    Splitting s = split_summands(m, budget, seed);
    std::vector<std::pair<Representation, int>> out;
    for (const Representation& f : s.factors) {
        bool found = false;
        for (auto& [rep, mult] : out)
            if (indec_isomorphic(rep, f)) {
                ++mult;
                found = true;
                break;
            }
        if (!found) out.emplace_back(f, 1);
    }
    return out;
}

bool is_indecomposable(const Representation& m, int budget, unsigned long long seed) {
    if (m.is_zero())
        throw SiltError(ErrorCode::InvalidArgument, "is_indecomposable: zero module");
    Splitter splitter(budget, seed ^ 0x9e3779b97f4a7c15ULL);
    return !splitter.split_once(m).has_value();
}

bool invertible_hom_exists(const std::vector<RepMorphism>& homs) {
    for (const RepMorphism& f : homs) {
        bool ok = true;
        for (const Matrix& mv : f.vertex_maps)
            if (mv.rows() != mv.cols() || mv.rank() != mv.rows()) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

bool indec_isomorphic(const Representation& a, const Representation& b) {
    if (!same_algebra(a, b)) return false;
    if (a.dims != b.dims) return false;
    return invertible_hom_exists(hom_space(a, b));
}

bool are_isomorphic(const Representation& a, const Representation& b, int budget,
                    unsigned long long seed) {
    if (!same_algebra(a, b) || a.dims != b.dims) return false;
    auto da = decompose(a, budget, seed);
    auto db = decompose(b, budget, seed);
    if (da.size() != db.size()) return false;
    std::vector<bool> used(db.size(), false);
    for (const auto& [rep, mult] : da) {
        bool matched = false;
        for (std::size_t j = 0; j < db.size(); ++j) {
            if (used[j]) continue;
            if (db[j].second == mult && indec_isomorphic(rep, db[j].first)) {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

}  // namespace siltlab
