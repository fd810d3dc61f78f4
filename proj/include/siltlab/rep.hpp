#pragma once

#include "siltlab/algebra.hpp"

namespace siltlab {

/// A representation of a bound quiver algebra: one exact matrix per arrow,
/// acting between the vertex spaces. Immutable by convention.
struct Representation {
    AlgebraPtr algebra;
    std::vector<int> dims;           // per vertex
    std::vector<Matrix> arrow_maps;  // per arrow: dims[target] x dims[source]

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
};

/// Vertex-wise matrices intertwining two representations:
/// target(a) . f_src(v) = f_tgt(w) . source(a) for every arrow a : v -> w.
struct RepMorphism {
    Representation source;
    Representation target;
    std::vector<Matrix> vertex_maps;  // per vertex: dims_target(v) x dims_source(v)
};

Representation make_representation(AlgebraPtr algebra, std::vector<int> dims,
                                   std::vector<Matrix> arrow_maps);
Representation zero_representation(AlgebraPtr algebra);

/// True iff every relation of the algebra evaluates to the zero matrix on M.
bool validate_representation(const Representation& m);

/// Matrix of the action of a path (arrow indices, applied first to last).
Matrix eval_path(const Representation& m, const std::vector<int>& arrows, int source_vertex);

RepMorphism zero_morphism(const Representation& src, const Representation& tgt);
RepMorphism identity_morphism(const Representation& m);
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);  // g after f
RepMorphism add(const RepMorphism& f, const RepMorphism& g);
RepMorphism scale(const RepMorphism& f, const Scalar& c);
RepMorphism negate(const RepMorphism& f);
bool is_zero(const RepMorphism& f);
bool is_identity(const RepMorphism& f);
bool morphism_valid(const RepMorphism& f);  // shapes + intertwining

/// Basis of the space of morphisms M -> N, solved exactly from the
/// intertwining constraints. Throws AlgebraMismatch for unrelated algebras.
std::vector<RepMorphism> hom_space(const Representation& m, const Representation& n);
int hom_dim(const Representation& m, const Representation& n);

struct DirectSum {
    Representation sum;
    std::vector<RepMorphism> inclusions;
    std::vector<RepMorphism> projections;
};
DirectSum direct_sum(const std::vector<Representation>& parts);

/// The universal morphism (f_1; ...; f_k) : M -> N_1 (+) ... (+) N_k.
RepMorphism into_sum(const std::vector<RepMorphism>& components, const DirectSum& target);
/// The universal morphism (f_1, ..., f_k) : M_1 (+) ... (+) M_k -> N.
RepMorphism from_sum(const std::vector<RepMorphism>& components, const DirectSum& source);

struct SubQuotient {
    Representation rep;
    RepMorphism map;  // inclusion (sub) or projection (quotient)
};

/// Subrepresentation spanned by the given per-vertex column spans
/// (must be arrow-invariant; checked exactly).
SubQuotient sub_representation(const Representation& m, const std::vector<Matrix>& spans);
SubQuotient kernel(const RepMorphism& f);
SubQuotient image(const RepMorphism& f);
/// Quotient of m by an invariant column span.
SubQuotient quotient(const Representation& m, const std::vector<Matrix>& spans);
SubQuotient cokernel(const RepMorphism& f);

/// Smallest subrepresentation containing the given per-vertex columns.
std::vector<Matrix> generated_submodule_spans(const Representation& m,
                                              const std::vector<Matrix>& seeds);

/// rad M = (arrow ideal) . M, and the semisimple quotient M / rad M.
std::vector<Matrix> radical_spans(const Representation& m);
SubQuotient top(const Representation& m);

struct StandardModules {
    std::vector<Representation> simples;      // S(v)
    std::vector<Representation> projectives;  // P(v), basis = paths starting at v
    std::vector<Representation> injectives;   // I(v), dual path construction
};
StandardModules standard_modules(const AlgebraPtr& algebra);

/// The regular module A = (+) P(v) and the injective cogenerator (+) I(v).
Representation regular_module(const AlgebraPtr& algebra);
Representation injective_cogenerator(const AlgebraPtr& algebra);

/// Field dual over the opposite algebra: dims preserved, matrices
/// transposed. The caller supplies the (structurally) opposite algebra.
Representation dualize(const Representation& m, const AlgebraPtr& opposite_algebra);
RepMorphism dualize(const RepMorphism& f, const AlgebraPtr& opposite_algebra);

bool same_algebra(const Representation& a, const Representation& b);

}  // namespace siltlab
