#pragma once

#include "siltlab/rep.hpp"

namespace siltlab {

/// Split of a representation into indecomposable factors with the witnessing
/// section/retraction pairs: proj_i . incl_i = id, and the incl.proj sum is
/// the identity of the input.
struct Splitting {
    std::vector<Representation> factors;
    std::vector<RepMorphism> inclusions;   // factor -> M
    std::vector<RepMorphism> projections;  // M -> factor
};

/// Splits M into indecomposables by analysing End(M): the radical is cut out
/// by the trace form, splitting idempotents are produced from coprime minimal
/// polynomial factors and lifted along the radical. Indecomposability of the
/// leaves is certified (End local, or End/rad a field found by a primitive
/// element). Throws DecompositionFailure when the budget runs out before a
/// certificate is found - never a silently wrong answer.
Splitting split_summands(const Representation& m, int budget = 1000,
                         unsigned long long seed = 0);

std::vector<std::pair<Representation, int>> decompose(const Representation& m, int budget = 1000,
                                                      unsigned long long seed = 0);

bool is_indecomposable(const Representation& m, int budget = 1000, unsigned long long seed = 0);

/// Exact isomorphism test for indecomposables: some hom-basis element is
/// invertible iff the modules are isomorphic (the non-isomorphisms form a
/// subspace).
bool indec_isomorphic(const Representation& a, const Representation& b);

/// General isomorphism test via decomposition and factor matching.
bool are_isomorphic(const Representation& a, const Representation& b, int budget = 1000,
                    unsigned long long seed = 0);

/// True iff some vertex-wise invertible morphism exists among the basis.
bool invertible_hom_exists(const std::vector<RepMorphism>& homs);

}  // namespace siltlab
