#pragma once

#include "siltlab/bn.hpp"
#include "siltlab/decompose.hpp"

namespace siltlab {

/// Homotopy-equivalent complex of projectives whose differential entries lie
/// in the radical (no contractible summands), with the equivalence data.
struct MinimalModel {
    ChainComplex model;
    ChainMap to_model;    // X -> model
    ChainMap from_model;  // model -> X
};

/// True iff every differential lands inside the radical of its target.
bool has_radical_differentials(const ChainComplex& x);

MinimalModel minimal_model_with_maps(const ChainComplex& x);
ChainComplex minimal_model(const ChainComplex& x);

/// Idempotent-splitting decomposition of a minimal complex of projectives
/// into indecomposables with multiplicities.
std::vector<std::pair<ChainComplex, int>> decompose_complex(const ChainComplex& x);

/// Isomorphism of complexes in the homotopy category, decided through the
/// column-module identification of their minimal models.
bool complexes_homotopy_equivalent(const ChainComplex& a, const ChainComplex& b);

/// Shift a chain map (relabel degrees of source, target and components).
ChainMap shift_chain_map(const ChainMap& f, int k);

}  // namespace siltlab
