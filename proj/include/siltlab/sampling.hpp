#pragma once

#include <random>

#include "siltlab/bn.hpp"

namespace siltlab {

/// splitmix-style per-instance seed derivation; keeps suites reproducible
/// for a fixed (seed, index).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Random quotient of a random small projective module (hence an arbitrary
/// module). Retries until nonzero.
Representation random_module(const AlgebraPtr& a, std::mt19937_64& rng, int max_mult = 2);

enum class ColumnKind { Projective, Injective };

/// Random module over the column algebra whose columns are projective
/// (resp. injective) base modules: a random complex of such modules packed
/// through theta_inv. Retries until nonzero.
Representation random_column_module(const BnAlgebra& bn, ColumnKind kind, std::mt19937_64& rng,
                                    int max_mult = 2);

/// Random bounded complex of projectives supported in [lo, hi].
ChainComplex random_perfect_complex(const AlgebraPtr& a, int lo, int hi, std::mt19937_64& rng,
                                    int max_mult = 2);

/// Random shift-0 chain map between two complexes (a random combination of
/// the homotopy-class basis plus a random null-homotopic part).
ChainMap random_chain_map(const ChainComplex& x, const ChainComplex& y, std::mt19937_64& rng);

}  // namespace siltlab
