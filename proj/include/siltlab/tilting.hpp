#pragma once

#include "siltlab/decompose.hpp"
#include "siltlab/resolution.hpp"

namespace siltlab {

/// Minimal left add(M)-approximation of x, where the summands list carries
/// the indecomposable summands of M: the universal map into a sum of
/// summand copies, with unnecessary copies stripped (checked by rank).
RepMorphism minimal_left_approximation(const Representation& x,
                                       const std::vector<Representation>& summands);

struct TiltingReport {
    bool verdict = false;
    std::string failure;     // diagnostic stage when verdict is false
    std::optional<int> pdim;
    std::vector<int> self_ext;            // dim Ext^i(M, M), i = 1..pd
    std::vector<RepMorphism> coresolution;  // injective approximations
    std::vector<Representation> cokernels;  // successive cokernels, last = 0
};

/// d-tilting test: pd <= d, no self-extensions, and the regular module has
/// an add(M)-coresolution of length <= d built from iterated minimal left
/// approximations. The report carries the coresolution as certificate.
TiltingReport is_tilting(const Representation& m, int d, int cap = 32);

/// Dual test through the field dual over the opposite algebra; the
/// certificate is the dual-side coresolution (its dual ends in the
/// injective cogenerator).
TiltingReport is_cotilting(const Representation& m, int d, int cap = 32);

}  // namespace siltlab
