#pragma once

#include <optional>

#include "siltlab/rep.hpp"

namespace siltlab {

/// Minimal projective resolution data. maps[0] : terms[0] -> resolved is the
/// augmentation; maps[k] : terms[k] -> terms[k-1] for k >= 1. Every cover is
/// minimal (its kernel lies in the radical of the cover).
struct Resolution {
    Representation resolved;
    std::vector<Representation> terms;
    std::vector<RepMorphism> maps;
    bool complete = false;  // kernel reached zero within the cap

    int length() const { return static_cast<int>(terms.size()) - 1; }
};

/// Projective cover P(M) -> M obtained by lifting a basis of M / rad M.
RepMorphism projective_cover(const Representation& m);

Resolution min_proj_resolution(const Representation& m, int cap);

/// Projective dimension, or nullopt when it exceeds the cap.
std::optional<int> pd(const Representation& m, int cap);

bool is_projective(const Representation& m);
/// Injectivity via the field dual over the (caller-provided) opposite algebra.
bool is_injective(const Representation& m, const AlgebraPtr& opposite_algebra);
std::optional<int> injective_dimension(const Representation& m, const AlgebraPtr& opposite_algebra,
                                       int cap);

/// dim Ext^j(M, N) computed from a minimal projective resolution of M.
/// nullopt propagates an ExceedsCap resolution (cap < j+1 and pd(M) > cap).
std::optional<int> ext_dim(const Representation& m, const Representation& n, int j, int cap = 32);

/// Max of pd over the simple modules, or nullopt (ExceedsCap).
std::optional<int> global_dimension(const AlgebraPtr& algebra, int cap);

}  // namespace siltlab
