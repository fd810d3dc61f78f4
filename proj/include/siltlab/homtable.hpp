#pragma once

#include "siltlab/complex.hpp"
#include "siltlab/resolution.hpp"

namespace siltlab {

struct HomEntry {
    int dim = 0;
    std::vector<ChainMap> basis;  // representatives of homotopy classes
};

/// Per-shift dimensions and bases of homotopy classes of chain maps.
/// Entries vanish outside [lo(Y)-hi(X), hi(Y)-lo(X)]. When derived is set the
/// homotopy classes compute derived Homs (X has projective terms or Y has
/// injective terms).
struct GradedHomTable {
    int lo = 0, hi = -1;  // shift window (empty when lo > hi)
    bool derived = false;
    std::map<int, HomEntry> entries;

    int dim_at(int s) const {
        auto it = entries.find(s);
        return it == entries.end() ? 0 : it->second.dim;
    }
};

/// Homotopy classes of chain maps X -> Y[s]: the chain-map linear system
/// solved exactly, modulo the image of the homotopy system.
HomEntry graded_hom(const ChainComplex& x, const ChainComplex& y, int s);

/// Dimension of the space of chain maps X -> Y[s] before passing to
/// homotopy classes (the Hom in the category of complexes).
int chain_map_space_dim(const ChainComplex& x, const ChainComplex& y, int s);

/// Full table over the support window. With derived = true the projectivity
/// or injectivity hypothesis is enforced (DerivedFlagRejected otherwise).
GradedHomTable hom_table(const ChainComplex& x, const ChainComplex& y, bool derived);

/// True iff the given chain map is a boundary in the Hom complex.
bool null_homotopic(const ChainMap& f);

/// Minimal projective resolution of a module laid out as a complex in
/// degrees -length .. 0.
ChainComplex resolution_complex(const Representation& m, int cap);

/// A complex of projectives quasi-isomorphic to X in degrees > cutoff,
/// built from covers of cycle pullbacks (top degree downwards).
ChainComplex projective_replacement(const ChainComplex& x, int cutoff);

/// Hom_D(X, Y[s]) for arbitrary bounded complexes: uses the homotopy
/// category directly when the hypothesis holds, otherwise replaces X by a
/// deep enough projective replacement.
int derived_hom_dim(const ChainComplex& x, const ChainComplex& y, int s);

/// Span tracker for homotopy classes in Hom(X, Y[s]): seeded with the
/// null-homotopic maps, then fed chain maps one by one.
class HomClassSpan {
public:
    HomClassSpan(ChainComplex x, ChainComplex y, int s);
    /// True iff the class of f was not yet in the span (and adds it).
    bool add(const ChainMap& f);
    bool contains(const ChainMap& f) const;
    std::size_t classes() const { return classes_; }

private:
    std::vector<Scalar> flat(const ChainMap& f) const;

    ChainComplex x_, y_;
    int s_;
    RowSpace span_;
    std::size_t classes_ = 0;
};

}  // namespace siltlab
