#pragma once

#include "siltlab/bn.hpp"
#include "siltlab/silting.hpp"
#include "siltlab/tilting.hpp"

namespace siltlab {

struct RepClassification {
    bool is_projective = false;
    bool is_injective = false;
    bool is_contractible = false;  // image under theta is acyclic
    bool in_rep_p = false;
    bool in_rep_i = false;
    bool contractible_projective = false;
    bool contractible_injective = false;
    std::optional<int> pdim;     // by resolution
    std::optional<int> injdim;   // by dual resolution
    // Structural predictions from the column positions, defined for modules
    // in the projective-column (resp. injective-column) subcategory after
    // stripping projective (resp. injective) summands.
    std::optional<int> formula_pd;
    std::optional<int> formula_injdim;
};

RepClassification classify(const BnAlgebra& bn, const Representation& m, int cap = 32);

/// From an n-silting complex to a tilting module: pack the minimal model as
/// a column module and adjoin one copy of each contractible projective
/// (regular module at columns j < 0). NotNSilting when the input fails the
/// n-silting test.
Representation silting_to_tilting(const BnAlgebra& bn, const ChainComplex& x);

/// From an (n-1)-tilting module with projective columns to its n-silting
/// complex: the minimal model of its image under theta. NotInRepP /
/// NotTilting on violated hypotheses.
ChainComplex tilting_to_silting(const BnAlgebra& bn, const Representation& t);

struct ExtTransportReport {
    int module_side = 0;   // dim Ext^j over the column algebra
    int derived_side = 0;  // dim Hom(theta(M), theta(N)[j]) in the derived category
    bool hypothesis_met = false;
    bool agree() const { return module_side == derived_side; }
};

/// Both sides of the homological-embedding comparison, computed by
/// independent engines. Flagged (not rejected) when neither the
/// projective-column nor the injective-column hypothesis holds.
ExtTransportReport ext_transport(const BnAlgebra& bn, const Representation& m,
                                 const Representation& n, int j, int cap = 32);

}  // namespace siltlab
