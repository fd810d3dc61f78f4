#pragma once

#include "siltlab/complex.hpp"

namespace siltlab {

/// The column algebra over a base algebra A: one copy of A per column
/// j in {-n+1, ..., 0}, one horizontal arrow per base vertex and column,
/// commutativity squares, and zero composites of consecutive horizontal
/// arrows. Its modules are the length-n complexes of A-modules.
struct BnAlgebra {
    AlgebraPtr base;
    int n = 0;
    AlgebraPtr algebra;

    int column_lo() const { return -n + 1; }
    int vertex(int base_vertex, int column) const;
    int vertical_arrow(int base_arrow, int column) const;
    /// (v, j) -> (v, j+1), defined for column_lo() <= j <= -1.
    int horizontal_arrow(int base_vertex, int column) const;
};

BnAlgebra build_Bn(const AlgebraPtr& base, int n);

/// Columns become degrees, horizontal maps become differentials.
ChainComplex theta(const BnAlgebra& bn, const Representation& m);
ChainMap theta(const BnAlgebra& bn, const RepMorphism& f);

/// Inverse of theta on complexes supported in [-n+1, 0]
/// (SupportOutOfRange otherwise).
Representation theta_inv(const BnAlgebra& bn, const ChainComplex& x);
RepMorphism theta_inv(const BnAlgebra& bn, const ChainMap& f);

enum class SpecialFlavor { Lower, Upper };

/// The module X_j (lower) or X^j (upper): under theta, the two-term complex
/// with identity differential in degrees {j, j+1} (lower, j != 0) or
/// {j-1, j} (upper, j != -n+1); the boundary cases are stalks. Lower at j
/// equals upper at j+1.
Representation make_special(const BnAlgebra& bn, const Representation& x, int j,
                            SpecialFlavor flavor);

/// Direct sum of all (regular module)^j, j in {-n+1..0}: the canonical
/// (n-1)-tilting module in the projective-column subcategory.
Representation canonical_tilting(const BnAlgebra& bn);
/// Direct sum of all (injective cogenerator)_j: the canonical (n-1)-cotilting
/// module in the injective-column subcategory.
Representation canonical_cotilting(const BnAlgebra& bn);

/// Membership in the projective-column (resp. injective-column) subcategory:
/// every column of the module is projective (resp. injective) over the base.
bool in_rep_p(const BnAlgebra& bn, const Representation& m);
bool in_rep_i(const BnAlgebra& bn, const Representation& m);

}  // namespace siltlab
