#pragma once

#include <map>

#include "siltlab/rep.hpp"

namespace siltlab {

/// Bounded cohomological complex of representations: differentials raise
/// degree, d^{i+1} . d^i = 0. Zero terms are not stored.
struct ChainComplex {
    AlgebraPtr algebra;
    std::map<int, Representation> terms;
    std::map<int, RepMorphism> differentials;  // d^i : terms[i] -> terms[i+1]

    bool is_zero() const { return terms.empty(); }
    int lo() const { return terms.empty() ? 0 : terms.begin()->first; }
    int hi() const { return terms.empty() ? 0 : terms.rbegin()->first; }
    int width() const { return terms.empty() ? 0 : hi() - lo() + 1; }
    bool has_term(int i) const { return terms.count(i) != 0; }
    Representation term_at(int i) const;  // zero representation when absent
    RepMorphism differential_at(int i) const;
    int total_dim() const;
};

/// Checks shapes and the intertwining property of every differential;
/// d^2 = 0 is checked separately by validate_complex.
ChainComplex make_complex(AlgebraPtr algebra, std::map<int, Representation> terms,
                          std::map<int, RepMorphism> differentials);

/// True iff d^{i+1} . d^i = 0 everywhere.
bool validate_complex(const ChainComplex& x);

ChainComplex stalk(const Representation& m, int degree);

/// X[k]^i = X^{i+k} with differential (-1)^k d.
ChainComplex shift(const ChainComplex& x, int k);

/// A chain map of complexes at a fixed shift s: components
/// f^i : X^i -> Y^{i+s} with d_Y f = (-1)^s f d_X.
struct ChainMap {
    ChainComplex source;
    ChainComplex target;
    int shift = 0;
    std::map<int, RepMorphism> components;  // only where both ends are nonzero

    RepMorphism component_at(int i) const;
};

bool chain_map_valid(const ChainMap& f);
ChainMap zero_chain_map(const ChainComplex& x, const ChainComplex& y, int shift = 0);
ChainMap identity_chain_map(const ChainComplex& x);
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap add(const ChainMap& f, const ChainMap& g);
ChainMap scale(const ChainMap& f, const Scalar& c);
bool is_zero(const ChainMap& f);

/// cone(f)^i = X^{i+1} (+) Y^i with differential [-d_X 0; f d_Y].
/// Requires a shift-0 chain map (NotChainMap otherwise).
ChainComplex cone(const ChainMap& f);

/// H^i(X) = ker d^i / im d^{i-1} as a representation.
Representation cohomology(const ChainComplex& x, int i);
std::map<int, int> cohomology_dims(const ChainComplex& x);
bool is_acyclic(const ChainComplex& x);

struct ComplexDirectSum {
    ChainComplex sum;
    std::vector<ChainMap> inclusions;
    std::vector<ChainMap> projections;
};
ComplexDirectSum direct_sum_complex(const std::vector<ChainComplex>& parts);

/// Terms dualized vertex-wise, degrees negated, differentials transposed.
/// Projective terms become injective terms and vice versa.
ChainComplex dualize_complex(const ChainComplex& x, const AlgebraPtr& opposite_algebra);

bool projective_terms(const ChainComplex& x);
bool injective_terms(const ChainComplex& x, const AlgebraPtr& opposite_algebra);

/// On-the-nose equality of terms and differentials.
bool complex_equal(const ChainComplex& a, const ChainComplex& b);

}  // namespace siltlab
