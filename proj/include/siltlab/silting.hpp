#pragma once

#include "siltlab/homtable.hpp"
#include "siltlab/minimal.hpp"

namespace siltlab {

struct SiltingTriangle {
    ChainComplex from;          // the stage source X_k
    ChainMap approximation;     // X_k -> T'_k with T'_k in add(T)
    ChainComplex cone_minimal;  // X_{k+1}: minimal model of the cone
};

struct SiltingCertificate {
    std::vector<int> presilting_window;  // positive shifts checked
    std::vector<SiltingTriangle> coresolution;
    int steps = 0;
};

struct SiltingResult {
    Verdict verdict = Verdict::False;
    SiltingCertificate certificate;
    std::string note;
};

/// Hom(T, T[i]) = 0 for every positive shift in the support window of the
/// minimal model. Requires a perfect complex (NotPerfect).
bool is_presilting(const ChainComplex& t);

/// Minimal left add(T)-approximation of x: the universal map into copies of
/// the indecomposable summands of T indexed by homotopy-class bases, with
/// redundant copies stripped.
ChainMap left_add_approx(const ChainComplex& x, const ChainComplex& t);

int default_silting_step_cap(const ChainComplex& t);

/// Silting test: presilting, plus the iterated approximation cones starting
/// from the regular module in degree 0 reach the zero complex. Exhausting
/// the step cap yields Undecided, never a false verdict.
SiltingResult is_silting(const ChainComplex& t, int step_cap = -1);

/// Silting with minimal model supported in [-n+1, 0].
bool is_n_silting(const ChainComplex& t, int n, int step_cap = -1);

struct ClassMembershipReport {
    std::map<int, bool> vanishes;  // shift -> Hom(T, V[shift]) vanishes
    bool member = false;
};

/// Membership of V in the orthogonal class of T at positive shifts.
ClassMembershipReport silting_class_member(const ChainComplex& t, const ChainComplex& v);

/// Support interval (lo, hi) of the minimal model.
std::pair<int, int> intermediate_window(const ChainComplex& t);

enum class AisleVerdict { InAisle, NotInAisle, Unknown };

struct AisleWitness {
    AisleVerdict verdict = AisleVerdict::Unknown;
    std::string note;
    int counterexample_degree = 0;  // stalk degree of the witnessing member
};

/// Membership of the perfect complex X in the left orthogonal of the class
/// of T (the aisle of the associated co-t-structure). Sufficient InAisle
/// certificates: zero object, support above the window of T, a finite tower
/// of cones from negative shifts of add(T). NotInAisle is witnessed by a
/// class member V with Hom(X, V) != 0. Three-valued by design.
AisleWitness aisle_witness(const ChainComplex& t, const ChainComplex& x, int step_cap = -1);

/// Cosilting via the dual silting test over the opposite algebra. Requires
/// bounded injective terms (NotInjectiveTerms).
SiltingResult is_cosilting(const ChainComplex& c, int step_cap = -1);

/// Membership of V in the left orthogonal class of C at positive shifts.
ClassMembershipReport cosilting_class_member(const ChainComplex& c, const ChainComplex& v);

/// Exhaustive-at-desk-scale enumeration of the equivalence classes of
/// silting complexes with minimal model supported in [-1, 0]: indecomposable
/// two-term presilting candidates are collected (stalks plus decomposed
/// samples of radical differentials), and compatibility cliques of size
/// #vertices are verified by is_silting. BudgetExceeded above the dimension
/// threshold.
std::vector<ChainComplex> enumerate_two_term_silting(const AlgebraPtr& a, int dim_budget = 30);

}  // namespace siltlab
