#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "siltlab/matrix.hpp"

namespace siltlab {

/// Finite quiver with string-named vertices and arrows.
class Quiver {
public:
    struct Arrow {
        std::string name;
        int source;
        int target;
    };

    Quiver(std::vector<std::string> vertices,
           std::vector<std::tuple<std::string, std::string, std::string>> arrows);

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::string& vertex_name(int v) const { return vertices_[v]; }
    const Arrow& arrow(int a) const { return arrows_[a]; }
    int vertex_index(const std::string& name) const;
    int arrow_index(const std::string& name) const;

    /// Same quiver with every arrow reversed (names preserved).
    Quiver reversed() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> vertex_index_;
    std::map<std::string, int> arrow_index_;
};

/// A linear combination of parallel paths of length >= 2, each path given
/// as a sequence of arrow names in application order (first arrow applied
/// first; the algebra product p*q means "first q, then p").
struct Relation {
    struct Term {
        Scalar coeff;
        std::vector<std::string> path;
    };
    std::vector<Term> terms;
};

/// Residue-class representative path: arrow indices in application order.
/// Trivial paths have an empty arrow list.
struct BasisPath {
    int source;
    int target;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
};

/// Sparse linear combination of basis paths, sorted by index.
using LinComb = std::vector<std::pair<int, Scalar>>;

struct AlgebraInfo {
    int dimension;
    int num_vertices;
    int num_arrows;
    // (source vertex, target vertex, length, path rendered as arrow names) per
    // basis element, in basis order (length, then lex on arrow names).
    struct Entry {
        std::string source;
        std::string target;
        int length;
        std::string path;
    };
    std::vector<Entry> basis;
};

/// Finite-dimensional bound quiver algebra with a computed path basis and
/// multiplication table. Immutable after construction; share via AlgebraPtr.
class BoundQuiverAlgebra {
public:
    const Field& field() const { return field_; }
    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    int length_cap() const { return length_cap_; }

    int dimension() const { return static_cast<int>(basis_.size()); }
    const BasisPath& basis_path(int i) const { return basis_[i]; }
    int trivial_path(int vertex) const { return trivial_[vertex]; }

    /// Product b_i * b_j ("first b_j, then b_i"); zero when not composable.
    const LinComb& multiply(int i, int j) const { return mult_[i][j]; }

    /// Normal form of b * (the path given by arrow indices, applied after b).
    LinComb apply_arrows(const LinComb& b, const std::vector<int>& arrows) const;

    /// Normal form of an arbitrary word. For the empty word pass the vertex.
    LinComb word_normal_form(int source_vertex, const std::vector<int>& arrows) const;

    AlgebraInfo info() const;

    bool same_presentation(const BoundQuiverAlgebra& o) const;

private:
    friend std::shared_ptr<const BoundQuiverAlgebra> build_algebra(const Field&, const Quiver&,
                                                                   const std::vector<Relation>&,
                                                                   int);
    BoundQuiverAlgebra(Field f, Quiver q) : field_(std::move(f)), quiver_(std::move(q)) {}

    LinComb step(int basis_index, int arrow) const;  // b_i extended by one arrow

    Field field_;
    Quiver quiver_;
    std::vector<Relation> relations_;
    int length_cap_ = 0;
    std::vector<BasisPath> basis_;
    std::vector<int> trivial_;                  // e_v index per vertex
    std::vector<std::vector<LinComb>> step_;    // [basis][arrow]
    std::vector<std::vector<LinComb>> mult_;    // [i][j] = b_i * b_j
};

using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

/// Computes the path basis by row reduction of relation consequences,
/// length by length, stopping at the first length where every path reduces
/// to lower-length combinations. Throws NotFiniteDimensional when paths
/// survive at the cap.
AlgebraPtr build_algebra(const Field& field, const Quiver& quiver,
                         const std::vector<Relation>& relations, int length_cap = 64);

/// Opposite algebra: arrows reversed, relation paths reversed. Vertex and
/// arrow names are preserved, so opposite(opposite(A)) is A on the nose.
AlgebraPtr opposite(const AlgebraPtr& algebra);

}  // namespace siltlab
