#pragma once

#include "facelab/simplicial_complex.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace facelab {

/// A finite poset with a least element whose lower segments are Boolean
/// lattices. Rank-one elements are the vertices; each carries a label in
/// 1..m, and every element σ has the vertex set V(σ) of the atoms below it.
/// Two distinct elements may share a vertex set.
class SimplicialPoset {
public:
    /// Validates and builds the poset. `covers` holds pairs (a, b) with a
    /// covered by b; the order is their reflexive-transitive closure.
    /// `atom_labels` maps atom index -> label; when empty, atoms are labeled
    /// 1..m in element order. Throws ValidationError on any violation.
    static SimplicialPoset build(std::vector<std::string> names,
                                 const std::vector<std::pair<int, int>>& covers,
                                 const std::map<int, int>& atom_labels = {});

    std::size_t size() const { return names_.size(); }
    int bottom() const { return bottom_; }
    int vertex_count() const { return vertex_count_; }
    const std::string& name(int e) const { return names_.at(static_cast<std::size_t>(e)); }

    bool leq(int a, int b) const { return leq_[index(a, b)] != 0; }
    bool less(int a, int b) const { return a != b && leq(a, b); }
    /// Number of vertices of the simplex Δ^σ.
    int rank(int e) const { return rank_.at(static_cast<std::size_t>(e)); }
    VertexMask vertex_set(int e) const { return vertex_set_.at(static_cast<std::size_t>(e)); }
    /// Atom carrying the given vertex label.
    int atom(int label) const { return atom_of_label_.at(static_cast<std::size_t>(label - 1)); }

    /// Greatest common lower bound when it is unique.
    std::optional<int> meet(int a, int b) const;
    /// Least common upper bounds (possibly several, possibly none).
    const std::vector<int>& join(int a, int b) const { return join_[index(a, b)]; }

    /// All elements sorted by (rank, index): a linear extension.
    const std::vector<int>& linear_order() const { return order_; }
    /// Position of each element in linear_order().
    int position(int e) const { return position_.at(static_cast<std::size_t>(e)); }

private:
    std::size_t index(int a, int b) const {
        return static_cast<std::size_t>(a) * names_.size() + static_cast<std::size_t>(b);
    }

    std::vector<std::string> names_;
    std::vector<char> leq_;
    std::vector<int> rank_;
    std::vector<VertexMask> vertex_set_;
    std::vector<int> meet_;
    std::vector<std::vector<int>> join_;
    std::vector<int> atom_of_label_;
    std::vector<int> order_;
    std::vector<int> position_;
    int bottom_ = 0;
    int vertex_count_ = 0;
};

/// Face poset of a simplicial complex: one element per simplex (∅ = 0̂),
/// element order (dimension, lex), atoms labeled by their vertex.
SimplicialPoset face_poset(const SimplicialComplex& k);

/// Sd(Δ^S): chains of S \ {0̂}. Vertex labels follow linear_order() with
/// 0̂ skipped; tags hold the element index of each vertex.
SimplicialComplex poset_order_complex(const SimplicialPoset& s);

/// Sd(Δ^{S_J}) for the full subposet S_J = {σ : V(σ) ⊆ J}, on the same
/// labeling as poset_order_complex(s).
SimplicialComplex poset_order_complex(const SimplicialPoset& s, VertexMask j);

}  // namespace facelab
