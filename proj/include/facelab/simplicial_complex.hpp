#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace facelab {

/// A simplex as its sorted list of vertex labels (labels start at 1).
using Simplex = std::vector<int>;

/// Subset of [m] packed into a word; bit j-1 stands for label j.
using VertexMask = std::uint64_t;

VertexMask mask_of(std::span<const int> labels);
std::vector<int> labels_of(VertexMask mask);
std::string format_set(VertexMask mask);
std::string format_simplex(const Simplex& s);
/// All subsets of [m] ordered by (size, lexicographic labels); ∅ first.
std::vector<VertexMask> subsets_by_size(int m);

/// Finite abstract simplicial complex on the label set 1..m.
///
/// Simplices are grouped by dimension, each group sorted lexicographically,
/// so every simplex has a stable (dimension, local index) address and a
/// global id. The empty simplex is always present as the unique simplex of
/// dimension -1; it is part of every complex, including {∅}.
class SimplicialComplex {
public:
    /// The complex {∅} on zero vertices.
    SimplicialComplex();

    /// Builds from a list that is already downward closed. Duplicates are
    /// dropped; closure is verified and a ValidationError thrown if missing.
    static SimplicialComplex from_closed(int vertex_count, std::vector<Simplex> simplices);

    int vertex_count() const { return vertex_count_; }
    /// Top dimension, -1 for {∅}.
    int dimension() const { return static_cast<int>(by_dim_.size()) - 2; }

    /// Number of simplices of the given dimension (dim >= -1).
    std::size_t count(int dim) const;
    /// Total number of simplices, the empty one included.
    std::size_t size() const { return offsets_.empty() ? 0 : offsets_.back(); }
    std::size_t nonempty_count() const { return size() - 1; }

    const Simplex& simplex(int dim, std::size_t local) const;
    const std::vector<Simplex>& simplices(int dim) const;
    std::optional<std::size_t> index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_of(s).has_value(); }

    std::size_t global_id(int dim, std::size_t local) const;

    /// f-vector (f_0, ..., f_dim).
    std::vector<std::size_t> f_vector() const;
    std::vector<Simplex> maximal_simplices() const;
    /// True iff every label 1..m is a vertex.
    bool is_minimal() const;
    std::vector<int> vertices() const;

    /// Optional provenance per vertex label: for subdivisions the simplex a
    /// barycenter stands for, for full subcomplexes the original label.
    const std::vector<Simplex>& vertex_tags() const { return tags_; }
    void set_vertex_tags(std::vector<Simplex> tags);

    bool operator==(const SimplicialComplex& other) const;

private:
    void index();

    int vertex_count_ = 0;
    std::vector<std::vector<Simplex>> by_dim_;  // slot d+1 holds dimension d
    std::vector<std::size_t> offsets_;          // prefix sums over slots
    std::vector<Simplex> tags_;
};

/// Membership mask of a subcomplex inside a fixed ambient complex. The empty
/// simplex is implicit; a subcomplex is "empty" when it has no vertices.
class Subcomplex {
public:
    Subcomplex() = default;

    static Subcomplex none(const SimplicialComplex& y);
    static Subcomplex all(const SimplicialComplex& y);
    /// Throws ValidationError when `sub` is not a subcomplex of `y`.
    static Subcomplex from_complex(const SimplicialComplex& y, const SimplicialComplex& sub);
    /// Downward closure of the listed simplices inside y.
    static Subcomplex closure(const SimplicialComplex& y, const std::vector<Simplex>& simplices);
    /// Raw membership flags in[d][local] for d >= 0 (shape must match y);
    /// closure is not checked.
    static Subcomplex from_membership(std::vector<std::vector<char>> in) {
        Subcomplex s;
        s.in_ = std::move(in);
        return s;
    }
    /// Full (induced) subcomplex on the vertex labels flagged in `keep` (index = label).
    static Subcomplex induced(const SimplicialComplex& y, const std::vector<char>& keep);

    bool contains(int dim, std::size_t local) const;
    bool is_empty() const;
    std::size_t cell_count() const;
    std::size_t count(int dim) const;
    bool subset_of(const Subcomplex& other) const;

    Subcomplex operator&(const Subcomplex& other) const;
    Subcomplex operator|(const Subcomplex& other) const;
    bool operator==(const Subcomplex& other) const = default;

    /// Same labels as y, only the member simplices.
    SimplicialComplex to_complex(const SimplicialComplex& y) const;

private:
    std::vector<std::vector<char>> in_;  // in_[d][local] for d >= 0
};

/// Downward closure of a list of maximal simplices on [m]. Duplicates and
/// simplices contained in another listed one are absorbed; a warning for
/// each is appended to `warnings` when provided.
SimplicialComplex build_complex(int m, const std::vector<Simplex>& maximal,
                                std::vector<std::string>* warnings = nullptr);

/// K_J relabeled onto 1..|J| in ascending order; tags keep the original labels.
SimplicialComplex full_subcomplex(const SimplicialComplex& k, VertexMask j);
SimplicialComplex full_subcomplex(const SimplicialComplex& k, std::span<const int> j);

/// K' with vertices the nonempty simplices of K ordered by (dimension,
/// lexicographic); vertex label i+1 is the i-th simplex in that order.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

/// The subcomplex F_σ of K' spanned by chains whose members all contain σ.
/// Uses the labeling of barycentric_subdivision(k).
SimplicialComplex face_subcomplex(const SimplicialComplex& k, const Simplex& sigma);

/// Cone with a fresh apex labeled m+1.
SimplicialComplex cone(const SimplicialComplex& k);

/// Nerve of a family of subcomplexes of y: {i_1..i_k} spans a simplex iff
/// the members share a vertex. Labels follow the family order (1-based).
SimplicialComplex nerve(const SimplicialComplex& y, const std::vector<Subcomplex>& family);

/// Chains of a finite poset as a simplicial complex. Elements are given in
/// a linear extension (element i becomes label i+1) and `above[i]` lists
/// the elements strictly greater than i. Only elements flagged in `keep`
/// take part; the labeling still spans all elements.
SimplicialComplex order_complex(const std::vector<std::vector<int>>& above,
                                const std::vector<char>& keep);

}  // namespace facelab
