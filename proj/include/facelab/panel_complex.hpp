#pragma once

#include "facelab/parallel.hpp"
#include "facelab/simplicial_complex.hpp"
#include "facelab/simplicial_poset.hpp"

#include <memory>
#include <string>
#include <vector>

namespace facelab {

/// A connected component of some panel intersection P_∩J.
struct PanelFace {
    VertexMask index = 0;    // I_f = {j : f ⊆ P_j}
    std::size_t anchor = 0;  // smallest global cell id in the component
    Subcomplex cells;
};

/// A simplicial complex Y with panels P_1..P_m (subcomplexes) and the
/// derived face structure. Panel labels run 1..m; subsets of panels are
/// VertexMasks (bit j-1 for panel j).
class PanelComplex {
public:
    /// Throws ValidationError when a panel does not fit the ambient complex.
    static PanelComplex build(std::shared_ptr<const SimplicialComplex> y, std::vector<Subcomplex> panels,
                              Parallelism par = {});

    const SimplicialComplex& space() const { return *y_; }
    const std::shared_ptr<const SimplicialComplex>& space_ptr() const { return y_; }
    int panel_count() const { return static_cast<int>(panels_.size()); }
    const Subcomplex& panel(int j) const { return panels_.at(static_cast<std::size_t>(j - 1)); }
    const std::vector<Subcomplex>& panels() const { return panels_; }
    VertexMask all_panels() const;

    /// I(c) for the cell (dim, local) of Y.
    VertexMask cell_index(int dim, std::size_t local) const;
    /// P_J (P_∅ = ∅).
    Subcomplex union_of(VertexMask j) const;
    /// P_∩J (P_∩∅ = Y).
    Subcomplex intersection(VertexMask j) const;
    /// Cells of Y in no panel.
    Subcomplex core() const;

    /// All faces, ordered by (|I_f|, I_f, anchor).
    const std::vector<PanelFace>& faces() const { return faces_; }
    /// Faces that are components of P_∩J (indices into faces()), by anchor.
    const std::vector<std::size_t>& faces_over(VertexMask j) const;
    /// c_J: number of connected components of P_∩J.
    std::size_t component_count(VertexMask j) const { return faces_over(j).size(); }
    /// Face order by inclusion.
    bool face_leq(std::size_t a, std::size_t b) const;
    /// The face over J whose cells contain the given vertex label of Y.
    std::optional<std::size_t> face_through(VertexMask j, int vertex_label) const;

    /// Free-form provenance lines ("Y^K over ...").
    std::string description;

private:
    std::shared_ptr<const SimplicialComplex> y_;
    std::vector<Subcomplex> panels_;
    std::vector<std::vector<VertexMask>> cell_index_;  // [dim][local]
    std::vector<PanelFace> faces_;
    std::vector<std::vector<std::size_t>> faces_over_;  // by mask
};

PanelComplex panelize_generic(const SimplicialComplex& y, const std::vector<std::vector<Simplex>>& panels,
                              Parallelism par = {});

/// (Y^K, P): Y is the cone over K' (apex = last label), P_j = F_{v_j}.
/// K must be minimal.
PanelComplex panelize_simplicial(const SimplicialComplex& k, Parallelism par = {});

/// Y^K for a K that may have ghost vertices: panels F_j for the vertices
/// of K and the empty panel for every label in no simplex. Agrees with
/// panelize_simplicial when K is minimal.
PanelComplex panelize_simplicial_with_ghosts(const SimplicialComplex& k, Parallelism par = {});

/// (Y^S, P): Y is the cone over Sd(Δ^S), P_j spanned by the elements whose
/// vertex set contains j. The Y-vertex of element e is poset_vertex_label(s, e).
PanelComplex panelize_poset(const SimplicialPoset& s, Parallelism par = {});
int poset_vertex_label(const SimplicialPoset& s, int element);

/// Coarsening of (Y^K, P): panel i is the union of F_{v_j} over j in block i.
/// Blocks must partition [m].
PanelComplex panelize_partition(const SimplicialComplex& k, const std::vector<std::vector<int>>& blocks,
                                Parallelism par = {});

}  // namespace facelab
