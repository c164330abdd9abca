#pragma once

#include "facelab/chain_complex.hpp"
#include "facelab/panel_complex.hpp"

#include <string>
#include <vector>

namespace facelab {

enum class PairKind {
    disk_sphere,   // (D^{n+1}, S^n)
    sphere_point,  // (S^{n+1}, pt)
};

/// One pair per panel, all of the same kind, with dimensions n_1..n_m.
struct SpherePairSpec {
    std::vector<int> dims;
    PairKind kind = PairKind::disk_sphere;

    int size() const { return static_cast<int>(dims.size()); }
    /// J_0 = {j : n_j = 0}.
    VertexMask zero_dims() const;
    /// N_J = sum of n_j over J.
    int dim_sum(VertexMask j) const;
    /// Uniform spec n, ..., n of length m.
    static SpherePairSpec uniform(int m, int n, PairKind kind = PairKind::disk_sphere);
    /// "1,1,0" -> dims; ValidationError on junk or negative entries.
    static SpherePairSpec parse(const std::string& text, PairKind kind = PairKind::disk_sphere);
    std::string to_string() const;
};

/// Cellular chains of a polyhedral product with explicit cells.
struct ProductComplex {
    ChainComplex chains;
    /// Per degree (index n - min_degree): "base|w_1,...,w_m" labels, filled
    /// only when requested.
    std::vector<std::vector<std::string>> labels;
};

/// (X, A)^{(Y, P)} with X_j, A_j from the spec. Cells: base cell c of Y
/// times a pattern of factor cells whose X-only cells lie in panels
/// containing c. Ordered by (base cell id, pattern lexicographic) within
/// each degree; Koszul signs with the base factor first.
ProductComplex mac_chain_complex_panel(const PanelComplex& p, const SpherePairSpec& spec,
                                       bool with_labels = false, Parallelism par = {});

/// Classical (X, A)^K over a simplicial complex on [m]: patterns whose set of
/// X-only coordinates is a simplex of K.
ProductComplex mac_chain_complex_classical(const SimplicialComplex& k, const SpherePairSpec& spec,
                                           bool with_labels = false);

/// Sparse-triplet JSON dump of all boundary matrices.
std::string chain_complex_json(const ProductComplex& c);

}  // namespace facelab
