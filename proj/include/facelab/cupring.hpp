#pragma once

#include "facelab/cohomology.hpp"
#include "facelab/panel_complex.hpp"
#include "facelab/polyprod.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace facelab {

/// δu for a p-cochain of y (indexed by local simplex index), in degree p+1.
Cochain simplicial_coboundary(const SimplicialComplex& y, const Cochain& u, int p);

/// Alexander-Whitney product with no checks; empty when p+q exceeds dim y.
Cochain alexander_whitney(const SimplicialComplex& y, const Cochain& u, int p, const Cochain& v, int q);

/// Alexander-Whitney cup product u ∪ v with vertices ordered by label:
/// (u ∪ v)[v0..v(p+q)] = u[v0..vp] · v[vp..v(p+q)].
/// u must be a cocycle vanishing on a, v a cocycle vanishing on b; the
/// result is a cocycle vanishing on a ∪ b. ValidationError otherwise.
Cochain simplicial_cup(const SimplicialComplex& y, const Cochain& u, int p, const Cochain& v, int q,
                       const Subcomplex& a, const Subcomplex& b);

/// A graded ring with a finite generating set, stored by structure constants.
/// Basis elements are cohomology generators of H^q(Y, P_J) for the blocks J;
/// torsion generators carry their order and coefficients on them are taken
/// modulo that order.
struct RingBasisElement {
    VertexMask j = 0;
    int q = 0;            // degree inside H^*(Y, P_J)
    int degree = 0;       // q + N_J
    std::size_t generator = 0;
    Integer order = 0;    // 0 = free
    std::string label;
};

using RingVector = std::vector<std::pair<std::size_t, Integer>>;  // sparse, sorted by index

class RingModel {
public:
    const std::vector<RingBasisElement>& basis() const { return basis_; }
    std::size_t size() const { return basis_.size(); }
    const Domain& domain() const { return domain_; }
    const SpherePairSpec& spec() const { return spec_; }

    /// Product of two basis elements.
    const RingVector& product(std::size_t a, std::size_t b) const;
    /// Bilinear extension, normalized.
    RingVector multiply(const RingVector& x, const RingVector& y) const;
    /// Drops zeros, reduces modulo torsion orders and the characteristic.
    RingVector normalize(std::vector<std::pair<std::size_t, Integer>> x) const;

    /// Underlying graded group by total degree.
    GradedGroup additive() const;
    /// Basis indices of block J in degree q (empty when absent).
    std::vector<std::size_t> block(VertexMask j, int q) const;
    /// Nonzero structure constants, (a, b) ascending.
    const std::map<std::pair<std::size_t, std::size_t>, RingVector>& table() const { return table_; }

    std::string description;

private:
    friend RingModel ds_ring(const PanelComplex&, const SpherePairSpec&, Domain, Parallelism);

    std::vector<RingBasisElement> basis_;
    std::map<std::pair<std::size_t, std::size_t>, RingVector> table_;
    Domain domain_ = Domain::integers();
    SpherePairSpec spec_;
};

/// The ring ⊕_J H^*(Y, P_J) for (D^{n_j+1}, S^{n_j}) pairs: block J times
/// block J' vanishes when some j in J ∩ J' has n_j >= 1, otherwise it is the
/// relative cup product into block J ∪ J', with sign
/// (-1)^{N_J q' + Σ_{j∈J, j'∈J', j>j'} n_j n_j'} (fixed generator order of
/// the sphere factors, ascending j).
RingModel ds_ring(const PanelComplex& p, const SpherePairSpec& spec, Domain domain = Domain::integers(),
                  Parallelism par = {});

}  // namespace facelab
