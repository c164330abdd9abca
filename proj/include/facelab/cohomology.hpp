#pragma once

#include "facelab/graded_group.hpp"
#include "facelab/simplicial_chains.hpp"
#include "facelab/smith.hpp"

#include <memory>
#include <vector>

namespace facelab {

/// A cochain of one dimension, indexed by the local simplex index in the
/// ambient complex (entries outside the relevant cells are zero).
using Cochain = std::vector<Integer>;

/// Explicit cohomology of a pair (space, pair) of subcomplexes of an ambient
/// complex: a generating set of cocycle representatives per degree (free
/// generators first, then torsion generators with their orders) and the
/// coordinate map from cocycles to that basis.
///
/// Degree 0 uses the canonical basis of indicator functions of the
/// components of `space` that avoid `pair`, ordered by smallest vertex.
class SimplicialCohomology {
public:
    SimplicialCohomology(std::shared_ptr<const SimplicialComplex> ambient, Subcomplex space,
                         Subcomplex pair, Domain domain = Domain::integers());

    const SimplicialComplex& ambient() const { return *y_; }
    const std::shared_ptr<const SimplicialComplex>& ambient_ptr() const { return y_; }
    const Subcomplex& space() const { return space_; }
    const Subcomplex& pair() const { return pair_; }
    const Domain& domain() const { return domain_; }
    int max_degree() const { return y_->dimension(); }

    std::size_t size(int n) const;
    const Cochain& generator(int n, std::size_t i) const;
    /// 0 for a free generator, otherwise the order of a torsion generator.
    const Integer& order(int n, std::size_t i) const;
    GroupPiece group(int n) const;
    GradedGroup groups() const;

    /// True iff z is supported on the cells of (space, pair) and δz = 0.
    bool is_cocycle(int n, const Cochain& z) const;
    /// Coordinates of the class of z; torsion coordinates reduced modulo
    /// their order. Throws InternalError if z is not a relative cocycle.
    std::vector<Integer> coordinates(int n, const Cochain& z) const;
    /// The class of sum_i c_i g_i as a cochain.
    Cochain combination(int n, const std::vector<Integer>& c) const;

    /// δz restricted to the cells of (space, pair), ambient-indexed in degree n+1.
    Cochain coboundary(int n, const Cochain& z) const;

private:
    struct Degree {
        std::vector<Cochain> generators;
        std::vector<Integer> orders;
        std::size_t free_count = 0;
        // general degrees
        std::unique_ptr<SmithReduction> incoming;  // δ^{n-1}
        std::unique_ptr<SmithReduction> kernel;    // δ^n U^{-1} on non-pivot coordinates
        std::vector<std::size_t> non_pivot_rows;
        std::vector<std::size_t> free_columns;
        std::vector<std::size_t> torsion_rows;
        // degree 0
        std::vector<std::size_t> anchors;
    };

    void build_degree_zero();
    void build_degree(int n);
    std::vector<Integer> to_positions(int n, const Cochain& z, bool* ok) const;
    Cochain from_positions(int n, const std::vector<Integer>& x) const;

    std::shared_ptr<const SimplicialComplex> y_;
    Subcomplex space_;
    Subcomplex pair_;
    Domain domain_;
    SimplicialChains chains_;
    std::vector<IntMatrix> coboundary_;  // coboundary_[n] = δ^n in chain positions
    std::vector<Degree> degrees_;
};

/// Matrix of the restriction map H^n(B, B') -> H^n(A, A') for A ⊆ B and
/// A' ⊆ B' inside the same ambient complex, on the chosen bases (column j =
/// coordinates of the restricted j-th generator).
IntMatrix induced_inclusion_map(const SimplicialCohomology& from, const SimplicialCohomology& to, int n);

}  // namespace facelab
