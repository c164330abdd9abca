#pragma once

#include "facelab/chain_complex.hpp"
#include "facelab/simplicial_complex.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace facelab {

enum class ChainFlavor { absolute, relative, reduced };

/// Simplicial chains of (space, pair) inside an ambient complex y, with the
/// correspondence between chain positions and simplices of y.
struct SimplicialChains {
    static constexpr std::size_t npos = SIZE_MAX;

    ChainComplex complex;
    /// cells[n - lo] lists the local indices (within dimension n of y) of
    /// the n-cells, ascending. Degree -1 (reduced only) holds the empty simplex.
    std::vector<std::vector<std::size_t>> cells;
    /// position[n - lo][local] = chain index or npos.
    std::vector<std::vector<std::size_t>> position;

    int min_degree() const { return complex.min_degree(); }
    const std::vector<std::size_t>& cells_in(int n) const;
    std::size_t position_of(int n, std::size_t local) const;
};

/// Chains of space modulo pair (pair may be null). Orientation follows the
/// ascending vertex order: ∂[v0..vn] = Σ (-1)^i [v0..^vi..vn]. With
/// `reduced`, the empty simplex is a cell of degree -1 (it is ignored when
/// a pair is given, since both sides would contain it).
SimplicialChains simplicial_chains(const SimplicialComplex& y, const Subcomplex& space,
                                   const Subcomplex* pair = nullptr, bool reduced = false);

/// Convenience: absolute / reduced chains of k, or relative chains of (k, pair).
/// Throws ValidationError if pair is required and not a subcomplex of k.
ChainComplex chain_complex(const SimplicialComplex& k, ChainFlavor flavor,
                           const SimplicialComplex* pair = nullptr);

GradedGroup simplicial_homology(const SimplicialComplex& k, ChainFlavor flavor = ChainFlavor::absolute,
                                const SimplicialComplex* pair = nullptr,
                                Domain domain = Domain::integers());
GradedGroup simplicial_cohomology(const SimplicialComplex& k, ChainFlavor flavor = ChainFlavor::absolute,
                                  const SimplicialComplex* pair = nullptr,
                                  Domain domain = Domain::integers());

}  // namespace facelab
