#pragma once

#include "facelab/graded_group.hpp"
#include "facelab/int_matrix.hpp"
#include "facelab/parallel.hpp"

#include <cstddef>
#include <vector>

namespace facelab {

/// Free chain complex C_lo <- ... <- C_hi given by cell counts and
/// boundary matrices ∂_n : C_n -> C_{n-1} (rows = cells of degree n-1).
class ChainComplex {
public:
    ChainComplex() = default;
    /// counts[k] is the number of cells in degree lo + k; boundaries[k] is
    /// ∂_{lo+k+1}. Shapes are validated (InternalError).
    ChainComplex(int lo, std::vector<std::size_t> counts, std::vector<IntMatrix> boundaries);

    int min_degree() const { return lo_; }
    int max_degree() const { return lo_ + static_cast<int>(counts_.size()) - 1; }
    bool empty() const { return counts_.empty(); }
    std::size_t cell_count(int n) const;
    std::size_t total_cells() const;
    /// ∂_n; a zero matrix of the right shape outside the stored range.
    IntMatrix boundary(int n) const;

    /// First degree n with ∂_{n-1}∂_n != 0, if any.
    bool boundary_squares_to_zero(int* failing_degree = nullptr) const;
    /// Throws InternalError when ∂∂ != 0.
    void check() const;

    /// Cochains as a chain complex in mirrored degrees: degree -n holds the
    /// n-cochains and the differential is the transpose of ∂_{n+1}.
    ChainComplex dual() const;

    long long euler_characteristic() const;

private:
    int lo_ = 0;
    std::vector<std::size_t> counts_;
    std::vector<IntMatrix> bd_;
};

/// Homology over Z (domain = integers) or Z/p (torsion-free dimensions).
GradedGroup homology_groups(const ChainComplex& c, Domain domain = Domain::integers(),
                            Parallelism par = {1});
/// Cohomology, computed as the homology of the dual complex.
GradedGroup cohomology_groups(const ChainComplex& c, Domain domain = Domain::integers(),
                              Parallelism par = {1});

}  // namespace facelab
