#include "facelab/chain_complex.hpp"

#include "facelab/errors.hpp"
#include "facelab/smith.hpp"

namespace facelab {

ChainComplex::ChainComplex(int lo, std::vector<std::size_t> counts, std::vector<IntMatrix> boundaries)
    : lo_(lo), counts_(std::move(counts)), bd_(std::move(boundaries)) {
    const std::size_t expected = counts_.empty() ? 0 : counts_.size() - 1;
    if (bd_.size() != expected) {
        throw InternalError("chain complex: wrong number of boundary matrices");
    }
    for (std::size_t k = 0; k < bd_.size(); ++k) {
        if (bd_[k].rows() != counts_[k] || bd_[k].cols() != counts_[k + 1]) {
            throw InternalError("chain complex: boundary matrix shape mismatch in degree " +
                                std::to_string(lo_ + static_cast<int>(k) + 1));
        }
    }
}

std::size_t ChainComplex::cell_count(int n) const {
    if (n < lo_ || n > max_degree()) {
        return 0;
    }
    return counts_[static_cast<std::size_t>(n - lo_)];
}

std::size_t ChainComplex::total_cells() const {
    std::size_t s = 0;
    for (auto c : counts_) s += c;
    return s;
}

IntMatrix ChainComplex::boundary(int n) const {
    if (n <= lo_ || n > max_degree()) {
        return IntMatrix(cell_count(n - 1), cell_count(n));
    }
    return bd_[static_cast<std::size_t>(n - lo_ - 1)];
}

bool ChainComplex::boundary_squares_to_zero(int* failing_degree) const {
    for (std::size_t k = 0; k + 1 < bd_.size(); ++k) {
        if (!(bd_[k] * bd_[k + 1]).is_zero()) {
            if (failing_degree) *failing_degree = lo_ + static_cast<int>(k) + 2;
            return false;
        }
    }
    return true;
}

void ChainComplex::check() const {
    int bad = 0;
    if (!boundary_squares_to_zero(&bad)) {
        throw InternalError("boundary of boundary is nonzero at degree " + std::to_string(bad));
    }
}

ChainComplex ChainComplex::dual() const {
    if (counts_.empty()) {
        return {};
    }
    std::vector<std::size_t> counts(counts_.rbegin(), counts_.rend());
    std::vector<IntMatrix> bd;
    for (auto it = bd_.rbegin(); it != bd_.rend(); ++it) bd.push_back(it->transposed());
    return ChainComplex(-max_degree(), std::move(counts), std::move(bd));
}

long long ChainComplex::euler_characteristic() const {
    long long chi = 0;
    for (std::size_t k = 0; k < counts_.size(); ++k) {
        const int n = lo_ + static_cast<int>(k);
        chi += ((n % 2 == 0) ? 1 : -1) * static_cast<long long>(counts_[k]);
    }
    return chi;
}

GradedGroup homology_groups(const ChainComplex& c, Domain domain, Parallelism par) {
    GradedGroup out;
    if (c.empty()) {
        return out;
    }
    const int lo = c.min_degree(), hi = c.max_degree();
    // factors[k] = nonzero Smith diagonal of ∂_{lo+k}, k = 1..hi-lo
    std::vector<std::vector<Integer>> factors(static_cast<std::size_t>(hi - lo + 2));
    parallel_for(static_cast<std::size_t>(hi - lo), par, [&](std::size_t i) {
        const int n = lo + 1 + static_cast<int>(i);
        factors[i + 1] = invariant_factors(c.boundary(n), domain);
    });
    for (int n = lo; n <= hi; ++n) {
        const auto k = static_cast<std::size_t>(n - lo);
        const std::size_t rank_out = factors[k].size();
        const std::size_t rank_in = factors[k + 1].size();
        GroupPiece piece;
        piece.rank = c.cell_count(n) - rank_out - rank_in;
        if (!domain.is_field()) {
            for (const auto& d : factors[k + 1]) {
                if (d > 1) piece.torsion.push_back(d);
            }
        }
        out.add(n, piece);
    }
    return out;
}

GradedGroup cohomology_groups(const ChainComplex& c, Domain domain, Parallelism par) {
    GradedGroup mirrored = homology_groups(c.dual(), domain, par);
    GradedGroup out;
    for (const auto& [d, p] : mirrored.pieces()) out.add(-d, p);
    return out;
}

}  // namespace facelab
