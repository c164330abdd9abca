#include "facelab/simplicial_chains.hpp"

#include "facelab/errors.hpp"

namespace facelab {

const std::vector<std::size_t>& SimplicialChains::cells_in(int n) const {
    static const std::vector<std::size_t> none;
    const int k = n - complex.min_degree();
    if (complex.empty() || k < 0 || k >= static_cast<int>(cells.size())) {
        return none;
    }
    return cells[static_cast<std::size_t>(k)];
}

std::size_t SimplicialChains::position_of(int n, std::size_t local) const {
    const int k = n - complex.min_degree();
    if (complex.empty() || k < 0 || k >= static_cast<int>(position.size())) {
        return npos;
    }
    const auto& p = position[static_cast<std::size_t>(k)];
    return local < p.size() ? p[local] : npos;
}

SimplicialChains simplicial_chains(const SimplicialComplex& y, const Subcomplex& space, const Subcomplex* pair,
                                   bool reduced) {
    SimplicialChains out;
    const bool augmented = reduced && pair == nullptr;
    const int lo = augmented ? -1 : 0;
    const int hi = y.dimension();
    if (hi < lo) {
        return out;
    }
    for (int n = lo; n <= hi; ++n) {
        std::vector<std::size_t> cells;
        std::vector<std::size_t> pos(y.count(n), SimplicialChains::npos);
        if (n == -1) {
            cells.push_back(0);
            pos[0] = 0;
        } else {
            for (std::size_t i = 0; i < y.count(n); ++i) {
                if (space.contains(n, i) && !(pair && pair->contains(n, i))) {
                    pos[i] = cells.size();
                    cells.push_back(i);
                }
            }
        }
        out.cells.push_back(std::move(cells));
        out.position.push_back(std::move(pos));
    }
    std::vector<std::size_t> counts;
    for (const auto& c : out.cells) counts.push_back(c.size());
    std::vector<IntMatrix> bd;
    for (int n = lo + 1; n <= hi; ++n) {
        const auto& cells = out.cells[static_cast<std::size_t>(n - lo)];
        const auto& below = out.position[static_cast<std::size_t>(n - 1 - lo)];
        std::vector<Triplet> t;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const Simplex& s = y.simplex(n, cells[c]);
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face;
                face.reserve(s.size() - 1);
                for (std::size_t j = 0; j < s.size(); ++j) {
                    if (j != i) face.push_back(s[j]);
                }
                const auto idx = y.index_of(face);
                const std::size_t row = below[*idx];
                if (row == SimplicialChains::npos) continue;
                t.push_back({row, c, Integer(i % 2 == 0 ? 1 : -1)});
            }
        }
        bd.push_back(IntMatrix::from_triplets(counts[static_cast<std::size_t>(n - 1 - lo)], cells.size(),
                                              std::move(t)));
    }
    out.complex = ChainComplex(lo, std::move(counts), std::move(bd));
    return out;
}

ChainComplex chain_complex(const SimplicialComplex& k, ChainFlavor flavor, const SimplicialComplex* pair) {
    const Subcomplex all = Subcomplex::all(k);
    switch (flavor) {
        case ChainFlavor::absolute:
            return simplicial_chains(k, all).complex;
        case ChainFlavor::reduced:
            return simplicial_chains(k, all, nullptr, true).complex;
        case ChainFlavor::relative: {
            if (!pair) {
                throw ValidationError("relative chains need a pair subcomplex");
            }
            if (pair->vertex_count() > k.vertex_count()) {
                throw ValidationError("pair is not a subcomplex: vertex labels exceed the ambient complex");
            }
            const Subcomplex p = Subcomplex::from_complex(k, *pair);
            return simplicial_chains(k, all, &p).complex;
        }
    }
    throw InternalError("unknown chain flavor");
}

GradedGroup simplicial_homology(const SimplicialComplex& k, ChainFlavor flavor, const SimplicialComplex* pair,
                                Domain domain) {
    return homology_groups(chain_complex(k, flavor, pair), domain);
}

GradedGroup simplicial_cohomology(const SimplicialComplex& k, ChainFlavor flavor, const SimplicialComplex* pair,
                                  Domain domain) {
    return cohomology_groups(chain_complex(k, flavor, pair), domain);
}

}  // namespace facelab
