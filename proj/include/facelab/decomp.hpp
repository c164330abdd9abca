#pragma once

#include "facelab/graded_group.hpp"
#include "facelab/panel_complex.hpp"
#include "facelab/polyprod.hpp"
#include "facelab/simplicial_poset.hpp"

#include <string>
#include <vector>

namespace facelab {

/// One cohomology group per subset J of [m] plus their degreewise sum.
/// Summands are kept for every J in subsets_by_size order, zero ones
/// included, so a mismatch can be traced to a single J.
struct Decomposition {
    struct Summand {
        VertexMask j = 0;
        GradedGroup group;
        std::string source;  // "H^*(Y,P_J)[2]" style note
    };

    std::string formula;
    std::vector<Summand> summands;
    GradedGroup total;
    /// J left out because their summand is known to vanish (simplices of K).
    std::vector<VertexMask> skipped;

    const Summand* find(VertexMask j) const;
    /// Only the nonzero summands.
    std::vector<const Summand*> nonzero() const;
};

/// X_j contractible: summand J is H^*(Y, P_J) shifted up by N_J; the J = ∅
/// summand is H^*(Y). The total is the cohomology of the polyhedral product.
Decomposition summands_X_contractible(const PanelComplex& p, const SpherePairSpec& spec, Parallelism par = {});

/// A_j contractible, X_j a sphere of dimension n_j + 1: summand J ≠ ∅ is
/// H^*(P_∩J) shifted up by Σ_{j∈J}(n_j + 1); J = ∅ gives H^*(Y).
Decomposition summands_A_contractible(const PanelComplex& p, const SpherePairSpec& spec, Parallelism par = {});

struct HochsterOptions {
    /// Skip nonempty simplices J of K (K_J is a full simplex, so its
    /// reduced cohomology is zero). The skipped J are listed either way.
    bool skip_simplices = true;
    Parallelism par = {};
};

/// Cohomology of the moment-angle type complex over K by full subcomplexes:
/// entry (J, p) = H~^{p-nJ-1}(K_J) for a uniform spec n. J = ∅ gives Z in
/// degree 0. Mixed specs go through summands_X_contractible on Y^K.
/// K must be minimal.
Decomposition hochster_table(const SimplicialComplex& k, const SpherePairSpec& spec, HochsterOptions opt = {});

/// Poset version: K_J replaced by the order complex of S_J = {σ : V(σ) ⊆ J}.
Decomposition hochster_table(const SimplicialPoset& s, const SpherePairSpec& spec, HochsterOptions opt = {});

}  // namespace facelab
