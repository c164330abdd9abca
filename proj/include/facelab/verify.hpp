#pragma once

#include "facelab/decomp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace facelab {

/// Formula against brute force for one panel structure and spec.
struct VerifyOutcome {
    bool ok = true;
    Decomposition formula;
    GradedGroup oracle;                     // cohomology of the panel model
    std::optional<GradedGroup> classical;   // cohomology of the classical model, when K is known
    std::size_t oracle_cells = 0;
    /// First degree where any two answers differ, with the J whose
    /// summands are nonzero there.
    std::optional<int> first_degree;
    std::vector<VertexMask> offending;
    std::string diagnostic;
};

enum class DecompMode { x_contractible, a_contractible };

/// X mode compares against (D^{n+1}, S^n) products, A mode against
/// (S^{n+1}, pt) products. `k` enables the classical comparison.
VerifyOutcome verify_decomposition(const PanelComplex& p, const SpherePairSpec& spec, DecompMode mode,
                                   const SimplicialComplex* k = nullptr, Parallelism par = {});

/// Every simplicial complex on exactly m labels (all downward-closed
/// families containing ∅, ghost vertices allowed), in a fixed order.
std::vector<SimplicialComplex> all_complexes_on(int m);

struct SweepResult {
    std::size_t complexes = 0;
    std::size_t checks = 0;
    std::vector<std::string> failures;
};

/// For every complex on <= max_vertices labels and each uniform n: the
/// X-contractible total over Y^K equals the cohomology of the classical
/// model and of the panel model.
SweepResult oracle_sweep(int max_vertices, const std::vector<int>& ns, Parallelism par = {});

}  // namespace facelab
