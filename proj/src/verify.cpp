#include "facelab/verify.hpp"

#include "facelab/errors.hpp"

#include <functional>
#include <set>

namespace facelab {

namespace {

std::optional<int> first_difference(const GradedGroup& a, const GradedGroup& b) {
    std::set<int> degrees;
    for (const auto& [d, piece] : a.pieces()) degrees.insert(d);
    for (const auto& [d, piece] : b.pieces()) degrees.insert(d);
    for (int d : degrees)
        if (!(a.at(d) == b.at(d))) return d;
    return std::nullopt;
}

}  // namespace

VerifyOutcome verify_decomposition(const PanelComplex& p, const SpherePairSpec& spec, DecompMode mode,
                                   const SimplicialComplex* k, Parallelism par) {
    VerifyOutcome out;
    SpherePairSpec oracle_spec = spec;
    if (mode == DecompMode::x_contractible) {
        oracle_spec.kind = PairKind::disk_sphere;
        out.formula = summands_X_contractible(p, spec, par);
    } else {
        oracle_spec.kind = PairKind::sphere_point;
        out.formula = summands_A_contractible(p, spec, par);
    }
    const auto product = mac_chain_complex_panel(p, oracle_spec, false, par);
    int bad = 0;
    if (!product.chains.boundary_squares_to_zero(&bad)) {
        throw InternalError("boundary of the product complex does not square to zero in degree " +
                            std::to_string(bad));
    }
    out.oracle_cells = product.chains.total_cells();
    out.oracle = cohomology_groups(product.chains, Domain::integers(), par);
    if (k) {
        const auto classical = mac_chain_complex_classical(*k, oracle_spec);
        if (!classical.chains.boundary_squares_to_zero(&bad)) {
            throw InternalError("boundary of the classical complex does not square to zero in degree " +
                                std::to_string(bad));
        }
        out.classical = cohomology_groups(classical.chains, Domain::integers(), par);
    }
    std::optional<int> d = first_difference(out.formula.total, out.oracle);
    if (out.classical) {
        const auto d2 = first_difference(out.formula.total, *out.classical);
        if (d2 && (!d || *d2 < *d)) d = d2;
    }
    if (d) {
        out.ok = false;
        out.first_degree = d;
        for (const auto* s : out.formula.nonzero())
            if (!s->group.at(*d).is_zero()) out.offending.push_back(s->j);
        std::string js;
        for (VertexMask j : out.offending) js += (js.empty() ? "" : " ") + format_set(j);
        out.diagnostic = "mismatch in degree " + std::to_string(*d) + ": formula " +
                         out.formula.total.at(*d).describe() + ", panel oracle " + out.oracle.at(*d).describe() +
                         (out.classical ? ", classical oracle " + out.classical->at(*d).describe() : "") +
                         "; summands J in this degree: " + (js.empty() ? "none" : js);
    }
    return out;
}

std::vector<SimplicialComplex> all_complexes_on(int m) {
    if (m < 0 || m > 5) throw ValidationError("complex enumeration supports 0..5 vertices");
    std::vector<VertexMask> order = subsets_by_size(m);
    order.erase(order.begin());  // ∅ is always present
    std::vector<char> in(std::size_t{1} << m, 0);
    in[0] = 1;
    std::vector<SimplicialComplex> out;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == order.size()) {
            std::vector<Simplex> simplices;
            for (VertexMask s = 0; s < in.size(); ++s)
                if (in[s]) simplices.push_back(labels_of(s));
            out.push_back(SimplicialComplex::from_closed(m, simplices));
            return;
        }
        const VertexMask s = order[i];
        rec(i + 1);
        for (int v : labels_of(s))
            if (!in[s & ~(VertexMask{1} << (v - 1))]) return;
        in[s] = 1;
        rec(i + 1);
        in[s] = 0;
    };
    rec(0);
    return out;
}

SweepResult oracle_sweep(int max_vertices, const std::vector<int>& ns, Parallelism par) {
    std::vector<SimplicialComplex> complexes;
    for (int m = 0; m <= max_vertices; ++m) {
        auto list = all_complexes_on(m);
        complexes.insert(complexes.end(), list.begin(), list.end());
    }
    SweepResult result;
    result.complexes = complexes.size();
    std::vector<std::vector<std::string>> failures(complexes.size());
    parallel_for(complexes.size(), par, [&](std::size_t i) {
        const auto& k = complexes[i];
        const auto p = panelize_simplicial_with_ghosts(k, Parallelism{1});
        for (int n : ns) {
            const auto spec = SpherePairSpec::uniform(k.vertex_count(), n);
            const auto v = verify_decomposition(p, spec, DecompMode::x_contractible, &k, Parallelism{1});
            if (!v.ok) {
                std::string facets;
                for (const auto& s : k.maximal_simplices()) facets += format_simplex(s);
                failures[i].push_back("m=" + std::to_string(k.vertex_count()) + " K=" + facets + " n=" +
                                      std::to_string(n) + ": " + v.diagnostic);
            }
        }
    });
    result.checks = complexes.size() * ns.size();
    for (auto& f : failures) result.failures.insert(result.failures.end(), f.begin(), f.end());
    return result;
}

}  // namespace facelab
