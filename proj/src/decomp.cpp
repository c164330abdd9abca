#include "facelab/decomp.hpp"

#include "facelab/errors.hpp"
#include "facelab/simplicial_chains.hpp"

#include <bit>
#include <optional>

namespace facelab {

const Decomposition::Summand* Decomposition::find(VertexMask j) const {
    for (const auto& s : summands)
        if (s.j == j) return &s;
    return nullptr;
}

std::vector<const Decomposition::Summand*> Decomposition::nonzero() const {
    std::vector<const Summand*> out;
    for (const auto& s : summands)
        if (!s.group.is_zero()) out.push_back(&s);
    return out;
}

namespace {

void require_length(int m, const SpherePairSpec& spec) {
    if (spec.size() != m) {
        throw ValidationError("spec has " + std::to_string(spec.size()) + " entries, expected " +
                              std::to_string(m));
    }
}

GradedGroup cohomology_of(const SimplicialComplex& y, const Subcomplex& space, const Subcomplex* pair) {
    return cohomology_groups(simplicial_chains(y, space, pair).complex);
}

std::string shift_note(const std::string& base, int shift) {
    return shift == 0 ? base : base + "[" + std::to_string(shift) + "]";
}

// Fills the per-J slots in parallel and sums them in J order.
template <class Fn>
Decomposition collect(int m, std::string formula, Parallelism par, Fn&& summand) {
    Decomposition d;
    d.formula = std::move(formula);
    const auto order = subsets_by_size(m);
    std::vector<std::optional<Decomposition::Summand>> slots(order.size());
    parallel_for(order.size(), par, [&](std::size_t i) { slots[i] = summand(order[i]); });
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!slots[i]) {
            d.skipped.push_back(order[i]);
            continue;
        }
        d.total += slots[i]->group;
        d.summands.push_back(std::move(*slots[i]));
    }
    return d;
}

bool is_uniform(const SpherePairSpec& spec) {
    for (int n : spec.dims)
        if (n != spec.dims.front()) return false;
    return true;
}

}  // namespace

Decomposition summands_X_contractible(const PanelComplex& p, const SpherePairSpec& spec, Parallelism par) {
    require_length(p.panel_count(), spec);
    const SimplicialComplex& y = p.space();
    const Subcomplex all = Subcomplex::all(y);
    return collect(p.panel_count(), "H^*(Y, P_J) shifted by N_J", par, [&](VertexMask j) {
        const Subcomplex pj = p.union_of(j);
        const int shift = spec.dim_sum(j);
        return std::optional<Decomposition::Summand>(
            Decomposition::Summand{j, cohomology_of(y, all, &pj).shifted(shift), shift_note("H^*(Y,P_J)", shift)});
    });
}

Decomposition summands_A_contractible(const PanelComplex& p, const SpherePairSpec& spec, Parallelism par) {
    require_length(p.panel_count(), spec);
    const SimplicialComplex& y = p.space();
    return collect(p.panel_count(), "H^*(P_cap J) shifted by sum of (n_j + 1)", par, [&](VertexMask j) {
        const int shift = spec.dim_sum(j) + std::popcount(j);
        const Subcomplex cap = p.intersection(j);
        return std::optional<Decomposition::Summand>(
            Decomposition::Summand{j, cohomology_of(y, cap, nullptr).shifted(shift),
                                   shift_note(j ? "H^*(P_cap J)" : "H^*(Y)", shift)});
    });
}

Decomposition hochster_table(const SimplicialComplex& k, const SpherePairSpec& spec, HochsterOptions opt) {
    require_length(k.vertex_count(), spec);
    if (!k.is_minimal()) throw ValidationError("K has ghost vertices; the table needs a minimal complex");
    if (!is_uniform(spec)) {
        Decomposition d = summands_X_contractible(panelize_simplicial(k, opt.par), spec, opt.par);
        d.formula = "mixed spec: " + d.formula + " over Y^K";
        return d;
    }
    const int n = spec.dims.empty() ? 0 : spec.dims.front();
    return collect(k.vertex_count(), "H~^{p-" + std::to_string(n) + "|J|-1}(K_J)", opt.par,
                   [&](VertexMask j) -> std::optional<Decomposition::Summand> {
                       if (opt.skip_simplices && j != 0 && k.contains(labels_of(j))) return std::nullopt;
                       const SimplicialComplex kj = full_subcomplex(k, j);
                       const int shift = n * std::popcount(j) + 1;
                       return Decomposition::Summand{
                           j, simplicial_cohomology(kj, ChainFlavor::reduced).shifted(shift),
                           shift_note("H~^*(K_J)", shift)};
                   });
}

Decomposition hochster_table(const SimplicialPoset& s, const SpherePairSpec& spec, HochsterOptions opt) {
    require_length(s.vertex_count(), spec);
    if (!is_uniform(spec)) {
        Decomposition d = summands_X_contractible(panelize_poset(s, opt.par), spec, opt.par);
        d.formula = "mixed spec: " + d.formula + " over Y^S";
        return d;
    }
    const int n = spec.dims.empty() ? 0 : spec.dims.front();
    return collect(s.vertex_count(), "H~^{p-" + std::to_string(n) + "|J|-1}(Sd S_J)", opt.par,
                   [&](VertexMask j) -> std::optional<Decomposition::Summand> {
                       const SimplicialComplex sj = poset_order_complex(s, j);
                       const int shift = n * std::popcount(j) + 1;
                       return Decomposition::Summand{
                           j, simplicial_cohomology(sj, ChainFlavor::reduced).shifted(shift),
                           shift_note("H~^*(Sd S_J)", shift)};
                   });
}

}  // namespace facelab
