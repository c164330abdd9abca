#include "facelab/cohomology.hpp"

#include "facelab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace facelab {

SimplicialCohomology::SimplicialCohomology(std::shared_ptr<const SimplicialComplex> ambient, Subcomplex space,
                                           Subcomplex pair, Domain domain)
    : y_(std::move(ambient)), space_(std::move(space)), pair_(std::move(pair)), domain_(domain) {
    if (!pair_.subset_of(space_)) {
        // Only the part of the pair inside the space matters.
        pair_ = pair_ & space_;
    }
    chains_ = simplicial_chains(*y_, space_, &pair_);
    const int top = y_->dimension();
    if (top < 0) {
        return;
    }
    for (int n = 0; n <= top; ++n) {
        coboundary_.push_back(chains_.complex.boundary(n + 1).transposed());
    }
    degrees_.resize(static_cast<std::size_t>(top + 1));
    build_degree_zero();
    for (int n = 1; n <= top; ++n) build_degree(n);
}

std::vector<Integer> SimplicialCohomology::to_positions(int n, const Cochain& z, bool* ok) const {
    const auto& cells = chains_.cells_in(n);
    std::vector<Integer> x(cells.size());
    *ok = z.size() == y_->count(n);
    if (!*ok) {
        return x;
    }
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (domain_.reduce(z[i]) == 0) continue;
        const std::size_t p = chains_.position_of(n, i);
        if (p == SimplicialChains::npos) {
            *ok = false;
            return x;
        }
        x[p] = domain_.reduce(z[i]);
    }
    return x;
}

Cochain SimplicialCohomology::from_positions(int n, const std::vector<Integer>& x) const {
    Cochain z(y_->count(n));
    const auto& cells = chains_.cells_in(n);
    for (std::size_t p = 0; p < cells.size(); ++p) z[cells[p]] = domain_.reduce(x[p]);
    return z;
}

void SimplicialCohomology::build_degree_zero() {
    Degree& d = degrees_[0];
    const std::size_t nv = y_->count(0);
    std::vector<std::size_t> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    if (y_->dimension() >= 1) {
        for (std::size_t e = 0; e < y_->count(1); ++e) {
            if (!space_.contains(1, e)) continue;
            const Simplex& s = y_->simplex(1, e);
            const std::size_t a = *y_->index_of(Simplex{s[0]});
            const std::size_t b = *y_->index_of(Simplex{s[1]});
            const std::size_t ra = find(a), rb = find(b);
            if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }
    }
    std::vector<char> touches_pair(nv, 0);
    for (std::size_t v = 0; v < nv; ++v) {
        if (space_.contains(0, v) && pair_.contains(0, v)) touches_pair[find(v)] = 1;
    }
    for (std::size_t v = 0; v < nv; ++v) {
        if (!space_.contains(0, v) || find(v) != v || touches_pair[v]) continue;
        Cochain g(nv);
        for (std::size_t w = 0; w < nv; ++w) {
            if (space_.contains(0, w) && find(w) == v) g[w] = 1;
        }
        d.anchors.push_back(v);
        d.generators.push_back(std::move(g));
        d.orders.push_back(0);
    }
    d.free_count = d.generators.size();
}

void SimplicialCohomology::build_degree(int n) {
    Degree& d = degrees_[static_cast<std::size_t>(n)];
    const IntMatrix& incoming = coboundary_[static_cast<std::size_t>(n - 1)];
    const IntMatrix& outgoing = coboundary_[static_cast<std::size_t>(n)];
    d.incoming = std::make_unique<SmithReduction>(incoming, domain_, true);
    const std::size_t cells = incoming.rows();
    std::vector<char> is_pivot(cells, 0);
    for (const auto& p : d.incoming->pivots()) {
        is_pivot[p.row] = 1;
        if (!domain_.is_unit(p.value)) d.torsion_rows.push_back(p.row);
    }
    for (std::size_t r = 0; r < cells; ++r)
        if (!is_pivot[r]) d.non_pivot_rows.push_back(r);

    std::vector<Triplet> t;
    for (std::size_t k = 0; k < d.non_pivot_rows.size(); ++k) {
        const auto col = d.incoming->u_inverse_column(d.non_pivot_rows[k]);
        const auto image = outgoing * col;
        for (std::size_t r = 0; r < image.size(); ++r) {
            Integer v = domain_.reduce(image[r]);
            if (v != 0) t.push_back({r, k, v});
        }
    }
    const IntMatrix restricted = IntMatrix::from_triplets(outgoing.rows(), d.non_pivot_rows.size(), std::move(t));
    d.kernel = std::make_unique<SmithReduction>(restricted, domain_, true);
    std::vector<char> col_pivot(d.non_pivot_rows.size(), 0);
    for (const auto& p : d.kernel->pivots()) col_pivot[p.col] = 1;
    for (std::size_t c = 0; c < col_pivot.size(); ++c)
        if (!col_pivot[c]) d.free_columns.push_back(c);

    for (std::size_t c : d.free_columns) {
        const auto w = d.kernel->v_column(c);
        std::vector<Integer> y(cells);
        for (std::size_t k = 0; k < w.size(); ++k) y[d.non_pivot_rows[k]] = w[k];
        d.generators.push_back(from_positions(n, d.incoming->apply_u_inverse(y)));
        d.orders.push_back(0);
    }
    d.free_count = d.generators.size();
    for (std::size_t r : d.torsion_rows) {
        d.generators.push_back(from_positions(n, d.incoming->u_inverse_column(r)));
        for (const auto& p : d.incoming->pivots()) {
            if (p.row == r) d.orders.push_back(p.value);
        }
    }
}

std::size_t SimplicialCohomology::size(int n) const {
    if (n < 0 || n >= static_cast<int>(degrees_.size())) {
        return 0;
    }
    return degrees_[static_cast<std::size_t>(n)].generators.size();
}

const Cochain& SimplicialCohomology::generator(int n, std::size_t i) const {
    return degrees_.at(static_cast<std::size_t>(n)).generators.at(i);
}

const Integer& SimplicialCohomology::order(int n, std::size_t i) const {
    return degrees_.at(static_cast<std::size_t>(n)).orders.at(i);
}

GroupPiece SimplicialCohomology::group(int n) const {
    GroupPiece piece;
    if (n < 0 || n >= static_cast<int>(degrees_.size())) {
        return piece;
    }
    const Degree& d = degrees_[static_cast<std::size_t>(n)];
    piece.rank = d.free_count;
    GroupPiece tors;
    tors.torsion.assign(d.orders.begin() + static_cast<std::ptrdiff_t>(d.free_count), d.orders.end());
    return direct_sum(piece, tors);
}

GradedGroup SimplicialCohomology::groups() const {
    GradedGroup g;
    for (int n = 0; n < static_cast<int>(degrees_.size()); ++n) g.add(n, group(n));
    return g;
}

Cochain SimplicialCohomology::coboundary(int n, const Cochain& z) const {
    bool ok = false;
    const auto x = to_positions(n, z, &ok);
    if (!ok) {
        throw InternalError("cochain is not supported on the relative cells in degree " + std::to_string(n));
    }
    if (n + 1 > max_degree()) {
        return Cochain(y_->count(n + 1));
    }
    return from_positions(n + 1, coboundary_[static_cast<std::size_t>(n)] * x);
}

bool SimplicialCohomology::is_cocycle(int n, const Cochain& z) const {
    if (n < 0 || n > max_degree()) {
        return false;
    }
    bool ok = false;
    const auto x = to_positions(n, z, &ok);
    if (!ok) {
        return false;
    }
    for (const auto& v : coboundary_[static_cast<std::size_t>(n)] * x) {
        if (domain_.reduce(v) != 0) return false;
    }
    return true;
}

std::vector<Integer> SimplicialCohomology::coordinates(int n, const Cochain& z) const {
    if (!is_cocycle(n, z)) {
        throw InternalError("coordinates requested for a cochain that is not a relative cocycle (degree " +
                            std::to_string(n) + ")");
    }
    const Degree& d = degrees_[static_cast<std::size_t>(n)];
    std::vector<Integer> out;
    if (n == 0) {
        for (std::size_t a : d.anchors) out.push_back(domain_.reduce(z[a]));
        return out;
    }
    bool ok = false;
    const auto x = to_positions(n, z, &ok);
    const auto y = d.incoming->apply_u(x);
    std::vector<Integer> y_np;
    for (std::size_t r : d.non_pivot_rows) y_np.push_back(y[r]);
    const auto w = d.kernel->apply_v_inverse(y_np);
    for (std::size_t c : d.free_columns) out.push_back(domain_.reduce(w[c]));
    for (std::size_t k = 0; k < d.torsion_rows.size(); ++k) {
        out.push_back(mod_floor(y[d.torsion_rows[k]], d.orders[d.free_count + k]));
    }
    return out;
}

Cochain SimplicialCohomology::combination(int n, const std::vector<Integer>& c) const {
    Cochain z(y_->count(n));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        const Cochain& g = generator(n, i);
        for (std::size_t k = 0; k < z.size(); ++k) z[k] += c[i] * g[k];
    }
    for (auto& v : z) v = domain_.reduce(v);
    return z;
}

IntMatrix induced_inclusion_map(const SimplicialCohomology& from, const SimplicialCohomology& to, int n) {
    if (from.ambient_ptr() != to.ambient_ptr() && !(from.ambient() == to.ambient())) {
        throw ValidationError("induced map needs a common ambient complex");
    }
    if (!to.space().subset_of(from.space())) {
        throw ValidationError("induced map: source space is not contained in the target space");
    }
    if (!to.pair().subset_of(from.pair())) {
        throw ValidationError("induced map: pairs are not nested");
    }
    std::vector<Triplet> t;
    for (std::size_t j = 0; j < from.size(n); ++j) {
        Cochain z = from.generator(n, j);
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (!to.space().contains(n, i) || to.pair().contains(n, i)) z[i] = 0;
        }
        const auto c = to.coordinates(n, z);
        for (std::size_t i = 0; i < c.size(); ++i) t.push_back({i, j, c[i]});
    }
    return IntMatrix::from_triplets(to.size(n), from.size(n), std::move(t));
}

}  // namespace facelab
