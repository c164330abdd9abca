#include "facelab/panel_complex.hpp"

#include "facelab/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace facelab {

namespace {

constexpr int kMaxPanels = 20;

bool is_closed(const SimplicialComplex& y, const Subcomplex& s) {
    for (int d = 1; d <= y.dimension(); ++d) {
        for (std::size_t i = 0; i < y.count(d); ++i) {
            if (!s.contains(d, i)) continue;
            const Simplex& simplex = y.simplex(d, i);
            for (std::size_t k = 0; k < simplex.size(); ++k) {
                Simplex face = simplex;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
                if (!s.contains(d - 1, *y.index_of(face))) return false;
            }
        }
    }
    return true;
}

struct RawFace {
    VertexMask index;
    std::size_t anchor;
    Subcomplex cells;
};

}  // namespace

PanelComplex PanelComplex::build(std::shared_ptr<const SimplicialComplex> y, std::vector<Subcomplex> panels,
                                 Parallelism par) {
    PanelComplex p;
    p.y_ = std::move(y);
    const SimplicialComplex& Y = *p.y_;
    if (panels.size() > static_cast<std::size_t>(kMaxPanels)) {
        throw ValidationError("at most " + std::to_string(kMaxPanels) + " panels are supported");
    }
    for (std::size_t j = 0; j < panels.size(); ++j) {
        for (int d = 0; d <= Y.dimension() + 1; ++d) {
            if (panels[j].count(d) > Y.count(d) || (d > Y.dimension() && panels[j].count(d) > 0)) {
                throw ValidationError("panel " + std::to_string(j + 1) + " is not a subcomplex of Y");
            }
        }
        if (!is_closed(Y, panels[j])) {
            throw ValidationError("panel " + std::to_string(j + 1) + " is not closed under faces");
        }
    }
    p.panels_ = std::move(panels);
    const int m = p.panel_count();

    p.cell_index_.resize(static_cast<std::size_t>(std::max(Y.dimension() + 1, 0)));
    for (int d = 0; d <= Y.dimension(); ++d) {
        auto& row = p.cell_index_[static_cast<std::size_t>(d)];
        row.assign(Y.count(d), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            for (int j = 0; j < m; ++j)
                if (p.panels_[static_cast<std::size_t>(j)].contains(d, i)) row[i] |= VertexMask{1} << j;
    }

    const std::size_t subsets = std::size_t{1} << m;
    std::vector<std::vector<RawFace>> per_j(subsets);
    const std::size_t nv = Y.count(0);
    parallel_for(subsets, par, [&](std::size_t jm) {
        const VertexMask J = jm;
        std::vector<std::size_t> parent(nv);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t v) {
            while (parent[v] != v) {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            return v;
        };
        auto inside = [&](int d, std::size_t i) { return (p.cell_index_[static_cast<std::size_t>(d)][i] & J) == J; };
        if (Y.dimension() >= 1) {
            for (std::size_t e = 0; e < Y.count(1); ++e) {
                if (!inside(1, e)) continue;
                const Simplex& s = Y.simplex(1, e);
                const std::size_t a = find(*Y.index_of(Simplex{s[0]}));
                const std::size_t b = find(*Y.index_of(Simplex{s[1]}));
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        std::map<std::size_t, std::size_t> slot;  // root -> raw face
        std::vector<RawFace> found;
        std::vector<std::vector<std::vector<char>>> flags;
        for (std::size_t v = 0; v < nv; ++v) {
            if (!inside(0, v)) continue;
            const std::size_t r = find(v);
            if (!slot.count(r)) {
                slot[r] = found.size();
                found.push_back(RawFace{~VertexMask{0}, Y.global_id(0, v), Subcomplex{}});
                std::vector<std::vector<char>> in;
                for (int d = 0; d <= Y.dimension(); ++d) in.emplace_back(Y.count(d), char{0});
                flags.push_back(std::move(in));
            }
        }
        for (int d = 0; d <= Y.dimension(); ++d) {
            for (std::size_t i = 0; i < Y.count(d); ++i) {
                if (!inside(d, i)) continue;
                const Simplex& s = Y.simplex(d, i);
                const std::size_t f = slot.at(find(*Y.index_of(Simplex{s[0]})));
                flags[f][static_cast<std::size_t>(d)][i] = 1;
                found[f].index &= p.cell_index_[static_cast<std::size_t>(d)][i];
            }
        }
        const VertexMask full = m == 64 ? ~VertexMask{0} : ((VertexMask{1} << m) - 1);
        for (std::size_t f = 0; f < found.size(); ++f) {
            found[f].index &= full;
            found[f].cells = Subcomplex::from_membership(std::move(flags[f]));
        }
        per_j[jm] = std::move(found);
    });

    std::map<std::pair<VertexMask, std::size_t>, std::size_t> key_to_raw;
    std::vector<RawFace*> unique;
    for (auto& list : per_j)
        for (auto& f : list)
            if (!key_to_raw.count({f.index, f.anchor})) {
                key_to_raw[{f.index, f.anchor}] = unique.size();
                unique.push_back(&f);
            }
    auto lex_less = [](VertexMask a, VertexMask b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return labels_of(a) < labels_of(b);
    };
    std::sort(unique.begin(), unique.end(), [&](const RawFace* a, const RawFace* b) {
        if (a->index != b->index) return lex_less(a->index, b->index);
        return a->anchor < b->anchor;
    });
    std::map<std::pair<VertexMask, std::size_t>, std::size_t> key_to_face;
    for (const RawFace* f : unique) {
        key_to_face[{f->index, f->anchor}] = p.faces_.size();
        p.faces_.push_back(PanelFace{f->index, f->anchor, f->cells});
    }
    p.faces_over_.resize(subsets);
    for (std::size_t jm = 0; jm < subsets; ++jm) {
        for (const auto& f : per_j[jm]) p.faces_over_[jm].push_back(key_to_face.at({f.index, f.anchor}));
    }
    return p;
}

VertexMask PanelComplex::all_panels() const {
    const int m = panel_count();
    return m == 64 ? ~VertexMask{0} : ((VertexMask{1} << m) - 1);
}

VertexMask PanelComplex::cell_index(int dim, std::size_t local) const {
    return cell_index_.at(static_cast<std::size_t>(dim)).at(local);
}

Subcomplex PanelComplex::union_of(VertexMask j) const {
    std::vector<std::vector<char>> in;
    for (const auto& row : cell_index_) {
        std::vector<char> r(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) r[i] = (row[i] & j) != 0;
        in.push_back(std::move(r));
    }
    return Subcomplex::from_membership(std::move(in));
}

Subcomplex PanelComplex::intersection(VertexMask j) const {
    std::vector<std::vector<char>> in;
    for (const auto& row : cell_index_) {
        std::vector<char> r(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) r[i] = (row[i] & j) == j;
        in.push_back(std::move(r));
    }
    return Subcomplex::from_membership(std::move(in));
}

Subcomplex PanelComplex::core() const {
    std::vector<std::vector<char>> in;
    for (const auto& row : cell_index_) {
        std::vector<char> r(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) r[i] = row[i] == 0;
        in.push_back(std::move(r));
    }
    return Subcomplex::from_membership(std::move(in));
}

const std::vector<std::size_t>& PanelComplex::faces_over(VertexMask j) const {
    if (j >= faces_over_.size()) {
        throw ValidationError("panel subset " + format_set(j) + " out of range");
    }
    return faces_over_[j];
}

bool PanelComplex::face_leq(std::size_t a, std::size_t b) const {
    const PanelFace& f = faces_.at(a);
    const PanelFace& g = faces_.at(b);
    if ((f.index & g.index) != g.index) return false;
    // f is connected and lies in P_∩I_g, so f ⊆ g iff g holds f's anchor vertex.
    return g.cells.contains(0, f.anchor - 1);
}

std::optional<std::size_t> PanelComplex::face_through(VertexMask j, int vertex_label) const {
    const auto local = y_->index_of(Simplex{vertex_label});
    if (!local) return std::nullopt;
    for (std::size_t f : faces_over(j))
        if (faces_[f].cells.contains(0, *local)) return f;
    return std::nullopt;
}

PanelComplex panelize_generic(const SimplicialComplex& y, const std::vector<std::vector<Simplex>>& panels,
                              Parallelism par) {
    auto shared = std::make_shared<const SimplicialComplex>(y);
    std::vector<Subcomplex> subs;
    for (const auto& list : panels) subs.push_back(Subcomplex::closure(*shared, list));
    auto p = PanelComplex::build(shared, std::move(subs), par);
    p.description = "generic panel structure";
    return p;
}

PanelComplex panelize_simplicial(const SimplicialComplex& k, Parallelism par) {
    if (!k.is_minimal()) {
        throw ValidationError("panelize_simplicial needs a minimal complex: some vertex lies in no simplex");
    }
    auto y = std::make_shared<const SimplicialComplex>(cone(barycentric_subdivision(k)));
    std::vector<Subcomplex> panels;
    for (int j = 1; j <= k.vertex_count(); ++j) {
        panels.push_back(Subcomplex::from_complex(*y, face_subcomplex(k, {j})));
    }
    auto p = PanelComplex::build(y, std::move(panels), par);
    p.description = "cone over the barycentric subdivision, panels F_j";
    return p;
}

PanelComplex panelize_simplicial_with_ghosts(const SimplicialComplex& k, Parallelism par) {
    if (k.is_minimal()) return panelize_simplicial(k, par);
    auto y = std::make_shared<const SimplicialComplex>(cone(barycentric_subdivision(k)));
    std::vector<Subcomplex> panels;
    for (int j = 1; j <= k.vertex_count(); ++j) {
        panels.push_back(k.contains({j}) ? Subcomplex::from_complex(*y, face_subcomplex(k, {j}))
                                         : Subcomplex::none(*y));
    }
    auto p = PanelComplex::build(y, std::move(panels), par);
    p.description = "cone over the barycentric subdivision, panels F_j, empty panels for ghost vertices";
    return p;
}

int poset_vertex_label(const SimplicialPoset& s, int element) { return s.position(element); }

PanelComplex panelize_poset(const SimplicialPoset& s, Parallelism par) {
    auto y = std::make_shared<const SimplicialComplex>(cone(poset_order_complex(s)));
    std::vector<Subcomplex> panels;
    for (int j = 1; j <= s.vertex_count(); ++j) {
        std::vector<char> keep(static_cast<std::size_t>(y->vertex_count()) + 1, 0);
        for (std::size_t e = 0; e < s.size(); ++e) {
            const int el = static_cast<int>(e);
            if (el != s.bottom() && (s.vertex_set(el) >> (j - 1)) & 1u) {
                keep[static_cast<std::size_t>(poset_vertex_label(s, el))] = 1;
            }
        }
        panels.push_back(Subcomplex::induced(*y, keep));
    }
    auto p = PanelComplex::build(y, std::move(panels), par);
    p.description = "cone over the order complex of the poset, panels F_j";
    return p;
}

PanelComplex panelize_partition(const SimplicialComplex& k, const std::vector<std::vector<int>>& blocks,
                                Parallelism par) {
    if (!k.is_minimal()) {
        throw ValidationError("panelize_partition needs a minimal complex");
    }
    std::vector<int> seen(static_cast<std::size_t>(k.vertex_count()) + 1, 0);
    for (const auto& b : blocks) {
        if (b.empty()) throw ValidationError("partition has an empty block");
        for (int v : b) {
            if (v < 1 || v > k.vertex_count()) throw ValidationError("partition vertex out of range");
            if (seen[static_cast<std::size_t>(v)]++) {
                throw ValidationError("partition blocks overlap at vertex " + std::to_string(v));
            }
        }
    }
    for (int v = 1; v <= k.vertex_count(); ++v) {
        if (!seen[static_cast<std::size_t>(v)]) {
            throw ValidationError("partition misses vertex " + std::to_string(v));
        }
    }
    auto y = std::make_shared<const SimplicialComplex>(cone(barycentric_subdivision(k)));
    std::vector<Subcomplex> panels;
    for (const auto& b : blocks) {
        Subcomplex u = Subcomplex::none(*y);
        for (int v : b) u = u | Subcomplex::from_complex(*y, face_subcomplex(k, {v}));
        panels.push_back(u);
    }
    auto p = PanelComplex::build(y, std::move(panels), par);
    p.description = "partition coarsening of the cone over the barycentric subdivision";
    return p;
}

}  // namespace facelab
