#include "facelab/simplicial_complex.hpp"

#include "facelab/errors.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace facelab {

VertexMask mask_of(std::span<const int> labels) {
    VertexMask m = 0;
    for (int v : labels) {
        m |= VertexMask{1} << (v - 1);
    }
    return m;
}

std::vector<int> labels_of(VertexMask mask) {
    std::vector<int> out;
    while (mask != 0) {
        out.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return out;
}

std::string format_set(VertexMask mask) { return format_simplex(labels_of(mask)); }

std::vector<VertexMask> subsets_by_size(int m) {
    std::vector<VertexMask> out;
    for (VertexMask j = 0; j < (VertexMask{1} << m); ++j) out.push_back(j);
    std::sort(out.begin(), out.end(), [](VertexMask a, VertexMask b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return labels_of(a) < labels_of(b);
    });
    return out;
}

std::string format_simplex(const Simplex& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
        os << (i ? "," : "") << s[i];
    }
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex::SimplicialComplex() {
    by_dim_.assign(1, {Simplex{}});
    index();
}

SimplicialComplex SimplicialComplex::from_closed(int vertex_count, std::vector<Simplex> simplices) {
    if (vertex_count < 0) {
        throw ValidationError("vertex count must be non-negative");
    }
    SimplicialComplex k;
    k.vertex_count_ = vertex_count;
    simplices.emplace_back();
    std::size_t top = 0;
    for (auto& s : simplices) {
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw ValidationError("simplex " + format_simplex(s) + " repeats a vertex");
        }
        if (!s.empty() && (s.front() < 1 || s.back() > vertex_count)) {
            throw ValidationError("simplex " + format_simplex(s) + " uses a label outside 1.." +
                                  std::to_string(vertex_count));
        }
        top = std::max(top, s.size());
    }
    k.by_dim_.assign(top + 1, {});
    for (auto& s : simplices) {
        k.by_dim_[s.size()].push_back(std::move(s));
    }
    for (auto& group : k.by_dim_) {
        std::sort(group.begin(), group.end());
        group.erase(std::unique(group.begin(), group.end()), group.end());
    }
    k.index();
    for (std::size_t slot = 2; slot < k.by_dim_.size(); ++slot) {
        for (const auto& s : k.by_dim_[slot]) {
            Simplex facet(s.size() - 1);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::copy(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(drop), facet.begin());
                std::copy(s.begin() + static_cast<std::ptrdiff_t>(drop) + 1, s.end(),
                          facet.begin() + static_cast<std::ptrdiff_t>(drop));
                if (!k.contains(facet)) {
                    throw ValidationError("family is not closed under subsets: " + format_simplex(s) +
                                          " lacks face " + format_simplex(facet));
                }
            }
        }
    }
    return k;
}

void SimplicialComplex::index() {
    while (by_dim_.size() > 1 && by_dim_.back().empty()) {
        by_dim_.pop_back();
    }
    offsets_.assign(by_dim_.size() + 1, 0);
    for (std::size_t slot = 0; slot < by_dim_.size(); ++slot) {
        offsets_[slot + 1] = offsets_[slot] + by_dim_[slot].size();
    }
}

std::size_t SimplicialComplex::count(int dim) const {
    const auto slot = static_cast<std::size_t>(dim + 1);
    return (dim < -1 || slot >= by_dim_.size()) ? 0 : by_dim_[slot].size();
}

const Simplex& SimplicialComplex::simplex(int dim, std::size_t local) const {
    return by_dim_.at(static_cast<std::size_t>(dim + 1)).at(local);
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
    static const std::vector<Simplex> kEmpty;
    const auto slot = static_cast<std::size_t>(dim + 1);
    return (dim < -1 || slot >= by_dim_.size()) ? kEmpty : by_dim_[slot];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
    const auto& group = simplices(static_cast<int>(s.size()) - 1);
    auto it = std::lower_bound(group.begin(), group.end(), s);
    if (it == group.end() || *it != s) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - group.begin());
}

std::size_t SimplicialComplex::global_id(int dim, std::size_t local) const {
    return offsets_.at(static_cast<std::size_t>(dim + 1)) + local;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (int d = 0; d <= dimension(); ++d) {
        f.push_back(count(d));
    }
    return f;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
    std::vector<Simplex> out;
    for (int d = dimension(); d >= -1; --d) {
        for (const auto& s : simplices(d)) {
            const bool covered = std::any_of(out.begin(), out.end(), [&](const Simplex& big) {
                return std::includes(big.begin(), big.end(), s.begin(), s.end());
            });
            if (!covered) {
                out.push_back(s);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool SimplicialComplex::is_minimal() const {
    return count(0) == static_cast<std::size_t>(vertex_count_);
}

std::vector<int> SimplicialComplex::vertices() const {
    std::vector<int> out;
    for (const auto& s : simplices(0)) {
        out.push_back(s.front());
    }
    return out;
}

void SimplicialComplex::set_vertex_tags(std::vector<Simplex> tags) {
    if (!tags.empty() && tags.size() != static_cast<std::size_t>(vertex_count_)) {
        throw InternalError("vertex tag count does not match vertex count");
    }
    tags_ = std::move(tags);
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
    return vertex_count_ == other.vertex_count_ && by_dim_ == other.by_dim_;
}

// ---------------------------------------------------------------------------
// Subcomplex

Subcomplex Subcomplex::none(const SimplicialComplex& y) {
    Subcomplex s;
    for (int d = 0; d <= y.dimension(); ++d) {
        s.in_.emplace_back(y.count(d), char{0});
    }
    return s;
}

Subcomplex Subcomplex::all(const SimplicialComplex& y) {
    Subcomplex s;
    for (int d = 0; d <= y.dimension(); ++d) {
        s.in_.emplace_back(y.count(d), char{1});
    }
    return s;
}

Subcomplex Subcomplex::from_complex(const SimplicialComplex& y, const SimplicialComplex& sub) {
    Subcomplex s = none(y);
    for (int d = 0; d <= sub.dimension(); ++d) {
        for (const auto& simplex : sub.simplices(d)) {
            auto idx = y.index_of(simplex);
            if (!idx) {
                throw ValidationError("simplex " + format_simplex(simplex) +
                                      " is not a simplex of the ambient complex");
            }
            s.in_[static_cast<std::size_t>(d)][*idx] = 1;
        }
    }
    return s;
}

Subcomplex Subcomplex::closure(const SimplicialComplex& y, const std::vector<Simplex>& simplices) {
    Subcomplex s = none(y);
    for (auto simplex : simplices) {
        std::sort(simplex.begin(), simplex.end());
        if (simplex.empty()) {
            continue;
        }
        if (!y.contains(simplex)) {
            throw ValidationError("simplex " + format_simplex(simplex) +
                                  " is not a simplex of the ambient complex");
        }
        if (simplex.size() > 30) {
            throw ValidationError("simplex too large for closure enumeration");
        }
        const std::uint32_t subsets = 1u << simplex.size();
        for (std::uint32_t bits = 1; bits < subsets; ++bits) {
            Simplex face;
            for (std::size_t i = 0; i < simplex.size(); ++i) {
                if (bits & (1u << i)) {
                    face.push_back(simplex[i]);
                }
            }
            const auto idx = y.index_of(face);
            s.in_[face.size() - 1][*idx] = 1;
        }
    }
    return s;
}

Subcomplex Subcomplex::induced(const SimplicialComplex& y, const std::vector<char>& keep) {
    Subcomplex s = none(y);
    for (int d = 0; d <= y.dimension(); ++d) {
        const auto& group = y.simplices(d);
        for (std::size_t i = 0; i < group.size(); ++i) {
            bool ok = true;
            for (int v : group[i]) {
                if (static_cast<std::size_t>(v) >= keep.size() || !keep[static_cast<std::size_t>(v)]) {
                    ok = false;
                    break;
                }
            }
            s.in_[static_cast<std::size_t>(d)][i] = ok ? 1 : 0;
        }
    }
    return s;
}

bool Subcomplex::contains(int dim, std::size_t local) const {
    if (dim < 0) {
        return true;
    }
    const auto d = static_cast<std::size_t>(dim);
    return d < in_.size() && local < in_[d].size() && in_[d][local] != 0;
}

bool Subcomplex::is_empty() const {
    return in_.empty() || std::none_of(in_[0].begin(), in_[0].end(), [](char c) { return c != 0; });
}

std::size_t Subcomplex::count(int dim) const {
    if (dim < 0 || static_cast<std::size_t>(dim) >= in_.size()) {
        return 0;
    }
    const auto& row = in_[static_cast<std::size_t>(dim)];
    return static_cast<std::size_t>(std::count(row.begin(), row.end(), char{1}));
}

std::size_t Subcomplex::cell_count() const {
    std::size_t n = 0;
    for (std::size_t d = 0; d < in_.size(); ++d) {
        n += count(static_cast<int>(d));
    }
    return n;
}

bool Subcomplex::subset_of(const Subcomplex& other) const {
    for (std::size_t d = 0; d < in_.size(); ++d) {
        for (std::size_t i = 0; i < in_[d].size(); ++i) {
            if (in_[d][i] && !other.contains(static_cast<int>(d), i)) {
                return false;
            }
        }
    }
    return true;
}

Subcomplex Subcomplex::operator&(const Subcomplex& other) const {
    Subcomplex out = *this;
    for (std::size_t d = 0; d < out.in_.size(); ++d) {
        for (std::size_t i = 0; i < out.in_[d].size(); ++i) {
            out.in_[d][i] = (in_[d][i] && other.contains(static_cast<int>(d), i)) ? 1 : 0;
        }
    }
    return out;
}

Subcomplex Subcomplex::operator|(const Subcomplex& other) const {
    Subcomplex out = in_.size() >= other.in_.size() ? *this : other;
    const Subcomplex& small = in_.size() >= other.in_.size() ? other : *this;
    for (std::size_t d = 0; d < small.in_.size(); ++d) {
        for (std::size_t i = 0; i < small.in_[d].size(); ++i) {
            out.in_[d][i] = (out.in_[d][i] || small.in_[d][i]) ? 1 : 0;
        }
    }
    return out;
}

SimplicialComplex Subcomplex::to_complex(const SimplicialComplex& y) const {
    std::vector<Simplex> members;
    for (std::size_t d = 0; d < in_.size(); ++d) {
        for (std::size_t i = 0; i < in_[d].size(); ++i) {
            if (in_[d][i]) {
                members.push_back(y.simplex(static_cast<int>(d), i));
            }
        }
    }
    auto k = SimplicialComplex::from_closed(y.vertex_count(), std::move(members));
    k.set_vertex_tags(y.vertex_tags());
    return k;
}

// ---------------------------------------------------------------------------
// Constructions on complexes

SimplicialComplex build_complex(int m, const std::vector<Simplex>& maximal,
                                std::vector<std::string>* warnings) {
    if (m < 0) {
        throw ValidationError("vertex count must be non-negative");
    }
    std::vector<Simplex> listed;
    for (auto s : maximal) {
        std::sort(s.begin(), s.end());
        for (int v : s) {
            if (v < 1 || v > m) {
                throw ValidationError("vertex " + std::to_string(v) + " out of range 1.." +
                                      std::to_string(m));
            }
        }
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw ValidationError("simplex " + format_simplex(s) + " repeats a vertex");
        }
        if (s.size() > 30) {
            throw ValidationError("simplex " + format_simplex(s) + " is too large to close");
        }
        listed.push_back(std::move(s));
    }
    std::vector<Simplex> kept;
    for (std::size_t i = 0; i < listed.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < listed.size() && !drop; ++j) {
            if (i == j) {
                continue;
            }
            const auto& a = listed[i];
            const auto& b = listed[j];
            if (a == b) {
                if (j < i) {
                    drop = true;
                    if (warnings) {
                        warnings->push_back("duplicate maximal simplex " + format_simplex(a) + " dropped");
                    }
                }
            } else if (a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end())) {
                drop = true;
                if (warnings) {
                    warnings->push_back("simplex " + format_simplex(a) + " absorbed by " + format_simplex(b));
                }
            }
        }
        if (!drop) {
            kept.push_back(listed[i]);
        }
    }
    std::set<Simplex> closed;
    for (const auto& s : kept) {
        const std::uint32_t subsets = 1u << s.size();
        for (std::uint32_t bits = 0; bits < subsets; ++bits) {
            Simplex face;
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (bits & (1u << i)) {
                    face.push_back(s[i]);
                }
            }
            closed.insert(std::move(face));
        }
    }
    return SimplicialComplex::from_closed(m, {closed.begin(), closed.end()});
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, VertexMask j) {
    const auto labels = labels_of(j);
    return full_subcomplex(k, std::span<const int>(labels));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, std::span<const int> j) {
    std::vector<int> sorted(j.begin(), j.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> relabel(static_cast<std::size_t>(k.vertex_count()) + 1, 0);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1 || sorted[i] > k.vertex_count()) {
            throw ValidationError("vertex " + std::to_string(sorted[i]) + " out of range");
        }
        relabel[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i) + 1;
    }
    std::vector<Simplex> members;
    for (int d = 0; d <= k.dimension(); ++d) {
        for (const auto& s : k.simplices(d)) {
            Simplex t;
            bool inside = true;
            for (int v : s) {
                const int r = relabel[static_cast<std::size_t>(v)];
                if (r == 0) {
                    inside = false;
                    break;
                }
                t.push_back(r);
            }
            if (inside) {
                members.push_back(std::move(t));
            }
        }
    }
    auto out = SimplicialComplex::from_closed(static_cast<int>(sorted.size()), std::move(members));
    std::vector<Simplex> tags;
    for (int v : sorted) {
        tags.push_back({v});
    }
    out.set_vertex_tags(std::move(tags));
    return out;
}

SimplicialComplex order_complex(const std::vector<std::vector<int>>& above, const std::vector<char>& keep) {
    std::vector<Simplex> chains;
    Simplex chain;
    auto extend = [&](auto&& self, int last) -> void {
        chains.push_back(chain);
        for (int next : above[static_cast<std::size_t>(last)]) {
            if (!keep[static_cast<std::size_t>(next)]) {
                continue;
            }
            chain.push_back(next + 1);
            self(self, next);
            chain.pop_back();
        }
    };
    for (std::size_t e = 0; e < above.size(); ++e) {
        if (!keep[e]) {
            continue;
        }
        chain.assign(1, static_cast<int>(e) + 1);
        extend(extend, static_cast<int>(e));
    }
    return SimplicialComplex::from_closed(static_cast<int>(above.size()), std::move(chains));
}

namespace {

// Nonempty simplices of k in (dimension, lex) order together with the
// strict-superset relation, ready for order_complex.
struct FacePoset {
    std::vector<Simplex> elements;
    std::vector<std::vector<int>> above;
};

FacePoset nonempty_face_poset(const SimplicialComplex& k) {
    FacePoset p;
    for (int d = 0; d <= k.dimension(); ++d) {
        for (const auto& s : k.simplices(d)) {
            p.elements.push_back(s);
        }
    }
    std::vector<std::size_t> first(static_cast<std::size_t>(k.dimension()) + 2, 0);
    for (int d = 0; d <= k.dimension(); ++d) {
        first[static_cast<std::size_t>(d) + 1] = first[static_cast<std::size_t>(d)] + k.count(d);
    }
    p.above.resize(p.elements.size());
    for (std::size_t i = 0; i < p.elements.size(); ++i) {
        const auto& s = p.elements[i];
        const auto from = first[s.size()];
        for (std::size_t j = from; j < p.elements.size(); ++j) {
            const auto& t = p.elements[j];
            if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                p.above[i].push_back(static_cast<int>(j));
            }
        }
    }
    return p;
}

}  // namespace

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
    auto p = nonempty_face_poset(k);
    auto out = order_complex(p.above, std::vector<char>(p.elements.size(), 1));
    out.set_vertex_tags(std::move(p.elements));
    return out;
}

SimplicialComplex face_subcomplex(const SimplicialComplex& k, const Simplex& sigma) {
    Simplex s = sigma;
    std::sort(s.begin(), s.end());
    if (s.empty() || !k.contains(s)) {
        throw ValidationError("face_subcomplex: " + format_simplex(s) + " is not a nonempty simplex of K");
    }
    auto p = nonempty_face_poset(k);
    std::vector<char> keep(p.elements.size(), 0);
    for (std::size_t i = 0; i < p.elements.size(); ++i) {
        const auto& t = p.elements[i];
        keep[i] = std::includes(t.begin(), t.end(), s.begin(), s.end()) ? 1 : 0;
    }
    auto out = order_complex(p.above, keep);
    out.set_vertex_tags(std::move(p.elements));
    return out;
}

SimplicialComplex cone(const SimplicialComplex& k) {
    const int apex = k.vertex_count() + 1;
    std::vector<Simplex> members;
    for (int d = -1; d <= k.dimension(); ++d) {
        for (const auto& s : k.simplices(d)) {
            members.push_back(s);
            Simplex t = s;
            t.push_back(apex);
            members.push_back(std::move(t));
        }
    }
    auto out = SimplicialComplex::from_closed(apex, std::move(members));
    if (!k.vertex_tags().empty()) {
        auto tags = k.vertex_tags();
        tags.emplace_back();
        out.set_vertex_tags(std::move(tags));
    }
    return out;
}

SimplicialComplex nerve(const SimplicialComplex& y, const std::vector<Subcomplex>& family) {
    const std::size_t n = family.size();
    const std::size_t verts = y.count(0);
    std::vector<std::vector<char>> has(n, std::vector<char>(verts, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t v = 0; v < verts; ++v) {
            has[i][v] = family[i].contains(0, v) ? 1 : 0;
        }
    }
    std::vector<Simplex> members;
    Simplex current;
    auto grow = [&](auto&& self, std::size_t start, const std::vector<char>& common) -> void {
        for (std::size_t i = start; i < n; ++i) {
            std::vector<char> next(verts);
            bool any = false;
            for (std::size_t v = 0; v < verts; ++v) {
                next[v] = (common[v] && has[i][v]) ? 1 : 0;
                any = any || next[v];
            }
            if (!any) {
                continue;
            }
            current.push_back(static_cast<int>(i) + 1);
            members.push_back(current);
            self(self, i + 1, next);
            current.pop_back();
        }
    };
    grow(grow, 0, std::vector<char>(verts, 1));
    return SimplicialComplex::from_closed(static_cast<int>(n), std::move(members));
}

}  // namespace facelab
