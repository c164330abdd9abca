#include "facelab/cupring.hpp"

#include "facelab/errors.hpp"

#include <algorithm>
#include <bit>

namespace facelab {

Cochain simplicial_coboundary(const SimplicialComplex& y, const Cochain& u, int p) {
    if (u.size() != y.count(p)) throw ValidationError("cochain length does not match the simplices of degree " + std::to_string(p));
    if (p + 1 > y.dimension()) return {};
    Cochain out(y.count(p + 1));
    const auto& cells = y.simplices(p + 1);
    for (std::size_t t = 0; t < cells.size(); ++t) {
        Integer sum = 0;
        for (std::size_t i = 0; i < cells[t].size(); ++i) {
            Simplex face = cells[t];
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            const Integer& c = u[*y.index_of(face)];
            if (i % 2 == 0) sum += c;
            else sum -= c;
        }
        out[t] = sum;
    }
    return out;
}

namespace {

bool all_zero(const Cochain& c) {
    return std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace

Cochain alexander_whitney(const SimplicialComplex& y, const Cochain& u, int p, const Cochain& v, int q) {
    const int n = p + q;
    if (n > y.dimension()) return {};
    Cochain out(y.count(n));
    const auto& cells = y.simplices(n);
    const auto pp = static_cast<std::ptrdiff_t>(p);
    for (std::size_t t = 0; t < cells.size(); ++t) {
        const Simplex& s = cells[t];
        const Simplex front(s.begin(), s.begin() + pp + 1);
        const Integer& a = u[*y.index_of(front)];
        if (a == 0) continue;
        const Simplex back(s.begin() + pp, s.end());
        const Integer& b = v[*y.index_of(back)];
        if (b != 0) out[t] = a * b;
    }
    return out;
}

namespace {

void require_relative_cocycle(const SimplicialComplex& y, const Cochain& u, int p, const Subcomplex& a,
                              const char* name) {
    if (p < 0 || p > y.dimension()) throw ValidationError(std::string(name) + " has no simplices in its degree");
    if (!all_zero(simplicial_coboundary(y, u, p))) throw ValidationError(std::string(name) + " is not a cocycle");
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != 0 && a.contains(p, i))
            throw ValidationError(std::string(name) + " does not vanish on its annihilator");
}

}  // namespace

Cochain simplicial_cup(const SimplicialComplex& y, const Cochain& u, int p, const Cochain& v, int q,
                       const Subcomplex& a, const Subcomplex& b) {
    require_relative_cocycle(y, u, p, a, "left factor");
    require_relative_cocycle(y, v, q, b, "right factor");
    return alexander_whitney(y, u, p, v, q);
}

const RingVector& RingModel::product(std::size_t a, std::size_t b) const {
    static const RingVector zero;
    const auto it = table_.find({a, b});
    return it == table_.end() ? zero : it->second;
}

RingVector RingModel::normalize(std::vector<std::pair<std::size_t, Integer>> x) const {
    std::sort(x.begin(), x.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    RingVector out;
    for (auto& [i, c] : x) {
        if (!out.empty() && out.back().first == i) out.back().second += c;
        else out.emplace_back(i, std::move(c));
    }
    RingVector kept;
    for (auto& [i, c] : out) {
        Integer r = domain_.reduce(c);
        const Integer& ord = basis_.at(i).order;
        if (ord != 0) {
            r %= ord;
            if (r < 0) r += ord;
        }
        if (r != 0) kept.emplace_back(i, std::move(r));
    }
    return kept;
}

RingVector RingModel::multiply(const RingVector& x, const RingVector& y) const {
    std::vector<std::pair<std::size_t, Integer>> acc;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y)
            for (const auto& [c, cc] : product(a, b)) acc.emplace_back(c, ca * cb * cc);
    return normalize(std::move(acc));
}

GradedGroup RingModel::additive() const {
    GradedGroup g;
    for (const auto& e : basis_) {
        GroupPiece piece;
        if (e.order == 0) piece.rank = 1;
        else piece.torsion = {e.order};
        g.add(e.degree, piece);
    }
    return g;
}

std::vector<std::size_t> RingModel::block(VertexMask j, int q) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].j == j && basis_[i].q == q) out.push_back(i);
    return out;
}

RingModel ds_ring(const PanelComplex& p, const SpherePairSpec& spec, Domain domain, Parallelism par) {
    const int m = p.panel_count();
    if (spec.size() != m) {
        throw ValidationError("spec has " + std::to_string(spec.size()) + " entries, expected " + std::to_string(m));
    }
    const SimplicialComplex& y = p.space();
    const auto order = subsets_by_size(m);
    std::vector<std::unique_ptr<SimplicialCohomology>> blocks(std::size_t{1} << m);
    const Subcomplex all = Subcomplex::all(y);
    parallel_for(order.size(), par, [&](std::size_t i) {
        const VertexMask j = order[i];
        blocks[j] = std::make_unique<SimplicialCohomology>(p.space_ptr(), all, p.union_of(j), domain);
    });

    RingModel ring;
    ring.domain_ = domain;
    ring.spec_ = spec;
    ring.description = "ring of H^*(Y,P_J) blocks, spec " + spec.to_string();
    // first[j][q] = basis index of the first generator of block (j, q)
    std::vector<std::vector<std::size_t>> first(blocks.size());
    for (VertexMask j : order) {
        const auto& h = *blocks[j];
        first[j].assign(static_cast<std::size_t>(y.dimension() + 1), 0);
        for (int q = 0; q <= y.dimension(); ++q) {
            first[j][static_cast<std::size_t>(q)] = ring.basis_.size();
            for (std::size_t g = 0; g < h.size(q); ++g) {
                RingBasisElement e;
                e.j = j;
                e.q = q;
                e.degree = q + spec.dim_sum(j);
                e.generator = g;
                e.order = h.order(q, g);
                e.label = format_set(j) + ":" + std::to_string(q) + "." + std::to_string(g);
                ring.basis_.push_back(std::move(e));
            }
        }
    }

    VertexMask positive = 0;
    for (int j = 0; j < m; ++j)
        if (spec.dims[static_cast<std::size_t>(j)] >= 1) positive |= VertexMask{1} << j;

    std::vector<std::pair<VertexMask, VertexMask>> pairs;
    for (VertexMask a : order)
        for (VertexMask b : order)
            if ((a & b & positive) == 0) pairs.emplace_back(a, b);

    using Entry = std::pair<std::pair<std::size_t, std::size_t>, RingVector>;
    std::vector<std::vector<Entry>> slots(pairs.size());
    parallel_for(pairs.size(), par, [&](std::size_t idx) {
        const auto [ja, jb] = pairs[idx];
        const auto& ha = *blocks[ja];
        const auto& hb = *blocks[jb];
        const auto& ht = *blocks[ja | jb];
        int sign_exp = 0;
        for (int j : labels_of(ja))
            for (int k : labels_of(jb))
                if (j > k) sign_exp += spec.dims[static_cast<std::size_t>(j - 1)] * spec.dims[static_cast<std::size_t>(k - 1)];
        const int nj = spec.dim_sum(ja);
        for (int qa = 0; qa <= y.dimension(); ++qa) {
            for (int qb = 0; qa + qb <= y.dimension(); ++qb) {
                if (ha.size(qa) == 0 || hb.size(qb) == 0) continue;
                const bool negative = (sign_exp + nj * qb) % 2 != 0;
                for (std::size_t ga = 0; ga < ha.size(qa); ++ga) {
                    for (std::size_t gb = 0; gb < hb.size(qb); ++gb) {
                        const Cochain c = alexander_whitney(y, ha.generator(qa, ga), qa, hb.generator(qb, gb), qb);
                        const auto coords = ht.coordinates(qa + qb, c);
                        const std::size_t base = first[ja | jb][static_cast<std::size_t>(qa + qb)];
                        std::vector<std::pair<std::size_t, Integer>> v;
                        for (std::size_t i = 0; i < coords.size(); ++i)
                            if (coords[i] != 0) v.emplace_back(base + i, negative ? Integer(-coords[i]) : coords[i]);
                        RingVector r = ring.normalize(std::move(v));
                        if (!r.empty()) {
                            slots[idx].push_back({{first[ja][static_cast<std::size_t>(qa)] + ga,
                                                   first[jb][static_cast<std::size_t>(qb)] + gb},
                                                  std::move(r)});
                        }
                    }
                }
            }
        }
    });
    for (auto& s : slots)
        for (auto& [key, value] : s) ring.table_.emplace(key, std::move(value));
    return ring;
}

}  // namespace facelab
