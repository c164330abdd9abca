#include "facelab/polyprod.hpp"

#include "facelab/errors.hpp"

#include <bit>
#include <sstream>
#include <unordered_set>

namespace facelab {

VertexMask SpherePairSpec::zero_dims() const {
    VertexMask z = 0;
    for (std::size_t j = 0; j < dims.size(); ++j)
        if (dims[j] == 0) z |= VertexMask{1} << j;
    return z;
}

int SpherePairSpec::dim_sum(VertexMask j) const {
    int s = 0;
    for (std::size_t i = 0; i < dims.size(); ++i)
        if ((j >> i) & 1u) s += dims[i];
    return s;
}

SpherePairSpec SpherePairSpec::uniform(int m, int n, PairKind kind) {
    return SpherePairSpec{std::vector<int>(static_cast<std::size_t>(m), n), kind};
}

SpherePairSpec SpherePairSpec::parse(const std::string& text, PairKind kind) {
    SpherePairSpec s;
    s.kind = kind;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ValidationError("spec entry '" + item + "' is not an integer");
        }
        if (used != item.size() && item.find_first_not_of(" \t", used) != std::string::npos) {
            throw ValidationError("spec entry '" + item + "' is not an integer");
        }
        if (v < 0) throw ValidationError("spec entries must be >= 0");
        s.dims.push_back(v);
    }
    return s;
}

std::string SpherePairSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(dims[i]);
    }
    return out;
}

namespace {

struct FactorCell {
    int dim;
    bool top;  // belongs to X_j only
    std::vector<std::pair<int, int>> boundary;
    std::string name;
};

std::vector<FactorCell> factor_model(int n, PairKind kind) {
    if (kind == PairKind::sphere_point) {
        return {{0, false, {}, "v"}, {n + 1, true, {}, "e" + std::to_string(n + 1)}};
    }
    if (n == 0) {
        return {{0, false, {}, "-"}, {0, false, {}, "+"}, {1, true, {{1, 1}, {0, -1}}, "I"}};
    }
    return {{0, false, {}, "v"},
            {n, false, {}, "e" + std::to_string(n)},
            {n + 1, true, {{1, 1}}, "e" + std::to_string(n + 1)}};
}

struct BaseCell {
    int dim;
    std::vector<std::pair<std::size_t, int>> boundary;
    std::string label;
};

template <class Admissible>
ProductComplex assemble(const std::vector<BaseCell>& base, const SpherePairSpec& spec, Admissible admissible,
                        bool with_labels, Parallelism par) {
    const std::size_t m = spec.dims.size();
    std::vector<std::vector<FactorCell>> factors;
    for (int n : spec.dims) factors.push_back(factor_model(n, spec.kind));
    std::vector<std::size_t> radix(m), weight(m);
    std::size_t total = 1;
    for (std::size_t j = m; j-- > 0;) {
        radix[j] = factors[j].size();
        weight[j] = total;
        total *= radix[j];
    }
    if (total > (std::size_t{1} << 26) || base.size() * total > (std::size_t{1} << 28)) {
        throw ValidationError("product complex too large for the brute-force model");
    }
    auto digit = [&](std::size_t code, std::size_t j) { return (code / weight[j]) % radix[j]; };
    std::vector<int> pattern_dim(total, 0);
    std::vector<VertexMask> pattern_top(total, 0);
    for (std::size_t code = 0; code < total; ++code) {
        for (std::size_t j = 0; j < m; ++j) {
            const auto& cell = factors[j][digit(code, j)];
            pattern_dim[code] += cell.dim;
            if (cell.top) pattern_top[code] |= VertexMask{1} << j;
        }
    }

    std::vector<std::size_t> counts;
    std::vector<std::int64_t> position(base.size() * total, -1);
    std::vector<std::vector<std::string>> labels;
    for (std::size_t b = 0; b < base.size(); ++b) {
        for (std::size_t code = 0; code < total; ++code) {
            if (!admissible(b, pattern_top[code])) continue;
            const auto d = static_cast<std::size_t>(base[b].dim + pattern_dim[code]);
            if (counts.size() <= d) {
                counts.resize(d + 1, 0);
                labels.resize(d + 1);
            }
            position[b * total + code] = static_cast<std::int64_t>(counts[d]++);
            if (with_labels) {
                std::string l = base[b].label + "|";
                for (std::size_t j = 0; j < m; ++j) {
                    if (j) l += ",";
                    l += factors[j][digit(code, j)].name;
                }
                labels[d].push_back(std::move(l));
            }
        }
    }

    std::vector<std::vector<std::pair<std::size_t, Triplet>>> pieces(base.size());
    parallel_for(base.size(), par, [&](std::size_t b) {
        auto& out = pieces[b];
        for (std::size_t code = 0; code < total; ++code) {
            const std::int64_t pos = position[b * total + code];
            if (pos < 0) continue;
            const auto d = static_cast<std::size_t>(base[b].dim + pattern_dim[code]);
            const auto col = static_cast<std::size_t>(pos);
            for (const auto& [face, sign] : base[b].boundary) {
                const std::int64_t row = position[face * total + code];
                if (row < 0) throw InternalError("product boundary left the admissible cells");
                out.push_back({d, Triplet{static_cast<std::size_t>(row), col, Integer(sign)}});
            }
            int prefix = base[b].dim;
            for (std::size_t j = 0; j < m; ++j) {
                const std::size_t w = digit(code, j);
                const auto& cell = factors[j][w];
                const int koszul = (prefix % 2 == 0) ? 1 : -1;
                for (const auto& [target, coeff] : cell.boundary) {
                    const std::size_t other = code - w * weight[j] + static_cast<std::size_t>(target) * weight[j];
                    const std::int64_t row = position[b * total + other];
                    if (row < 0) throw InternalError("product boundary left the admissible cells");
                    out.push_back({d, Triplet{static_cast<std::size_t>(row), col, Integer(koszul * coeff)}});
                }
                prefix += cell.dim;
            }
        }
    });

    std::vector<std::vector<Triplet>> by_degree(counts.size());
    for (auto& list : pieces)
        for (auto& [d, t] : list) by_degree[d].push_back(std::move(t));
    std::vector<IntMatrix> bd;
    for (std::size_t d = 1; d < counts.size(); ++d) {
        bd.push_back(IntMatrix::from_triplets(counts[d - 1], counts[d], std::move(by_degree[d])));
    }
    ProductComplex out;
    out.chains = ChainComplex(0, counts, std::move(bd));
    if (with_labels) out.labels = std::move(labels);
    return out;
}

}  // namespace

ProductComplex mac_chain_complex_panel(const PanelComplex& p, const SpherePairSpec& spec, bool with_labels,
                                       Parallelism par) {
    if (spec.size() != p.panel_count()) {
        throw ValidationError("spec has " + std::to_string(spec.size()) + " entries but there are " +
                              std::to_string(p.panel_count()) + " panels");
    }
    const SimplicialComplex& y = p.space();
    std::vector<BaseCell> base;
    std::vector<VertexMask> index;
    for (int d = 0; d <= y.dimension(); ++d) {
        for (std::size_t i = 0; i < y.count(d); ++i) {
            BaseCell c{d, {}, with_labels ? format_simplex(y.simplex(d, i)) : std::string()};
            if (d > 0) {
                const Simplex& s = y.simplex(d, i);
                for (std::size_t k = 0; k < s.size(); ++k) {
                    Simplex face = s;
                    face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
                    c.boundary.emplace_back(y.global_id(d - 1, *y.index_of(face)) - 1, k % 2 == 0 ? 1 : -1);
                }
            }
            base.push_back(std::move(c));
            index.push_back(p.cell_index(d, i));
        }
    }
    return assemble(
        base, spec, [&](std::size_t b, VertexMask top) { return (top & ~index[b]) == 0; }, with_labels, par);
}

ProductComplex mac_chain_complex_classical(const SimplicialComplex& k, const SpherePairSpec& spec,
                                           bool with_labels) {
    if (spec.size() != k.vertex_count()) {
        throw ValidationError("spec has " + std::to_string(spec.size()) + " entries but K has " +
                              std::to_string(k.vertex_count()) + " vertices");
    }
    std::unordered_set<VertexMask> simplices;
    for (int d = -1; d <= k.dimension(); ++d)
        for (const auto& s : k.simplices(d)) simplices.insert(mask_of(s));
    std::vector<BaseCell> base = {BaseCell{0, {}, "*"}};
    return assemble(
        base, spec, [&](std::size_t, VertexMask top) { return simplices.count(top) > 0; }, with_labels,
        Parallelism{1});
}

std::string chain_complex_json(const ProductComplex& c) {
    std::ostringstream os;
    os << "{\"min_degree\":" << c.chains.min_degree() << ",\"cells\":[";
    for (int n = c.chains.min_degree(); n <= c.chains.max_degree(); ++n) {
        if (n > c.chains.min_degree()) os << ",";
        os << c.chains.cell_count(n);
    }
    os << "],\"boundaries\":[";
    for (int n = c.chains.min_degree() + 1; n <= c.chains.max_degree(); ++n) {
        if (n > c.chains.min_degree() + 1) os << ",";
        os << "{\"degree\":" << n << ",\"matrix\":" << c.chains.boundary(n).to_json() << "}";
    }
    os << "]}";
    return os.str();
}

}  // namespace facelab
