#include "facelab/simplicial_poset.hpp"

#include "facelab/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace facelab {

SimplicialPoset SimplicialPoset::build(std::vector<std::string> names,
                                       const std::vector<std::pair<int, int>>& covers,
                                       const std::map<int, int>& atom_labels) {
    SimplicialPoset s;
    const std::size_t n = names.size();
    if (n == 0) {
        throw ValidationError("poset has no elements (missing initial element)");
    }
    if (n > 4096) {
        throw ValidationError("poset too large");
    }
    s.names_ = std::move(names);
    s.leq_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        s.leq_[s.index(static_cast<int>(i), static_cast<int>(i))] = 1;
    }
    for (const auto& [a, b] : covers) {
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
            throw ValidationError("cover relation refers to an unknown element");
        }
        if (a == b) {
            throw ValidationError("cover relation " + s.names_[static_cast<std::size_t>(a)] + " < itself");
        }
        s.leq_[s.index(a, b)] = 1;
    }
    // Warshall closure.
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!s.leq_[i * n + k]) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (s.leq_[k * n + j]) {
                    s.leq_[i * n + j] = 1;
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (s.leq_[i * n + j] && s.leq_[j * n + i]) {
                throw ValidationError("order relation has a cycle through " + s.names_[i] + " and " +
                                      s.names_[j]);
            }
        }
    }
    std::vector<int> minima;
    for (std::size_t i = 0; i < n; ++i) {
        bool below_all = true;
        for (std::size_t j = 0; j < n && below_all; ++j) {
            below_all = s.leq_[i * n + j] != 0;
        }
        if (below_all) {
            minima.push_back(static_cast<int>(i));
        }
    }
    if (minima.size() != 1) {
        throw ValidationError("poset has no unique initial element");
    }
    s.bottom_ = minima.front();

    // Atoms: elements whose lower segment is {0̂, a}.
    std::vector<int> atoms;
    for (std::size_t i = 0; i < n; ++i) {
        if (static_cast<int>(i) == s.bottom_) {
            continue;
        }
        std::size_t below = 0;
        for (std::size_t j = 0; j < n; ++j) {
            below += s.leq_[j * n + i];
        }
        if (below == 2) {
            atoms.push_back(static_cast<int>(i));
        }
    }
    s.vertex_count_ = static_cast<int>(atoms.size());
    if (s.vertex_count_ > 63) {
        throw ValidationError("at most 63 vertices are supported");
    }
    s.atom_of_label_.assign(atoms.size(), -1);
    std::vector<int> label_of(n, 0);
    if (atom_labels.empty()) {
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            label_of[static_cast<std::size_t>(atoms[i])] = static_cast<int>(i) + 1;
        }
    } else {
        for (const auto& [element, label] : atom_labels) {
            if (element < 0 || static_cast<std::size_t>(element) >= n ||
                std::find(atoms.begin(), atoms.end(), element) == atoms.end()) {
                throw ValidationError("vertex label given for a non-vertex element");
            }
            label_of[static_cast<std::size_t>(element)] = label;
        }
    }
    for (int a : atoms) {
        const int label = label_of[static_cast<std::size_t>(a)];
        if (label < 1 || label > s.vertex_count_) {
            throw ValidationError("vertex " + s.names_[static_cast<std::size_t>(a)] +
                                  " lacks a label in 1.." + std::to_string(s.vertex_count_));
        }
        auto& slot = s.atom_of_label_[static_cast<std::size_t>(label - 1)];
        if (slot != -1) {
            throw ValidationError("vertex label " + std::to_string(label) + " used twice");
        }
        slot = a;
    }

    s.vertex_set_.assign(n, 0);
    s.rank_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (int a : atoms) {
            if (s.leq_[static_cast<std::size_t>(a) * n + i]) {
                s.vertex_set_[i] |= VertexMask{1} << (label_of[static_cast<std::size_t>(a)] - 1);
            }
        }
        s.rank_[i] = std::popcount(s.vertex_set_[i]);
    }

    // Boolean lower segments: τ ↦ V(τ) must be an order isomorphism
    // [0̂, σ] → 2^{V(σ)}.
    for (std::size_t sigma = 0; sigma < n; ++sigma) {
        std::vector<int> segment;
        for (std::size_t t = 0; t < n; ++t) {
            if (s.leq_[t * n + sigma]) {
                segment.push_back(static_cast<int>(t));
            }
        }
        const auto expected = std::size_t{1} << s.rank_[sigma];
        if (s.rank_[sigma] > 20 || segment.size() != expected) {
            throw ValidationError("lower segment of " + s.names_[sigma] + " is not Boolean (" +
                                  std::to_string(segment.size()) + " elements for " +
                                  std::to_string(s.rank_[sigma]) + " vertices)");
        }
        for (std::size_t x = 0; x < segment.size(); ++x) {
            for (std::size_t y = 0; y < segment.size(); ++y) {
                const auto a = static_cast<std::size_t>(segment[x]);
                const auto b = static_cast<std::size_t>(segment[y]);
                const bool order = s.leq_[a * n + b] != 0;
                const bool sets = (s.vertex_set_[a] & ~s.vertex_set_[b]) == 0;
                if (order != sets || (x != y && s.vertex_set_[a] == s.vertex_set_[b])) {
                    throw ValidationError("lower segment of " + s.names_[sigma] +
                                          " is not the face poset of a simplex");
                }
            }
        }
    }

    s.meet_.assign(n * n, -1);
    s.join_.assign(n * n, {});
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<int> lower, upper;
            for (std::size_t c = 0; c < n; ++c) {
                if (s.leq_[c * n + a] && s.leq_[c * n + b]) {
                    lower.push_back(static_cast<int>(c));
                }
                if (s.leq_[a * n + c] && s.leq_[b * n + c]) {
                    upper.push_back(static_cast<int>(c));
                }
            }
            std::vector<int> maximal_lower;
            for (int c : lower) {
                const bool is_max = std::none_of(lower.begin(), lower.end(), [&](int d) {
                    return d != c && s.leq_[static_cast<std::size_t>(c) * n + static_cast<std::size_t>(d)];
                });
                if (is_max) {
                    maximal_lower.push_back(c);
                }
            }
            for (int c : upper) {
                const bool is_min = std::none_of(upper.begin(), upper.end(), [&](int d) {
                    return d != c && s.leq_[static_cast<std::size_t>(d) * n + static_cast<std::size_t>(c)];
                });
                if (is_min) {
                    s.join_[a * n + b].push_back(c);
                }
            }
            if (maximal_lower.size() == 1) {
                s.meet_[a * n + b] = maximal_lower.front();
            } else if (!s.join_[a * n + b].empty()) {
                throw ValidationError("elements " + s.names_[a] + " and " + s.names_[b] +
                                      " have a common upper bound but no unique meet");
            }
        }
    }

    s.order_.resize(n);
    std::iota(s.order_.begin(), s.order_.end(), 0);
    std::stable_sort(s.order_.begin(), s.order_.end(), [&](int a, int b) {
        return s.rank_[static_cast<std::size_t>(a)] < s.rank_[static_cast<std::size_t>(b)];
    });
    s.position_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        s.position_[static_cast<std::size_t>(s.order_[i])] = static_cast<int>(i);
    }
    return s;
}

std::optional<int> SimplicialPoset::meet(int a, int b) const {
    const int m = meet_[index(a, b)];
    if (m < 0) {
        return std::nullopt;
    }
    return m;
}

SimplicialPoset face_poset(const SimplicialComplex& k) {
    std::vector<std::string> names;
    std::vector<Simplex> elements;
    for (int d = -1; d <= k.dimension(); ++d) {
        for (const auto& s : k.simplices(d)) {
            names.push_back(format_simplex(s));
            elements.push_back(s);
        }
    }
    std::vector<std::pair<int, int>> covers;
    std::map<int, int> labels;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const auto& s = elements[i];
        if (s.size() == 1) {
            labels[static_cast<int>(i)] = s.front();
        }
        for (int v = 1; v <= k.vertex_count(); ++v) {
            if (std::binary_search(s.begin(), s.end(), v)) {
                continue;
            }
            Simplex t = s;
            t.insert(std::upper_bound(t.begin(), t.end(), v), v);
            if (auto idx = k.index_of(t)) {
                covers.emplace_back(static_cast<int>(i),
                                    static_cast<int>(k.global_id(static_cast<int>(t.size()) - 1, *idx)));
            }
        }
    }
    if (!k.is_minimal()) {
        // Ghost vertices have no atom; relabel the used ones densely.
        int next = 1;
        for (auto& [element, label] : labels) {
            label = next++;
        }
    }
    return SimplicialPoset::build(std::move(names), covers, labels);
}

SimplicialComplex poset_order_complex(const SimplicialPoset& s) {
    return poset_order_complex(s, ~VertexMask{0});
}

SimplicialComplex poset_order_complex(const SimplicialPoset& s, VertexMask j) {
    const auto& order = s.linear_order();
    const std::size_t n = order.size();
    // Position 0 is 0̂ (rank 0 is unique); shift positions down by one.
    std::vector<std::vector<int>> above(n - 1);
    std::vector<char> keep(n - 1, 0);
    std::vector<Simplex> tags(n - 1);
    for (std::size_t p = 1; p < n; ++p) {
        const int e = order[p];
        keep[p - 1] = (s.vertex_set(e) & ~j) == 0 ? 1 : 0;
        tags[p - 1] = {e};
        for (std::size_t q = p + 1; q < n; ++q) {
            if (s.less(e, order[q])) {
                above[p - 1].push_back(static_cast<int>(q) - 1);
            }
        }
    }
    auto out = order_complex(above, keep);
    out.set_vertex_tags(std::move(tags));
    return out;
}

}  // namespace facelab
