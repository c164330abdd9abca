#pragma once

#include "facelab/simplicial_complex.hpp"
#include "facelab/simplicial_poset.hpp"

#include <algorithm>
#include <vector>

namespace fixtures {

using facelab::Simplex;

inline const std::vector<Simplex>& rp2_facets() {
    static const std::vector<Simplex> f = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                           {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};
    return f;
}

inline facelab::SimplicialComplex k4cycle() {
    return facelab::build_complex(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
}

inline facelab::SimplicialComplex rp2() { return facelab::build_complex(6, rp2_facets()); }

inline facelab::SimplicialComplex simplex(int m) {
    Simplex s;
    for (int i = 1; i <= m; ++i) s.push_back(i);
    return facelab::build_complex(m, {s});
}

/// 3x3 grid torus, vertex (i, j) labeled 1 + i + 3j.
inline facelab::SimplicialComplex torus9() {
    std::vector<Simplex> tri;
    auto v = [](int i, int j) { return 1 + (i % 3) + 3 * (j % 3); };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Simplex a = {v(i, j), v(i + 1, j), v(i + 1, j + 1)};
            Simplex b = {v(i, j), v(i, j + 1), v(i + 1, j + 1)};
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            tri.push_back(a);
            tri.push_back(b);
        }
    return facelab::build_complex(9, tri);
}

inline facelab::SimplicialComplex path3() { return facelab::build_complex(4, {{1, 2}, {2, 3}, {3, 4}}); }

/// Two 2-simplices glued along their whole boundary.
inline facelab::SimplicialPoset two_triangles() {
    // 0: bottom, 1-3: vertices, 4: 12, 5: 13, 6: 23, 7-8: tops
    std::vector<std::string> names = {"0", "1", "2", "3", "12", "13", "23", "A", "B"};
    std::vector<std::pair<int, int>> covers = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {1, 5}, {3, 5},
                                               {2, 6}, {3, 6}, {4, 7}, {5, 7}, {6, 7}, {4, 8}, {5, 8},
                                               {6, 8}};
    return facelab::SimplicialPoset::build(names, covers);
}

/// Two edges on the same two vertices.
inline facelab::SimplicialPoset two_edges() {
    std::vector<std::string> names = {"0", "1", "2", "a", "b"};
    std::vector<std::pair<int, int>> covers = {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}};
    return facelab::SimplicialPoset::build(names, covers);
}

}  // namespace fixtures
