#include "complex_enum.hpp"
#include "fixtures.hpp"

#include "facelab/errors.hpp"
#include "facelab/facering.hpp"

#include <catch_amalgamated.hpp>

#include <memory>
#include <random>

using namespace facelab;

namespace {

// Monomials in m variables of degree deg_x each whose support is a face:
// plain enumeration of exponent vectors.
std::vector<std::size_t> brute_force_series(const std::vector<enumerate::Face>& faces, int m, int deg_x, int bound) {
    std::set<VertexMask> face_masks = {0};
    for (const auto& f : faces) face_masks.insert(mask_of(f));
    std::vector<std::size_t> out(static_cast<std::size_t>(bound + 1), 0);
    std::vector<int> e(static_cast<std::size_t>(m), 0);
    std::function<void(int, int)> rec = [&](int i, int d) {
        if (i == m) {
            VertexMask s = 0;
            for (int j = 0; j < m; ++j)
                if (e[static_cast<std::size_t>(j)]) s |= VertexMask{1} << j;
            if (face_masks.count(s)) out[static_cast<std::size_t>(d)] += 1;
            return;
        }
        for (int k = 0; d + k * deg_x <= bound; ++k) {
            e[static_cast<std::size_t>(i)] = k;
            rec(i + 1, d + k * deg_x);
        }
        e[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, 0);
    return out;
}

std::vector<std::size_t> even(std::initializer_list<std::size_t> v) {
    std::vector<std::size_t> out;
    for (auto x : v) {
        if (!out.empty()) out.push_back(0);
        out.push_back(x);
    }
    return out;
}

}  // namespace

TEST_CASE("Stanley-Reisner Hilbert series") {
    CHECK(stanley_reisner(build_complex(1, {{1}})).hilbert(6).rank == std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1});
    CHECK(stanley_reisner(build_complex(2, {{1}, {2}})).hilbert(6).rank == even({1, 2, 2, 2}));
    CHECK(stanley_reisner(fixtures::k4cycle()).hilbert(8).rank == even({1, 4, 8, 12, 16}));
    CHECK(stanley_reisner(fixtures::simplex(3)).hilbert(8).rank == even({1, 3, 6, 10, 15}));
    for (int m = 1; m <= 4; ++m)
        enumerate::all_complexes(m, [&](const std::vector<enumerate::Face>& faces, int mm) {
            auto k = build_complex(mm, enumerate::maximal_of(faces));
            for (int deg : {1, 2}) {
                auto r = stanley_reisner(k, deg);
                REQUIRE(r.hilbert(10).rank == brute_force_series(faces, mm, deg, 10));
                std::vector<std::size_t> counted(11, 0);
                for (const auto& t : r.basis(10)) counted[static_cast<std::size_t>(r.degree(t))] += 1;
                REQUIRE(counted == r.hilbert(10).rank);
            }
        });
    CHECK_THROWS_AS(stanley_reisner(build_complex(3, {{1, 2}})), ValidationError);
}

TEST_CASE("Stanley-Reisner products") {
    auto r = stanley_reisner(build_complex(2, {{1}, {2}}));
    const BlockElement v1{{BlockTerm{0b01, 0, {1, 0}}, 1}}, v2{{BlockTerm{0b10, 0, {0, 1}}, 1}};
    CHECK(r.multiply(v1, v2).empty());
    CHECK(r.multiply(v1, v1) == BlockElement{{BlockTerm{0b01, 0, {2, 0}}, 1}});
}

TEST_CASE("poset face ring relations") {
    auto s = fixtures::two_edges();
    PosetFaceRing r(s);
    // elements: 0 bottom, 1 and 2 vertices, 3 = a, 4 = b
    const auto prod = r.multiply(r.generator(1), r.generator(2));
    CHECK(prod == PosetFaceRing::Element{{{{3, 1}}, 1}, {{{4, 1}}, 1}});
    CHECK(r.format(prod) == "v[a] + v[b]");
    CHECK(r.multiply(r.generator(3), r.generator(4)).empty());
    CHECK(r.multiply(r.generator(1), r.generator(3)) == PosetFaceRing::Element{{{{1, 1}, {3, 1}}, 1}});
    CHECK(r.multiply(r.generator(0), r.generator(3)) == r.generator(3));
    CHECK(r.hilbert(4).rank == std::vector<std::size_t>{1, 0, 2, 0, 4});

    // face poset of K recovers the Stanley-Reisner relations
    auto k = fixtures::k4cycle();
    auto fp = face_poset(k);
    PosetFaceRing rk(fp);
    auto find = [&](VertexMask m) {
        for (std::size_t e = 0; e < fp.size(); ++e)
            if (fp.vertex_set(static_cast<int>(e)) == m) return static_cast<int>(e);
        return -1;
    };
    const auto e12 = rk.generator(find(0b0011)), e23 = rk.generator(find(0b0110));
    const auto p = rk.multiply(e12, e23);
    CHECK(p.empty());  // 123 is not a face
    const auto q = rk.multiply(rk.generator(find(0b0001)), rk.generator(find(0b0010)));
    CHECK(q == rk.generator(find(0b0011)));
}

TEST_CASE("rewriting is confluent and associative") {
    std::vector<SimplicialPoset> posets = {fixtures::two_edges(), fixtures::two_triangles(),
                                           face_poset(fixtures::k4cycle()), face_poset(fixtures::simplex(3))};
    std::mt19937 rng(2024);
    int checked = 0;
    for (const auto& s : posets) {
        PosetFaceRing r(s);
        for (int trial = 0; trial < 250; ++trial) {
            PosetFaceRing::Element x[3];
            for (auto& e : x) {
                e = r.generator(static_cast<int>(rng() % s.size()));
                if (rng() % 2) e = r.multiply(e, r.generator(static_cast<int>(rng() % s.size())));
            }
            const auto left = r.multiply(r.multiply(x[0], x[1]), x[2]);
            const auto right = r.multiply(x[0], r.multiply(x[1], x[2]));
            REQUIRE(left == right);
            PosetFaceRing::Word raw;
            for (int i = 0; i < 3; ++i) {
                const int e = static_cast<int>(rng() % s.size());
                raw.emplace_back(e, 1 + static_cast<int>(rng() % 2));
            }
            const auto lm = r.normal_form(raw, RewriteStrategy::leftmost);
            REQUIRE(lm == r.normal_form(raw, RewriteStrategy::rightmost));
            REQUIRE(lm == r.normal_form(raw, RewriteStrategy::random, rng()));
            ++checked;
        }
    }
    CHECK(checked == 1000);
}

TEST_CASE("topological face ring blocks") {
    auto k = fixtures::k4cycle();
    auto t = topological_face_ring(panelize_simplicial(k));
    std::vector<VertexMask> expect;
    for (VertexMask j : subsets_by_size(4))
        if (k.contains(labels_of(j))) expect.push_back(j);
    CHECK(t.blocks() == expect);
    for (VertexMask j : t.blocks()) {
        REQUIRE(t.generators(j).size() == 1);
        CHECK(t.generators(j)[0].q == 0);
    }

    auto y = std::make_shared<const SimplicialComplex>(fixtures::torus9());
    auto p = PanelComplex::build(y, {Subcomplex::none(*y), Subcomplex::none(*y)});
    auto tt = topological_face_ring(p);
    CHECK(tt.blocks() == std::vector<VertexMask>{0});
    CHECK(tt.hilbert(3).rank == std::vector<std::size_t>{1, 2, 1, 0});

    auto tri = topological_face_ring(panelize_poset(fixtures::two_triangles()));
    const auto& top = tri.generators(0b111);
    REQUIRE(top.size() == 2);
    CHECK(top[0].q == 0);
    CHECK(top[1].q == 0);
}

TEST_CASE("Segre decomposition of block dimensions") {
    std::vector<PanelComplex> inputs;
    inputs.push_back(panelize_simplicial(fixtures::k4cycle()));
    inputs.push_back(panelize_poset(fixtures::two_triangles()));
    auto y = std::make_shared<const SimplicialComplex>(fixtures::rp2());
    inputs.push_back(PanelComplex::build(
        y, {Subcomplex::all(*y), Subcomplex::closure(*y, {{1, 2, 3}, {3, 4}}), Subcomplex::closure(*y, {{3, 4, 6}})}));
    for (const auto& p : inputs) {
        auto r = topological_face_ring(p);
        for (VertexMask j : r.blocks()) {
            std::vector<std::size_t> counted(9, 0);
            for (const auto& t : r.basis(8))
                if (t.j == j && r.generators(j)[t.gen].order == 0) counted[static_cast<std::size_t>(r.degree(t))] += 1;
            CHECK(r.block_hilbert(j, 8).rank == counted);
        }
    }
    // torsion of RP^2 survives in block {1} (P_1 = Y)
    auto r = topological_face_ring(inputs.back());
    CHECK(r.block_hilbert(0b001, 6).torsion[4] == std::vector<Integer>{2});
}

TEST_CASE("face ring isomorphisms") {
    for (int m = 1; m <= 4; ++m)
        enumerate::all_complexes(m, [&](const std::vector<enumerate::Face>& faces, int mm) {
            auto k = build_complex(mm, enumerate::maximal_of(faces));
            auto v = iso_check(topological_face_ring(panelize_simplicial(k)), stanley_reisner(k), 10);
            INFO(v.stage << " " << v.detail);
            REQUIRE(v.ok);
            auto fp = face_poset(k);
            auto w = iso_check(PosetFaceRing(fp), stanley_reisner(k), poset_correspondence(fp, false), 8);
            INFO(w.stage << " " << w.detail);
            REQUIRE(w.ok);
        });
    for (const auto& s : {fixtures::two_triangles(), fixtures::two_edges()}) {
        auto v = iso_check(PosetFaceRing(s), topological_face_ring(panelize_poset(s)), poset_correspondence(s, true), 10);
        INFO(v.stage << " " << v.detail);
        CHECK(v.ok);
    }
    auto bad = iso_check(stanley_reisner(fixtures::k4cycle()), stanley_reisner(fixtures::path3()), 10);
    CHECK_FALSE(bad.ok);
    CHECK(bad.stage == "hilbert");
    CHECK(bad.degree == 4);
    // real grading over Z/2
    auto k = fixtures::k4cycle();
    auto z2 = iso_check(topological_face_ring(panelize_simplicial(k), 1, Domain::modulo(2)),
                        stanley_reisner(k, 1, Domain::modulo(2)), 8);
    CHECK(z2.ok);
    // two edges: series of Z[S] matches the topological ring
    auto s = fixtures::two_edges();
    CHECK(PosetFaceRing(s).hilbert(4) == topological_face_ring(panelize_poset(s)).hilbert(4));
}
