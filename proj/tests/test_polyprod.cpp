#include "complex_enum.hpp"
#include "fixtures.hpp"
#include "homology_oracle.hpp"

#include "facelab/errors.hpp"
#include "facelab/polyprod.hpp"
#include "facelab/simplicial_chains.hpp"

#include <catch_amalgamated.hpp>

#include <memory>

using namespace facelab;

namespace {

GradedGroup from_oracle(const std::map<int, oracle::Group>& h) {
    GradedGroup g;
    for (const auto& [d, grp] : h) g.add(d, GroupPiece{grp.rank, grp.torsion});
    return g;
}

GradedGroup homology_of(const ProductComplex& c) {
    int bad = 0;
    REQUIRE(c.chains.boundary_squares_to_zero(&bad));
    return homology_groups(c.chains);
}

// Additive splitting over full subcomplexes, computed from the face list only:
// H_p = Z (p = 0) + sum over J != 0 of H~_{p - N_J - 1}(K_J) for disk/sphere
// pairs; one free class in degree sum(n_j + 1) per nonempty simplex for
// sphere/point pairs.
GradedGroup expected_product(const std::vector<oracle::Face>& faces, const std::vector<int>& dims, PairKind kind) {
    GradedGroup g;
    g.add(0, GroupPiece{1, {}});
    const int m = static_cast<int>(dims.size());
    if (kind == PairKind::sphere_point) {
        for (const auto& f : faces) {
            int d = 0;
            for (int v : f) d += dims[static_cast<std::size_t>(v - 1)] + 1;
            g.add(d, GroupPiece{1, {}});
        }
        return g;
    }
    for (std::uint32_t j = 1; j < (1u << m); ++j) {
        std::set<oracle::Face> sub;
        for (const auto& f : faces) {
            bool inside = true;
            for (int v : f)
                if (!(j & (1u << (v - 1)))) inside = false;
            if (inside) sub.insert(f);
        }
        int shift = 1;
        for (int v = 0; v < m; ++v)
            if (j & (1u << v)) shift += dims[static_cast<std::size_t>(v)];
        for (const auto& [d, grp] : oracle::homology(sub, true)) g.add(d + shift, GroupPiece{grp.rank, grp.torsion});
    }
    return g;
}

std::vector<oracle::Face> faces_of(const SimplicialComplex& k) {
    std::vector<oracle::Face> out;
    for (int d = 0; d <= k.dimension(); ++d)
        for (const auto& s : k.simplices(d)) out.push_back(s);
    return out;
}

std::vector<std::vector<int>> all_specs(int m, int top) {
    std::vector<std::vector<int>> out = {{}};
    for (int i = 0; i < m; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& s : out)
            for (int n = 0; n <= top; ++n) {
                auto t = s;
                t.push_back(n);
                next.push_back(t);
            }
        out = next;
    }
    return out;
}

}  // namespace

TEST_CASE("spec parsing") {
    auto s = SpherePairSpec::parse("1,1,0");
    CHECK(s.dims == std::vector<int>{1, 1, 0});
    CHECK(s.zero_dims() == 0b100);
    CHECK(s.dim_sum(0b011) == 2);
    CHECK(s.to_string() == "1,1,0");
    CHECK(SpherePairSpec::uniform(3, 2).to_string() == "2,2,2");
    CHECK_THROWS_AS(SpherePairSpec::parse("1,x"), ValidationError);
    CHECK_THROWS_AS(SpherePairSpec::parse("1,-1"), ValidationError);
}

TEST_CASE("classical moment-angle complexes") {
    auto k = fixtures::k4cycle();
    auto c = mac_chain_complex_classical(k, SpherePairSpec::uniform(4, 1));
    // S^3 x S^3
    GradedGroup expect;
    expect.add(0, {1, {}});
    expect.add(3, {2, {}});
    expect.add(6, {1, {}});
    CHECK(homology_of(c) == expect);

    auto point = mac_chain_complex_classical(fixtures::simplex(3), SpherePairSpec::uniform(3, 1));
    GradedGroup pt;
    pt.add(0, {1, {}});
    CHECK(homology_of(point) == pt);

    // two disjoint points: D^2 x S^1 u S^1 x D^2 = S^3
    auto s3 = mac_chain_complex_classical(build_complex(2, {{1}, {2}}), SpherePairSpec::uniform(2, 1));
    GradedGroup sphere;
    sphere.add(0, {1, {}});
    sphere.add(3, {1, {}});
    CHECK(homology_of(s3) == sphere);
}

TEST_CASE("classical cell counts") {
    for (const auto& k : {fixtures::k4cycle(), fixtures::path3(), fixtures::rp2()}) {
        const int m = k.vertex_count();
        std::size_t expect = 0, simplices = 0;
        for (int d = -1; d <= k.dimension(); ++d) {
            expect += k.count(d) * (std::size_t{1} << (m - d - 1));
            simplices += k.count(d);
        }
        for (int n : {0, 1, 2}) {
            auto c = mac_chain_complex_classical(k, SpherePairSpec::uniform(m, n));
            CHECK(c.chains.total_cells() == expect);
            auto sp = mac_chain_complex_classical(k, SpherePairSpec::uniform(m, n, PairKind::sphere_point));
            CHECK(sp.chains.total_cells() == simplices);
        }
    }
}

TEST_CASE("classical products against the additive splitting") {
    for (int m = 1; m <= 3; ++m) {
        enumerate::all_complexes(
            m,
            [&](const std::vector<oracle::Face>& faces, int mm) {
                auto k = build_complex(mm, enumerate::maximal_of(faces));
                for (const auto& dims : all_specs(mm, 2)) {
                    for (auto kind : {PairKind::disk_sphere, PairKind::sphere_point}) {
                        auto c = mac_chain_complex_classical(k, SpherePairSpec{dims, kind});
                        REQUIRE(homology_of(c) == expected_product(faces, dims, kind));
                    }
                }
            },
            false);
    }
    auto rp2 = fixtures::rp2();
    auto c = mac_chain_complex_classical(rp2, SpherePairSpec::uniform(6, 0));
    CHECK(homology_of(c) == expected_product(faces_of(rp2), std::vector<int>(6, 0), PairKind::disk_sphere));
}

TEST_CASE("degenerate panel choices") {
    auto y = std::make_shared<const SimplicialComplex>(fixtures::k4cycle());
    const auto hy = simplicial_homology(*y);
    SECTION("every panel is all of Y") {
        auto p = PanelComplex::build(y, {Subcomplex::all(*y), Subcomplex::all(*y)});
        CHECK(homology_of(mac_chain_complex_panel(p, SpherePairSpec::parse("1,0"))) == hy);
        // Y x S^2 x S^1
        auto c = mac_chain_complex_panel(p, SpherePairSpec{{1, 0}, PairKind::sphere_point});
        GradedGroup expect;
        for (const auto& [d, g] : hy.pieces()) {
            expect.add(d, g);
            expect.add(d + 1, g);
            expect.add(d + 2, g);
            expect.add(d + 3, g);
        }
        CHECK(homology_of(c) == expect);
    }
    SECTION("every panel is empty") {
        auto p = PanelComplex::build(y, {Subcomplex::none(*y), Subcomplex::none(*y), Subcomplex::none(*y)});
        GradedGroup eight;
        for (const auto& [d, g] : hy.pieces())
            for (int i = 0; i < 8; ++i) eight.add(d, g);
        CHECK(homology_of(mac_chain_complex_panel(p, SpherePairSpec::uniform(3, 0))) == eight);
    }
}

TEST_CASE("panel model over Y^K for the 4-cycle") {
    auto p = panelize_simplicial(fixtures::k4cycle());
    auto c = mac_chain_complex_panel(p, SpherePairSpec::uniform(4, 0));
    GradedGroup expect;  // real moment-angle complex of the square: a torus
    expect.add(0, {1, {}});
    expect.add(1, {2, {}});
    expect.add(2, {1, {}});
    CHECK(homology_of(c) == expect);
}

TEST_CASE("panel and classical models agree") {
    for (int m = 1; m <= 3; ++m) {
        enumerate::all_complexes(m, [&](const std::vector<oracle::Face>& faces, int mm) {
            auto k = build_complex(mm, enumerate::maximal_of(faces));
            auto p = panelize_simplicial(k);
            for (const auto& dims : all_specs(mm, 2)) {
                for (auto kind : {PairKind::disk_sphere, PairKind::sphere_point}) {
                    SpherePairSpec spec{dims, kind};
                    REQUIRE(homology_of(mac_chain_complex_panel(p, spec)) ==
                            homology_of(mac_chain_complex_classical(k, spec)));
                }
            }
        });
    }
    enumerate::all_complexes(4, [&](const std::vector<oracle::Face>& faces, int mm) {
        auto k = build_complex(mm, enumerate::maximal_of(faces));
        auto p = panelize_simplicial(k);
        for (const auto& spec : {SpherePairSpec::uniform(4, 1), SpherePairSpec::parse("0,1,2,0"),
                                 SpherePairSpec::uniform(4, 1, PairKind::sphere_point)}) {
            REQUIRE(homology_of(mac_chain_complex_panel(p, spec)) ==
                    homology_of(mac_chain_complex_classical(k, spec)));
        }
    });
}

TEST_CASE("labels and json dump") {
    auto k = build_complex(2, {{1}, {2}});
    auto c = mac_chain_complex_classical(k, SpherePairSpec::uniform(2, 0), true);
    REQUIRE(c.labels.size() == 2);
    CHECK(c.labels[0].size() == 4);
    CHECK(c.labels[1][0] == "*|-,I");
    const std::string js = chain_complex_json(c);
    CHECK(js.find("\"cells\":[4,4]") != std::string::npos);
    auto y = std::make_shared<const SimplicialComplex>(k);
    auto p = PanelComplex::build(y, {Subcomplex::all(*y)});
    CHECK_THROWS_AS(mac_chain_complex_panel(p, SpherePairSpec::uniform(2, 0)), ValidationError);
    CHECK_THROWS_AS(mac_chain_complex_classical(k, SpherePairSpec::uniform(3, 0)), ValidationError);
}
