#include "complex_enum.hpp"
#include "fixtures.hpp"
#include "homology_oracle.hpp"

#include "facelab/cohomology.hpp"
#include "facelab/errors.hpp"
#include "facelab/simplicial_chains.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace facelab;

namespace {

GradedGroup from_oracle(const std::map<int, oracle::Group>& h) {
    GradedGroup g;
    for (const auto& [d, grp] : h) g.add(d, GroupPiece{grp.rank, grp.torsion});
    return g;
}

std::set<oracle::Face> faces_of(const SimplicialComplex& k) {
    std::set<oracle::Face> out;
    for (int d = 0; d <= k.dimension(); ++d)
        for (const auto& s : k.simplices(d)) out.insert(s);
    return out;
}

std::shared_ptr<const SimplicialComplex> share(SimplicialComplex k) {
    return std::make_shared<const SimplicialComplex>(std::move(k));
}

}  // namespace

TEST_CASE("cycle boundary matrix is a signed incidence matrix") {
    auto c = chain_complex(fixtures::k4cycle(), ChainFlavor::absolute);
    auto d1 = c.boundary(1);
    CHECK(d1.rows() == 4);
    CHECK(d1.cols() == 4);
    auto dense = d1.to_dense();
    for (std::size_t j = 0; j < 4; ++j) {
        Integer sum = 0;
        int nz = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            sum += dense[i][j];
            nz += dense[i][j] != 0;
        }
        CHECK(sum == 0);
        CHECK(nz == 2);
    }
    // [1,2] -> [2] - [1]
    CHECK(dense[0][0] == -1);
    CHECK(dense[1][0] == 1);
    CHECK(c.boundary_squares_to_zero());
}

TEST_CASE("classical homology targets") {
    CHECK(simplicial_homology(fixtures::k4cycle()).describe("H_") == "H_0=Z, H_1=Z");
    auto rp2 = fixtures::rp2();
    CHECK(simplicial_homology(rp2).describe("H_") == "H_0=Z, H_1=Z/2");
    CHECK(simplicial_cohomology(rp2).describe() == "H^0=Z, H^2=Z/2");
    CHECK(simplicial_homology(rp2) == from_oracle(oracle::homology(faces_of(rp2))));
    CHECK(simplicial_homology(cone(rp2)).describe("H_") == "H_0=Z");
    CHECK(simplicial_homology(fixtures::torus9()).describe("H_") == "H_0=Z, H_1=Z^2, H_2=Z");

    SimplicialComplex empty;
    auto red = simplicial_homology(empty, ChainFlavor::reduced);
    CHECK(red.describe("H_") == "H_-1=Z");
    CHECK(simplicial_homology(empty).is_zero());
    CHECK(simplicial_homology(fixtures::simplex(3), ChainFlavor::reduced).is_zero());
}

TEST_CASE("relative chains") {
    auto k = fixtures::simplex(2);
    auto ends = build_complex(2, {{1}, {2}});
    // (interval, endpoints) = circle relative: H_1 = Z
    CHECK(simplicial_homology(k, ChainFlavor::relative, &ends).describe("H_") == "H_1=Z");
    auto outside = build_complex(3, {{3}});
    CHECK_THROWS_AS(chain_complex(k, ChainFlavor::relative, &outside), ValidationError);
}

TEST_CASE("homology agrees with the dense oracle on enumerated complexes") {
    std::size_t n = 0;
    for (int m = 1; m <= 5; ++m) {
        enumerate::all_complexes(m, [&](const std::vector<enumerate::Face>& faces, int mm) {
            if (mm == 5 && (n++ % 5) != 0) return;
            auto k = build_complex(mm, enumerate::maximal_of(faces));
            std::set<oracle::Face> fs(faces.begin(), faces.end());
            auto h = simplicial_homology(k);
            REQUIRE(h == from_oracle(oracle::homology(fs)));
            REQUIRE(simplicial_homology(k, ChainFlavor::reduced) == from_oracle(oracle::homology(fs, true)));
            auto c = chain_complex(k, ChainFlavor::absolute);
            REQUIRE(c.boundary_squares_to_zero());
            long long chi = 0;
            for (const auto& [d, p] : h.pieces()) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(p.rank);
            REQUIRE(chi == c.euler_characteristic());
            // universal coefficients
            auto co = simplicial_cohomology(k);
            for (int d = 0; d <= k.dimension() + 1; ++d) {
                REQUIRE(co.at(d).rank == h.at(d).rank);
                REQUIRE(co.at(d).torsion == h.at(d - 1).torsion);
            }
        });
    }
}

TEST_CASE("mod p Betti numbers dominate rational ones") {
    auto rp2 = fixtures::rp2();
    auto h = simplicial_homology(rp2);
    auto h2 = simplicial_homology(rp2, ChainFlavor::absolute, nullptr, Domain::modulo(2));
    auto h3 = simplicial_homology(rp2, ChainFlavor::absolute, nullptr, Domain::modulo(3));
    CHECK(h2.betti(0, 2) == std::vector<std::size_t>{1, 1, 1});
    CHECK(h3.betti(0, 2) == h.betti(0, 2));
    for (int d = 0; d <= 2; ++d) CHECK(h2.at(d).rank >= h.at(d).rank);
    CHECK_THROWS_AS(Domain::modulo(4), ValidationError);
}

TEST_CASE("dual complex mirrors degrees") {
    auto c = chain_complex(fixtures::torus9(), ChainFlavor::absolute);
    auto d = c.dual();
    CHECK(d.min_degree() == -2);
    CHECK(d.max_degree() == 0);
    CHECK(d.cell_count(-2) == c.cell_count(2));
    CHECK(d.boundary_squares_to_zero());
}

TEST_CASE("cohomology bases: generators, coordinates, coboundaries") {
    auto y = share(fixtures::torus9());
    SimplicialCohomology h(y, Subcomplex::all(*y), Subcomplex::none(*y));
    CHECK(h.groups().describe() == "H^0=Z, H^1=Z^2, H^2=Z");
    std::mt19937 rng(1);
    for (int n = 0; n <= 2; ++n) {
        for (std::size_t i = 0; i < h.size(n); ++i) {
            const auto& g = h.generator(n, i);
            REQUIRE(h.is_cocycle(n, g));
            auto c = h.coordinates(n, g);
            for (std::size_t j = 0; j < c.size(); ++j) REQUIRE(c[j] == (i == j ? 1 : 0));
        }
        if (n == 0) continue;
        for (int trial = 0; trial < 20; ++trial) {
            Cochain w(y->count(n - 1));
            for (auto& v : w) v = static_cast<int>(rng() % 5) - 2;
            Cochain b = h.coboundary(n - 1, w);
            for (auto c : h.coordinates(n, b)) REQUIRE(c == 0);
            std::vector<Integer> coeff(h.size(n));
            for (auto& v : coeff) v = static_cast<int>(rng() % 7) - 3;
            Cochain z = h.combination(n, coeff);
            for (std::size_t k = 0; k < z.size(); ++k) z[k] += b[k];
            REQUIRE(h.coordinates(n, z) == coeff);
        }
    }
    Cochain junk(y->count(1));
    junk[0] = 1;
    CHECK_FALSE(h.is_cocycle(1, junk));
    CHECK_THROWS_AS(h.coordinates(1, junk), InternalError);
}

TEST_CASE("cohomology bases with torsion and relative pairs") {
    auto y = share(fixtures::rp2());
    SimplicialCohomology h(y, Subcomplex::all(*y), Subcomplex::none(*y));
    REQUIRE(h.size(2) == 1);
    CHECK(h.order(2, 0) == 2);
    Cochain twice = h.generator(2, 0);
    for (auto& v : twice) v *= 2;
    CHECK(h.coordinates(2, twice) == std::vector<Integer>{0});

    // Relative: (interval, both endpoints)
    auto seg = share(build_complex(3, {{1, 2}, {2, 3}}));
    auto ends = Subcomplex::closure(*seg, {{1}, {3}});
    SimplicialCohomology rel(seg, Subcomplex::all(*seg), ends);
    CHECK(rel.groups().describe() == "H^1=Z");
    for (std::size_t e = 0; e < seg->count(1); ++e) {
        Cochain z(seg->count(1));
        z[e] = 1;
        REQUIRE(rel.coordinates(1, z).size() == 1);
    }
}

TEST_CASE("degree zero basis is the component indicators") {
    auto y = share(build_complex(5, {{1, 2}, {3, 4}, {5}}));
    SimplicialCohomology h(y, Subcomplex::all(*y), Subcomplex::closure(*y, {{5}}));
    REQUIRE(h.size(0) == 2);
    CHECK(h.generator(0, 0) == Cochain{1, 1, 0, 0, 0});
    CHECK(h.generator(0, 1) == Cochain{0, 0, 1, 1, 0});
}

TEST_CASE("induced inclusion maps") {
    auto y = share(fixtures::torus9());
    auto all = Subcomplex::all(*y);
    auto none = Subcomplex::none(*y);
    SimplicialCohomology h(y, all, none);
    for (int n = 0; n <= 2; ++n) CHECK(induced_inclusion_map(h, h, n) == IntMatrix::identity(h.size(n)));

    SimplicialCohomology pt(y, Subcomplex::closure(*y, {{4}}), none);
    CHECK(induced_inclusion_map(h, pt, 0) == IntMatrix::identity(1));

    // functoriality: edge ⊆ strip ⊆ torus
    auto strip = Subcomplex::closure(*y, {{1, 2, 5}, {1, 4, 5}, {2, 3, 6}, {2, 5, 6}, {1, 3, 4}, {3, 4, 6}});
    auto edge = Subcomplex::closure(*y, {{1, 2}});
    SimplicialCohomology hs(y, strip, none), he(y, edge, none);
    CHECK(hs.groups().describe() == "H^0=Z, H^1=Z");
    for (int n = 0; n <= 1; ++n) {
        CHECK(induced_inclusion_map(h, he, n) == induced_inclusion_map(hs, he, n) * induced_inclusion_map(h, hs, n));
    }
    CHECK_THROWS_AS(induced_inclusion_map(he, h, 0), ValidationError);
}
