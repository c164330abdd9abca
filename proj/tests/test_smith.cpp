#include "dense_oracle.hpp"

#include "facelab/smith.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using facelab::Domain;
using facelab::IntMatrix;
using facelab::Integer;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim, double density) {
    std::uniform_int_distribution<std::size_t> dim(0, max_dim);
    std::uniform_int_distribution<int> val(-9, 9);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::size_t r = dim(rng), c = dim(rng);
    std::vector<facelab::Triplet> t;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (coin(rng) < density) t.push_back({i, j, Integer(val(rng))});
    return IntMatrix::from_triplets(r, c, std::move(t));
}

void check_smith(const IntMatrix& a) {
    auto f = facelab::smith_normal_form(a);
    auto u = f.u.to_dense(), d = f.d.to_dense(), v = f.v.to_dense();
    auto uav = oracle::multiply(oracle::multiply(u, a.to_dense(), a.rows()), v, a.cols());
    REQUIRE(uav == d);
    auto du = oracle::determinant(u), dv = oracle::determinant(v);
    REQUIRE((du == 1 || du == -1));
    REQUIRE((dv == 1 || dv == -1));
    std::size_t k = 0;
    for (const auto& e : f.d.entries()) {
        REQUIRE(e.row == k);
        REQUIRE(e.col == k);
        REQUIRE(e.value > 0);
        ++k;
    }
    for (std::size_t i = 0; i + 1 < k; ++i) REQUIRE(f.d.at(i + 1, i + 1) % f.d.at(i, i) == 0);
}

}  // namespace

TEST_CASE("two by two diagonal becomes gcd and lcm") {
    auto a = IntMatrix::from_dense({{2, 0}, {0, 3}});
    auto f = facelab::smith_normal_form(a);
    CHECK(f.d == IntMatrix::from_dense({{1, 0}, {0, 6}}));
    check_smith(a);
}

TEST_CASE("zero and identity matrices") {
    IntMatrix z(3, 4);
    auto f = facelab::smith_normal_form(z);
    CHECK(f.d.is_zero());
    CHECK(f.u == IntMatrix::identity(3));
    CHECK(f.v == IntMatrix::identity(4));
    auto g = facelab::smith_normal_form(IntMatrix::identity(5));
    CHECK(g.d == IntMatrix::identity(5));
    IntMatrix empty(0, 3);
    CHECK(facelab::smith_normal_form(empty).d.rows() == 0);
    CHECK(facelab::invariant_factors(IntMatrix(0, 0)).empty());
}

TEST_CASE("invariant factors agree with determinantal divisors") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_matrix(rng, 4, 0.6);
        auto expected = oracle::invariant_factors_by_minors(a.to_dense());
        auto got = facelab::invariant_factors(a);
        REQUIRE(got.size() == expected.size());
        for (std::size_t i = 0; i < got.size(); ++i) REQUIRE(got[i] == expected[i]);
        check_smith(a);
    }
}

TEST_CASE("mod p rank matches dense elimination") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_matrix(rng, 12, 0.4);
        for (std::uint32_t p : {2u, 3u, 5u}) {
            auto got = facelab::invariant_factors(a, Domain::modulo(p));
            REQUIRE(got.size() == oracle::rank_mod_p(a.to_dense(), p));
        }
    }
}

TEST_CASE("tracked transforms are mutually inverse") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_matrix(rng, 10, 0.35);
        facelab::SmithReduction red(a, Domain::integers(), true);
        red.make_divisibility_chain();
        REQUIRE(red.u() * red.u_inverse() == IntMatrix::identity(a.rows()));
        REQUIRE(red.v() * red.v_inverse() == IntMatrix::identity(a.cols()));
        auto uav = red.u() * a * red.v();
        REQUIRE(uav.nnz() == red.rank());
        for (const auto& p : red.pivots()) REQUIRE(uav.at(p.row, p.col) == p.value);
        std::vector<Integer> x(a.rows());
        for (auto& xi : x) xi = static_cast<int>(rng() % 7) - 3;
        REQUIRE(red.apply_u_inverse(red.apply_u(x)) == x);
    }
}

TEST_CASE("medium random matrices satisfy the Smith contract") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 150; ++trial) check_smith(random_matrix(rng, 30, 0.15));
}

TEST_CASE("output is deterministic") {
    std::mt19937 rng(5);
    auto a = random_matrix(rng, 20, 0.3);
    auto f1 = facelab::smith_normal_form(a);
    auto f2 = facelab::smith_normal_form(a);
    CHECK(f1.u == f2.u);
    CHECK(f1.v == f2.v);
    CHECK(f1.d == f2.d);
}
