#include <doctest.h>

#include <random>

#include "mpberg/matrix.hpp"
#include "oracles.hpp"

using namespace mpberg;
using oracles::im;

TEST_CASE("determinant on pinned cases") {
    CHECK(det(im({{1, -1}, {0, 1}})) == 1);
    CHECK(det(IntMatrix::identity(5)) == 1);
    CHECK(det(im({{2, -3}, {0, 1}})) == oracles::laplace_det(im({{2, -3}, {0, 1}})));
    CHECK(det(im({{2, -3}, {0, 1}})) == 2);
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("determinant matches Laplace expansion on random matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const IntMatrix m = oracles::random_int_matrix(rng, n, -9, 9);
        CHECK(det(m) == oracles::laplace_det(m));
    }
}

TEST_CASE("adjugate on pinned cases") {
    CHECK(adjugate(im({{1, -1}, {0, 1}})) == im({{1, 1}, {0, 1}}));
    CHECK(adjugate(IntMatrix::identity(4)) == IntMatrix::identity(4));
    CHECK(adjugate(im({{2, -3}, {0, 1}})) == im({{1, 3}, {0, 2}}));
    CHECK_THROWS_AS(adjugate(IntMatrix(3, 2)), DimensionError);
}

TEST_CASE("adjugate(m) * m == det(m) * I") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const IntMatrix m = oracles::random_int_matrix(rng, n, -9, 9);
        const IntMatrix lhs = adjugate(m) * m;
        const BigInt d = det(m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(lhs(i, j) == (i == j ? d : BigInt(0)));
        CHECK(adjugate(m) == oracles::laplace_adjugate(m));
    }
}

TEST_CASE("inverse on pinned cases") {
    const RatMatrix inv = inverse(im({{2, -3}, {0, 1}}));
    CHECK(inv(0, 0) == rational_from_string("1/2"));
    CHECK(inv(0, 1) == rational_from_string("3/2"));
    CHECK(inv(1, 0) == 0);
    CHECK(inv(1, 1) == 1);
    CHECK(inverse(im({{1, -1}, {0, 1}})) == to_rational(im({{1, 1}, {0, 1}})));
    CHECK(inverse(IntMatrix::identity(3)) == to_rational(IntMatrix::identity(3)));
    CHECK_THROWS_AS(inverse(im({{1, 2}, {2, 4}})), SingularMatrixError);
}

TEST_CASE("inverse(m) * m == I exactly for random nonsingular matrices") {
    std::mt19937_64 rng(13);
    int done = 0;
    while (done < 60) {
        const std::size_t n = 1 + done % 4;
        const IntMatrix m = oracles::random_int_matrix(rng, n, -9, 9);
        if (det(m) == 0) continue;
        const RatMatrix prod = inverse(m) * to_rational(m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(prod(i, j) == Rational(i == j ? 1 : 0));
        ++done;
    }
}

TEST_CASE("gcd_vector") {
    const std::vector<BigInt> a = {BigInt(1), BigInt(1)};
    const std::vector<BigInt> b = {BigInt(4), BigInt(6)};
    const std::vector<BigInt> c = {BigInt(0), BigInt(5)};
    const std::vector<BigInt> z = {BigInt(0), BigInt(0)};
    CHECK(gcd_vector(a) == 1);
    CHECK(gcd_vector(b) == 2);
    CHECK(gcd_vector(c) == 5);
    CHECK(gcd_vector(std::vector<BigInt>{BigInt(-4), BigInt(6)}) == 2);
    CHECK_THROWS_AS(gcd_vector(z), DegenerateInputError);
}

TEST_CASE("hadamard product") {
    IntMatrix a(1, 2), b(1, 2), ones(1, 2);
    a(0, 0) = 1;
    a(0, 1) = 2;
    b(0, 0) = 3;
    b(0, 1) = 4;
    ones(0, 0) = 1;
    ones(0, 1) = 1;
    const IntMatrix c = hadamard(a, b);
    CHECK(c(0, 0) == 3);
    CHECK(c(0, 1) == 8);
    CHECK(hadamard(a, ones) == a);  // all-ones vector is the identity element
    IntMatrix d(1, 2), e(1, 2);
    d(0, 0) = 0;
    d(0, 1) = 1;
    e(0, 0) = 5;
    e(0, 1) = 0;
    const IntMatrix f = hadamard(d, e);
    CHECK(f(0, 0) == 0);
    CHECK(f(0, 1) == 0);
    CHECK_THROWS_AS(hadamard(a, IntMatrix(2, 2)), DimensionError);
}

TEST_CASE("operations are pure: repeated calls give identical values") {
    std::mt19937_64 rng(14);
    const IntMatrix m = oracles::random_int_matrix(rng, 4, -9, 9);
    CHECK(det(m) == det(m));
    CHECK(adjugate(m) == adjugate(m));
}

TEST_CASE("rational string round trips") {
    CHECK(to_string(rational_from_string("2/3")) == "2/3");
    CHECK(to_string(rational_from_string("-4/6")) == "-2/3");
    CHECK(to_string(rational_from_string("7")) == "7");
    CHECK_THROWS_AS(rational_from_string("1/0"), UsageError);
    CHECK_THROWS_AS(rational_from_string("zardoz"), UsageError);
}
