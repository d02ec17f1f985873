#include <doctest.h>

#include <random>

#include "cwl/errors.hpp"
#include "cwl/int_matrix.hpp"
#include "cwl/verify.hpp"

using namespace cwl;

TEST_SUITE("int_matrix") {

TEST_CASE("determinant basics") {
    CHECK(determinant(IntMatrix(0)) == 1);
    CHECK(determinant(IntMatrix{{2, 1}, {1, 2}}) == 3);
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(IntMatrix{{0, 2, 1}, {2, 0, 0}, {1, 0, 0}}) == 0);
}

TEST_CASE("determinant matches cofactor expansion") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        const int n = 1 + static_cast<int>(rng() % 6);
        IntMatrix m = random_symmetric_matrix(rng, n, -5, 5);
        // also exercise non-symmetric inputs
        if (t % 3 == 0 && n > 1) m.at(0, n - 1) += 2;
        CHECK(determinant(m) == cofactor_determinant(m));
    }
}

TEST_CASE("principal minors") {
    IntMatrix m{{2, 1}, {1, 2}};
    CHECK(principal_minor_det(m, {}) == 3);
    CHECK(principal_minor_det(m, {0}) == 2);
    CHECK(principal_minor_det(m, {0, 1}) == 1);  // empty determinant
    CHECK_THROWS_AS(principal_minor_det(m, {5}), IndexError);

    std::mt19937_64 rng(8);
    IntMatrix r = random_symmetric_matrix(rng, 5, -4, 4);
    CHECK(principal_minor_det(r, {1, 3}) ==
          cofactor_determinant(r.submatrix({0, 2, 4})));
}

TEST_CASE("inertia fixed examples") {
    Inertia id2 = inertia(IntMatrix{{1, 0}, {0, 1}});
    CHECK(id2.positive == 2);
    CHECK(id2.negative == 0);
    CHECK(id2.nullity == 0);

    Inertia hyper = inertia(IntMatrix{{0, 1}, {1, 0}});
    CHECK(hyper.positive == 1);
    CHECK(hyper.negative == 1);
    CHECK(hyper.nullity == 0);

    Inertia zero = inertia(IntMatrix(3));
    CHECK(zero.positive == 0);
    CHECK(zero.negative == 0);
    CHECK(zero.nullity == 3);

    CHECK_THROWS_AS(inertia(IntMatrix{{0, 1}, {2, 0}}), ArgumentError);
}

TEST_CASE("inertia agrees with the Sturm oracle") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 80; ++t) {
        const int n = 1 + static_cast<int>(rng() % 6);
        IntMatrix m = random_symmetric_matrix(rng, n, -5, 5);
        Inertia in = inertia(m);
        CHECK(in.positive + in.negative + in.nullity == n);
        auto [pos, neg] = sturm_signature(m);
        CHECK(in.positive == pos);
        CHECK(in.negative == neg);
    }
}

}  // TEST_SUITE
